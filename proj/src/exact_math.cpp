#include "bhk/exact_math.hpp"

#include <sstream>

#include "bhk/error.hpp"

namespace bhk {

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& rhs) const {
  return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational& rhs) const {
  return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational& rhs) const {
  return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.num_ == 0) fail(ErrorCode::InvalidArgument, "division by zero rational");
  return Rational(num_ * rhs.den_, den_ * rhs.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
  int c = cmp(Integer(num_ * rhs.den_), Integer(rhs.num_ * den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

IntMatrix4 identity_matrix() {
  IntMatrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = (i == j) ? 1 : 0;
  return m;
}

IntMatrix4 transposed(const IntMatrix4& m) {
  IntMatrix4 t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix4 multiply(const IntMatrix4& a, const IntMatrix4& b) {
  IntMatrix4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Integer s = 0;
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

IntMatrix4 scaled(const IntMatrix4& m, const Integer& s) {
  IntMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = m[i][j] * s;
  return r;
}

IntVector4 multiply(const IntMatrix4& m, const IntVector4& v) {
  IntVector4 r;
  for (int i = 0; i < 4; ++i) {
    Integer s = 0;
    for (int k = 0; k < 4; ++k) s += m[i][k] * v[k];
    r[i] = s;
  }
  return r;
}

IntMatrix4 make_matrix(const std::array<std::array<long, 4>, 4>& rows) {
  IntMatrix4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = rows[i][j];
  return m;
}

std::string to_string(const IntMatrix4& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 4; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < 4; ++j) os << (j ? "," : "") << m[i][j].get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

GcdLcm gcd_lcm(const Integer& a, const Integer& b) {
  Integer g = gcd(a, b);
  Integer l = lcm(a, b);
  return {g, abs(l)};
}

Integer euler_phi(const Integer& n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "euler_phi needs n >= 1, got " + n.get_str());
  Integer result = n;
  Integer rest = n;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

namespace {

Integer reduce_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (sgn(r) < 0) r += m;
  return r;
}

void require_coprime(const Integer& p, const Integer& m, const char* who) {
  if (m < 1) fail(ErrorCode::InvalidArgument, std::string(who) + ": modulus must be >= 1");
  if (gcd(p, m) != 1)
    fail(ErrorCode::NotCoprime,
         std::string(who) + ": gcd(" + p.get_str() + ", " + m.get_str() + ") != 1");
}

}  // namespace

Integer multiplicative_order(const Integer& p, const Integer& m) {
  require_coprime(p, m, "multiplicative_order");
  if (m == 1) return 1;
  const Integer base = reduce_mod(p, m);
  Integer power = base;
  Integer f = 1;
  while (power != 1) {
    power = (power * base) % m;
    ++f;
  }
  return f;
}

bool minus_one_power_exists(const Integer& p, const Integer& m) {
  require_coprime(p, m, "minus_one_power_exists");
  if (m <= 2) return true;
  const Integer order = multiplicative_order(p, m);
  const Integer base = reduce_mod(p, m);
  const Integer minus_one = m - 1;
  Integer power = base;
  for (Integer l = 1; l <= order; ++l) {
    if (power == minus_one) return true;
    power = (power * base) % m;
  }
  return false;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Integer k = 3; k * k <= n; k += 2)
    if (n % k == 0) return false;
  return true;
}

namespace {

// Determinant of the 3x3 minor obtained by deleting row r and column c.
Integer minor3(const IntMatrix4& a, int r, int c) {
  std::array<int, 3> rows{}, cols{};
  for (int i = 0, k = 0; i < 4; ++i)
    if (i != r) rows[k++] = i;
  for (int j = 0, k = 0; j < 4; ++j)
    if (j != c) cols[k++] = j;
  auto e = [&](int i, int j) -> const Integer& { return a[rows[i]][cols[j]]; };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
         e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace

DetAdjugate det_adjugate(const IntMatrix4& a) {
  DetAdjugate out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      // adj(A)_{ij} = (-1)^{i+j} M_{ji}
      Integer m = minor3(a, j, i);
      out.adjugate[i][j] = ((i + j) % 2 == 0) ? m : Integer(-m);
    }
  out.det = 0;
  for (int j = 0; j < 4; ++j) out.det += a[0][j] * out.adjugate[j][0];

  const IntMatrix4 expected = scaled(identity_matrix(), out.det);
  ensure(multiply(a, out.adjugate) == expected, "A * adj(A) = det(A) I");
  ensure(multiply(out.adjugate, a) == expected, "adj(A) * A = det(A) I");
  return out;
}

RationalMatrix4 inverse_rational(const IntMatrix4& a) {
  const DetAdjugate da = det_adjugate(a);
  if (da.det == 0) fail(ErrorCode::SingularMatrix, "matrix is singular: " + to_string(a));
  RationalMatrix4 inv;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv[i][j] = Rational(da.adjugate[i][j], da.det);
  return inv;
}

std::int64_t to_int64(const Integer& n) {
  ensure(n.fits_slong_p(), "integer " + n.get_str() + " fits in 64 bits");
  return n.get_si();
}

}  // namespace bhk
