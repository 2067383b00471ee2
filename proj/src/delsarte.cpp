#include "bhk/delsarte.hpp"

#include <string>

#include "bhk/error.hpp"

namespace bhk {

Characteristic::Characteristic(Integer p) : p_(std::move(p)) {
  if (p_ != 0 && !is_prime(p_))
    fail(ErrorCode::InvalidCharacteristic,
         "characteristic must be 0 or a prime, got " + p_.get_str());
}

namespace {

std::string row_label(int i) { return "row " + std::to_string(i); }

}  // namespace

DelsarteMatrix build_delsarte(const IntMatrix4& raw, const Characteristic& ch) {
  for (int i = 0; i < 4; ++i) {
    bool has_zero = false;
    for (int j = 0; j < 4; ++j) {
      if (sgn(raw[i][j]) < 0)
        fail(ErrorCode::NegativeEntry, "entries must be nonnegative; " + row_label(i) +
                                           " has " + raw[i][j].get_str());
      if (raw[i][j] == 0) has_zero = true;
    }
    if (!has_zero)
      fail(ErrorCode::RowWithoutZero, "each row needs at least one zero; " + row_label(i) +
                                          " of " + to_string(raw) + " has none");
  }

  DetAdjugate da = det_adjugate(raw);
  if (da.det == 0) fail(ErrorCode::SingularMatrix, "det(A) = 0 for " + to_string(raw));
  if (!ch.is_zero() && da.det % ch.value() == 0)
    fail(ErrorCode::CharDividesDet, "characteristic " + ch.value().get_str() +
                                        " divides det(A) = " + da.det.get_str());

  // A^{-1}(1,1,1,1)^T = adj * 1 / det; clear denominators to get q/h with gcd(q) = 1.
  std::array<Rational, 4> ratios;
  for (int i = 0; i < 4; ++i) {
    Integer row_sum = 0;
    for (int j = 0; j < 4; ++j) row_sum += da.adjugate[i][j];
    ratios[i] = Rational(row_sum, da.det);
    if (!ratios[i].is_positive())
      fail(ErrorCode::NonpositiveWeight,
           "A^{-1}(1,1,1,1)^T must be positive; entry " + std::to_string(i) + " is " +
               ratios[i].to_string());
  }
  Integer h = 1;
  for (const auto& r : ratios) h = lcm(h, r.denominator());
  IntVector4 q;
  Integer g = 0;
  for (int i = 0; i < 4; ++i) {
    q[i] = ratios[i].numerator() * (h / ratios[i].denominator());
    g = gcd(g, q[i]);
  }
  ensure(g == 1, "weights have gcd 1");

  const Integer abs_det = abs(da.det);
  Integer d = 1;
  for (const auto& row : da.adjugate)
    for (const auto& entry : row) d = lcm(d, Integer(abs_det / gcd(abs_det, entry)));

  DelsarteMatrix m;
  m.matrix_ = raw;
  m.det_ = da.det;
  m.adjugate_ = da.adjugate;
  m.weights_ = q;
  m.degree_h_ = h;
  m.exponent_d_ = d;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Integer scaled_entry = da.adjugate[i][j] * d;
      ensure(scaled_entry % da.det == 0, "d * A^{-1} is integral");
      m.b_[i][j] = scaled_entry / da.det;
    }

  ensure(multiply(raw, q) == IntVector4{h, h, h, h}, "A q^T = (h,h,h,h)^T");
  ensure(d % h == 0, "h divides d");
  ensure(abs_det % d == 0, "d divides |det A|");
  Integer d4 = d * d * d * d;
  ensure(d4 % abs_det == 0, "|det A| divides d^4");
  const IntMatrix4 d_identity = scaled(identity_matrix(), d);
  ensure(multiply(raw, m.b_) == d_identity && multiply(m.b_, raw) == d_identity, "A B = B A = d I");
  return m;
}

bool is_calabi_yau(const DelsarteMatrix& m) {
  const auto& q = m.weights();
  const bool by_weights = (q[0] + q[1] + q[2] + q[3] == m.degree_h());

  Integer adj_sum = 0;
  for (const auto& row : m.adjugate())
    for (const auto& e : row) adj_sum += e;
  const bool by_inverse = (Rational(adj_sum, m.det()) == Rational(1));

  ensure(by_weights == by_inverse, "Calabi-Yau tests agree (weights vs entry sum of A^{-1})");
  return by_weights;
}

DelsarteMatrix transpose(const DelsarteMatrix& m, const Characteristic& ch) {
  DelsarteMatrix t = build_delsarte(transposed(m.matrix()), ch);
  ensure(t.exponent_d() == m.exponent_d(), "transposition preserves the exponent d");
  return t;
}

}  // namespace bhk
