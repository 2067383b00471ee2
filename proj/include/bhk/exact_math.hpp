#pragma once

/**
 * @file exact_math.hpp
 * @brief Exact integer and rational primitives.
 *
 * Everything here works on arbitrary-size integers (GMP). Nothing in the
 * library touches floating point: ages, weights and inverse matrices are
 * exact integers or reduced fractions.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace bhk {

using Integer = mpz_class;

/// Reduced fraction with positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design of arithmetic
  Rational(Integer n, Integer d);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_positive() const { return sgn(num_) > 0; }

  Rational operator-() const;
  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  Rational operator/(const Rational& rhs) const;
  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }

  bool operator==(const Rational& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
  std::strong_ordering operator<=>(const Rational& rhs) const;

  std::string to_string() const;

 private:
  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using IntMatrix4 = std::array<std::array<Integer, 4>, 4>;
using RationalMatrix4 = std::array<std::array<Rational, 4>, 4>;
using IntVector4 = std::array<Integer, 4>;

IntMatrix4 identity_matrix();
IntMatrix4 transposed(const IntMatrix4& m);
IntMatrix4 multiply(const IntMatrix4& a, const IntMatrix4& b);
IntMatrix4 scaled(const IntMatrix4& m, const Integer& s);
IntVector4 multiply(const IntMatrix4& m, const IntVector4& v);

/// Convenience for literals: rows of small integers.
IntMatrix4 make_matrix(const std::array<std::array<long, 4>, 4>& rows);

std::string to_string(const IntMatrix4& m);

struct GcdLcm {
  Integer gcd;
  Integer lcm;
};

/// gcd and lcm, both nonnegative; gcd(0, 0) = lcm(0, 0) = 0.
GcdLcm gcd_lcm(const Integer& a, const Integer& b);

/// Number of 1 <= k <= n coprime to n. Throws InvalidArgument for n < 1.
Integer euler_phi(const Integer& n);

/// Least f >= 1 with p^f = 1 (mod m). Requires m >= 1 and gcd(p, m) = 1.
Integer multiplicative_order(const Integer& p, const Integer& m);

/// Whether p^l = -1 (mod m) for some l >= 1. For m <= 2 this is always true.
bool minus_one_power_exists(const Integer& p, const Integer& m);

/// Primality by trial division.
bool is_prime(const Integer& n);

struct DetAdjugate {
  Integer det;
  IntMatrix4 adjugate;
};

/// Determinant and adjugate; A * adj = adj * A = det * I is checked on the way out.
DetAdjugate det_adjugate(const IntMatrix4& a);

/// Exact inverse. Throws SingularMatrix when det = 0.
RationalMatrix4 inverse_rational(const IntMatrix4& a);

/// Fits-in-int64 conversion; throws InternalError otherwise.
std::int64_t to_int64(const Integer& n);

}  // namespace bhk
