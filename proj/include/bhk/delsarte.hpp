#pragma once

#include <array>

#include "bhk/exact_math.hpp"

namespace bhk {

/// Characteristic of the ground field: 0 or a prime.
class Characteristic {
 public:
  Characteristic() = default;
  /// Throws InvalidCharacteristic unless p = 0 or p is prime.
  explicit Characteristic(Integer p);

  const Integer& value() const { return p_; }
  bool is_zero() const { return p_ == 0; }

  bool operator==(const Characteristic&) const = default;

 private:
  Integer p_ = 0;
};

/**
 * A validated weighted Delsarte matrix together with every quantity derived
 * from it: determinant, adjugate, weight system (q, h), exponent d and
 * B = d A^{-1}.
 *
 * Instances only come out of build_delsarte / transpose, so every invariant
 * (nonnegative entries, a zero in each row, positive weights, h | d | |det|,
 * |det| | d^4, A B = d I) holds for the lifetime of the object.
 */
class DelsarteMatrix {
 public:
  const IntMatrix4& matrix() const { return matrix_; }
  const Integer& det() const { return det_; }
  Integer abs_det() const { return abs(det_); }
  const IntMatrix4& adjugate() const { return adjugate_; }
  const IntVector4& weights() const { return weights_; }
  const Integer& degree_h() const { return degree_h_; }
  const Integer& exponent_d() const { return exponent_d_; }
  const IntMatrix4& b_matrix() const { return b_; }

  bool operator==(const DelsarteMatrix&) const = default;

 private:
  friend DelsarteMatrix build_delsarte(const IntMatrix4& raw, const Characteristic& ch);

  IntMatrix4 matrix_;
  Integer det_;
  IntMatrix4 adjugate_;
  IntVector4 weights_;
  Integer degree_h_;
  Integer exponent_d_;
  IntMatrix4 b_;
};

/// Validates the four Delsarte conditions at characteristic `ch` and derives (q, h, d, B).
/// Errors: NegativeEntry, RowWithoutZero, SingularMatrix, CharDividesDet, NonpositiveWeight.
DelsarteMatrix build_delsarte(const IntMatrix4& raw, const Characteristic& ch);

/// h = q0 + q1 + q2 + q3, cross-checked against the entry sum of A^{-1} being 1.
bool is_calabi_yau(const DelsarteMatrix& m);

/// The Delsarte data of A^T. Its exponent d always equals that of `m`.
DelsarteMatrix transpose(const DelsarteMatrix& m, const Characteristic& ch);

}  // namespace bhk
