#pragma once

/**
 * @file symmetry_groups.hpp
 * @brief Diagonal symmetry groups of F_A as explicit subgroups of (Z/d)^4.
 *
 * Groups are written additively: a = (a0, a1, a2, a3) with 0 <= a_i < d.
 * A subgroup stores its full sorted element list, so membership, equality
 * and containment are plain list operations. Desk scale only: the modulus
 * and the group orders are bounded (see kMaxModulus / kMaxGroupOrder).
 */

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bhk/delsarte.hpp"

namespace bhk {

/// Coordinates are encoded base d into one 64-bit key, so d^4 must fit.
inline constexpr std::int64_t kMaxModulus = 50000;
inline constexpr std::size_t kMaxGroupOrder = 4'000'000;

class GroupElement {
 public:
  GroupElement() = default;
  /// Reduces every coordinate into [0, d).
  GroupElement(std::int64_t modulus, const std::array<std::int64_t, 4>& coords);

  static GroupElement zero(std::int64_t modulus) { return GroupElement(modulus, {0, 0, 0, 0}); }

  std::int64_t modulus() const { return modulus_; }
  const std::array<std::int64_t, 4>& coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const { return coords_ == std::array<std::int64_t, 4>{0, 0, 0, 0}; }
  /// Sum of canonical representatives (not reduced).
  std::int64_t coordinate_sum() const { return coords_[0] + coords_[1] + coords_[2] + coords_[3]; }
  bool all_nonzero() const;

  GroupElement operator+(const GroupElement& rhs) const;
  GroupElement operator-(const GroupElement& rhs) const;
  GroupElement operator-() const;
  GroupElement scaled(std::int64_t t) const;

  /// Injective key for hashing, valid while d <= kMaxModulus.
  std::uint64_t key() const;

  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;

  std::string to_string() const;

 private:
  std::int64_t modulus_ = 1;
  std::array<std::int64_t, 4> coords_{0, 0, 0, 0};
};

class SymmetrySubgroup {
 public:
  /// Trivial group {0}.
  explicit SymmetrySubgroup(std::int64_t modulus);

  /// Wraps an element list that is already a subgroup. Picks a small generating
  /// set and checks that it generates exactly `elements`.
  static SymmetrySubgroup from_elements(std::int64_t modulus, std::vector<GroupElement> elements);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const GroupElement& g) const;
  bool is_subgroup_of(const SymmetrySubgroup& other) const;

  /// Canonical equality: same modulus and same element list.
  bool operator==(const SymmetrySubgroup& rhs) const {
    return modulus_ == rhs.modulus_ && elements_ == rhs.elements_;
  }

 private:
  friend SymmetrySubgroup subgroup_generated(std::int64_t, std::span<const GroupElement>);

  std::int64_t modulus_;
  std::vector<GroupElement> generators_;
  std::vector<GroupElement> elements_;  // sorted, deduplicated
};

/// The exponent d as a machine integer; throws GroupTooLarge past kMaxModulus.
std::int64_t group_modulus(const DelsarteMatrix& m);

/// {a : A a^T = 0 mod d}, generated by the columns of B mod d. Order is checked against |det A|.
SymmetrySubgroup aut_group(const DelsarteMatrix& m);

/// Elements of `aut` with coordinate sum 0 mod d.
SymmetrySubgroup sl_subgroup(const SymmetrySubgroup& aut);

/// j_A = (d/h) q mod d.
GroupElement j_element(const DelsarteMatrix& m);

/// d / gcd(d, a0, a1, a2, a3).
std::int64_t element_order(const GroupElement& g);

/// Breadth-first closure of `gens` under addition mod d. An empty list gives {0}.
SymmetrySubgroup subgroup_generated(std::int64_t modulus, std::span<const GroupElement> gens);

/// Every subgroup G with J <= G <= SL, each once, sorted by (order, elements).
std::vector<SymmetrySubgroup> enumerate_intermediate(const SymmetrySubgroup& j_group,
                                                     const SymmetrySubgroup& sl);

/// Aut, SL and J of one matrix, bundled.
struct SymmetryData {
  SymmetrySubgroup aut;
  SymmetrySubgroup sl;
  GroupElement j;
  SymmetrySubgroup j_group;
};

/// Requires the Calabi-Yau condition (so that J <= SL); checked.
SymmetryData symmetry_data(const DelsarteMatrix& m);

}  // namespace bhk
