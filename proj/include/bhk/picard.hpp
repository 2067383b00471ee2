#pragma once

/**
 * @file picard.hpp
 * @brief Ages, the character sets counted by Shioda/Kelly, orbit
 *        decompositions, and Picard numbers of BHK-type K3 surfaces.
 *
 * Three independent routes to rho are implemented:
 *   - kelly:  22 - #(I_d(p) n G^T), with I_d(p) computed from its raw
 *             definition (ages summed over t * p^j * a for every unit t);
 *   - orbit:  the same count, with I_d(p) rebuilt as a union of U_d-orbits
 *             selected by their age-1 / age-3 content;
 *   - closed: 22 - phi(h_T), or 22 when p^l = -1 mod h_T for some l.
 * picard_report runs the requested routes and refuses to return numbers
 * that disagree.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bhk/duality.hpp"
#include "bhk/symmetry_groups.hpp"

namespace bhk {

inline constexpr int kK3SecondBetti = 22;

struct AgedElement {
  GroupElement element;
  int age = 0;
  bool operator==(const AgedElement&) const = default;
  auto operator<=>(const AgedElement&) const = default;
};

/// S(a) = (sum of representatives in [0, d)) / d for a in A_d.
/// Throws ZeroCoordinate or NonintegralAge outside A_d.
int age(const GroupElement& g);

using AgeFunction = std::function<int(const GroupElement&)>;

/// A_d n H with ages, sorted. Throws HNotInMd if some element of H has nonzero coordinate sum.
std::vector<AgedElement> frak_A_intersect(const SymmetrySubgroup& h);

/// I_d(p) n H straight from the definition of B_d(p). Throws CharDividesD.
std::vector<AgedElement> frak_I_direct(const SymmetrySubgroup& h, const Characteristic& ch);

struct OrbitDecomposition {
  std::vector<AgedElement> ambient;
  /// U_d-orbits, each sorted; orbits ordered by their least element.
  std::vector<std::vector<AgedElement>> u_orbits;
  /// p_suborbits[k] partitions u_orbits[k] into <p>-orbits. Empty when p = 0.
  std::vector<std::vector<std::vector<AgedElement>>> p_suborbits;
};

/// Orbits of U_d = (Z/d)^x on A_d n H, refined into <p>-orbits when p > 0.
OrbitDecomposition orbit_decomposition(const SymmetrySubgroup& h, const Characteristic& ch,
                                       const AgeFunction& age_fn = age);

/// I_d(p) n H as the union of the orbits that carry an age-1 element (p = 0) or
/// a <p>-orbit with unequal numbers of age-1 and age-3 elements (p > 0).
/// Compared against frak_I_direct; disagreement throws MethodMismatch.
/// `age_fn` only feeds the orbit route.
std::vector<AgedElement> frak_I_orbit(const SymmetrySubgroup& h, const Characteristic& ch,
                                      const AgeFunction& age_fn = age);

/// The age-1 elements of A_d n H.
std::vector<AgedElement> age_one_census(const SymmetrySubgroup& h);

struct RhoPair {
  int primal = 0;
  int mirror = 0;
  bool operator==(const RhoPair&) const = default;
};

RhoPair picard_closed_form(const MirrorPair& mp);
RhoPair picard_kelly(const MirrorPair& mp);
RhoPair picard_orbit(const MirrorPair& mp);

enum class PicardMethod { Closed, Kelly, Orbit, All };

std::string_view method_name(PicardMethod method);
std::optional<PicardMethod> parse_method(std::string_view name);

struct PicardReport {
  int rho_primal = 0;
  int rho_mirror = 0;
  std::optional<RhoPair> closed_form;
  std::optional<RhoPair> kelly;
  std::optional<RhoPair> orbit;
  /// #(I_d(p) n G^T) and #(I_d(p) n G); set when a set-counting method ran.
  std::optional<std::size_t> count_in_dual;
  std::optional<std::size_t> count_in_group;
  Characteristic characteristic;
};

/// Runs the requested method(s). With several, any disagreement throws MethodMismatch.
PicardReport picard_report(const MirrorPair& mp, PicardMethod method = PicardMethod::All);

struct ScanRow {
  Integer prime;
  Integer residue_mod_h_t;
  Integer residue_mod_h;
  RhoPair rho;
};

/// rho as a function of the residue class of p; covers every unit class.
struct ResidueRule {
  Integer modulus;
  std::vector<Integer> supersingular_classes;  // rho = 22
  std::vector<Integer> ordinary_classes;       // rho = 22 - phi(modulus)
  int ordinary_rho = 0;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  /// Primes that were skipped (divide d, or not prime), with the reason.
  std::vector<std::pair<Integer, std::string>> skipped;
  ResidueRule primal_rule;  // modulo h_T
  ResidueRule mirror_rule;  // modulo h
};

/// Closed-form rho for each prime, grouped by (p mod h_T, p mod h).
ScanReport prime_scan(const MirrorPair& mp, const std::vector<Integer>& primes);

/// All primes p <= n.
std::vector<Integer> primes_up_to(std::int64_t n);

}  // namespace bhk
