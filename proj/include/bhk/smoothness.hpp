#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bhk/delsarte.hpp"
#include "bhk/symmetry_groups.hpp"

namespace bhk {

/// y^e
struct FermatAtom {
  int variable = 0;
  Integer exponent;
  bool operator==(const FermatAtom&) const = default;
};

/// y0^e0 y1 + y1^e1 y2 + ... + yk^ek, listed from the head to the terminal variable.
struct ChainAtom {
  std::vector<int> variables;
  std::vector<Integer> exponents;
  bool operator==(const ChainAtom&) const = default;
};

/// y0^e0 y1 + ... + yk^ek y0, starting at the least variable of the cycle.
struct LoopAtom {
  std::vector<int> variables;
  std::vector<Integer> exponents;
  bool operator==(const LoopAtom&) const = default;
};

using Atom = std::variant<FermatAtom, ChainAtom, LoopAtom>;

struct AtomicDecomposition {
  std::vector<Atom> atoms;
  /// row_of_variable[v] is the monomial (row of A) assigned to variable v.
  std::array<int, 4> row_of_variable{};
  bool operator==(const AtomicDecomposition&) const = default;
};

std::string describe(const Atom& atom);

/// Splits F_A into Fermat / chain / loop atoms. Throws NotInvertiblePotential
/// when F_A is not of that shape, which means X_A is not quasi-smooth.
AtomicDecomposition atomic_decomposition(const DelsarteMatrix& m);

/// gcd(q_i, q_j, q_l) = 1 for every triple of distinct indices.
bool weight_triples_coprime(const DelsarteMatrix& m);

/**
 * Coordinate-stratum well-formedness test.
 *
 * Requires the triple-gcd condition and, for each pair i < j with
 * gcd(q_i, q_j) > 1, a monomial of F_A supported inside {x_i, x_j}.
 * Without such a monomial X_A contains the whole singular line
 * {x_k = 0 for k not in {i, j}} of P^3(q).
 */
bool well_formed(const DelsarteMatrix& m);

struct AdequacyReport {
  bool quasi_smooth = false;
  bool well_formed = false;
  bool weight_triple_gcd_ok = false;
  bool char_ok = false;
  bool verdict = false;
  std::vector<std::string> diagnostics;
};

/// Full adequacy verdict for (A, G) at characteristic p. `g` must satisfy
/// J <= G <= SL(F_A) (GroupNotBetweenJAndSL otherwise).
AdequacyReport adequacy(const DelsarteMatrix& m, const SymmetrySubgroup& g,
                        const Characteristic& ch);

/// The matrix-only part of adequacy (independent of G).
AdequacyReport matrix_adequacy(const DelsarteMatrix& m, const Characteristic& ch);

}  // namespace bhk
