#pragma once

#include <array>
#include <cstdint>

#include "bhk/delsarte.hpp"
#include "bhk/error.hpp"
#include "bhk/smoothness.hpp"
#include "bhk/symmetry_groups.hpp"

namespace bhk {

/// (A, G) with J <= G <= SL(F_A), at a fixed characteristic.
struct BhkPair {
  DelsarteMatrix matrix;
  SymmetryData symmetries;  // Aut, SL, J of `matrix`
  SymmetrySubgroup group;
  Characteristic characteristic;
  AdequacyReport adequacy;
};

/// Validates Calabi-Yau and J <= G <= SL and attaches the adequacy report.
/// The pair need not be adequate; check `adequacy.verdict`.
BhkPair make_bhk_pair(const DelsarteMatrix& m, const SymmetrySubgroup& g, const Characteristic& ch);

struct MirrorPair {
  BhkPair primal;
  BhkPair mirror;  // (A^T, G^T)
};

/// Thrown by mirror_pair when (A^T, G^T) is not adequate.
class MirrorNotAdequateError : public BhkError {
 public:
  MirrorNotAdequateError(const std::string& message, AdequacyReport report)
      : BhkError(ErrorCode::MirrorNotAdequate, message), report_(std::move(report)) {}
  const AdequacyReport& report() const noexcept { return report_; }

 private:
  AdequacyReport report_;
};

/**
 * <a, b> = a~ A b~^T mod d^2 for a in Aut(F_{A^T}) and b in Aut(F_A), using
 * the canonical lifts in [0, d). Throws NotInKernel when a A != 0 or
 * A b^T != 0 mod d.
 */
std::int64_t pairing(const DelsarteMatrix& m, const GroupElement& a, const GroupElement& b);

/// The same bilinear form evaluated on arbitrary integer lifts. No kernel check.
std::int64_t pairing_on_lifts(const DelsarteMatrix& m, const std::array<std::int64_t, 4>& a_lift,
                              const std::array<std::int64_t, 4>& b_lift);

/// Annihilator of `g` inside Aut(F_{A^T}); only the generators of `g` are tested.
SymmetrySubgroup dual_group(const DelsarteMatrix& m, const SymmetrySubgroup& aut_transpose,
                            const SymmetrySubgroup& g);

/// Dual of pair.group, building Aut(F_{A^T}) on the way.
SymmetrySubgroup dual_group(const BhkPair& pair);

/// Builds (A^T, G^T). Requires an adequate primal pair (PairNotAdequate) and
/// throws MirrorNotAdequateError when the mirror fails adequacy.
MirrorPair mirror_pair(const BhkPair& pair);

}  // namespace bhk
