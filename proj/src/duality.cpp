#include "bhk/duality.hpp"

#include "bhk/error.hpp"

namespace bhk {

namespace {

#ifdef NDEBUG
constexpr bool kVerifyLiftIndependence = false;
#else
constexpr bool kVerifyLiftIndependence = true;
#endif

bool in_kernel_of_transpose(const IntMatrix4& a, const GroupElement& x) {
  // x A = 0 mod d
  for (int j = 0; j < 4; ++j) {
    Integer s = 0;
    for (int i = 0; i < 4; ++i) s += x[i] * a[i][j];
    if (s % x.modulus() != 0) return false;
  }
  return true;
}

bool in_kernel(const IntMatrix4& a, const GroupElement& x) {
  // A x^T = 0 mod d
  for (int i = 0; i < 4; ++i) {
    Integer s = 0;
    for (int j = 0; j < 4; ++j) s += a[i][j] * x[j];
    if (s % x.modulus() != 0) return false;
  }
  return true;
}

}  // namespace

std::int64_t pairing_on_lifts(const DelsarteMatrix& m, const std::array<std::int64_t, 4>& a_lift,
                              const std::array<std::int64_t, 4>& b_lift) {
  const Integer d = m.exponent_d();
  const Integer d2 = d * d;
  Integer s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += Integer(a_lift[i]) * m.matrix()[i][j] * Integer(b_lift[j]);
  Integer r = s % d2;
  if (sgn(r) < 0) r += d2;
  return to_int64(r);
}

std::int64_t pairing(const DelsarteMatrix& m, const GroupElement& a, const GroupElement& b) {
  if (Integer(a.modulus()) != m.exponent_d() || Integer(b.modulus()) != m.exponent_d())
    fail(ErrorCode::ModulusMismatch, "pairing arguments must live mod d");
  if (!in_kernel_of_transpose(m.matrix(), a))
    fail(ErrorCode::NotInKernel, "first pairing argument " + a.to_string() + " is not in Aut(F_{A^T})");
  if (!in_kernel(m.matrix(), b))
    fail(ErrorCode::NotInKernel, "second pairing argument " + b.to_string() + " is not in Aut(F_A)");

  const std::int64_t value = pairing_on_lifts(m, a.coords(), b.coords());
  if constexpr (kVerifyLiftIndependence) {
    const std::int64_t d = a.modulus();
    for (int k = 0; k < 4; ++k) {
      auto a2 = a.coords();
      auto b2 = b.coords();
      a2[k] += d;
      b2[(k + 1) % 4] += d;
      ensure(pairing_on_lifts(m, a2, b.coords()) == value &&
                 pairing_on_lifts(m, a.coords(), b2) == value,
             "pairing is independent of lifts");
    }
  }
  return value;
}

SymmetrySubgroup dual_group(const DelsarteMatrix& m, const SymmetrySubgroup& aut_transpose,
                            const SymmetrySubgroup& g) {
  if (aut_transpose.modulus() != g.modulus())
    fail(ErrorCode::ModulusMismatch, "dual_group: groups live mod different d");
  std::vector<GroupElement> kept;
  for (const auto& a : aut_transpose.elements()) {
    bool annihilates = true;
    for (const auto& b : g.generators())
      if (pairing(m, a, b) != 0) {
        annihilates = false;
        break;
      }
    if (annihilates) kept.push_back(a);
  }
  return SymmetrySubgroup::from_elements(g.modulus(), std::move(kept));
}

SymmetrySubgroup dual_group(const BhkPair& pair) {
  const DelsarteMatrix mt = transpose(pair.matrix, pair.characteristic);
  return dual_group(pair.matrix, aut_group(mt), pair.group);
}

BhkPair make_bhk_pair(const DelsarteMatrix& m, const SymmetrySubgroup& g, const Characteristic& ch) {
  SymmetryData sym = symmetry_data(m);
  if (g.modulus() != sym.aut.modulus())
    fail(ErrorCode::ModulusMismatch, "G must live mod d = " + m.exponent_d().get_str());
  if (!sym.j_group.is_subgroup_of(g))
    fail(ErrorCode::GroupNotBetweenJAndSL, "G does not contain J_{F_A} = <" + sym.j.to_string() + ">");
  if (!g.is_subgroup_of(sym.sl))
    fail(ErrorCode::GroupNotBetweenJAndSL, "G is not contained in SL(F_A)");
  AdequacyReport rep = matrix_adequacy(m, ch);
  return BhkPair{m, std::move(sym), g, ch, std::move(rep)};
}

MirrorPair mirror_pair(const BhkPair& pair) {
  if (!pair.adequacy.verdict)
    fail(ErrorCode::PairNotAdequate, "the BHK pair is not adequate; no mirror pair");
  DelsarteMatrix mt = transpose(pair.matrix, pair.characteristic);
  SymmetryData sym_t = symmetry_data(mt);
  SymmetrySubgroup g_dual = dual_group(pair.matrix, sym_t.aut, pair.group);
  ensure(sym_t.j_group.is_subgroup_of(g_dual) && g_dual.is_subgroup_of(sym_t.sl),
         "J_{F_{A^T}} <= G^T <= SL(F_{A^T})");

  AdequacyReport rep = matrix_adequacy(mt, pair.characteristic);
  if (!rep.verdict) {
    std::string why;
    for (const auto& d : rep.diagnostics) why += "; " + d;
    throw MirrorNotAdequateError("the mirror pair (A^T, G^T) is not adequate" + why, rep);
  }
  BhkPair mirror{std::move(mt), std::move(sym_t), std::move(g_dual), pair.characteristic,
                 std::move(rep)};
  return MirrorPair{pair, std::move(mirror)};
}

}  // namespace bhk
