#include <gtest/gtest.h>

#include "bhk/duality.hpp"
#include "bhk/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace bhk {
namespace {

using testing::a_ex;
using testing::a_fermat;
using testing::build;

oracle::ElementSet as_set(const SymmetrySubgroup& g) {
  oracle::ElementSet out;
  for (const auto& e : g.elements()) out.insert(e.coords());
  return out;
}

struct WorkedExample {
  DelsarteMatrix m = build(a_ex());
  DelsarteMatrix mt = transpose(m, Characteristic());
  SymmetryData sym = symmetry_data(m);
  SymmetryData sym_t = symmetry_data(mt);
};

TEST(Pairing, Examples) {
  const WorkedExample ex;
  const GroupElement zero = GroupElement::zero(168);
  for (const auto& b : ex.sym.aut.elements()) EXPECT_EQ(pairing(ex.m, zero, b), 0);
  EXPECT_EQ(pairing(ex.m, ex.sym_t.j, ex.sym.j), 0);
}

TEST(Pairing, RejectsElementsOutsideTheKernels) {
  const WorkedExample ex;
  const GroupElement stray(168, {1, 0, 0, 0});
  for (const auto& [a, b] : {std::pair{stray, ex.sym.j}, std::pair{ex.sym_t.j, stray}}) {
    try {
      pairing(ex.m, a, b);
      ADD_FAILURE();
    } catch (const BhkError& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotInKernel);
    }
  }
}

TEST(DualGroup, WorkedExample) {
  const WorkedExample ex;
  const SymmetrySubgroup dual_j = dual_group(ex.m, ex.sym_t.aut, ex.sym.j_group);
  EXPECT_EQ(dual_j, ex.sym_t.sl);
  EXPECT_EQ(dual_j.order(), 24u);
  const SymmetrySubgroup dual_sl = dual_group(ex.m, ex.sym_t.aut, ex.sym.sl);
  EXPECT_EQ(dual_sl, ex.sym_t.j_group);
  EXPECT_EQ(dual_sl.order(), 8u);
  EXPECT_EQ(dual_group(ex.m, ex.sym_t.aut, ex.sym.aut).order(), 1u);
  EXPECT_EQ(dual_group(ex.m, ex.sym_t.aut, SymmetrySubgroup(168)), ex.sym_t.aut);
}

TEST(DualGroup, MatchesBruteForceAnnihilator) {
  for (const auto& f : testing::named_fixtures()) {
    const DelsarteMatrix m = build(f.matrix);
    const std::int64_t d = m.exponent_d().get_si();
    if (d > 90) continue;
    const SymmetryData sym = symmetry_data(m);
    const SymmetrySubgroup aut_t = aut_group(transpose(m, Characteristic()));
    for (const auto& g : enumerate_intermediate(sym.j_group, sym.sl))
      EXPECT_EQ(as_set(dual_group(m, aut_t, g)), oracle::dual(f.matrix, as_set(g), d)) << f.name;
  }
}

TEST(MirrorPair, WorkedExample) {
  const WorkedExample ex;
  const MirrorPair mp = mirror_pair(make_bhk_pair(ex.m, ex.sym.j_group, Characteristic()));
  EXPECT_EQ(mp.mirror.matrix, ex.mt);
  EXPECT_EQ(mp.mirror.group, ex.sym_t.sl);
  EXPECT_TRUE(mp.mirror.adequacy.verdict);

  const DelsarteMatrix m5 = build(a_ex(), 5);
  const MirrorPair mp5 = mirror_pair(make_bhk_pair(m5, symmetry_data(m5).sl, Characteristic(5)));
  EXPECT_EQ(mp5.mirror.group, ex.sym_t.j_group);
}

TEST(MirrorPair, FermatQuartic) {
  const DelsarteMatrix m = build(a_fermat());
  const SymmetryData sym = symmetry_data(m);
  const MirrorPair mp = mirror_pair(make_bhk_pair(m, sym.j_group, Characteristic()));
  EXPECT_EQ(mp.mirror.matrix, m);
  EXPECT_EQ(mp.mirror.group, sym.sl);
}

TEST(MirrorPair, InadequatePrimalRejected) {
  const WorkedExample ex;
  const BhkPair pair = make_bhk_pair(ex.m, ex.sym.j_group, Characteristic(3));
  EXPECT_FALSE(pair.adequacy.verdict);
  try {
    mirror_pair(pair);
    ADD_FAILURE();
  } catch (const BhkError& e) {
    EXPECT_EQ(e.code(), ErrorCode::PairNotAdequate);
  }
}

TEST(MirrorPair, GroupOutsideRangeRejected) {
  const WorkedExample ex;
  try {
    make_bhk_pair(ex.m, ex.sym.aut, Characteristic());
    ADD_FAILURE();
  } catch (const BhkError& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroupNotBetweenJAndSL);
  }
}

TEST(MirrorPair, InadequateMirrorReported) {
  // Look for a prime that divides a weight of A^T but none of A.
  for (const auto& f : testing::calabi_yau_catalog(8)) {
    const DelsarteMatrix m0 = build(f.matrix);
    for (long p : {0L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
      if (p != 0 && m0.exponent_d() % p == 0) continue;
      const DelsarteMatrix m = testing::build(f.matrix, p);
      const Characteristic ch(p);
      if (!matrix_adequacy(m, ch).verdict) continue;
      if (matrix_adequacy(transpose(m, ch), ch).verdict) continue;
      const SymmetryData sym = symmetry_data(m);
      try {
        mirror_pair(make_bhk_pair(m, sym.j_group, ch));
        ADD_FAILURE() << f.name << " p = " << p;
      } catch (const MirrorNotAdequateError& e) {
        EXPECT_EQ(e.code(), ErrorCode::MirrorNotAdequate);
        EXPECT_FALSE(e.report().verdict);
      }
      return;
    }
  }
  ADD_FAILURE() << "no catalog pair with an inadequate mirror";
}

}  // namespace
}  // namespace bhk
