#include <gtest/gtest.h>

#include <random>

#include "bhk/delsarte.hpp"
#include "bhk/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace bhk {
namespace {

using testing::a_ex;
using testing::a_fermat;
using testing::build;

ErrorCode code_of(const IntMatrix4& a, long p = 0) {
  try {
    build(a, p);
  } catch (const BhkError& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}

IntVector4 vec(long a, long b, long c, long d) { return {Integer(a), Integer(b), Integer(c), Integer(d)}; }

TEST(Characteristic, AcceptsZeroAndPrimes) {
  EXPECT_TRUE(Characteristic(0).is_zero());
  EXPECT_EQ(Characteristic(23).value(), 23);
  for (long bad : {1L, 4L, -3L, 91L}) {
    try {
      Characteristic c{Integer(bad)};
      ADD_FAILURE() << bad;
    } catch (const BhkError& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidCharacteristic);
    }
  }
}

TEST(BuildDelsarte, WorkedExample) {
  const DelsarteMatrix m = build(a_ex());
  EXPECT_EQ(m.weights(), vec(2, 3, 1, 1));
  EXPECT_EQ(m.degree_h(), 7);
  EXPECT_EQ(m.exponent_d(), 168);
  EXPECT_EQ(m.det(), 168);
  EXPECT_EQ(multiply(m.matrix(), m.b_matrix()), scaled(identity_matrix(), m.exponent_d()));
}

TEST(BuildDelsarte, FermatQuartic) {
  const DelsarteMatrix m = build(a_fermat());
  EXPECT_EQ(m.weights(), vec(1, 1, 1, 1));
  EXPECT_EQ(m.degree_h(), 4);
  EXPECT_EQ(m.exponent_d(), 4);
  EXPECT_EQ(m.b_matrix(), identity_matrix());
}

TEST(BuildDelsarte, Rejections) {
  EXPECT_EQ(code_of(make_matrix({{{1, 1, 1, 1}, {0, 2, 1, 0}, {0, 0, 6, 1}, {0, 0, 0, 7}}})),
            ErrorCode::RowWithoutZero);
  EXPECT_EQ(code_of(make_matrix({{{2, -1, 0, 0}, {0, 2, 1, 0}, {0, 0, 6, 1}, {0, 0, 0, 7}}})),
            ErrorCode::NegativeEntry);
  EXPECT_EQ(code_of(make_matrix({{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}})),
            ErrorCode::SingularMatrix);
  EXPECT_EQ(code_of(a_ex(), 2), ErrorCode::CharDividesDet);
  EXPECT_EQ(code_of(a_ex(), 7), ErrorCode::CharDividesDet);
  // x0 x1^3 + x1 ... : weights come out with a nonpositive entry.
  EXPECT_EQ(code_of(make_matrix({{{1, 3, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}})),
            ErrorCode::NonpositiveWeight);
}

TEST(BuildDelsarte, CharacteristicCoprimeToDetAccepted) {
  EXPECT_EQ(build(a_ex(), 5).exponent_d(), 168);
  EXPECT_EQ(build(a_ex(), 23).weights(), vec(2, 3, 1, 1));
}

TEST(CalabiYau, Examples) {
  EXPECT_TRUE(is_calabi_yau(build(a_ex())));
  EXPECT_TRUE(is_calabi_yau(build(a_fermat())));
  EXPECT_FALSE(is_calabi_yau(build(make_matrix({{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}}))));
}

TEST(Transpose, WorkedExample) {
  const DelsarteMatrix m = build(a_ex());
  const DelsarteMatrix t = transpose(m, Characteristic());
  EXPECT_EQ(t.weights(), vec(4, 2, 1, 1));
  EXPECT_EQ(t.degree_h(), 8);
  EXPECT_EQ(t.exponent_d(), 168);
  EXPECT_TRUE(is_calabi_yau(t));
}

TEST(Transpose, SymmetricMatrixIsFixed) {
  const DelsarteMatrix m = build(a_fermat());
  EXPECT_EQ(transpose(m, Characteristic()), m);
}

TEST(BuildDelsarte, AgreesWithGaussJordanOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  for (const auto& m : testing::random_delsarte(rng, 300, 7)) {
    const oracle::Weights w = oracle::weights(m.matrix());
    EXPECT_EQ(m.degree_h(), w.h) << to_string(m.matrix());
    for (int i = 0; i < 4; ++i) EXPECT_EQ(m.weights()[i], w.q[i]);
    EXPECT_EQ(m.exponent_d(), oracle::exponent_d(m.matrix()));
    EXPECT_EQ(m.det(), oracle::det(m.matrix()));
  }
}

TEST(Catalog, EveryEntryIsCalabiYauWithBoundedD) {
  const auto catalog = testing::calabi_yau_catalog(8);
  EXPECT_EQ(catalog.size(), 3912u);
  for (const auto& f : catalog) {
    const DelsarteMatrix m = build(f.matrix);
    ASSERT_TRUE(is_calabi_yau(m)) << f.name;
    EXPECT_LE(m.exponent_d(), 288) << f.name;
    EXPECT_EQ(transpose(m, Characteristic()).exponent_d(), m.exponent_d()) << f.name;
  }
}

}  // namespace
}  // namespace bhk
