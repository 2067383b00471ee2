#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bhk/delsarte.hpp"
#include "bhk/duality.hpp"
#include "bhk/symmetry_groups.hpp"

namespace bhk::testing {

/// y0^2 y1 + y1^2 y2 + y2^6 y3 + y3^7: the worked example.
IntMatrix4 a_ex();
/// Fermat quartic, 4 I.
IntMatrix4 a_fermat();
/// 4-cycle loop y0^3 y1 + y1^3 y2 + y2^3 y3 + y3^3 y0.
IntMatrix4 a_loop();
/// Chain y1^3 y0 + y0^2 plus Fermat y2^6 + y3^6.
IntMatrix4 a_chain_fermat();
/// 2-loop y0^2 y1 + y1^2 y0 plus Fermat y2^6 + y3^6.
IntMatrix4 a_loop_fermat();

DelsarteMatrix build(const IntMatrix4& a, long p = 0);

struct Fixture {
  std::string name;
  IntMatrix4 matrix;
};

/// Every named fixture above.
std::vector<Fixture> named_fixtures();

/// Calabi-Yau matrices of Fermat/chain/loop shape with diagonal exponents in
/// [2, max_exponent]: row v is y_v^{e_v} y_{next(v)}, next has in-degree <= 1.
std::vector<Fixture> calabi_yau_catalog(int max_exponent);

/// Random Delsarte matrices (nonnegative, a zero per row, p = 0 valid),
/// entries in [0, max_entry]. Not necessarily Calabi-Yau.
std::vector<DelsarteMatrix> random_delsarte(std::mt19937_64& rng, std::size_t count, int max_entry);

/// Adequate BHK pairs (p = 0) with adequate mirrors, over catalog matrices
/// with |SL| <= max_sl and every intermediate G.
std::vector<MirrorPair> adequate_mirror_pairs(const std::vector<Fixture>& fixtures,
                                              std::size_t max_sl, std::size_t limit);

}  // namespace bhk::testing
