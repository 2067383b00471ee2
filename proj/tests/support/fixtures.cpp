#include "fixtures.hpp"

#include <array>

#include "bhk/error.hpp"

namespace bhk::testing {

IntMatrix4 a_ex() { return make_matrix({{{2, 1, 0, 0}, {0, 2, 1, 0}, {0, 0, 6, 1}, {0, 0, 0, 7}}}); }
IntMatrix4 a_fermat() { return make_matrix({{{4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4}}}); }
IntMatrix4 a_loop() { return make_matrix({{{3, 1, 0, 0}, {0, 3, 1, 0}, {0, 0, 3, 1}, {1, 0, 0, 3}}}); }
IntMatrix4 a_chain_fermat() {
  return make_matrix({{{2, 0, 0, 0}, {1, 3, 0, 0}, {0, 0, 6, 0}, {0, 0, 0, 6}}});
}
IntMatrix4 a_loop_fermat() {
  return make_matrix({{{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 6, 0}, {0, 0, 0, 6}}});
}

DelsarteMatrix build(const IntMatrix4& a, long p) { return build_delsarte(a, Characteristic(p)); }

std::vector<Fixture> named_fixtures() {
  return {{"A_ex", a_ex()},
          {"A_F", a_fermat()},
          {"loop4", a_loop()},
          {"chain+fermat", a_chain_fermat()},
          {"loop2+fermat", a_loop_fermat()}};
}

std::vector<Fixture> calabi_yau_catalog(int max_exponent) {
  std::vector<Fixture> out;
  std::array<int, 4> next{};
  for (int code = 0; code < 256; ++code) {
    std::array<int, 4> indegree{};
    for (int v = 0; v < 4; ++v) {
      next[v] = (code >> (2 * v)) & 3;
      if (next[v] != v) ++indegree[next[v]];
    }
    bool ok = true;
    for (int k : indegree) ok = ok && k <= 1;
    if (!ok) continue;

    const int span = max_exponent - 1;
    for (int e = 0; e < span * span * span * span; ++e) {
      IntMatrix4 a{};
      for (auto& row : a)
        for (auto& x : row) x = 0;
      std::string name = "next=";
      int rest = e;
      for (int v = 0; v < 4; ++v) {
        a[v][v] = 2 + rest % span;
        rest /= span;
        if (next[v] != v) a[v][next[v]] = 1;
        name += std::to_string(next[v]);
      }
      try {
        const DelsarteMatrix m = build(a);
        if (!is_calabi_yau(m)) continue;
      } catch (const BhkError&) {
        continue;
      }
      out.push_back({name + " " + to_string(a), a});
    }
  }
  return out;
}

std::vector<DelsarteMatrix> random_delsarte(std::mt19937_64& rng, std::size_t count, int max_entry) {
  std::vector<DelsarteMatrix> out;
  std::uniform_int_distribution<int> entry(0, max_entry);
  std::uniform_int_distribution<int> column(0, 3);
  while (out.size() < count) {
    IntMatrix4 a{};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) a[i][j] = entry(rng);
      a[i][column(rng)] = 0;
    }
    try {
      out.push_back(build(a));
    } catch (const BhkError&) {
    }
  }
  return out;
}

std::vector<MirrorPair> adequate_mirror_pairs(const std::vector<Fixture>& fixtures,
                                              std::size_t max_sl, std::size_t limit) {
  std::vector<MirrorPair> out;
  const Characteristic zero;
  for (const auto& f : fixtures) {
    if (out.size() >= limit) break;
    const DelsarteMatrix m = build(f.matrix);
    if (!matrix_adequacy(m, zero).verdict) continue;
    const SymmetryData sym = symmetry_data(m);
    if (sym.sl.order() > max_sl) continue;
    for (const auto& g : enumerate_intermediate(sym.j_group, sym.sl)) {
      try {
        out.push_back(mirror_pair(make_bhk_pair(m, g, zero)));
      } catch (const MirrorNotAdequateError&) {
        break;
      }
      if (out.size() >= limit) break;
    }
  }
  return out;
}

}  // namespace bhk::testing
