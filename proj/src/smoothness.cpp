#include "bhk/smoothness.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "bhk/error.hpp"

namespace bhk {

namespace {

// What a single monomial can contribute: its own variable (the one carrying
// an exponent >= 2) and, optionally, the variable it points to with exponent 1.
struct RowShape {
  int main = -1;
  Integer exponent;
  int target = -1;  // -1: Fermat-shaped row
};

RowShape classify_row(const IntMatrix4& a, int row) {
  std::vector<int> support;
  for (int j = 0; j < 4; ++j)
    if (a[row][j] != 0) support.push_back(j);

  const std::string where = "row " + std::to_string(row);
  if (support.size() > 2)
    fail(ErrorCode::NotInvertiblePotential,
         where + " has " + std::to_string(support.size()) + " nonzero exponents");
  if (support.size() == 1) {
    const int c = support[0];
    if (a[row][c] < 2)
      fail(ErrorCode::NotInvertiblePotential, where + " is a linear monomial");
    return RowShape{c, a[row][c], -1};
  }
  // support.size() == 2; an all-zero row cannot occur in an invertible matrix.
  const int c1 = support[0], c2 = support[1];
  const Integer &e1 = a[row][c1], &e2 = a[row][c2];
  if (e1 >= 2 && e2 == 1) return RowShape{c1, e1, c2};
  if (e2 >= 2 && e1 == 1) return RowShape{c2, e2, c1};
  if (e1 == 1 && e2 == 1)
    fail(ErrorCode::NotInvertiblePotential, where + " has the shape y_i y_j");
  fail(ErrorCode::NotInvertiblePotential, where + " has no exponent-1 slot");
}

}  // namespace

std::string describe(const Atom& atom) {
  std::ostringstream os;
  auto list = [&os](const std::vector<int>& vars, const std::vector<Integer>& exps) {
    os << '(';
    for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << 'x' << vars[i];
    os << ";";
    for (std::size_t i = 0; i < exps.size(); ++i) os << (i ? "," : "") << exps[i].get_str();
    os << ')';
  };
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, FermatAtom>) {
          os << "Fermat(x" << a.variable << ";" << a.exponent.get_str() << ")";
        } else if constexpr (std::is_same_v<T, ChainAtom>) {
          os << "Chain";
          list(a.variables, a.exponents);
        } else {
          os << "Loop";
          list(a.variables, a.exponents);
        }
      },
      atom);
  return os.str();
}

AtomicDecomposition atomic_decomposition(const DelsarteMatrix& m) {
  const IntMatrix4& a = m.matrix();
  std::array<RowShape, 4> shapes;
  for (int r = 0; r < 4; ++r) shapes[r] = classify_row(a, r);

  // Exhaustive search over row <-> variable bijections.
  std::array<int, 4> perm{0, 1, 2, 3};  // perm[v] = row assigned to variable v
  std::optional<std::array<int, 4>> matching;
  do {
    bool ok = true;
    for (int v = 0; v < 4 && ok; ++v) ok = shapes[perm[v]].main == v;
    if (!ok) continue;
    std::array<int, 4> indegree{};
    for (int v = 0; v < 4; ++v) {
      const int t = shapes[perm[v]].target;
      if (t >= 0) ++indegree[t];
    }
    if (std::all_of(indegree.begin(), indegree.end(), [](int k) { return k <= 1; })) {
      matching = perm;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (!matching)
    fail(ErrorCode::NotInvertiblePotential,
         "no monomial <-> variable matching into Fermat/chain/loop atoms for " +
             to_string(a));

  AtomicDecomposition out;
  out.row_of_variable = *matching;
  std::array<int, 4> next{};
  std::array<int, 4> indegree{};
  for (int v = 0; v < 4; ++v) {
    const int t = shapes[(*matching)[v]].target;
    next[v] = (t < 0) ? v : t;
    if (t >= 0) ++indegree[t];
  }
  auto exponent = [&](int v) { return shapes[(*matching)[v]].exponent; };

  std::array<bool, 4> visited{};
  for (int v = 0; v < 4; ++v) {
    if (indegree[v] != 0) continue;
    if (next[v] == v) {
      out.atoms.emplace_back(FermatAtom{v, exponent(v)});
      visited[v] = true;
      continue;
    }
    ChainAtom chain;
    int cur = v;
    while (true) {
      chain.variables.push_back(cur);
      chain.exponents.push_back(exponent(cur));
      visited[cur] = true;
      if (next[cur] == cur) break;
      cur = next[cur];
    }
    out.atoms.emplace_back(std::move(chain));
  }
  for (int v = 0; v < 4; ++v) {
    if (visited[v]) continue;
    LoopAtom loop;
    int cur = v;
    while (!visited[cur]) {
      loop.variables.push_back(cur);
      loop.exponents.push_back(exponent(cur));
      visited[cur] = true;
      cur = next[cur];
    }
    ensure(cur == v, "loop closes at its start");
    out.atoms.emplace_back(std::move(loop));
  }
  return out;
}

bool weight_triples_coprime(const DelsarteMatrix& m) {
  const auto& q = m.weights();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int l = j + 1; l < 4; ++l)
        if (gcd(gcd(q[i], q[j]), q[l]) != 1) return false;
  return true;
}

namespace {

bool row_supported_in(const IntMatrix4& a, int row, int i, int j) {
  for (int c = 0; c < 4; ++c)
    if (c != i && c != j && a[row][c] != 0) return false;
  return true;
}

// Pairs (i, j) whose coordinate line lies in the singular locus of P^3(q)
// and inside X_A.
std::vector<std::pair<int, int>> uncovered_singular_lines(const DelsarteMatrix& m) {
  std::vector<std::pair<int, int>> bad;
  const auto& q = m.weights();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (gcd(q[i], q[j]) == 1) continue;
      bool covered = false;
      for (int r = 0; r < 4 && !covered; ++r) covered = row_supported_in(m.matrix(), r, i, j);
      if (!covered) bad.emplace_back(i, j);
    }
  return bad;
}

}  // namespace

bool well_formed(const DelsarteMatrix& m) {
  return weight_triples_coprime(m) && uncovered_singular_lines(m).empty();
}

AdequacyReport matrix_adequacy(const DelsarteMatrix& m, const Characteristic& ch) {
  AdequacyReport rep;
  try {
    const AtomicDecomposition dec = atomic_decomposition(m);
    rep.quasi_smooth = true;
    std::string atoms;
    for (const auto& atom : dec.atoms) atoms += (atoms.empty() ? "" : " + ") + describe(atom);
    rep.diagnostics.push_back("quasi-smooth: F_A = " + atoms);
  } catch (const BhkError& e) {
    if (e.code() != ErrorCode::NotInvertiblePotential) throw;
    rep.diagnostics.push_back(std::string("not quasi-smooth: ") + e.what());
  }

  rep.weight_triple_gcd_ok = weight_triples_coprime(m);
  if (!rep.weight_triple_gcd_ok)
    rep.diagnostics.push_back("weights violate gcd(q_i, q_j, q_l) = 1 for some triple");

  const auto bad_lines = uncovered_singular_lines(m);
  rep.well_formed = rep.weight_triple_gcd_ok && bad_lines.empty();
  for (const auto& [i, j] : bad_lines)
    rep.diagnostics.push_back("not well-formed: gcd(q" + std::to_string(i) + ", q" +
                              std::to_string(j) + ") > 1 and no monomial is supported on {x" +
                              std::to_string(i) + ", x" + std::to_string(j) + "}");
  rep.diagnostics.push_back(
      "note: well-formedness uses the coordinate-line criterion (every pair with "
      "gcd(q_i, q_j) > 1 needs a monomial supported on {x_i, x_j})");

  rep.char_ok = true;
  if (!ch.is_zero()) {
    const Integer& p = ch.value();
    for (int i = 0; i < 4; ++i)
      if (m.weights()[i] % p == 0) {
        rep.char_ok = false;
        rep.diagnostics.push_back("characteristic " + p.get_str() + " divides q" +
                                  std::to_string(i) + " = " + m.weights()[i].get_str());
      }
    if (m.exponent_d() % p == 0) {
      rep.char_ok = false;
      rep.diagnostics.push_back("characteristic " + p.get_str() + " divides d = " +
                                m.exponent_d().get_str());
    }
  }

  rep.verdict = rep.quasi_smooth && rep.well_formed && rep.weight_triple_gcd_ok && rep.char_ok;
  return rep;
}

AdequacyReport adequacy(const DelsarteMatrix& m, const SymmetrySubgroup& g,
                        const Characteristic& ch) {
  const SymmetryData sym = symmetry_data(m);
  if (!sym.j_group.is_subgroup_of(g) || !g.is_subgroup_of(sym.sl))
    fail(ErrorCode::GroupNotBetweenJAndSL, "G must satisfy J <= G <= SL(F_A)");
  return matrix_adequacy(m, ch);
}

}  // namespace bhk
