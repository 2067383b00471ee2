#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bhk::oracle {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t phi(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= n; ++k)
    if (gcd(k, n) == 1) ++count;
  return count;
}

Inverse inverse(const IntMatrix4& a) {
  std::array<std::array<mpq_class, 8>, 4> aug;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 8; ++j) aug[i][j] = j < 4 ? mpq_class(a[i][j]) : mpq_class(j - 4 == i ? 1 : 0);
  Inverse out;
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r)
      if (aug[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return out;
    std::swap(aug[col], aug[pivot]);
    const mpq_class inv = 1 / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const mpq_class f = aug[r][col];
      for (int j = 0; j < 8; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  out.ok = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.entries[i][j] = aug[i][j + 4];
  return out;
}

Weights weights(const IntMatrix4& a) {
  const Inverse inv = inverse(a);
  if (!inv.ok) throw std::invalid_argument("singular");
  std::array<mpq_class, 4> row_sum;
  for (int i = 0; i < 4; ++i) row_sum[i] = inv.entries[i][0] + inv.entries[i][1] + inv.entries[i][2] + inv.entries[i][3];
  mpz_class h = 1;
  for (const auto& r : row_sum) h = lcm(h, mpz_class(r.get_den()));
  Weights w;
  w.h = h.get_si();
  for (int i = 0; i < 4; ++i) {
    const mpq_class scaled = row_sum[i] * h;
    w.q[i] = mpz_class(scaled.get_num()).get_si();
  }
  std::int64_t g = 0;
  for (auto x : w.q) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : w.q) x /= g;
    w.h /= g;
  }
  return w;
}

std::int64_t exponent_d(const IntMatrix4& a) {
  const Inverse inv = inverse(a);
  if (!inv.ok) throw std::invalid_argument("singular");
  mpz_class d = 1;
  for (const auto& row : inv.entries)
    for (const auto& x : row) d = lcm(d, mpz_class(x.get_den()));
  return d.get_si();
}

std::int64_t det(const IntMatrix4& a) {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::int64_t term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < 4; ++i) term *= a[i][perm[i]].get_si();
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {

ElementSet kernel_impl(const IntMatrix4& a, std::int64_t d, bool left) {
  std::array<std::array<std::int64_t, 4>, 4> m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = left ? a[j][i].get_si() : a[i][j].get_si();
  ElementSet out;
  Vec x{};
  for (x[0] = 0; x[0] < d; ++x[0])
    for (x[1] = 0; x[1] < d; ++x[1])
      for (x[2] = 0; x[2] < d; ++x[2])
        for (x[3] = 0; x[3] < d; ++x[3]) {
          bool ok = true;
          for (int i = 0; i < 4 && ok; ++i)
            ok = (m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2] + m[i][3] * x[3]) % d == 0;
          if (ok) out.insert(x);
        }
  return out;
}

Vec add(const Vec& x, const Vec& y, std::int64_t d) {
  Vec z;
  for (int i = 0; i < 4; ++i) z[i] = (x[i] + y[i]) % d;
  return z;
}

}  // namespace

ElementSet kernel(const IntMatrix4& a, std::int64_t d) { return kernel_impl(a, d, false); }
ElementSet left_kernel(const IntMatrix4& a, std::int64_t d) { return kernel_impl(a, d, true); }

ElementSet closure(const std::vector<Vec>& gens, std::int64_t d) {
  ElementSet out{Vec{0, 0, 0, 0}};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> current(out.begin(), out.end());
    for (const auto& x : current)
      for (const auto& g : gens) grew = out.insert(add(x, g, d)).second || grew;
  }
  return out;
}

std::set<ElementSet> intermediate_subgroups(const ElementSet& j_group, const ElementSet& sl,
                                            std::int64_t d) {
  std::vector<Vec> reps;
  ElementSet covered;
  for (const auto& x : sl) {
    if (covered.contains(x)) continue;
    reps.push_back(x);
    for (const auto& j : j_group) covered.insert(add(x, j, d));
  }
  if (reps.size() > 20) throw std::invalid_argument("too many cosets for the power-set oracle");
  std::vector<Vec> j_list(j_group.begin(), j_group.end());
  std::set<ElementSet> out;
  for (std::uint32_t mask = 0; mask < (1u << reps.size()); ++mask) {
    std::vector<Vec> gens = j_list;
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (mask & (1u << k)) gens.push_back(reps[k]);
    out.insert(closure(gens, d));
  }
  return out;
}

ElementSet dual(const IntMatrix4& a, const ElementSet& g, std::int64_t d) {
  const std::int64_t d2 = d * d;
  ElementSet out;
  for (const auto& x : left_kernel(a, d)) {
    bool annihilates = true;
    for (const auto& y : g) {
      std::int64_t s = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += x[i] * a[i][j].get_si() * y[j];
      if (s % d2 != 0) {
        annihilates = false;
        break;
      }
    }
    if (annihilates) out.insert(x);
  }
  return out;
}

int age(const Vec& x, std::int64_t d) {
  const std::int64_t s = x[0] + x[1] + x[2] + x[3];
  return s % d == 0 ? static_cast<int>(s / d) : -1;
}

ElementSet frak_I(const ElementSet& h, std::int64_t d, std::int64_t p) {
  std::int64_t f = 0;
  if (p != 0) {
    std::int64_t x = p % d;
    f = 1;
    while (x != 1 % d) {
      x = x * (p % d) % d;
      ++f;
    }
  }
  auto times = [d](const Vec& x, std::int64_t t) {
    Vec y;
    for (int i = 0; i < 4; ++i) y[i] = x[i] * t % d;
    return y;
  };
  ElementSet out;
  for (const auto& a : h) {
    if (!(a[0] && a[1] && a[2] && a[3])) continue;
    bool in_b = true;
    for (std::int64_t t = 1; t < d && in_b; ++t) {
      if (gcd(t, d) != 1) continue;
      if (p == 0) {
        in_b = age(times(a, t), d) == 2;
      } else {
        std::int64_t total = 0, power = 1;
        for (std::int64_t j = 0; j < f; ++j) {
          total += age(times(a, t * power % d), d);
          power = power * (p % d) % d;
        }
        in_b = total == 2 * f;
      }
    }
    if (!in_b) out.insert(a);
  }
  return out;
}

}  // namespace bhk::oracle
