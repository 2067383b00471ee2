#include "bhk/symmetry_groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "bhk/error.hpp"

namespace bhk {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t d) {
  std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

void require_same_modulus(std::int64_t a, std::int64_t b) {
  if (a != b)
    fail(ErrorCode::ModulusMismatch,
         "group elements live mod " + std::to_string(a) + " and mod " + std::to_string(b));
}

}  // namespace

GroupElement::GroupElement(std::int64_t modulus, const std::array<std::int64_t, 4>& coords)
    : modulus_(modulus) {
  if (modulus < 1) fail(ErrorCode::InvalidArgument, "group modulus must be >= 1");
  for (std::size_t i = 0; i < 4; ++i) coords_[i] = reduce(coords[i], modulus);
}

bool GroupElement::all_nonzero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c != 0; });
}

GroupElement GroupElement::operator+(const GroupElement& rhs) const {
  require_same_modulus(modulus_, rhs.modulus_);
  GroupElement r = *this;
  for (std::size_t i = 0; i < 4; ++i) {
    r.coords_[i] += rhs.coords_[i];
    if (r.coords_[i] >= modulus_) r.coords_[i] -= modulus_;
  }
  return r;
}

GroupElement GroupElement::operator-() const {
  GroupElement r = *this;
  for (auto& c : r.coords_) c = (c == 0) ? 0 : modulus_ - c;
  return r;
}

GroupElement GroupElement::operator-(const GroupElement& rhs) const { return *this + (-rhs); }

GroupElement GroupElement::scaled(std::int64_t t) const {
  const std::int64_t tr = reduce(t, modulus_);
  GroupElement r = *this;
  for (auto& c : r.coords_) c = (c * tr) % modulus_;
  return r;
}

std::uint64_t GroupElement::key() const {
  std::uint64_t k = 0;
  for (auto c : coords_) k = k * static_cast<std::uint64_t>(modulus_) + static_cast<std::uint64_t>(c);
  return k;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(' << coords_[0] << ',' << coords_[1] << ',' << coords_[2] << ',' << coords_[3] << ')';
  return os.str();
}

SymmetrySubgroup::SymmetrySubgroup(std::int64_t modulus)
    : modulus_(modulus), elements_{GroupElement::zero(modulus)} {}

bool SymmetrySubgroup::contains(const GroupElement& g) const {
  return g.modulus() == modulus_ && std::binary_search(elements_.begin(), elements_.end(), g);
}

bool SymmetrySubgroup::is_subgroup_of(const SymmetrySubgroup& other) const {
  return modulus_ == other.modulus_ &&
         std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

SymmetrySubgroup subgroup_generated(std::int64_t modulus, std::span<const GroupElement> gens) {
  if (modulus > kMaxModulus)
    fail(ErrorCode::GroupTooLarge, "modulus " + std::to_string(modulus) + " exceeds limit");
  for (const auto& g : gens) require_same_modulus(modulus, g.modulus());

  SymmetrySubgroup out(modulus);
  out.generators_.assign(gens.begin(), gens.end());

  std::unordered_set<std::uint64_t> seen{out.elements_.front().key()};
  std::deque<GroupElement> frontier{out.elements_.front()};
  while (!frontier.empty()) {
    const GroupElement x = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      GroupElement y = x + g;
      if (seen.insert(y.key()).second) {
        out.elements_.push_back(y);
        frontier.push_back(y);
        if (out.elements_.size() > kMaxGroupOrder)
          fail(ErrorCode::GroupTooLarge, "subgroup order exceeds limit");
      }
    }
  }
  std::sort(out.elements_.begin(), out.elements_.end());
  return out;
}

SymmetrySubgroup SymmetrySubgroup::from_elements(std::int64_t modulus,
                                                 std::vector<GroupElement> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  // Greedy generating set: take the least element not yet covered.
  std::vector<GroupElement> gens;
  SymmetrySubgroup span(modulus);
  for (const auto& e : elements) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = subgroup_generated(modulus, gens);
  }
  ensure(span.elements_ == elements, "element list is a subgroup");
  return span;
}

std::int64_t group_modulus(const DelsarteMatrix& m) {
  if (m.exponent_d() > kMaxModulus)
    fail(ErrorCode::GroupTooLarge, "exponent d = " + m.exponent_d().get_str() +
                                       " is beyond the supported modulus " +
                                       std::to_string(kMaxModulus));
  if (m.abs_det() > static_cast<long>(kMaxGroupOrder))
    fail(ErrorCode::GroupTooLarge,
         "|det A| = " + m.abs_det().get_str() + " is beyond the supported group order");
  return to_int64(m.exponent_d());
}

SymmetrySubgroup aut_group(const DelsarteMatrix& m) {
  const std::int64_t d = group_modulus(m);
  const IntMatrix4& b = m.b_matrix();
  std::vector<GroupElement> columns;
  for (int k = 0; k < 4; ++k) {
    std::array<std::int64_t, 4> c{};
    for (int i = 0; i < 4; ++i) {
      Integer r = b[i][k] % d;
      c[i] = r.get_si();
    }
    columns.emplace_back(d, c);
  }
  SymmetrySubgroup aut = subgroup_generated(d, columns);
  ensure(Integer(static_cast<long>(aut.order())) == m.abs_det(), "#Aut(F_A) = |det A|");
  return aut;
}

SymmetrySubgroup sl_subgroup(const SymmetrySubgroup& aut) {
  const std::int64_t d = aut.modulus();
  std::vector<GroupElement> kept;
  for (const auto& a : aut.elements())
    if (a.coordinate_sum() % d == 0) kept.push_back(a);
  return SymmetrySubgroup::from_elements(d, std::move(kept));
}

GroupElement j_element(const DelsarteMatrix& m) {
  const std::int64_t d = group_modulus(m);
  const Integer step = m.exponent_d() / m.degree_h();
  std::array<std::int64_t, 4> c{};
  for (int i = 0; i < 4; ++i) {
    Integer r = (step * m.weights()[i]) % d;
    c[i] = r.get_si();
  }
  return GroupElement(d, c);
}

std::int64_t element_order(const GroupElement& g) {
  std::int64_t acc = g.modulus();
  for (auto c : g.coords()) acc = std::gcd(acc, c);
  return g.modulus() / acc;
}

std::vector<SymmetrySubgroup> enumerate_intermediate(const SymmetrySubgroup& j_group,
                                                     const SymmetrySubgroup& sl) {
  if (!j_group.is_subgroup_of(sl))
    fail(ErrorCode::GroupNotBetweenJAndSL, "enumerate_intermediate needs J <= SL");
  const std::int64_t d = sl.modulus();

  auto signature = [](const SymmetrySubgroup& g) {
    std::vector<std::uint64_t> keys;
    keys.reserve(g.order());
    for (const auto& e : g.elements()) keys.push_back(e.key());
    return keys;
  };

  // Grow the lattice from J by adjoining one element of SL at a time; every
  // G between J and SL is reached along some chain of such steps.
  std::vector<SymmetrySubgroup> found{j_group};
  std::set<std::vector<std::uint64_t>> seen{signature(j_group)};
  for (std::size_t next = 0; next < found.size(); ++next) {
    const SymmetrySubgroup base = found[next];
    std::unordered_set<std::uint64_t> covered;
    for (const auto& e : base.elements()) covered.insert(e.key());
    for (const auto& s : sl.elements()) {
      if (covered.contains(s.key())) continue;
      for (const auto& e : base.elements()) covered.insert((s + e).key());

      std::vector<GroupElement> gens = base.generators();
      gens.push_back(s);
      SymmetrySubgroup grown = subgroup_generated(d, gens);
      if (seen.insert(signature(grown)).second)
        found.push_back(SymmetrySubgroup::from_elements(d, grown.elements()));
    }
  }

  std::sort(found.begin(), found.end(), [](const SymmetrySubgroup& a, const SymmetrySubgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

SymmetryData symmetry_data(const DelsarteMatrix& m) {
  if (!is_calabi_yau(m))
    fail(ErrorCode::NotCalabiYau, "matrix " + to_string(m.matrix()) +
                                      " does not satisfy h = q0 + q1 + q2 + q3");
  SymmetrySubgroup aut = aut_group(m);
  SymmetrySubgroup sl = sl_subgroup(aut);
  GroupElement j = j_element(m);
  const std::array<GroupElement, 1> gens{j};
  SymmetrySubgroup j_group = subgroup_generated(j.modulus(), gens);
  ensure(sl.contains(j), "J <= SL under the Calabi-Yau condition");
  ensure(Integer(static_cast<long>(element_order(j))) == m.degree_h(), "j_A has order h");
  return SymmetryData{std::move(aut), std::move(sl), j, std::move(j_group)};
}

}  // namespace bhk
