#include "bhk/picard.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "bhk/error.hpp"

namespace bhk {

int age(const GroupElement& g) {
  if (!g.all_nonzero())
    fail(ErrorCode::ZeroCoordinate, "age is only defined on A_d; " + g.to_string() +
                                        " has a zero coordinate");
  const std::int64_t sum = g.coordinate_sum();
  if (sum % g.modulus() != 0)
    fail(ErrorCode::NonintegralAge, "coordinate sum of " + g.to_string() + " is not 0 mod " +
                                        std::to_string(g.modulus()));
  return static_cast<int>(sum / g.modulus());
}

namespace {

std::vector<std::int64_t> units_mod(std::int64_t d) {
  std::vector<std::int64_t> units;
  for (std::int64_t t = 1; t < d; ++t)
    if (std::gcd(t, d) == 1) units.push_back(t);
  if (d == 1) units.push_back(0);
  return units;
}

// p mod d together with the order f of p in U_d; p = 0 gives f = 0.
struct Frobenius {
  std::int64_t residue = 0;
  std::int64_t order = 0;
};

Frobenius frobenius_data(std::int64_t d, const Characteristic& ch) {
  if (ch.is_zero()) return {};
  const Integer& p = ch.value();
  if (Integer(d) % p == 0)
    fail(ErrorCode::CharDividesD,
         "characteristic " + p.get_str() + " divides d = " + std::to_string(d));
  Integer residue = p % d;
  return {residue.get_si(), to_int64(multiplicative_order(p, Integer(d)))};
}

std::vector<GroupElement> elements_of(const std::vector<AgedElement>& aged) {
  std::vector<GroupElement> out;
  out.reserve(aged.size());
  for (const auto& a : aged) out.push_back(a.element);
  return out;
}

void check_rho(int rho) {
  ensure(rho >= 0 && rho <= kK3SecondBetti, "0 <= rho <= 22 (got " + std::to_string(rho) + ")");
}

}  // namespace

std::vector<AgedElement> frak_A_intersect(const SymmetrySubgroup& h) {
  std::vector<AgedElement> out;
  const std::int64_t d = h.modulus();
  for (const auto& e : h.elements()) {
    if (e.coordinate_sum() % d != 0)
      fail(ErrorCode::HNotInMd, "H is not inside M_d: " + e.to_string() + " has nonzero sum");
    if (e.all_nonzero()) out.push_back({e, age(e)});
  }
  return out;
}

std::vector<AgedElement> frak_I_direct(const SymmetrySubgroup& h, const Characteristic& ch) {
  const std::int64_t d = h.modulus();
  const Frobenius frob = frobenius_data(d, ch);
  const auto units = units_mod(d);

  std::vector<AgedElement> out;
  for (const auto& aged : frak_A_intersect(h)) {
    bool in_b = true;
    for (std::int64_t t : units) {
      const GroupElement ta = aged.element.scaled(t);
      if (ch.is_zero()) {
        in_b = age(ta) == 2;
      } else {
        std::int64_t total = 0;
        GroupElement x = ta;
        for (std::int64_t j = 0; j < frob.order; ++j) {
          total += age(x);
          x = x.scaled(frob.residue);
        }
        in_b = total == 2 * frob.order;
      }
      if (!in_b) break;
    }
    if (!in_b) out.push_back(aged);
  }
  return out;
}

OrbitDecomposition orbit_decomposition(const SymmetrySubgroup& h, const Characteristic& ch,
                                       const AgeFunction& age_fn) {
  const std::int64_t d = h.modulus();
  const Frobenius frob = frobenius_data(d, ch);
  const auto units = units_mod(d);

  OrbitDecomposition dec;
  for (const auto& aged : frak_A_intersect(h))
    dec.ambient.push_back({aged.element, age_fn(aged.element)});

  std::unordered_map<std::uint64_t, int> age_of;
  for (const auto& a : dec.ambient) age_of.emplace(a.element.key(), a.age);
  auto with_age = [&](const GroupElement& g) { return AgedElement{g, age_of.at(g.key())}; };

  std::unordered_set<std::uint64_t> placed;
  for (const auto& a : dec.ambient) {
    if (placed.contains(a.element.key())) continue;
    std::vector<AgedElement> orbit;
    for (std::int64_t t : units) {
      GroupElement b = a.element.scaled(t);
      if (placed.insert(b.key()).second) orbit.push_back(with_age(b));
    }
    std::sort(orbit.begin(), orbit.end());
    dec.u_orbits.push_back(std::move(orbit));
  }

  if (!ch.is_zero()) {
    for (const auto& orbit : dec.u_orbits) {
      std::vector<std::vector<AgedElement>> parts;
      std::unordered_set<std::uint64_t> seen;
      for (const auto& b : orbit) {
        if (seen.contains(b.element.key())) continue;
        std::vector<AgedElement> part;
        GroupElement x = b.element;
        while (seen.insert(x.key()).second) {
          part.push_back(with_age(x));
          x = x.scaled(frob.residue);
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
      }
      dec.p_suborbits.push_back(std::move(parts));
    }
  }
  return dec;
}

std::vector<AgedElement> frak_I_orbit(const SymmetrySubgroup& h, const Characteristic& ch,
                                      const AgeFunction& age_fn) {
  const OrbitDecomposition dec = orbit_decomposition(h, ch, age_fn);

  std::vector<AgedElement> selected;
  for (std::size_t k = 0; k < dec.u_orbits.size(); ++k) {
    const auto& orbit = dec.u_orbits[k];
    bool keep = false;
    if (ch.is_zero()) {
      keep = std::any_of(orbit.begin(), orbit.end(), [](const AgedElement& a) { return a.age == 1; });
    } else {
      for (const auto& part : dec.p_suborbits[k]) {
        auto ones = std::count_if(part.begin(), part.end(), [](const AgedElement& a) { return a.age == 1; });
        auto threes = std::count_if(part.begin(), part.end(), [](const AgedElement& a) { return a.age == 3; });
        if (ones != threes) {
          keep = true;
          break;
        }
      }
    }
    if (keep) selected.insert(selected.end(), orbit.begin(), orbit.end());
  }
  std::sort(selected.begin(), selected.end());

  const auto direct = frak_I_direct(h, ch);
  if (elements_of(selected) != elements_of(direct))
    fail(ErrorCode::MethodMismatch,
         "orbit characterization of I_d(p) n H found " + std::to_string(selected.size()) +
             " elements, the direct definition " + std::to_string(direct.size()));
  return selected;
}

std::vector<AgedElement> age_one_census(const SymmetrySubgroup& h) {
  std::vector<AgedElement> out;
  for (const auto& a : frak_A_intersect(h))
    if (a.age == 1) out.push_back(a);
  return out;
}

namespace {

int closed_form_rho(const Integer& degree, const Characteristic& ch) {
  const int ordinary = kK3SecondBetti - static_cast<int>(to_int64(euler_phi(degree)));
  if (ch.is_zero()) return ordinary;
  return minus_one_power_exists(ch.value(), degree) ? kK3SecondBetti : ordinary;
}

void require_char_coprime_to_d(const MirrorPair& mp) {
  const Characteristic& ch = mp.primal.characteristic;
  if (!ch.is_zero() && mp.primal.matrix.exponent_d() % ch.value() == 0)
    fail(ErrorCode::CharDividesD, "characteristic " + ch.value().get_str() + " divides d = " +
                                      mp.primal.matrix.exponent_d().get_str());
}

}  // namespace

RhoPair picard_closed_form(const MirrorPair& mp) {
  require_char_coprime_to_d(mp);
  const Characteristic& ch = mp.primal.characteristic;
  RhoPair rho{closed_form_rho(mp.mirror.matrix.degree_h(), ch),
              closed_form_rho(mp.primal.matrix.degree_h(), ch)};
  check_rho(rho.primal);
  check_rho(rho.mirror);
  return rho;
}

RhoPair picard_kelly(const MirrorPair& mp) {
  require_char_coprime_to_d(mp);
  const Characteristic& ch = mp.primal.characteristic;
  RhoPair rho{kK3SecondBetti - static_cast<int>(frak_I_direct(mp.mirror.group, ch).size()),
              kK3SecondBetti - static_cast<int>(frak_I_direct(mp.primal.group, ch).size())};
  check_rho(rho.primal);
  check_rho(rho.mirror);
  return rho;
}

RhoPair picard_orbit(const MirrorPair& mp) {
  require_char_coprime_to_d(mp);
  const Characteristic& ch = mp.primal.characteristic;
  RhoPair rho{kK3SecondBetti - static_cast<int>(frak_I_orbit(mp.mirror.group, ch).size()),
              kK3SecondBetti - static_cast<int>(frak_I_orbit(mp.primal.group, ch).size())};
  check_rho(rho.primal);
  check_rho(rho.mirror);
  return rho;
}

std::string_view method_name(PicardMethod method) {
  switch (method) {
    case PicardMethod::Closed: return "closed";
    case PicardMethod::Kelly: return "kelly";
    case PicardMethod::Orbit: return "orbit";
    case PicardMethod::All: return "all";
  }
  return "all";
}

std::optional<PicardMethod> parse_method(std::string_view name) {
  for (auto m : {PicardMethod::Closed, PicardMethod::Kelly, PicardMethod::Orbit, PicardMethod::All})
    if (method_name(m) == name) return m;
  return std::nullopt;
}

PicardReport picard_report(const MirrorPair& mp, PicardMethod method) {
  require_char_coprime_to_d(mp);
  const Characteristic& ch = mp.primal.characteristic;
  PicardReport rep;
  rep.characteristic = ch;

  const bool all = method == PicardMethod::All;
  if (all || method == PicardMethod::Closed) rep.closed_form = picard_closed_form(mp);
  if (all || method == PicardMethod::Kelly) {
    rep.kelly = picard_kelly(mp);
    rep.count_in_dual = static_cast<std::size_t>(kK3SecondBetti - rep.kelly->primal);
    rep.count_in_group = static_cast<std::size_t>(kK3SecondBetti - rep.kelly->mirror);
  }
  if (all || method == PicardMethod::Orbit) {
    rep.orbit = picard_orbit(mp);
    rep.count_in_dual = static_cast<std::size_t>(kK3SecondBetti - rep.orbit->primal);
    rep.count_in_group = static_cast<std::size_t>(kK3SecondBetti - rep.orbit->mirror);
  }

  std::optional<RhoPair> agreed;
  for (const auto* value : {&rep.closed_form, &rep.kelly, &rep.orbit}) {
    if (!value->has_value()) continue;
    if (agreed && **value != *agreed)
      fail(ErrorCode::MethodMismatch,
           "Picard methods disagree: (" + std::to_string(agreed->primal) + ", " +
               std::to_string(agreed->mirror) + ") vs (" + std::to_string((*value)->primal) +
               ", " + std::to_string((*value)->mirror) + ")");
    agreed = **value;
  }
  ensure(agreed.has_value(), "at least one Picard method ran");
  rep.rho_primal = agreed->primal;
  rep.rho_mirror = agreed->mirror;
  return rep;
}

namespace {

ResidueRule residue_rule(const Integer& modulus) {
  ResidueRule rule;
  rule.modulus = modulus;
  rule.ordinary_rho = kK3SecondBetti - static_cast<int>(to_int64(euler_phi(modulus)));
  for (Integer r = 0; r < modulus; ++r) {
    if (gcd(r, modulus) != 1) continue;
    if (minus_one_power_exists(r, modulus))
      rule.supersingular_classes.push_back(r);
    else
      rule.ordinary_classes.push_back(r);
  }
  return rule;
}

}  // namespace

ScanReport prime_scan(const MirrorPair& mp, const std::vector<Integer>& primes) {
  const Integer& d = mp.primal.matrix.exponent_d();
  const Integer& h = mp.primal.matrix.degree_h();
  const Integer& h_t = mp.mirror.matrix.degree_h();

  ScanReport rep;
  rep.primal_rule = residue_rule(h_t);
  rep.mirror_rule = residue_rule(h);
  for (const auto& p : primes) {
    if (!is_prime(p)) {
      rep.skipped.emplace_back(p, "not a prime");
      continue;
    }
    if (d % p == 0) {
      rep.skipped.emplace_back(p, std::string(error_code_name(ErrorCode::CharDividesD)) +
                                      ": divides d = " + d.get_str());
      continue;
    }
    const Characteristic ch(p);
    bool weight_hit = false;
    for (int i = 0; i < 4; ++i)
      weight_hit = weight_hit || mp.primal.matrix.weights()[i] % p == 0 ||
                   mp.mirror.matrix.weights()[i] % p == 0;
    if (weight_hit) {
      rep.skipped.emplace_back(p, "divides a weight of F_A or F_{A^T}; the pair is not adequate there");
      continue;
    }
    RhoPair rho{closed_form_rho(h_t, ch), closed_form_rho(h, ch)};
    rep.rows.push_back(ScanRow{p, Integer(p % h_t), Integer(p % h), rho});
  }
  return rep;
}

std::vector<Integer> primes_up_to(std::int64_t n) {
  std::vector<Integer> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.emplace_back(static_cast<long>(i));
    for (std::int64_t k = i * i; k <= n; k += i) composite[k] = true;
  }
  return out;
}

}  // namespace bhk
