#pragma once

// The hyperfield lottery: nullsets drawn uniformly from 2^#hex, Monte Carlo
// estimates with Wilson intervals, exact probabilities by exhaustion, and
// censuses of all pastures on small groups.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hexafield/config.hpp"
#include "hexafield/errors.hpp"
#include "hexafield/morphisms.hpp"
#include "hexafield/pasture.hpp"

namespace hexafield {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based coin: a pure function of (seed, sample, hexagon).
constexpr bool lottery_bit(std::uint64_t seed, std::uint64_t sample, std::uint64_t hexagon) {
  return (splitmix64(splitmix64(splitmix64(seed) ^ sample) ^ hexagon) >> 63) != 0;
}

struct LotterySpec {
  AbelianGroup group;
  Elem unit = 0;
  std::uint64_t seed = 42;
  std::uint64_t samples = 10'000;
};

inline void validate(const LotterySpec& spec) {
  if (spec.samples < 1) throw DomainError("lottery needs at least one sample");
  if (spec.unit >= spec.group.order() || spec.group.mul(spec.unit, spec.unit) != 0) {
    throw DomainError("lottery unit must satisfy e^2 = 1");
  }
}

inline Pasture sample_pasture(const LotterySpec& spec, std::uint64_t index, const Caps& caps = {}) {
  auto table = hexagon_table(spec.group, caps);
  HexSet n(table->size());
  for (std::size_t h = 0; h < table->size(); ++h) {
    if (lottery_bit(spec.seed, index, h)) n.set(h);
  }
  return Pasture(std::move(table), spec.unit, std::move(n));
}

enum class Event { is_hyperfield, satisfies_star, all_eps_hexagons, has_nontrivial_automorphism, is_field };

inline std::string_view event_name(Event e) {
  switch (e) {
    case Event::is_hyperfield: return "is_hyperfield";
    case Event::satisfies_star: return "satisfies_star";
    case Event::all_eps_hexagons: return "all_eps_hexagons";
    case Event::has_nontrivial_automorphism: return "has_nontrivial_automorphism";
    case Event::is_field: return "is_field";
  }
  return "?";
}

/// Accepts the full names and the short CLI aliases.
inline Event parse_event(std::string_view s) {
  if (s == "is_hyperfield" || s == "hyperfield") return Event::is_hyperfield;
  if (s == "satisfies_star" || s == "star") return Event::satisfies_star;
  if (s == "all_eps_hexagons" || s == "gg") return Event::all_eps_hexagons;
  if (s == "has_nontrivial_automorphism" || s == "auto" || s == "noauto") {
    return Event::has_nontrivial_automorphism;
  }
  if (s == "is_field" || s == "field") return Event::is_field;
  throw DomainError("unknown event '" + std::string(s) + "'");
}

/// Evaluates one event; `action` is only consulted for the automorphism event.
inline bool evaluate_event(const Pasture& p, Event e, const AutomorphismAction* action) {
  switch (e) {
    case Event::is_hyperfield: return is_hyperfield_fast(p);
    case Event::satisfies_star: return satisfies_star(p);
    case Event::all_eps_hexagons: {
      for (Elem x = 0; x < p.order(); ++x) {
        if (!p.contains(p.unit(), x)) return false;
      }
      return true;
    }
    case Event::has_nontrivial_automorphism: return action->stabilizer_size(p.unit(), p.nullset()) > 1;
    case Event::is_field: return is_hyperfield_fast(p) && is_field(p);
  }
  return false;
}

struct Interval {
  double low = 0;
  double high = 1;
};

/// Wilson score interval for a binomial proportion.
inline Interval wilson_interval(std::uint64_t successes, std::uint64_t samples, double z = 1.959963984540054) {
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  Interval ci{centre - half, centre + half};
  ci.low = std::clamp(ci.low, 0.0, p);
  ci.high = std::clamp(ci.high, p, 1.0);
  return ci;
}

struct Estimate {
  std::string event;
  std::uint64_t successes = 0;
  std::uint64_t samples = 0;
  double p_hat = 0;
  double ci_low = 0;
  double ci_high = 1;

  bool contains(double p) const { return ci_low <= p && p <= ci_high; }
};

inline Estimate estimate(const LotterySpec& spec, Event event, unsigned threads = 1, const Caps& caps = {}) {
  validate(spec);
  auto table = hexagon_table(spec.group, caps);
  std::optional<AutomorphismAction> action;
  if (event == Event::has_nontrivial_automorphism) action.emplace(table, caps);
  const AutomorphismAction* act = action ? &*action : nullptr;
  const std::uint64_t hits = parallel_reduce(
      spec.samples, threads, std::uint64_t{0},
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t c = 0;
        for (std::uint64_t i = begin; i < end; ++i) c += evaluate_event(sample_pasture(spec, i, caps), event, act);
        return c;
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
  Estimate e;
  e.event = std::string(event_name(event));
  e.successes = hits;
  e.samples = spec.samples;
  e.p_hat = static_cast<double>(hits) / static_cast<double>(spec.samples);
  const auto ci = wilson_interval(hits, spec.samples);
  e.ci_low = ci.low;
  e.ci_high = ci.high;
  return e;
}

/// Number of nullsets on (G, ε) for which the event holds, by exhaustion.
struct ExactCount {
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  double probability() const { return static_cast<double>(hits) / static_cast<double>(total); }
};

inline ExactCount exact_count(const AbelianGroup& g, Elem unit, Event event, unsigned threads = 1,
                              const Caps& caps = {}) {
  auto table = hexagon_table(g, caps);
  require_cap(table->size(), caps.census_hexagons, "exhaustive sweep: hexagon count");
  std::optional<AutomorphismAction> action;
  if (event == Event::has_nontrivial_automorphism) action.emplace(table, caps);
  const AutomorphismAction* act = action ? &*action : nullptr;
  const std::uint64_t total = std::uint64_t{1} << table->size();
  const std::uint64_t hits = parallel_reduce(
      total, threads, std::uint64_t{0},
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t c = 0;
        for (std::uint64_t m = begin; m < end; ++m) {
          c += evaluate_event(Pasture(table, unit, HexSet::from_mask(table->size(), m)), event, act);
        }
        return c;
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
  return {hits, total};
}

// ---------------------------------------------------------------------------
// Census

struct Census {
  AbelianGroup group;
  Elem unit = 0;
  std::uint64_t total_pastures = 0;
  std::uint64_t hyperfields = 0;
  std::uint64_t fields = 0;
  std::uint64_t star_hyperfields = 0;
  std::uint64_t iso_classes = 0;
  std::uint64_t rigid_count = 0;       // iso classes with no nontrivial automorphism
  std::uint64_t oracle_checked = 0;    // nullsets cross-checked by the axiom oracle
  std::uint64_t min_hyperfield_hexagons = 0;
  std::size_t aut_fixing_unit = 0;     // #Aut(G, ε)
  std::vector<HexSet> class_reps;      // orbit-minimal hyperfield nullsets, ascending mask
};

namespace detail {
struct CensusPartial {
  std::uint64_t hyperfields = 0, fields = 0, star = 0, iso = 0, rigid = 0, oracle = 0;
  std::uint64_t min_hex = ~std::uint64_t{0};
  std::vector<std::uint64_t> reps;
};
}  // namespace detail

/// Sweeps all 2^#hex nullsets. The fast check is cross-validated by the axiom
/// oracle on every nullset whose mask is divisible by 100 (a deterministic
/// 1% subsample), when the group is within the oracle cap.
inline Census census(const AbelianGroup& g, Elem unit, unsigned threads = 1, const Caps& caps = {},
                     bool collect_reps = false) {
  auto table = hexagon_table(g, caps);
  require_cap(table->size(), caps.census_hexagons, "census: hexagon count");
  if (unit >= g.order() || g.mul(unit, unit) != 0) throw DomainError("census unit must satisfy e^2 = 1");
  const AutomorphismAction action(table, caps);
  const bool oracle_ok = g.order() <= caps.oracle_order;
  const std::size_t width = table->size();
  const std::uint64_t total = std::uint64_t{1} << width;

  auto part = parallel_reduce(
      total, threads, detail::CensusPartial{},
      [&](std::uint64_t begin, std::uint64_t end) {
        detail::CensusPartial r;
        for (std::uint64_t m = begin; m < end; ++m) {
          const Pasture p(table, unit, HexSet::from_mask(width, m));
          const bool hyper = is_hyperfield_fast(p);
          if (oracle_ok && m % 100 == 0) {
            ++r.oracle;
            if (axiom_oracle(p, caps) != hyper) {
              throw std::logic_error("census: fast check disagrees with axiom oracle on " + g.literal() +
                                     " mask " + std::to_string(m));
            }
          }
          if (!hyper) continue;
          ++r.hyperfields;
          r.min_hex = std::min<std::uint64_t>(r.min_hex, p.nullset().count());
          if (is_field(p)) ++r.fields;
          if (satisfies_star(p)) ++r.star;
          if (action.is_orbit_minimum(unit, p.nullset())) {
            ++r.iso;
            if (action.stabilizer_size(unit, p.nullset()) == 1) ++r.rigid;
            if (collect_reps) r.reps.push_back(m);
          }
        }
        return r;
      },
      [](detail::CensusPartial a, detail::CensusPartial b) {
        a.hyperfields += b.hyperfields;
        a.fields += b.fields;
        a.star += b.star;
        a.iso += b.iso;
        a.rigid += b.rigid;
        a.oracle += b.oracle;
        a.min_hex = std::min(a.min_hex, b.min_hex);
        a.reps.insert(a.reps.end(), b.reps.begin(), b.reps.end());
        return a;
      });

  Census c;
  c.group = g;
  c.unit = unit;
  c.total_pastures = total;
  c.hyperfields = part.hyperfields;
  c.fields = part.fields;
  c.star_hyperfields = part.star;
  c.iso_classes = part.iso;
  c.rigid_count = part.rigid;
  c.oracle_checked = part.oracle;
  c.min_hyperfield_hexagons = part.hyperfields ? part.min_hex : 0;
  for (const auto& a : action.automorphisms_list()) c.aut_fixing_unit += a(unit) == unit;
  for (auto m : part.reps) c.class_reps.push_back(HexSet::from_mask(width, m));
  return c;
}

}  // namespace hexafield
