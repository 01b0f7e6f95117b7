// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hexafield/cli.hpp"
#include "hexafield/hexafield.hpp"
#include "oracles.hpp"

using namespace hexafield;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const unsigned kThreads = resolve_threads(0);

std::vector<Pasture> pastures_of(const AbelianGroup& g) {
  std::vector<Pasture> out;
  const auto t = hexagon_table(g);
  for (Elem e : units_of_order_le_2(g)) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << t->size()); ++m) out.emplace_back(t, e, HexSet::from_mask(t->size(), m));
  }
  return out;
}

std::vector<Pasture> hyperfields_up_to(std::size_t order) {
  std::vector<Pasture> out;
  for (const auto& g : abelian_groups_up_to(order)) {
    for (auto& p : pastures_of(g)) {
      if (is_hyperfield_fast(p)) out.push_back(std::move(p));
    }
  }
  return out;
}

oracle::HyperAddition oracle_addition(const Pasture& p) {
  const oracle::Group og{p.group().invariant_factors()};
  std::set<int> sel;
  for (auto h : p.nullset().indices()) sel.insert(static_cast<int>(h));
  return oracle::addition_from_classes(og, static_cast<int>(p.unit()), oracle::hexagon_classes(og), sel);
}

// 1
Outcome hexagon_formula() {
  Outcome o;
  const auto groups = abelian_groups_up_to(16);
  if (groups.size() != 25) o.fail("expected 25 groups, got " + std::to_string(groups.size()));
  for (const auto& g : groups) {
    const oracle::Group og{g.invariant_factors()};
    const auto enumerated = hexagon_table(g)->size();
    const auto independent = static_cast<std::size_t>(oracle::class_count(oracle::hexagon_classes(og)));
    if (enumerated != hexagon_count_formula(g) || independent != enumerated) o.fail(g.literal());
  }
  o.detail = o.ok ? std::to_string(groups.size()) + " groups" : o.detail;
  return o;
}

// 2 and 3 share the same pasture stream
struct Sweep {
  std::uint64_t checked = 0, hyperfields = 0, fast_mismatch = 0, star_mismatch = 0;
};

Sweep sweep_criterion2() {
  Sweep s;
  auto absorb = [&](const Pasture& p) {
    ++s.checked;
    const bool fast = is_hyperfield_fast(p);
    if (fast != axiom_oracle(p)) ++s.fast_mismatch;
    if (fast) {
      ++s.hyperfields;
      if (satisfies_star(p) != (is_4full(p) && is_zero_over_zero(p))) ++s.star_mismatch;
    }
  };
  for (const auto& g : abelian_groups_up_to(5)) {
    for (const auto& p : pastures_of(g)) absorb(p);
  }
  for (const auto& g : abelian_groups_up_to(9)) {
    if (g.order() < 6) continue;
    for (Elem e : units_of_order_le_2(g)) {
      const LotterySpec spec{g, e, 42, 10'000};
      const auto part = parallel_reduce(
          spec.samples, kThreads, Sweep{},
          [&](std::uint64_t b, std::uint64_t end) {
            Sweep r;
            for (std::uint64_t i = b; i < end; ++i) {
              const auto p = sample_pasture(spec, i);
              ++r.checked;
              const bool fast = is_hyperfield_fast(p);
              if (fast != axiom_oracle(p)) ++r.fast_mismatch;
              if (fast) {
                ++r.hyperfields;
                if (satisfies_star(p) != (is_4full(p) && is_zero_over_zero(p))) ++r.star_mismatch;
              }
            }
            return r;
          },
          [](Sweep a, Sweep b) {
            a.checked += b.checked;
            a.hyperfields += b.hyperfields;
            a.fast_mismatch += b.fast_mismatch;
            a.star_mismatch += b.star_mismatch;
            return a;
          });
      s.checked += part.checked;
      s.hyperfields += part.hyperfields;
      s.fast_mismatch += part.fast_mismatch;
      s.star_mismatch += part.star_mismatch;
    }
  }
  return s;
}

// 4
Outcome small_censuses() {
  Outcome o;
  // independent counts first
  auto oracle_count = [](const AbelianGroup& g, Elem e) {
    int hits = 0;
    for (const auto& p : pastures_of(g)) {
      if (p.unit() == e) hits += oracle::hyperfield_axioms(oracle_addition(p));
    }
    return hits;
  };
  const auto z2 = AbelianGroup::cyclic(2);
  if (oracle_count(z2, 1) != 3 || census(z2, 1).hyperfields != 3) o.fail("(Z2, g) is not 3");
  if (oracle_count(z2, 0) != 2 || census(z2, 0).hyperfields != 2) o.fail("(Z2, 1) is not 2");
  const auto triv = census(AbelianGroup{}, 0, 1, {}, true);
  if (oracle_count(AbelianGroup{}, 0) != 2 || triv.hyperfields != 2 || triv.class_reps.size() != 2 ||
      !is_f2(Pasture(AbelianGroup{}, 0, triv.class_reps[0])) || !is_krasner(Pasture(AbelianGroup{}, 0, triv.class_reps[1]))) {
    o.fail("trivial group is not {F2, K}");
  }
  std::size_t rows = 0;
  for (const auto& g : abelian_groups_up_to(9)) {
    for (Elem e : units_of_order_le_2(g)) {
      const auto c = census(g, e, kThreads);
      ++rows;
      const double non = static_cast<double>(c.total_pastures - c.hyperfields) / static_cast<double>(c.total_pastures);
      if (g.order() >= 2 && non < std::ldexp(1.0, -static_cast<int>(g.order()))) o.fail("2^-n bound on " + g.literal());
      if (c.hyperfields > 0 && 6 * c.min_hyperfield_hexagons + 1 < g.order()) o.fail("(n-1)/6 bound on " + g.literal());
    }
  }
  if (o.ok) o.detail = std::to_string(rows) + " census rows";
  return o;
}

// 5
Outcome asymptotic_trends() {
  Outcome o;
  auto overlap = [](const Estimate& a, const Estimate& b) { return a.ci_low <= b.ci_high && b.ci_low <= a.ci_high; };
  const std::vector<int> orders{5, 7, 9, 11, 13};
  std::vector<Estimate> star, aut;
  std::ostringstream trail;
  for (int n : orders) {
    const LotterySpec spec{AbelianGroup::cyclic(n), 0, 42, 10'000};
    star.push_back(estimate(spec, Event::satisfies_star, kThreads));
    aut.push_back(estimate(spec, Event::has_nontrivial_automorphism, kThreads));
    trail << " Z" << n << "=" << star.back().p_hat << "/" << aut.back().p_hat;
  }
  std::vector<std::string> problems;
  for (std::size_t i = 0; i + 1 < orders.size(); ++i) {
    const auto step = "Z" + std::to_string(orders[i]) + "->Z" + std::to_string(orders[i + 1]);
    if (star[i + 1].p_hat < star[i].p_hat && !overlap(star[i], star[i + 1])) {
      std::string msg = "star drops " + step;
      if (orders[i + 1] <= 9) {
        const auto a = exact_count(AbelianGroup::cyclic(orders[i]), 0, Event::satisfies_star, kThreads);
        const auto b = exact_count(AbelianGroup::cyclic(orders[i + 1]), 0, Event::satisfies_star, kThreads);
        msg += " (exact " + std::to_string(a.hits) + "/" + std::to_string(a.total) + " vs " + std::to_string(b.hits) + "/" +
               std::to_string(b.total) + ")";
      }
      problems.push_back(msg);
    }
    if (aut[i + 1].p_hat > aut[i].p_hat && !overlap(aut[i], aut[i + 1])) problems.push_back("auto rises " + step);
  }
  for (int n : {2, 3}) {
    const auto g = AbelianGroup::cyclic(n);
    for (Elem e : units_of_order_le_2(g)) {
      for (auto ev : {Event::is_hyperfield, Event::satisfies_star, Event::has_nontrivial_automorphism}) {
        const auto exact = exact_count(g, e, ev).probability();
        if (!estimate({g, e, 42, 10'000}, ev, kThreads).contains(exact)) {
          problems.push_back("Z" + std::to_string(n) + " " + std::string(event_name(ev)) + " misses exact value");
        }
      }
    }
  }
  for (const auto& p : problems) o.fail(p);
  std::string joined;
  for (const auto& p : problems) joined += (joined.empty() ? "" : "; ") + p;
  o.detail = (problems.empty() ? "" : joined + " |") + " star/auto" + trail.str();
  return o;
}

// 6
Outcome quotient_soundness() {
  Outcome o;
  std::size_t built = 0;
  for (std::uint64_t q = 2; q <= 49; ++q) {
    std::uint64_t p = 0;
    unsigned k = 0;
    if (!arith::prime_power(q, p, k)) continue;
    for (std::uint32_t n = 1; n <= 9; ++n) {
      if ((q - 1) % n != 0) continue;
      const auto quo = quotient_hyperfield(q, n);
      ++built;
      const std::string tag = std::to_string(q) + "/" + std::to_string(n);
      if (!axiom_oracle(quo)) o.fail(tag + " fails the axiom oracle");
      if (is_quotient_of_finite_field(quo, {}, kThreads).status != QuotientVerdict::Status::quotient) o.fail(tag + " not recognized");
    }
  }
  if (!are_isomorphic(quotient_hyperfield(4, 1), named::krasner())) o.fail("F4/F4^x is not K");
  std::size_t nq = 0;
  for (const auto& h : hyperfields_up_to(4)) {
    const auto v = is_quotient_of_finite_field(h, {}, kThreads);
    if (v.status != QuotientVerdict::Status::not_quotient) continue;
    ++nq;
    const std::uint64_t n = h.order();
    if (full_one_minus_one(h) || v.searched_bound != n * n * n * n) o.fail("not_quotient outside the bounded branch");
    // confirm by brute force against every candidate quotient
    for (std::uint64_t q = 2; q - 1 <= n * n * n * n; ++q) {
      std::uint64_t p = 0;
      unsigned k = 0;
      if ((q - 1) % n != 0 || !arith::prime_power(q, p, k)) continue;
      const auto quo = quotient_hyperfield(q, static_cast<std::uint32_t>(n));
      if (exists_bijective_morphism(quo, h) && exists_bijective_morphism(h, quo)) {
        o.fail("not_quotient contradicted at q = " + std::to_string(q));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(built) + " quotients, " + std::to_string(nq) + " not_quotient verdicts confirmed";
  return o;
}

// 7
Outcome product_theorem() {
  Outcome o;
  const auto hyper = hyperfields_up_to(3);
  std::size_t pairs = 0;
  for (const auto& a : hyper) {
    for (const auto& b : hyper) {
      ++pairs;
      const auto prod = product(a, b);
      if (is_hyperfield_fast(prod) != product_theorem_verdict(a, b)) o.fail("verdict mismatch");
      if (is_zero_over_zero(a) && is_zero_over_zero(b) && !is_zero_over_zero(prod)) o.fail("0/0 not preserved");
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " ordered pairs";
  return o;
}

// 8
Outcome fetvins() {
  Outcome o;
  std::size_t structures = 0, systems = 0;
  for (const auto& h : hyperfields_up_to(4)) {
    if (!is_4full(h) || !is_zero_over_zero(h)) continue;
    ++structures;
    const auto a = reconstruct_addition(h);
    const auto c = static_cast<Carrier>(a.carrier_size());
    for (std::size_t m = 1; m <= 2; ++m) {
      const std::size_t entries = m * (m + 1);
      std::vector<Carrier> d(entries, 0);
      while (true) {
        LinearSystem sys{m, {}};
        for (std::size_t r = 0; r < m; ++r) sys.coefficients.emplace_back(d.begin() + r * (m + 1), d.begin() + (r + 1) * (m + 1));
        ++systems;
        if (!fetvins_check(a, sys)) o.fail(h.group().literal() + " has an unsolvable system");
        std::size_t i = 0;
        while (i < entries && ++d[i] == c) d[i++] = 0;
        if (i == entries) break;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(structures) + " hyperfields, " + std::to_string(systems) + " systems";
  return o;
}

// 9
Outcome skew_bounds() {
  Outcome o;
  std::ostringstream counts;
  for (const char* name : {"S3", "D4", "Q8", "D6", "A4"}) {
    const auto g = CayleyGroup::parse(name);
    const auto t = skew_hexagons(g);
    const std::uint64_t n = g.order();
    if (t.size() > (5 * n * n + 40 * n) / 48) o.fail(std::string(name) + " exceeds the bound");
    if (t.size() != burnside_orbit_count(g)) o.fail(std::string(name) + " disagrees with Burnside");
    counts << " " << name << "=" << t.size();
  }
  for (const auto& g : abelian_groups_up_to(16)) {
    if (skew_hexagons(CayleyGroup::from_abelian(g)).size() != hexagon_count_formula(g)) o.fail("abelian " + g.literal());
  }
  if (o.ok) o.detail = "orbits" + counts.str();
  return o;
}

// 10
Outcome determinism() {
  Outcome o;
  const std::string sign = R"({"group":"Z2","epsilon":[1],"nullset":[[[0],[1]]]})";
  const std::string k = R"({"group":"1","epsilon":[],"nullset":[[[],[]]]})";
  const std::vector<std::vector<std::string>> commands{
      {"hexcount", "--group", "Z3xZ3", "--format", "json"},
      {"census", "--group", "Z7"},
      {"census", "--group", "Z2xZ4", "--summary"},
      {"census", "--group", "Z3", "--all", "--format", "json"},
      {"lottery", "--group", "Z9", "--samples", "5000", "--event", "star"},
      {"lottery", "--group", "Z11", "--samples", "5000", "--event", "auto"},
      {"lottery", "--group", "Z3", "--exact", "--event", "hyperfield"},
      {"check", "--pasture", sign, "--format", "json"},
      {"quotient", "--q", "49", "--index", "8"},
      {"isquotient", "--pasture", sign},
      {"isquotient", "--pasture", k},
      {"product", "--a", sign, "--b", sign},
      {"skewhex", "--group", "A4"},
      {"classify", "--pastures", "[" + sign + "," + k + "," + sign + "]"},
  };
  for (const auto& cmd : commands) {
    std::string first;
    for (const char* th : {"1", "4", "8"}) {
      auto args = cmd;
      args.insert(args.begin(), {"--threads", th, "--seed", "42"});
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      if (code != 0) o.fail(cmd[0] + " exited " + std::to_string(code) + ": " + err.str());
      if (std::string(th) == "1") first = out.str();
      else if (out.str() != first) o.fail(cmd[0] + " differs at " + th + " threads");
    }
  }
  if (o.ok) o.detail = std::to_string(commands.size()) + " commands x 3 thread counts";
  return o;
}

bool report(int id, const char* title, const std::function<Outcome()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %2d %-28s %8.2fs  %s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.detail.c_str());
  std::fflush(stdout);
  return o.ok;
}

}  // namespace

int main() {
  bool all = true;
  all &= report(1, "hexagon formula", hexagon_formula);

  Sweep sweep;
  all &= report(2, "fast check vs oracle", [&] {
    sweep = sweep_criterion2();
    Outcome o;
    if (sweep.fast_mismatch) o.fail(std::to_string(sweep.fast_mismatch) + " disagreements");
    else o.detail = std::to_string(sweep.checked) + " pastures, 0 disagreements";
    return o;
  });
  all &= report(3, "star equivalence", [&] {
    Outcome o;
    if (sweep.star_mismatch) o.fail(std::to_string(sweep.star_mismatch) + " disagreements");
    else o.detail = std::to_string(sweep.hyperfields) + " hyperfields, 0 disagreements";
    return o;
  });
  all &= report(4, "small censuses", small_censuses);
  all &= report(5, "lottery trends", asymptotic_trends);
  all &= report(6, "quotient soundness", quotient_soundness);
  all &= report(7, "product theorem", product_theorem);
  all &= report(8, "FETVINS", fetvins);
  all &= report(9, "skew bounds", skew_bounds);
  all &= report(10, "determinism", determinism);
  return all ? 0 : 1;
}
