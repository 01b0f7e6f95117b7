#pragma once

// Command-line front end. `run` is the whole program; main() only forwards
// argv and the standard streams, which keeps every command testable
// in-process.
//
// Exit codes: 0 success, 1 domain error, 2 capacity error, 64 usage error,
// 70 internal error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "hexafield/errors.hpp"
#include "hexafield/galois.hpp"
#include "hexafield/io.hpp"
#include "hexafield/lottery.hpp"
#include "hexafield/morphisms.hpp"
#include "hexafield/pasture.hpp"
#include "hexafield/products.hpp"
#include "hexafield/skew.hpp"

namespace hexafield::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kCapacity = 2, kUsage = 64, kInternal = 70 };

struct Config {
  Caps caps;
  std::uint64_t seed = 42;
  unsigned threads = 0;  // 0: HEXAFIELD_THREADS, else hardware concurrency
  std::string format;    // empty: the command's default
};

namespace detail {

using io::json;

inline std::string read_source(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A file path, or inline JSON when the argument starts with '{'.
inline Pasture load_pasture(const std::string& arg, const Caps& caps) {
  return io::pasture_from_text(read_source(arg), caps);
}

inline const char* tf(bool b) { return b ? "true" : "false"; }

inline std::string pick_format(const Config& cfg, std::string fallback, std::initializer_list<const char*> allowed) {
  const std::string f = cfg.format.empty() ? std::move(fallback) : cfg.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  throw DomainError("format '" + f + "' is not available for this command");
}

inline void hexcount(const Config& cfg, const std::string& group, std::ostream& out) {
  const auto g = AbelianGroup::parse(group);
  const std::uint64_t formula = hexagon_count_formula(g);
  const auto fmt = pick_format(cfg, "text", {"text", "json"});
  std::optional<std::uint64_t> enumerated;
  if (g.order() <= cfg.caps.table_order) enumerated = hexagon_table(g, cfg.caps)->size();
  if (enumerated && *enumerated != formula) throw std::logic_error("hexagon table disagrees with the formula");
  if (fmt == "text") {
    out << formula << '\n';
    return;
  }
  json j;
  j["group"] = g.literal();
  j["order"] = g.order();
  j["hexagons"] = formula;
  j["enumerated"] = enumerated ? json(*enumerated) : json(nullptr);
  out << j.dump() << '\n';
}

// Orbit-minimal nullsets of every pasture on (G, ε), hyperfield or not.
inline std::vector<HexSet> all_class_reps(const AbelianGroup& g, Elem unit, unsigned threads, const Caps& caps) {
  auto table = hexagon_table(g, caps);
  require_cap(table->size(), caps.census_hexagons, "census: hexagon count");
  const AutomorphismAction action(table, caps);
  const std::size_t width = table->size();
  auto masks = parallel_reduce(
      std::uint64_t{1} << width, threads, std::vector<std::uint64_t>{},
      [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> r;
        for (std::uint64_t m = begin; m < end; ++m) {
          if (action.is_orbit_minimum(unit, HexSet::from_mask(width, m))) r.push_back(m);
        }
        return r;
      },
      [](std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
      });
  std::vector<HexSet> out;
  for (auto m : masks) out.push_back(HexSet::from_mask(width, m));
  return out;
}

inline void census(const Config& cfg, const std::string& group, const std::optional<std::string>& eps, bool all,
                   bool summary, std::ostream& out) {
  const auto g = AbelianGroup::parse(group);
  const unsigned threads = resolve_threads(cfg.threads);
  std::vector<Elem> units;
  if (eps) {
    units.push_back(io::parse_element(g, *eps));
    if (g.mul(units[0], units[0]) != g.identity()) throw DomainError("epsilon must satisfy e^2 = 1");
  } else {
    units = units_of_order_le_2(g);
  }
  if (summary) {
    pick_format(cfg, "json", {"json"});
    json arr = json::array();
    for (Elem u : units) arr.push_back(io::census_to_json(hexafield::census(g, u, threads, cfg.caps)));
    out << arr.dump() << '\n';
    return;
  }
  const auto fmt = pick_format(cfg, "csv", {"csv", "json"});
  std::vector<Pasture> rows;
  auto table = hexagon_table(g, cfg.caps);
  for (Elem u : units) {
    const auto reps = all ? all_class_reps(g, u, threads, cfg.caps)
                          : hexafield::census(g, u, threads, cfg.caps, true).class_reps;
    for (const auto& n : reps) rows.emplace_back(table, u, n);
  }
  if (fmt == "csv") {
    out << io::kCensusHeader << '\n';
    for (const auto& p : rows) out << io::census_row(p, cfg.caps) << '\n';
    return;
  }
  json arr = json::array();
  for (const auto& p : rows) {
    json j = io::pasture_to_json(p);
    const bool hyper = is_hyperfield_fast(p);
    const bool small = p.order() <= cfg.caps.oracle_order;
    j["is_hyperfield"] = hyper;
    j["is_field"] = hyper && is_field(p);
    j["is_4full"] = hyper && small ? json(is_4full(p, cfg.caps)) : json(nullptr);
    j["is_00"] = hyper && small ? json(is_zero_over_zero(p, cfg.caps)) : json(nullptr);
    j["automorphisms"] = pasture_automorphisms(p, cfg.caps).size();
    arr.push_back(std::move(j));
  }
  out << arr.dump() << '\n';
}

inline void lottery(const Config& cfg, const std::string& group, const std::optional<std::string>& eps,
                    std::uint64_t samples, const std::string& event, bool exact, std::ostream& out) {
  pick_format(cfg, "json", {"json"});
  LotterySpec spec{AbelianGroup::parse(group), 0, cfg.seed, samples};
  if (eps) spec.unit = io::parse_element(spec.group, *eps);
  const Event ev = parse_event(event);
  validate(spec);
  const unsigned threads = resolve_threads(cfg.threads);
  if (exact) {
    const auto c = exact_count(spec.group, spec.unit, ev, threads, cfg.caps);
    json j;
    j["event"] = std::string(event_name(ev));
    j["hits"] = c.hits;
    j["total"] = c.total;
    j["probability"] = c.probability();
    out << j.dump() << '\n';
    return;
  }
  out << io::estimate_to_json(estimate(spec, ev, threads, cfg.caps)).dump() << '\n';
}

inline void check(const Config& cfg, const std::string& source, std::ostream& out) {
  const auto p = load_pasture(source, cfg.caps);
  const auto fmt = pick_format(cfg, "text", {"text", "json"});
  const bool hyper = is_hyperfield_fast(p);
  std::optional<bool> field, zz, full;
  if (hyper) {
    field = is_field(p);
    zz = is_zero_over_zero(p, cfg.caps);
    full = is_4full(p, cfg.caps);
  }
  if (fmt == "text") {
    auto s = [](const std::optional<bool>& b) { return b ? std::string(tf(*b)) : std::string("n/a"); };
    out << "is_hyperfield=" << tf(hyper) << " is_field=" << s(field) << " is_00=" << s(zz) << " is_4full=" << s(full)
        << '\n';
    return;
  }
  auto jb = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  json j;
  j["is_hyperfield"] = hyper;
  j["is_field"] = jb(field);
  j["is_00"] = jb(zz);
  j["is_4full"] = jb(full);
  j["satisfies_star"] = satisfies_star(p);
  j["automorphisms"] = pasture_automorphisms(p, cfg.caps).size();
  out << j.dump() << '\n';
}

inline void quotient(const Config& cfg, std::uint64_t q, std::uint32_t index, std::ostream& out) {
  pick_format(cfg, "json", {"json"});
  out << io::pasture_to_json(quotient_hyperfield(q, index, cfg.caps)).dump() << '\n';
}

inline void isquotient(const Config& cfg, const std::string& source, const std::string& bound, std::ostream& out) {
  pick_format(cfg, "json", {"json"});
  std::optional<std::uint64_t> ext;
  if (bound != "auto") {
    try {
      std::size_t used = 0;
      ext = std::stoull(bound, &used);
      if (used != bound.size()) throw DomainError("");
    } catch (const std::exception&) {
      throw DomainError("--bound must be 'auto' or a positive integer");
    }
  }
  const auto p = load_pasture(source, cfg.caps);
  out << io::verdict_to_json(is_quotient_of_finite_field(p, ext, resolve_threads(cfg.threads), cfg.caps)).dump()
      << '\n';
}

inline void product(const Config& cfg, const std::string& a, const std::string& b, std::ostream& out) {
  pick_format(cfg, "json", {"json"});
  const auto p1 = load_pasture(a, cfg.caps);
  const auto p2 = load_pasture(b, cfg.caps);
  const auto prod = hexafield::product(p1, p2, cfg.caps);
  json j;
  j["product"] = io::pasture_to_json(prod);
  j["is_hyperfield"] = is_hyperfield_fast(prod);
  const bool both = is_hyperfield_fast(p1) && is_hyperfield_fast(p2);
  j["verdict"] = both ? json(product_theorem_verdict(p1, p2, cfg.caps)) : json(nullptr);
  out << j.dump() << '\n';
}

inline void skewhex(const Config& cfg, const std::string& group, std::ostream& out) {
  pick_format(cfg, "json", {"json"});
  const auto g = CayleyGroup::parse(group);
  const auto t = skew_hexagons(g, cfg.caps);
  json j;
  j["group"] = g.name();
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  j["orbits"] = t.size();
  j["bound"] = g.is_abelian() ? json(nullptr) : json(skew_bound(g));
  j["burnside"] = burnside_orbit_count(g, cfg.caps);
  j["orbit_sizes"] = t.orbit_sizes();
  out << j.dump() << '\n';
}

inline void classify(const Config& cfg, const std::string& source, std::ostream& out) {
  pick_format(cfg, "json", {"json"});
  const json input = io::parse_json_text(read_source(source));
  if (!input.is_array()) throw DomainError("classify expects a JSON array of pastures");
  // Classes in order of first appearance.
  std::vector<std::pair<CanonicalForm, std::vector<std::size_t>>> classes;
  std::map<std::tuple<std::vector<int>, Elem, std::vector<std::uint64_t>>, std::size_t> where;
  for (std::size_t i = 0; i < input.size(); ++i) {
    const auto p = io::pasture_from_json(input[i], cfg.caps);
    auto cf = canonical_form(p, cfg.caps);
    auto w = cf.nullset_min.words();
    auto key = std::make_tuple(cf.group.invariant_factors(), cf.unit_orbit_rep,
                               std::vector<std::uint64_t>(w.begin(), w.end()));
    auto [it, fresh] = where.try_emplace(std::move(key), classes.size());
    if (fresh) classes.emplace_back(std::move(cf), std::vector<std::size_t>{});
    classes[it->second].second.push_back(i);
  }
  json arr = json::array();
  for (const auto& [cf, members] : classes) {
    json j;
    j["canonical"] = io::pasture_to_json(cf.to_pasture(cfg.caps));
    j["members"] = members;
    arr.push_back(std::move(j));
  }
  out << arr.dump() << '\n';
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Finite hyperfields as pastures: enumeration, sampling, quotients, products.", "hexafield"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--threads", cfg.threads, "worker threads (0: HEXAFIELD_THREADS or hardware)");
  app.add_option("--seed", cfg.seed, "seed for all sampling");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--oracle-cap", cfg.caps.oracle_order, "max group order for the axiom oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--table-cap", cfg.caps.table_order, "max group order for hexagon tables")
      ->check(CLI::PositiveNumber);
  app.add_option("--aut-cap", cfg.caps.automorphism_order, "max group order for Aut(G) enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--census-cap", cfg.caps.census_hexagons, "max hexagon count for exhaustive sweeps")
      ->check(CLI::Range(1, 40));
  app.add_option("--field-cap", cfg.caps.field_q, "max finite field size")->check(CLI::PositiveNumber);
  app.add_option("--fetvins-cap", cfg.caps.fetvins_m, "max equations in a FETVINS system")
      ->check(CLI::PositiveNumber);
  app.add_option("--skew-cap", cfg.caps.skew_order, "max order of a skew group")->check(CLI::PositiveNumber);

  std::string group, source, source_b, event = "hyperfield", bound = "auto";
  std::optional<std::string> eps;
  std::uint64_t samples = 10'000, q = 0;
  std::uint32_t index = 0;
  bool all = false, summary = false, exact = false;

  auto* c_hex = app.add_subcommand("hexcount", "number of hexagons of an abelian group");
  c_hex->add_option("--group", group, "group literal, e.g. Z2xZ4")->required();

  auto* c_census = app.add_subcommand("census", "all hyperfields on (G, e) up to isomorphism");
  c_census->add_option("--group", group, "group literal")->required();
  c_census->add_option("--eps", eps, "unit e (default: every e with e^2 = 1)");
  c_census->add_flag("--all", all, "list every pasture class, not only hyperfields");
  c_census->add_flag("--summary", summary, "print counts instead of rows");

  auto* c_lot = app.add_subcommand("lottery", "Monte Carlo estimate over uniform random pastures");
  c_lot->add_option("--group", group, "group literal")->required();
  c_lot->add_option("--eps", eps, "unit e (default: identity)");
  c_lot->add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
  c_lot->add_option("--event", event, "hyperfield | star | gg | auto | field");
  c_lot->add_flag("--exact", exact, "exact probability by exhaustion instead of sampling");

  auto* c_check = app.add_subcommand("check", "hyperfield predicates of one pasture");
  c_check->add_option("--pasture", source, "pasture JSON file (or inline JSON)")->required();

  auto* c_quo = app.add_subcommand("quotient", "the quotient hyperfield F_q / G with [F_q^x : G] = index");
  c_quo->add_option("--q", q, "field size")->required();
  c_quo->add_option("--index", index, "subgroup index")->required()->check(CLI::PositiveNumber);

  auto* c_isq = app.add_subcommand("isquotient", "decide whether a hyperfield is a finite field quotient");
  c_isq->add_option("--pasture", source, "pasture JSON file (or inline JSON)")->required();
  c_isq->add_option("--bound", bound, "auto, or the q - 1 bound for the full-sum branch");

  auto* c_prod = app.add_subcommand("product", "pasture product with the product theorem verdict");
  c_prod->add_option("--a", source, "first pasture")->required();
  c_prod->add_option("--b", source_b, "second pasture")->required();

  auto* c_skew = app.add_subcommand("skewhex", "skew hexagons of a finite group");
  c_skew->add_option("--group", group, "S3, Q8, A4, Dk or an abelian literal")->required();

  auto* c_cls = app.add_subcommand("classify", "group pastures into isomorphism classes");
  c_cls->add_option("--pastures", source, "JSON array of pastures")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*c_hex) {
      detail::hexcount(cfg, group, out);
    } else if (*c_census) {
      detail::census(cfg, group, eps, all, summary, out);
    } else if (*c_lot) {
      detail::lottery(cfg, group, eps, samples, event, exact, out);
    } else if (*c_check) {
      detail::check(cfg, source, out);
    } else if (*c_quo) {
      detail::quotient(cfg, q, index, out);
    } else if (*c_isq) {
      detail::isquotient(cfg, source, bound, out);
    } else if (*c_prod) {
      detail::product(cfg, source, source_b, out);
    } else if (*c_skew) {
      detail::skewhex(cfg, group, out);
    } else if (*c_cls) {
      detail::classify(cfg, source, out);
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace hexafield::cli
