#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hexafield/bitset.hpp"
#include "hexafield/errors.hpp"
#include "hexafield/group.hpp"
#include "hexafield/pasture.hpp"

namespace hexafield {

/// Group homomorphism f : P1^x -> P2^x with f(ε1) = ε2 and every selected
/// hexagon of P1 landing in the nullset of P2. Throws if f is not a
/// homomorphism.
inline bool is_morphism(const std::vector<Elem>& f, const Pasture& p1, const Pasture& p2) {
  if (!is_homomorphism(p1.group(), p2.group(), f)) {
    throw DomainError("map is not a group homomorphism " + p1.group().literal() + " -> " +
                      p2.group().literal());
  }
  if (f[p1.unit()] != p2.unit()) return false;
  bool ok = true;
  p1.nullset().for_each([&](std::size_t h) {
    const auto r = p1.table().rep(static_cast<HexagonId>(h));
    if (ok && !p2.contains(f[r.u], f[r.v])) ok = false;
  });
  return ok;
}

/// Maps every element of P to the identity of the trivial group.
inline std::vector<Elem> collapse_map(const Pasture& p) { return std::vector<Elem>(p.order(), 0); }

inline std::vector<GroupAutomorphism> pasture_automorphisms(const Pasture& p, const Caps& caps = {}) {
  std::vector<GroupAutomorphism> out;
  for (auto& f : automorphisms_fixing(p.group(), p.unit(), caps.automorphism_order)) {
    if (p.nullset().permuted(p.table().permutation(f)) == p.nullset()) out.push_back(std::move(f));
  }
  return out;
}

/// Isomorphism invariant of a pasture on a fixed group: the least unit in its
/// Aut(G)-orbit and the lexicographically least nullset among the images
/// under automorphisms carrying the unit there.
struct CanonicalForm {
  AbelianGroup group;
  Elem unit_orbit_rep = 0;
  HexSet nullset_min;

  Pasture to_pasture(const Caps& caps = {}) const { return Pasture(group, unit_orbit_rep, nullset_min, caps); }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Precomputed hexagon permutations for a fixed group, reused across many
/// canonicalizations.
class AutomorphismAction {
 public:
  explicit AutomorphismAction(std::shared_ptr<const HexagonTable> table, const Caps& caps = {})
      : table_(std::move(table)), autos_(automorphisms(table_->group(), caps.automorphism_order)) {
    perms_.reserve(autos_.size());
    for (const auto& a : autos_) perms_.push_back(table_->permutation(a));
  }

  const std::vector<GroupAutomorphism>& automorphisms_list() const { return autos_; }
  const std::vector<std::uint32_t>& permutation(std::size_t i) const { return perms_[i]; }
  std::size_t size() const { return autos_.size(); }

  Elem unit_orbit_rep(Elem unit) const {
    Elem best = unit;
    for (const auto& a : autos_) best = std::min(best, a(unit));
    return best;
  }

  CanonicalForm canonical_form(Elem unit, const HexSet& nullset) const {
    const Elem rep = unit_orbit_rep(unit);
    std::optional<HexSet> best;
    for (std::size_t i = 0; i < autos_.size(); ++i) {
      if (autos_[i](unit) != rep) continue;
      auto img = nullset.permuted(perms_[i]);
      if (!best || lex_less(img, *best)) best = std::move(img);
    }
    return {table_->group(), rep, std::move(*best)};
  }

  /// True when the nullset is the least of its orbit under Aut(G, ε); used
  /// to count isomorphism classes without materializing them.
  bool is_orbit_minimum(Elem unit, const HexSet& nullset) const {
    for (std::size_t i = 0; i < autos_.size(); ++i) {
      if (autos_[i](unit) != unit) continue;
      if (lex_less(nullset.permuted(perms_[i]), nullset)) return false;
    }
    return true;
  }

  /// Number of automorphisms fixing the unit and the nullset.
  std::size_t stabilizer_size(Elem unit, const HexSet& nullset) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < autos_.size(); ++i) {
      if (autos_[i](unit) == unit && nullset.permuted(perms_[i]) == nullset) ++c;
    }
    return c;
  }

 private:
  std::shared_ptr<const HexagonTable> table_;
  std::vector<GroupAutomorphism> autos_;
  std::vector<std::vector<std::uint32_t>> perms_;
};

inline CanonicalForm canonical_form(const Pasture& p, const Caps& caps = {}) {
  return AutomorphismAction(p.table_ptr(), caps).canonical_form(p.unit(), p.nullset());
}

/// Hyperfield isomorphism: a group isomorphism carrying unit to unit and
/// nullset onto nullset.
inline bool are_isomorphic(const Pasture& a, const Pasture& b, const Caps& caps = {}) {
  if (a.group() != b.group()) return false;
  return canonical_form(a, caps) == canonical_form(b, caps);
}

/// Some group isomorphism f with f(ε1) = ε2 maps Hex(P1) into Hex(P2).
/// Containment, not equality.
inline bool exists_bijective_morphism(const Pasture& p1, const Pasture& p2, const Caps& caps = {}) {
  if (p1.order() != p2.order()) throw DomainError("bijective morphism needs groups of equal order");
  require_cap(p1.order(), caps.automorphism_order, "bijective morphism search: group order");
  if (p1.group() != p2.group()) return false;
  for (const auto& f : automorphisms(p1.group(), caps.automorphism_order)) {
    if (f(p1.unit()) != p2.unit()) continue;
    if (p1.nullset().permuted(p1.table().permutation(f)).is_subset_of(p2.nullset())) return true;
  }
  return false;
}

/// Every pasture morphism P1 -> P2 (exhaustive over homomorphisms).
inline std::vector<std::vector<Elem>> all_morphisms(const Pasture& p1, const Pasture& p2, const Caps& caps = {}) {
  require_cap(p1.order(), caps.automorphism_order, "morphism search: source order");
  std::vector<std::vector<Elem>> out;
  for_each_homomorphism(p1.group(), p2.group(), [&](const std::vector<Elem>& f) {
    if (is_morphism(f, p1, p2)) out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace hexafield
