#pragma once

// Pastures (group, unit, nullset of hexagons) and the hyperfield tests on
// them: the hexagon-closure test, the brute-force axiom oracle over the
// reconstructed addition, and the field / 4-full / 0/0 / (★) / FETVINS
// predicates.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hexafield/bitset.hpp"
#include "hexafield/config.hpp"
#include "hexafield/errors.hpp"
#include "hexafield/group.hpp"
#include "hexafield/hexagons.hpp"

namespace hexafield {

class Pasture {
 public:
  Pasture(std::shared_ptr<const HexagonTable> table, Elem unit, HexSet nullset)
      : table_(std::move(table)), unit_(unit), nullset_(std::move(nullset)) {
    if (unit_ >= table_->order() || table_->mul(unit_, unit_) != table_->group().identity()) {
      throw DomainError("pasture unit must satisfy e^2 = 1");
    }
    if (nullset_.width() != table_->size()) {
      throw DomainError("nullset width does not match the hexagon count of " + group().literal());
    }
  }

  Pasture(const AbelianGroup& g, Elem unit, HexSet nullset, const Caps& caps = {})
      : Pasture(hexagon_table(g, caps), unit, std::move(nullset)) {}

  /// Nullset given by any member pair of each hexagon.
  static Pasture from_pairs(const AbelianGroup& g, Elem unit, const std::vector<FundamentalPair>& pairs,
                            const Caps& caps = {}) {
    auto table = hexagon_table(g, caps);
    HexSet n(table->size());
    for (const auto& p : pairs) {
      if (p.u >= g.order() || p.v >= g.order()) throw DomainError("pair outside the group");
      n.set(table->hex(p.u, p.v));
    }
    return Pasture(std::move(table), unit, std::move(n));
  }

  const AbelianGroup& group() const { return table_->group(); }
  const HexagonTable& table() const { return *table_; }
  const std::shared_ptr<const HexagonTable>& table_ptr() const { return table_; }
  std::size_t order() const { return table_->order(); }
  Elem unit() const { return unit_; }
  const HexSet& nullset() const { return nullset_; }

  bool contains(Elem u, Elem v) const { return nullset_.test(table_->hex(u, v)); }
  bool contains_triple(Elem x, Elem y, Elem z) const { return nullset_.test(table_->hex_of_triple(x, y, z)); }

  /// Canonical representatives of the selected hexagons, ascending.
  std::vector<FundamentalPair> nullset_pairs() const {
    std::vector<FundamentalPair> out;
    nullset_.for_each([&](std::size_t h) { out.push_back(table_->rep(static_cast<HexagonId>(h))); });
    return out;
  }

  friend bool operator==(const Pasture& a, const Pasture& b) {
    return a.group() == b.group() && a.unit_ == b.unit_ && a.nullset_ == b.nullset_;
  }

 private:
  std::shared_ptr<const HexagonTable> table_;
  Elem unit_ = 0;
  HexSet nullset_;
};

namespace named {

inline Pasture f2() { return Pasture(AbelianGroup{}, 0, HexSet(1)); }
inline Pasture krasner() { return Pasture(AbelianGroup{}, 0, HexSet::full(1)); }
/// F3: Z2 with unit g and the single hexagon of (1, 1).
inline Pasture f3() { return Pasture::from_pairs(AbelianGroup::cyclic(2), 1, {{0, 0}}); }
/// S: Z2 with unit g and the hexagon of (1, g).
inline Pasture sign() { return Pasture::from_pairs(AbelianGroup::cyclic(2), 1, {{0, 1}}); }
/// Weak sign hyperfield: both hexagons of Z2, unit g.
inline Pasture weak_sign() { return Pasture::from_pairs(AbelianGroup::cyclic(2), 1, {{0, 0}, {0, 1}}); }
/// F4: Z3, trivial unit, the hexagon of (g, g^2).
inline Pasture f4() { return Pasture::from_pairs(AbelianGroup::cyclic(3), 0, {{1, 2}}); }

}  // namespace named

inline bool is_krasner(const Pasture& p) { return p.order() == 1 && p.nullset().count() == 1; }
inline bool is_f2(const Pasture& p) { return p.order() == 1 && p.nullset().empty(); }

// ---------------------------------------------------------------------------
// Addition tables

/// Element of the carrier G ⊔ {0}: 0 is zero, e + 1 is group element e.
using Carrier = std::uint32_t;
/// Subset of the carrier, bit c for carrier element c.
using CarrierSet = std::uint64_t;

constexpr Carrier carrier_of(Elem e) { return e + 1; }
constexpr CarrierSet singleton(Carrier c) { return CarrierSet{1} << c; }

class AdditionTable {
 public:
  AdditionTable(std::shared_ptr<const HexagonTable> table, Elem unit, std::vector<CarrierSet> sums)
      : table_(std::move(table)), unit_(unit), size_(table_->order() + 1), sums_(std::move(sums)) {}

  std::size_t carrier_size() const { return size_; }
  Carrier zero() const { return 0; }
  Carrier one() const { return carrier_of(table_->group().identity()); }
  Carrier minus_one() const { return carrier_of(unit_); }
  const HexagonTable& table() const { return *table_; }

  CarrierSet sum(Carrier a, Carrier b) const { return sums_[a * size_ + b]; }

  CarrierSet sum(CarrierSet a, CarrierSet b) const {
    CarrierSet out = 0;
    for (CarrierSet x = a; x; x &= x - 1) {
      const auto i = static_cast<Carrier>(std::countr_zero(x));
      for (CarrierSet y = b; y; y &= y - 1) out |= sum(i, static_cast<Carrier>(std::countr_zero(y)));
    }
    return out;
  }

  Carrier mul(Carrier a, Carrier b) const {
    if (a == 0 || b == 0) return 0;
    return carrier_of(table_->mul(a - 1, b - 1));
  }
  Carrier inv(Carrier a) const { return carrier_of(table_->inv(a - 1)); }
  Carrier neg(Carrier a) const { return mul(minus_one(), a); }

  CarrierSet scale(Carrier g, CarrierSet s) const {
    CarrierSet out = 0;
    for (CarrierSet x = s; x; x &= x - 1) out |= singleton(mul(g, static_cast<Carrier>(std::countr_zero(x))));
    return out;
  }

  /// Debug dump: one row per left summand, cells list the sum's members
  /// with 0 for zero and element residues otherwise.
  std::string dump() const {
    const auto& g = table_->group();
    auto name = [&](Carrier c) -> std::string {
      if (c == 0) return "0";
      std::string s;
      for (int r : g.element(c - 1).residues) s += (s.empty() ? "" : ",") + std::to_string(r);
      return "(" + s + ")";
    };
    std::ostringstream os;
    for (Carrier a = 0; a < size_; ++a) {
      for (Carrier b = 0; b < size_; ++b) {
        os << (b ? " " : "") << name(a) << "+" << name(b) << "={";
        bool first = true;
        for (Carrier c = 0; c < size_; ++c) {
          if (sum(a, b) & singleton(c)) {
            os << (first ? "" : " ") << name(c);
            first = false;
          }
        }
        os << "}";
      }
      os << "\n";
    }
    return os.str();
  }

 private:
  std::shared_ptr<const HexagonTable> table_;
  Elem unit_;
  std::size_t size_;
  std::vector<CarrierSet> sums_;
};

/// x ⊞ y = {z : hexagon of (x, y, -z) selected}, with 0 adjoined exactly when
/// x = -y, and zero acting as the identity.
inline AdditionTable reconstruct_addition(const Pasture& p) {
  const std::size_t n = p.order();
  require_cap(n, 63, "addition table: group order");
  const auto& t = p.table();
  const std::size_t c = n + 1;
  std::vector<CarrierSet> sums(c * c, 0);
  for (Carrier b = 0; b < c; ++b) {
    sums[0 * c + b] = singleton(b);
    sums[b * c + 0] = singleton(b);
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      CarrierSet s = 0;
      if (x == t.mul(p.unit(), y)) s |= singleton(0);
      for (Elem z = 0; z < n; ++z) {
        if (p.contains_triple(x, y, t.mul(p.unit(), z))) s |= singleton(carrier_of(z));
      }
      sums[carrier_of(x) * c + carrier_of(y)] = s;
    }
  }
  return AdditionTable(p.table_ptr(), p.unit(), std::move(sums));
}

/// The hexagon set {(a, b, c) : 0 ∈ a ⊞ b ⊞ c} read back from a table.
inline HexSet extract_nullset(const AdditionTable& a) {
  const auto& t = a.table();
  HexSet out(t.size());
  for (Elem u = 0; u < t.order(); ++u) {
    for (Elem v = 0; v < t.order(); ++v) {
      if (a.sum(a.sum(carrier_of(u), carrier_of(v)), singleton(a.one())) & singleton(0)) {
        out.set(t.hex(u, v));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hexagon-closure test

/// For every pair (a, b): the set of t with hexagon(ta, tb) selected, as a
/// mask over group elements. Condition (B) and (★) reduce to intersections
/// of these masks.
inline std::vector<std::uint64_t> scalar_masks(const Pasture& p) {
  const std::size_t n = p.order();
  require_cap(n, 64, "scalar masks: group order");
  const auto& t = p.table();
  std::vector<std::uint64_t> masks(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      std::uint64_t m = 0;
      for (Elem s = 0; s < n; ++s) {
        if (p.contains(t.mul(s, a), t.mul(s, b))) m |= std::uint64_t{1} << s;
      }
      masks[t.pair_index(a, b)] = m;
    }
  }
  return masks;
}

/// Conditions (A) and (B) on the nullset.
inline bool is_hyperfield_fast(const Pasture& p) {
  const std::size_t n = p.order();
  const auto& t = p.table();
  const Elem eps = p.unit();
  // (A): every x other than the unit appears first in some selected pair.
  for (Elem x = 0; x < n; ++x) {
    if (x == eps) continue;
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y) found = p.contains(x, y);
    if (!found) return false;
  }
  std::vector<FundamentalPair> selected;
  p.nullset().for_each([&](std::size_t h) {
    for (const auto& m : t.members(static_cast<HexagonId>(h))) selected.push_back(m);
  });
  if (selected.size() < 2) return true;
  const auto masks = scalar_masks(p);
  // (B): distinct selected pairs (x,y), (z,w) need t with
  // hexagon(tx, -tz) and hexagon(-ty, tw) both selected.
  for (const auto& xy : selected) {
    for (const auto& zw : selected) {
      if (xy == zw) continue;
      const auto m1 = masks[t.pair_index(xy.u, t.mul(eps, zw.u))];
      const auto m2 = masks[t.pair_index(t.mul(eps, xy.v), zw.v)];
      if ((m1 & m2) == 0) return false;
    }
  }
  return true;
}

/// (★): for all (x, y, z, w) some t puts both (tx, ty) and (tz, tw) in the
/// nullset.
inline bool satisfies_star(const Pasture& p) {
  auto masks = scalar_masks(p);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  if (masks.front() == 0) return false;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if ((masks[i] & masks[j]) == 0) return false;
    }
  }
  return true;
}

/// Reconstructs ⊞ and checks the hyperfield axioms over all triples:
/// nonempty sums, commutativity, the negation axiom, distributivity and
/// associativity of the set-extended sum.
inline bool axiom_oracle(const AdditionTable& a) {
  const auto c = static_cast<Carrier>(a.carrier_size());
  for (Carrier x = 0; x < c; ++x) {
    for (Carrier y = 0; y < c; ++y) {
      const CarrierSet s = a.sum(x, y);
      if (s == 0) return false;
      if (s != a.sum(y, x)) return false;
      if (((s & singleton(0)) != 0) != (x == a.neg(y))) return false;
    }
  }
  for (Carrier g = 0; g < c; ++g) {
    for (Carrier h = 0; h < c; ++h) {
      for (Carrier k = 0; k < c; ++k) {
        if (a.scale(g, a.sum(h, k)) != a.sum(a.mul(g, h), a.mul(g, k))) return false;
        if (a.sum(a.sum(g, h), singleton(k)) != a.sum(singleton(g), a.sum(h, k))) return false;
      }
    }
  }
  return true;
}

inline bool axiom_oracle(const Pasture& p, const Caps& caps = {}) {
  require_cap(p.order(), caps.oracle_order, "axiom oracle: group order");
  return axiom_oracle(reconstruct_addition(p));
}

/// Nonzero members of 1 ⊞ -1, read directly off the nullset.
inline std::vector<Elem> one_minus_one(const Pasture& p) {
  std::vector<Elem> out;
  const auto& t = p.table();
  for (Elem z = 0; z < p.order(); ++z) {
    if (p.contains_triple(t.group().identity(), p.unit(), t.mul(p.unit(), z))) out.push_back(z);
  }
  return out;
}

/// A hyperfield is a field iff 1 ⊞ -1 = {0}.
inline bool is_field(const Pasture& p) { return one_minus_one(p).empty(); }

/// 1 ⊞ -1 is the whole carrier: every hexagon (ε, x) is selected.
inline bool full_one_minus_one(const Pasture& p) { return one_minus_one(p).size() == p.order(); }

inline bool is_4full(const Pasture& p, const Caps& caps = {}) {
  require_cap(p.order(), caps.oracle_order, "4-full check: group order");
  if (is_f2(p)) return false;
  const auto a = reconstruct_addition(p);
  const auto c = static_cast<Carrier>(a.carrier_size());
  for (Carrier x = 1; x < c; ++x) {
    for (Carrier y = 1; y < c; ++y) {
      const CarrierSet s2 = a.sum(x, y);
      for (Carrier z = 1; z < c; ++z) {
        const CarrierSet s3 = a.sum(s2, singleton(z));
        for (Carrier w = 1; w < c; ++w) {
          if ((a.sum(s3, singleton(w)) & singleton(0)) == 0) return false;
        }
      }
    }
  }
  return true;
}

inline bool is_zero_over_zero(const Pasture& p, const Caps& caps = {}) {
  require_cap(p.order(), caps.oracle_order, "0/0 check: group order");
  const auto a = reconstruct_addition(p);
  const CarrierSet s = a.sum(a.one(), a.minus_one());
  const auto c = static_cast<Carrier>(a.carrier_size());
  for (Carrier x = 0; x < c; ++x) {
    bool found = false;
    for (Carrier r = 0; r < c && !found; ++r) {
      if (!(s & singleton(r))) continue;
      for (Carrier d = 1; d < c && !found; ++d) {
        if ((s & singleton(d)) && a.mul(r, a.inv(d)) == x) found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FETVINS

/// m homogeneous equations in m + 1 unknowns over the carrier.
struct LinearSystem {
  std::size_t m = 1;
  std::vector<std::vector<Carrier>> coefficients;  // m rows of m + 1 entries
};

/// Brute force: is there a nonzero x with 0 ∈ Σ_j a_ij x_j for every row?
inline bool fetvins_check(const AdditionTable& h, const LinearSystem& sys, const Caps& caps = {}) {
  if (sys.m < 1) throw DomainError("linear system needs m >= 1");
  require_cap(sys.m, caps.fetvins_m, "FETVINS: equation count");
  require_cap(h.carrier_size(), caps.fetvins_carrier, "FETVINS: carrier size");
  if (sys.coefficients.size() != sys.m) throw DomainError("linear system must have m rows");
  for (const auto& row : sys.coefficients) {
    if (row.size() != sys.m + 1) throw DomainError("linear system rows need m + 1 entries");
    for (Carrier a : row) {
      if (a >= h.carrier_size()) throw DomainError("coefficient outside the carrier");
    }
  }
  const std::size_t unknowns = sys.m + 1;
  const auto c = static_cast<Carrier>(h.carrier_size());
  std::vector<Carrier> x(unknowns, 0);
  while (true) {
    // advance odometer; the all-zero start is skipped
    std::size_t i = 0;
    while (i < unknowns && ++x[i] == c) x[i++] = 0;
    if (i == unknowns) return false;
    bool ok = true;
    for (const auto& row : sys.coefficients) {
      CarrierSet acc = singleton(h.mul(row[0], x[0]));
      for (std::size_t j = 1; j < unknowns; ++j) acc = h.sum(acc, singleton(h.mul(row[j], x[j])));
      if (!(acc & singleton(0))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
}

}  // namespace hexafield
