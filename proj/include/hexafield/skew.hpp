#pragma once

// Hexagons of arbitrary finite groups, given by Cayley tables: orbits of G^2
// under the six S3 maps and conjugation. Used for the non-commutative
// counting bound and a skew analogue of the axiom oracle.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hexafield/bitset.hpp"
#include "hexafield/config.hpp"
#include "hexafield/errors.hpp"
#include "hexafield/group.hpp"
#include "hexafield/pasture.hpp"

namespace hexafield {

class CayleyGroup {
 public:
  /// Validates closure, identity, inverses and associativity.
  CayleyGroup(std::string name, std::size_t n, std::vector<Elem> table)
      : name_(std::move(name)), n_(n), table_(std::move(table)) {
    if (n_ == 0 || table_.size() != n_ * n_) throw DomainError("Cayley table must be n x n");
    for (Elem x : table_) {
      if (x >= n_) throw DomainError("Cayley table entry out of range");
    }
    bool found = false;
    for (Elem e = 0; e < n_ && !found; ++e) {
      bool ok = true;
      for (Elem a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) {
        identity_ = e;
        found = true;
      }
    }
    if (!found) throw DomainError("Cayley table has no identity");
    inverse_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a) {
      bool ok = false;
      for (Elem b = 0; b < n_ && !ok; ++b) {
        if (mul(a, b) == identity_ && mul(b, a) == identity_) {
          inverse_[a] = b;
          ok = true;
        }
      }
      if (!ok) throw DomainError("Cayley table element without inverse");
    }
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        for (Elem c = 0; c < n_; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw DomainError("Cayley table is not associative");
        }
      }
    }
    for (Elem z = 0; z < n_; ++z) {
      bool central = true;
      for (Elem a = 0; a < n_ && central; ++a) central = mul(z, a) == mul(a, z);
      if (central) center_.push_back(z);
    }
  }

  static CayleyGroup from_abelian(const AbelianGroup& g) {
    const std::size_t n = g.order();
    std::vector<Elem> t(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) t[a * n + b] = g.mul(a, b);
    }
    return CayleyGroup(g.literal(), n, std::move(t));
  }

  /// Permutation group on {0..k-1} from an explicit element list.
  static CayleyGroup from_permutations(std::string name, std::vector<std::vector<int>> perms) {
    std::sort(perms.begin(), perms.end());
    const std::size_t n = perms.size();
    std::vector<Elem> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<int> c(perms[a].size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
        const auto it = std::lower_bound(perms.begin(), perms.end(), c);
        if (it == perms.end() || *it != c) throw DomainError("permutation set is not closed");
        t[a * n + b] = static_cast<Elem>(it - perms.begin());
      }
    }
    return CayleyGroup(std::move(name), n, std::move(t));
  }

  static CayleyGroup symmetric3() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return from_permutations("S3", std::move(perms));
  }

  static CayleyGroup alternating4() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2, 3};
    do {
      int inversions = 0;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
      }
      if (inversions % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return from_permutations("A4", std::move(perms));
  }

  /// Symmetries of the regular k-gon, order 2k: r^i s^j stored as i + k j.
  static CayleyGroup dihedral(int k) {
    if (k < 3) throw DomainError("dihedral group needs k >= 3");
    const std::size_t n = 2 * static_cast<std::size_t>(k);
    std::vector<Elem> t(n * n);
    for (int a = 0; a < 2 * k; ++a) {
      for (int b = 0; b < 2 * k; ++b) {
        const int i1 = a % k, j1 = a / k, i2 = b % k, j2 = b / k;
        const int i = ((i1 + (j1 ? -i2 : i2)) % k + k) % k;
        const int j = (j1 + j2) % 2;
        t[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = static_cast<Elem>(i + k * j);
      }
    }
    return CayleyGroup("D" + std::to_string(k), n, std::move(t));
  }

  /// Quaternion group: ±1, ±i, ±j, ±k stored as 4 * sign + basis.
  static CayleyGroup quaternion8() {
    // basis products: [a][b] = (sign, basis) for 1, i, j, k
    constexpr std::array<std::array<std::pair<int, int>, 4>, 4> prod{{
        {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
        {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
        {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
        {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
    }};
    std::vector<Elem> t(64);
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        const auto [s, basis] = prod[static_cast<std::size_t>(a % 4)][static_cast<std::size_t>(b % 4)];
        const int sign = (a / 4 + b / 4 + s) % 2;
        t[static_cast<std::size_t>(a * 8 + b)] = static_cast<Elem>(4 * sign + basis);
      }
    }
    return CayleyGroup("Q8", 8, std::move(t));
  }

  /// "S3", "D4", "Q8", "D6", "A4", "Dk", or an abelian literal such as "Z2xZ4".
  static CayleyGroup parse(std::string_view name) {
    if (name == "S3") return symmetric3();
    if (name == "Q8") return quaternion8();
    if (name == "A4") return alternating4();
    if (name.size() >= 2 && name[0] == 'D') {
      int k = 0;
      for (char c : name.substr(1)) {
        if (c < '0' || c > '9' || k > 1000) throw DomainError("bad group name '" + std::string(name) + "'");
        k = k * 10 + (c - '0');
      }
      return dihedral(k);
    }
    return from_abelian(AbelianGroup::parse(name));
  }

  const std::string& name() const { return name_; }
  std::size_t order() const { return n_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  const std::vector<Elem>& center() const { return center_; }
  bool is_central(Elem z) const { return std::binary_search(center_.begin(), center_.end(), z); }
  bool is_abelian() const { return center_.size() == n_; }

 private:
  std::string name_;
  std::size_t n_;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
  std::vector<Elem> center_;
};

/// Disjoint sets with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// The six S3 maps on pairs, products written in the order that stays valid
/// without commutativity.
inline std::array<std::pair<Elem, Elem>, 6> skew_s3_images(const CayleyGroup& g, Elem u, Elem v) {
  const Elem ui = g.inv(u), vi = g.inv(v);
  return {{{u, v}, {v, u}, {g.mul(u, vi), vi}, {vi, g.mul(u, vi)}, {g.mul(v, ui), ui}, {ui, g.mul(v, ui)}}};
}

class SkewHexagonTable {
 public:
  explicit SkewHexagonTable(CayleyGroup group, const Caps& caps = {}) : group_(std::move(group)) {
    const std::size_t n = group_.order();
    require_cap(n, caps.skew_order, "skew hexagon table: group order");
    DisjointSets sets(n * n);
    for (Elem u = 0; u < n; ++u) {
      for (Elem v = 0; v < n; ++v) {
        const std::size_t p = u * n + v;
        for (auto [a, b] : skew_s3_images(group_, u, v)) sets.unite(p, a * n + b);
        for (Elem g = 0; g < n; ++g) sets.unite(p, group_.conj(g, u) * n + group_.conj(g, v));
      }
    }
    constexpr std::uint32_t kNone = ~std::uint32_t{0};
    std::vector<std::uint32_t> root_id(n * n, kNone);
    pair_to_orbit_.resize(n * n);
    for (std::size_t p = 0; p < n * n; ++p) {
      const std::size_t r = sets.find(p);
      if (root_id[r] == kNone) {
        root_id[r] = static_cast<std::uint32_t>(reps_.size());
        reps_.push_back({static_cast<Elem>(p / n), static_cast<Elem>(p % n)});
        sizes_.push_back(0);
      }
      pair_to_orbit_[p] = root_id[r];
      ++sizes_[root_id[r]];
    }
  }

  const CayleyGroup& group() const { return group_; }
  std::size_t size() const { return reps_.size(); }
  std::uint32_t orbit(Elem u, Elem v) const { return pair_to_orbit_[u * group_.order() + v]; }
  std::uint32_t orbit_of_triple(Elem x, Elem y, Elem z) const {
    const Elem zi = group_.inv(z);
    return orbit(group_.mul(x, zi), group_.mul(y, zi));
  }
  const std::vector<FundamentalPair>& reps() const { return reps_; }
  const std::vector<std::size_t>& orbit_sizes() const { return sizes_; }

 private:
  CayleyGroup group_;
  std::vector<std::uint32_t> pair_to_orbit_;
  std::vector<FundamentalPair> reps_;
  std::vector<std::size_t> sizes_;
};

inline SkewHexagonTable skew_hexagons(const CayleyGroup& g, const Caps& caps = {}) { return SkewHexagonTable(g, caps); }

/// Orbit count of S3 x G on G^2 by Burnside: the average number of pairs
/// fixed by (σ, g), where g acts by conjugation. Independent of the
/// union-find partition above.
inline std::uint64_t burnside_orbit_count(const CayleyGroup& g, const Caps& caps = {}) {
  const std::size_t n = g.order();
  require_cap(n, caps.skew_order, "Burnside count: group order");
  std::uint64_t fixed = 0;
  for (Elem c = 0; c < n; ++c) {
    for (Elem u = 0; u < n; ++u) {
      for (Elem v = 0; v < n; ++v) {
        const auto imgs = skew_s3_images(g, g.conj(c, u), g.conj(c, v));
        for (auto [a, b] : imgs) fixed += (a == u && b == v);
      }
    }
  }
  if (fixed % (6 * n) != 0) throw std::logic_error("Burnside average is not an integer");
  return fixed / (6 * n);
}

/// ⌊(5n²/8 + 5n) / 6⌋, valid for non-commutative groups only.
inline std::uint64_t skew_bound(const CayleyGroup& g) {
  if (g.is_abelian()) throw DomainError("the skew hexagon bound applies to non-abelian groups only");
  const std::uint64_t n = g.order();
  return (5 * n * n + 40 * n) / 48;
}

/// Reconstructs ⊞ from a set of skew hexagons (z ∈ x ⊞ y iff the orbit of
/// (x, y, εz) is selected) and checks the skew hyperfield axioms, with both
/// left and right distributivity.
inline bool skew_axiom_oracle(const SkewHexagonTable& t, Elem eps, const HexSet& nullset, const Caps& caps = {}) {
  const auto& g = t.group();
  const std::size_t n = g.order();
  require_cap(n, caps.skew_oracle_order, "skew axiom oracle: group order");
  if (eps >= n || !g.is_central(eps) || g.mul(eps, eps) != g.identity()) {
    throw DomainError("skew unit must be a central element with e^2 = 1");
  }
  if (nullset.width() != t.size()) throw DomainError("nullset width does not match the orbit count");
  const std::size_t c = n + 1;
  auto cmul = [&](Carrier a, Carrier b) -> Carrier { return (a == 0 || b == 0) ? 0 : carrier_of(g.mul(a - 1, b - 1)); };
  auto neg = [&](Carrier a) { return cmul(carrier_of(eps), a); };
  std::vector<CarrierSet> sums(c * c, 0);
  for (Carrier b = 0; b < c; ++b) {
    sums[b] = singleton(b);
    sums[b * c] = singleton(b);
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      CarrierSet s = 0;
      if (x == g.mul(eps, y)) s |= singleton(0);
      for (Elem z = 0; z < n; ++z) {
        if (nullset.test(t.orbit_of_triple(x, y, g.mul(eps, z)))) s |= singleton(carrier_of(z));
      }
      sums[carrier_of(x) * c + carrier_of(y)] = s;
    }
  }
  auto sum = [&](Carrier a, Carrier b) { return sums[a * c + b]; };
  auto sum_sets = [&](CarrierSet a, CarrierSet b) {
    CarrierSet out = 0;
    for (CarrierSet x = a; x; x &= x - 1) {
      for (CarrierSet y = b; y; y &= y - 1) {
        out |= sum(static_cast<Carrier>(std::countr_zero(x)), static_cast<Carrier>(std::countr_zero(y)));
      }
    }
    return out;
  };
  auto scale_left = [&](Carrier k, CarrierSet s) {
    CarrierSet out = 0;
    for (CarrierSet x = s; x; x &= x - 1) out |= singleton(cmul(k, static_cast<Carrier>(std::countr_zero(x))));
    return out;
  };
  auto scale_right = [&](CarrierSet s, Carrier k) {
    CarrierSet out = 0;
    for (CarrierSet x = s; x; x &= x - 1) out |= singleton(cmul(static_cast<Carrier>(std::countr_zero(x)), k));
    return out;
  };
  for (Carrier x = 0; x < c; ++x) {
    for (Carrier y = 0; y < c; ++y) {
      const CarrierSet s = sum(x, y);
      if (s == 0 || s != sum(y, x)) return false;
      if (((s & singleton(0)) != 0) != (x == neg(y))) return false;
    }
  }
  for (Carrier a = 0; a < c; ++a) {
    for (Carrier b = 0; b < c; ++b) {
      for (Carrier k = 0; k < c; ++k) {
        if (scale_left(a, sum(b, k)) != sum(cmul(a, b), cmul(a, k))) return false;
        if (scale_right(sum(b, k), a) != sum(cmul(b, a), cmul(k, a))) return false;
        if (sum_sets(sum(a, b), singleton(k)) != sum_sets(singleton(a), sum(b, k))) return false;
      }
    }
  }
  return true;
}

}  // namespace hexafield
