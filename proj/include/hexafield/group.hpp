#pragma once

// Finite abelian groups in invariant-factor form d1 | d2 | ... | dm.
//
// Elements are residue vectors. Internally every element also has a dense
// index in [0, n): the mixed-radix value of its residues with the first
// factor most significant, so index order is lexicographic order on residue
// vectors. All canonical forms downstream rely on this order.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "hexafield/arith.hpp"
#include "hexafield/errors.hpp"

namespace hexafield {

using Elem = std::uint32_t;

struct GroupElement {
  std::vector<int> residues;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class AbelianGroup {
 public:
  /// The trivial group.
  AbelianGroup() = default;

  explicit AbelianGroup(std::vector<int> invariant_factors)
      : factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2) {
        throw DomainError("invariant factor must be >= 2, got " + std::to_string(factors_[i]));
      }
      if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0) {
        throw DomainError("invariant factors must divide each other: " + literal_of(factors_));
      }
    }
    order_ = 1;
    for (int d : factors_) order_ *= static_cast<std::uint64_t>(d);
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) {
      strides_[i - 1] = strides_[i] * static_cast<std::uint64_t>(factors_[i]);
    }
  }

  static AbelianGroup cyclic(int n) {
    if (n < 1) throw DomainError("cyclic group order must be >= 1");
    return n == 1 ? AbelianGroup{} : AbelianGroup{std::vector<int>{n}};
  }

  /// Parses "Z2xZ4", "Z9", or "1" / "Z1" / "trivial" for the trivial group.
  static AbelianGroup parse(std::string_view text) {
    if (text == "1" || text == "Z1" || text == "trivial") return {};
    std::vector<int> factors;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t next = text.find('x', pos);
      const std::string_view part =
          text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      if (part.size() < 2 || part[0] != 'Z') {
        throw DomainError("bad group literal '" + std::string(text) + "'");
      }
      int v = 0;
      for (char c : part.substr(1)) {
        if (c < '0' || c > '9' || v > 100000) {
          throw DomainError("bad group literal '" + std::string(text) + "'");
        }
        v = v * 10 + (c - '0');
      }
      factors.push_back(v);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    return AbelianGroup(std::move(factors));
  }

  std::string literal() const { return literal_of(factors_); }

  const std::vector<int>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return static_cast<std::size_t>(order_); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  Elem identity() const { return 0; }

  int residue(Elem e, std::size_t i) const {
    return static_cast<int>((e / strides_[i]) % static_cast<std::uint64_t>(factors_[i]));
  }

  GroupElement element(Elem e) const {
    GroupElement g;
    g.residues.resize(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) g.residues[i] = residue(e, i);
    return g;
  }

  bool contains(const GroupElement& g) const {
    if (g.residues.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (g.residues[i] < 0 || g.residues[i] >= factors_[i]) return false;
    }
    return true;
  }

  Elem index(const GroupElement& g) const {
    if (!contains(g)) throw DomainError("element does not belong to " + literal());
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      e += static_cast<std::uint64_t>(g.residues[i]) * strides_[i];
    }
    return static_cast<Elem>(e);
  }

  Elem mul(Elem a, Elem b) const {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      e += static_cast<std::uint64_t>((residue(a, i) + residue(b, i)) % factors_[i]) * strides_[i];
    }
    return static_cast<Elem>(e);
  }

  Elem inv(Elem a) const {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      e += static_cast<std::uint64_t>((factors_[i] - residue(a, i)) % factors_[i]) * strides_[i];
    }
    return static_cast<Elem>(e);
  }

  Elem pow(Elem a, std::int64_t k) const {
    std::uint64_t e = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::int64_t d = factors_[i];
      const std::int64_t r = ((residue(a, i) * (k % d)) % d + d) % d;
      e += static_cast<std::uint64_t>(r) * strides_[i];
    }
    return static_cast<Elem>(e);
  }

  std::uint64_t element_order(Elem a) const {
    std::uint64_t l = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::uint64_t d = static_cast<std::uint64_t>(factors_[i]);
      const std::uint64_t r = static_cast<std::uint64_t>(residue(a, i));
      l = std::lcm(l, d / std::gcd(d, r));
    }
    return l;
  }

  GroupElement mul(const GroupElement& g, const GroupElement& h) const {
    return element(mul(index(g), index(h)));
  }
  GroupElement inv(const GroupElement& g) const { return element(inv(index(g))); }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }
  friend auto operator<=>(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ <=> b.factors_;
  }

 private:
  static std::string literal_of(const std::vector<int>& f) {
    if (f.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) s += 'x';
      s += 'Z' + std::to_string(f[i]);
    }
    return s;
  }

  std::vector<int> factors_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
};

/// { g : g^k = 1 }, ascending.
inline std::vector<Elem> torsion_subgroup(const AbelianGroup& g, std::int64_t k) {
  if (k < 1) throw DomainError("torsion exponent must be >= 1");
  std::vector<Elem> out;
  for (Elem e = 0; e < g.order(); ++e) {
    if (g.pow(e, k) == g.identity()) out.push_back(e);
  }
  return out;
}

/// #G[k] from the invariant factors alone.
inline std::uint64_t torsion_count(const AbelianGroup& g, std::uint64_t k) {
  std::uint64_t c = 1;
  for (int d : g.invariant_factors()) c *= std::gcd(static_cast<std::uint64_t>(d), k);
  return c;
}

/// Every admissible unit: the elements with e^2 = 1.
inline std::vector<Elem> units_of_order_le_2(const AbelianGroup& g) { return torsion_subgroup(g, 2); }

/// A group endomorphism or automorphism, stored as its image table.
struct GroupAutomorphism {
  std::vector<Elem> images;

  Elem operator()(Elem e) const { return images[e]; }

  bool is_identity() const {
    for (Elem e = 0; e < images.size(); ++e) {
      if (images[e] != e) return false;
    }
    return true;
  }

  /// (this ∘ other)(x) = this(other(x)).
  GroupAutomorphism after(const GroupAutomorphism& other) const {
    GroupAutomorphism r;
    r.images.resize(other.images.size());
    for (std::size_t e = 0; e < other.images.size(); ++e) r.images[e] = images[other.images[e]];
    return r;
  }

  GroupAutomorphism inverse() const {
    GroupAutomorphism r;
    r.images.resize(images.size());
    for (Elem e = 0; e < images.size(); ++e) r.images[images[e]] = e;
    return r;
  }

  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
};

inline bool is_homomorphism(const AbelianGroup& src, const AbelianGroup& dst,
                            const std::vector<Elem>& images) {
  if (images.size() != src.order()) return false;
  for (Elem x : images) {
    if (x >= dst.order()) return false;
  }
  for (Elem a = 0; a < src.order(); ++a) {
    for (Elem b = 0; b < src.order(); ++b) {
      if (images[src.mul(a, b)] != dst.mul(images[a], images[b])) return false;
    }
  }
  return true;
}

/// Calls fn(images) for every homomorphism src -> dst until fn returns false.
/// Homomorphisms are parametrized by the images of the standard generators
/// e_i (order d_i), each of which must satisfy d_i * y = 0.
template <class Fn>
void for_each_homomorphism(const AbelianGroup& src, const AbelianGroup& dst, Fn&& fn,
                           bool require_exact_orders = false) {
  const auto& f = src.invariant_factors();
  const std::size_t m = f.size();
  std::vector<std::vector<Elem>> candidates(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (Elem y = 0; y < dst.order(); ++y) {
      const std::uint64_t ord = dst.element_order(y);
      const bool ok = require_exact_orders ? ord == static_cast<std::uint64_t>(f[i])
                                           : static_cast<std::uint64_t>(f[i]) % ord == 0;
      if (ok) candidates[i].push_back(y);
    }
    if (candidates[i].empty()) return;
  }
  std::vector<std::size_t> pick(m, 0);
  std::vector<Elem> images(src.order());
  while (true) {
    for (Elem x = 0; x < src.order(); ++x) {
      Elem img = dst.identity();
      for (std::size_t i = 0; i < m; ++i) img = dst.mul(img, dst.pow(candidates[i][pick[i]], src.residue(x, i)));
      images[x] = img;
    }
    if (!fn(static_cast<const std::vector<Elem>&>(images))) return;
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++pick[i] < candidates[i].size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
    if (m == 0) return;
  }
}

/// All automorphisms of g, identity first, then in lexicographic order of
/// generator images.
inline std::vector<GroupAutomorphism> automorphisms(const AbelianGroup& g, std::size_t cap = 16) {
  require_cap(g.order(), cap, "automorphism enumeration: group order");
  std::vector<GroupAutomorphism> out;
  std::vector<char> seen(g.order());
  for_each_homomorphism(
      g, g,
      [&](const std::vector<Elem>& img) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem x : img) {
          if (seen[x]) return true;
          seen[x] = 1;
        }
        out.push_back(GroupAutomorphism{img});
        return true;
      },
      true);
  std::stable_partition(out.begin(), out.end(), [](const auto& a) { return a.is_identity(); });
  return out;
}

/// Automorphisms fixing a given element (the unit of a pasture).
inline std::vector<GroupAutomorphism> automorphisms_fixing(const AbelianGroup& g, Elem fixed,
                                                           std::size_t cap = 16) {
  auto all = automorphisms(g, cap);
  std::erase_if(all, [&](const GroupAutomorphism& a) { return a(fixed) != fixed; });
  return all;
}

/// Invariant-factor normal form of Z_{c1} x ... x Z_{ck} for arbitrary
/// orders ci >= 1, plus the explicit isomorphism. Raw elements are indexed
/// mixed-radix with the first cyclic factor most significant.
struct NormalizedProduct {
  AbelianGroup group;
  std::vector<Elem> raw_to_elem;
};

inline NormalizedProduct normalize_cyclic_product(const std::vector<int>& orders) {
  // Elementary divisors: one cyclic p-power component per (factor, prime).
  struct Component {
    std::uint64_t prime;
    std::uint64_t power;
    std::size_t factor;  // which raw factor it came from
  };
  std::vector<Component> comps;
  std::uint64_t raw_order = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) throw DomainError("cyclic factor order must be >= 1");
    raw_order *= static_cast<std::uint64_t>(orders[i]);
    for (auto [p, e] : arith::factorize(static_cast<std::uint64_t>(orders[i]))) {
      comps.push_back({p, arith::ipow(p, static_cast<unsigned>(e)), i});
    }
  }
  // Per prime, components sorted descending; the j-th largest of every prime
  // combine into the j-th largest invariant factor.
  std::map<std::uint64_t, std::vector<std::size_t>> by_prime;
  for (std::size_t c = 0; c < comps.size(); ++c) by_prime[comps[c].prime].push_back(c);
  std::size_t m = 0;
  for (auto& [p, list] : by_prime) {
    std::stable_sort(list.begin(), list.end(),
                     [&](std::size_t a, std::size_t b) { return comps[a].power > comps[b].power; });
    m = std::max(m, list.size());
  }
  std::vector<int> factors(m, 1);
  std::vector<std::vector<std::size_t>> assigned(m);  // components per invariant factor
  for (auto& [p, list] : by_prime) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      const std::size_t slot = m - 1 - j;  // largest goes last
      factors[slot] *= static_cast<int>(comps[list[j]].power);
      assigned[slot].push_back(list[j]);
    }
  }
  NormalizedProduct out{AbelianGroup(factors), {}};
  out.raw_to_elem.resize(raw_order);

  std::vector<std::uint64_t> raw_strides(orders.size(), 1);
  for (std::size_t i = orders.size(); i-- > 1;) {
    raw_strides[i - 1] = raw_strides[i] * static_cast<std::uint64_t>(orders[i]);
  }
  for (std::uint64_t r = 0; r < raw_order; ++r) {
    GroupElement g;
    g.residues.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      // CRT: find x mod factors[j] with x ≡ raw residue (mod power) for each
      // assigned component. Brute force is fine at table-sized orders.
      const std::uint64_t d = static_cast<std::uint64_t>(factors[j]);
      std::uint64_t x = 0;
      for (; x < d; ++x) {
        bool ok = true;
        for (std::size_t c : assigned[j]) {
          const auto& comp = comps[c];
          const std::uint64_t res =
              (r / raw_strides[comp.factor]) % static_cast<std::uint64_t>(orders[comp.factor]);
          if (x % comp.power != res % comp.power) {
            ok = false;
            break;
          }
        }
        if (ok) break;
      }
      g.residues[j] = static_cast<int>(x);
    }
    out.raw_to_elem[r] = out.group.index(g);
  }
  return out;
}

/// Every abelian group of order n up to isomorphism, sorted by factor list.
inline std::vector<AbelianGroup> abelian_groups_of_order(std::uint64_t n) {
  if (n == 1) return {AbelianGroup{}};
  std::vector<std::vector<int>> cyclic_parts{{}};
  for (auto [p, e] : arith::factorize(n)) {
    std::vector<std::vector<int>> next;
    for (const auto& part : arith::partitions(e)) {
      for (const auto& prev : cyclic_parts) {
        auto cur = prev;
        for (int k : part) cur.push_back(static_cast<int>(arith::ipow(p, static_cast<unsigned>(k))));
        next.push_back(cur);
      }
    }
    cyclic_parts = std::move(next);
  }
  std::vector<AbelianGroup> out;
  for (const auto& parts : cyclic_parts) out.push_back(normalize_cyclic_product(parts).group);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<AbelianGroup> abelian_groups_up_to(std::uint64_t max_order) {
  std::vector<AbelianGroup> out;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace hexafield
