#pragma once

// Fundamental pairs and hexagons of a finite abelian group.
//
// A fundamental pair (u, v) stands for the G-orbit of (u, v, 1) in G^3; a
// hexagon is an S3-orbit of fundamental pairs. Pairs are indexed as u*n + v,
// so pair-index order is lexicographic order on (u, v).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "hexafield/config.hpp"
#include "hexafield/errors.hpp"
#include "hexafield/group.hpp"

namespace hexafield {

struct FundamentalPair {
  Elem u = 0;
  Elem v = 0;

  friend auto operator<=>(const FundamentalPair&, const FundamentalPair&) = default;
};

using HexagonId = std::uint32_t;

/// The six S3 images of (u, v) with duplicates collapsed, sorted.
template <class Mul, class Inv>
std::vector<FundamentalPair> s3_images(Elem u, Elem v, Mul&& mul, Inv&& inv) {
  const Elem ui = inv(u);
  const Elem vi = inv(v);
  std::array<FundamentalPair, 6> six{{
      {u, v},
      {v, u},
      {mul(u, vi), vi},
      {vi, mul(u, vi)},
      {mul(v, ui), ui},
      {ui, mul(v, ui)},
  }};
  std::vector<FundamentalPair> out(six.begin(), six.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<FundamentalPair> orbit(const AbelianGroup& g, FundamentalPair p) {
  return s3_images(
      p.u, p.v, [&](Elem a, Elem b) { return g.mul(a, b); }, [&](Elem a) { return g.inv(a); });
}

/// (n^2 + 3n + 2 #G[3]) / 6, evaluated without building anything.
inline std::uint64_t hexagon_count_formula(const AbelianGroup& g) {
  const std::uint64_t n = g.order();
  return (n * n + 3 * n + 2 * torsion_count(g, 3)) / 6;
}

/// Complete orbit partition of G^2 together with dense multiplication and
/// inversion tables for the group. Immutable once built.
class HexagonTable {
 public:
  explicit HexagonTable(AbelianGroup group, const Caps& caps = {}) : group_(std::move(group)) {
    require_cap(group_.order(), caps.table_order, "hexagon table: group order");
    n_ = group_.order();
    mul_.resize(n_ * n_);
    inv_.resize(n_);
    for (Elem a = 0; a < n_; ++a) {
      inv_[a] = group_.inv(a);
      for (Elem b = 0; b < n_; ++b) mul_[a * n_ + b] = group_.mul(a, b);
    }
    constexpr HexagonId kUnassigned = ~HexagonId{0};
    pair_to_hex_.assign(n_ * n_, kUnassigned);
    member_offsets_.push_back(0);
    for (Elem u = 0; u < n_; ++u) {
      for (Elem v = 0; v < n_; ++v) {
        if (pair_to_hex_[pair_index(u, v)] != kUnassigned) continue;
        // First unassigned pair in lexicographic order is the least member.
        const auto id = static_cast<HexagonId>(reps_.size());
        reps_.push_back({u, v});
        const auto members = s3_images(
            u, v, [&](Elem a, Elem b) { return mul(a, b); }, [&](Elem a) { return inv(a); });
        for (const auto& m : members) {
          pair_to_hex_[pair_index(m.u, m.v)] = id;
          members_.push_back(m);
        }
        member_offsets_.push_back(static_cast<std::uint32_t>(members_.size()));
      }
    }
  }

  const AbelianGroup& group() const { return group_; }
  std::size_t order() const { return n_; }
  std::size_t size() const { return reps_.size(); }

  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  std::size_t pair_index(Elem u, Elem v) const { return static_cast<std::size_t>(u) * n_ + v; }

  HexagonId hex(Elem u, Elem v) const { return pair_to_hex_[pair_index(u, v)]; }
  /// Hexagon of the triple (x, y, z): the pair (x z^-1, y z^-1).
  HexagonId hex_of_triple(Elem x, Elem y, Elem z) const {
    const Elem zi = inv(z);
    return hex(mul(x, zi), mul(y, zi));
  }

  FundamentalPair rep(HexagonId h) const { return reps_[h]; }
  const std::vector<FundamentalPair>& reps() const { return reps_; }

  std::span<const FundamentalPair> members(HexagonId h) const {
    return std::span<const FundamentalPair>(members_).subspan(
        member_offsets_[h], member_offsets_[h + 1] - member_offsets_[h]);
  }

  /// Induced permutation of hexagon indices under a group automorphism.
  std::vector<std::uint32_t> permutation(const GroupAutomorphism& f) const {
    std::vector<std::uint32_t> perm(size());
    for (HexagonId h = 0; h < size(); ++h) perm[h] = hex(f(reps_[h].u), f(reps_[h].v));
    return perm;
  }

 private:
  AbelianGroup group_;
  std::size_t n_ = 1;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<HexagonId> pair_to_hex_;
  std::vector<FundamentalPair> reps_;
  std::vector<FundamentalPair> members_;
  std::vector<std::uint32_t> member_offsets_;
};

/// Process-wide cache: one immutable table per group.
inline std::shared_ptr<const HexagonTable> hexagon_table(const AbelianGroup& g, const Caps& caps = {}) {
  require_cap(g.order(), caps.table_order, "hexagon table: group order");
  static std::mutex mu;
  static std::map<std::vector<int>, std::shared_ptr<const HexagonTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(g.invariant_factors()); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const HexagonTable>(g, caps);
  std::lock_guard lock(mu);
  return cache.emplace(g.invariant_factors(), std::move(table)).first->second;
}

inline std::shared_ptr<const HexagonTable> build_table(const AbelianGroup& g, const Caps& caps = {}) {
  return hexagon_table(g, caps);
}

}  // namespace hexafield
