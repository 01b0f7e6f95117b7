#pragma once

// Slow reference implementations used only by the tests. They share no code
// with the library beyond the element numbering convention (mixed radix,
// first factor most significant) so that results can be compared directly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

struct Group {
  std::vector<int> d;  // cyclic factors, need not be in invariant-factor form

  int order() const { return std::accumulate(d.begin(), d.end(), 1, std::multiplies<>()); }

  std::vector<int> decode(int e) const {
    std::vector<int> r(d.size());
    for (std::size_t i = d.size(); i-- > 0;) {
      r[i] = e % d[i];
      e /= d[i];
    }
    return r;
  }
  int encode(const std::vector<int>& r) const {
    int e = 0;
    for (std::size_t i = 0; i < d.size(); ++i) e = e * d[i] + r[i];
    return e;
  }
  int mul(int a, int b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < d.size(); ++i) x[i] = (x[i] + y[i]) % d[i];
    return encode(x);
  }
  int inv(int a) const {
    auto x = decode(a);
    for (std::size_t i = 0; i < d.size(); ++i) x[i] = (d[i] - x[i]) % d[i];
    return encode(x);
  }
};

/// Hexagon classes by breadth-first closure under the six maps; class ids are
/// assigned in order of the least pair (u*n + v), matching the library's
/// ordering by least member.
inline std::vector<int> hexagon_classes(const Group& g) {
  const int n = g.order();
  std::vector<int> cls(n * n, -1);
  int next = 0;
  for (int start = 0; start < n * n; ++start) {
    if (cls[start] >= 0) continue;
    std::vector<int> stack{start};
    cls[start] = next;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      const int u = p / n, v = p % n;
      const int ui = g.inv(u), vi = g.inv(v);
      const std::pair<int, int> imgs[6] = {{u, v},
                                           {v, u},
                                           {g.mul(u, vi), vi},
                                           {vi, g.mul(u, vi)},
                                           {g.mul(v, ui), ui},
                                           {ui, g.mul(v, ui)}};
      for (auto [a, b] : imgs) {
        if (cls[a * n + b] < 0) {
          cls[a * n + b] = next;
          stack.push_back(a * n + b);
        }
      }
    }
    ++next;
  }
  return cls;
}

inline int class_count(const std::vector<int>& cls) { return *std::max_element(cls.begin(), cls.end()) + 1; }

/// Multivalued addition on {0} ⊔ G as std::set values; carrier 0 is zero.
struct HyperAddition {
  int n = 0;
  int eps = 0;
  Group g;
  std::vector<std::set<int>> sums;  // (n+1)^2 entries

  const std::set<int>& sum(int a, int b) const { return sums[a * (n + 1) + b]; }
  std::set<int> sum(const std::set<int>& a, const std::set<int>& b) const {
    std::set<int> out;
    for (int x : a) {
      for (int y : b) out.insert(sum(x, y).begin(), sum(x, y).end());
    }
    return out;
  }
  int mul(int a, int b) const { return (a == 0 || b == 0) ? 0 : g.mul(a - 1, b - 1) + 1; }
  int neg(int a) const { return mul(eps + 1, a); }
};

/// z ∈ x ⊞ y iff the class of (x, y, -z), normalized by dividing by -z, is
/// selected; 0 ∈ x ⊞ y iff x = -y.
inline HyperAddition addition_from_classes(const Group& g, int eps, const std::vector<int>& cls,
                                           const std::set<int>& selected) {
  HyperAddition h;
  h.n = g.order();
  h.eps = eps;
  h.g = g;
  const int n = h.n, c = n + 1;
  h.sums.assign(c * c, {});
  for (int b = 0; b < c; ++b) {
    h.sums[b] = {b};
    h.sums[b * c] = {b};
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      std::set<int> s;
      if (x == g.mul(eps, y)) s.insert(0);
      for (int z = 0; z < n; ++z) {
        const int mz = g.mul(eps, z), mzi = g.inv(mz);
        if (selected.count(cls[g.mul(x, mzi) * n + g.mul(y, mzi)])) s.insert(z + 1);
      }
      h.sums[(x + 1) * c + (y + 1)] = s;
    }
  }
  return h;
}

inline bool hyperfield_axioms(const HyperAddition& h) {
  const int c = h.n + 1;
  for (int a = 0; a < c; ++a) {
    for (int b = 0; b < c; ++b) {
      if (h.sum(a, b).empty()) return false;
      if (h.sum(a, b) != h.sum(b, a)) return false;
      if (h.sum(a, b).count(0) != (a == h.neg(b) ? 1u : 0u)) return false;
    }
  }
  for (int a = 0; a < c; ++a) {
    for (int b = 0; b < c; ++b) {
      for (int d = 0; d < c; ++d) {
        if (h.sum(h.sum(a, b), {d}) != h.sum({a}, h.sum(b, d))) return false;
        std::set<int> scaled;
        for (int z : h.sum(b, d)) scaled.insert(h.mul(a, z));
        if (scaled != h.sum(h.mul(a, b), h.mul(a, d))) return false;
      }
    }
  }
  return true;
}

/// All bijections of the element set that respect the group law.
inline int automorphism_count(const Group& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) ok = perm[g.mul(a, b)] == g.mul(perm[a], perm[b]);
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Elements of Z/p[x]/(f) for small p, k; f given constant-first with the
/// leading 1 implied. Elements as integers with base-p digits.
struct SmallField {
  int p, k;
  std::vector<int> f;
  int q() const {
    int r = 1;
    for (int i = 0; i < k; ++i) r *= p;
    return r;
  }
  std::vector<int> digits(int a) const {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  int from(const std::vector<int>& d) const {
    int a = 0;
    for (int i = k; i-- > 0;) a = a * p + d[i];
    return a;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
    return from(x);
  }
  int mul(int a, int b) const {
    auto x = digits(a), y = digits(b);
    std::vector<int> prod(2 * k, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
    }
    for (int d = 2 * k - 1; d >= k; --d) {
      const int cf = prod[d];
      prod[d] = 0;
      for (int i = 0; i < k; ++i) prod[d - k + i] = ((prod[d - k + i] - cf * f[i]) % p + p) % p;
    }
    prod.resize(k);
    return from(prod);
  }
};

}  // namespace oracle
