#pragma once

// Finite fields F_q, their quotient hyperfields F_q / Γ, and recognition of
// finite hyperfields as such quotients.
//
// Elements of F_q = F_p[x] / (f) are encoded as integers: the base-p digits
// are the coefficients, constant term least significant. Integer order is
// the lexicographic order used to pick the modulus and the generator.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hexafield/arith.hpp"
#include "hexafield/config.hpp"
#include "hexafield/errors.hpp"
#include "hexafield/morphisms.hpp"
#include "hexafield/pasture.hpp"

namespace hexafield {

class FiniteField {
 public:
  FiniteField(std::uint32_t p, unsigned k, const Caps& caps = {}) : p_(p), k_(k) {
    if (!arith::is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw DomainError("field degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      q *= p;
      require_cap(q, caps.field_q, "finite field size");
    }
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = first_irreducible();
    generator_ = least_primitive();
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint32_t a = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = a;
      log_[a] = i;
      a = mul_poly(a, generator_);
    }
  }

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients of the monic modulus below the leading term, constant first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint32_t generator() const { return generator_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) return (a + b) % p_;
    std::uint32_t r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }
  std::uint32_t neg(std::uint32_t a) const {
    std::uint32_t r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((p_ - a % p_) % p_) * scale;
      a /= p_;
      scale *= p_;
    }
    return r;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
  }
  /// Discrete log base the generator; a must be nonzero.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }

  std::uint32_t minus_one() const { return neg(1); }

 private:
  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(k_);
    for (unsigned i = 0; i < k_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }
  std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (unsigned i = k_; i-- > 0;) a = a * p_ + d[i];
    return a;
  }

  // Product modulo the current modulus by schoolbook multiplication.
  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const {
    const auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    }
    // x^k = -(m_{k-1} x^{k-1} + ... + m_0)
    for (unsigned d = 2 * k_ - 1; d >= k_; --d) {
      const std::uint64_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (unsigned i = 0; i < k_; ++i) {
        prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) % p_ * c) % p_;
      }
    }
    std::vector<std::uint32_t> r(k_);
    for (unsigned i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
    return from_digits(r);
  }

  // Remainder of the monic polynomial `num` (coefficients constant-first)
  // after division by the monic `den`.
  static std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> num, const std::vector<std::uint32_t>& den,
                                             std::uint32_t p) {
    const std::size_t dd = den.size() - 1;
    for (std::size_t d = num.size(); d-- > dd;) {
      const std::uint64_t c = num[d] % p;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dd; ++i) {
        num[d - dd + i] = static_cast<std::uint32_t>((num[d - dd + i] + (p - den[i]) % p * c) % p);
      }
    }
    num.resize(dd);
    return num;
  }

  std::vector<std::uint32_t> first_irreducible() const {
    if (k_ == 1) return {0};  // x
    std::vector<std::uint32_t> low(k_, 0);
    const std::uint64_t count = q_;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      // lexicographic in (m_{k-1}, ..., m_0)
      for (unsigned i = 0; i < k_; ++i) {
        low[i] = static_cast<std::uint32_t>(c % p_);
        c /= p_;
      }
      if (irreducible(low)) return low;
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  // Exhaustive: no monic factor of degree 1..k/2 divides.
  bool irreducible(const std::vector<std::uint32_t>& low) const {
    std::vector<std::uint32_t> f = low;
    f.push_back(1);
    for (unsigned deg = 1; deg <= k_ / 2; ++deg) {
      const std::uint64_t combos = arith::ipow(p_, deg);
      std::vector<std::uint32_t> g(deg + 1, 0);
      g[deg] = 1;
      for (std::uint64_t code = 0; code < combos; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < deg; ++i) {
          g[i] = static_cast<std::uint32_t>(c % p_);
          c /= p_;
        }
        const auto r = poly_mod(f, g, p_);
        bool zero = true;
        for (auto x : r) zero = zero && x == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  std::uint32_t pow_poly(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_poly(r, a);
      a = mul_poly(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t least_primitive() const {
    const std::uint64_t order = q_ - 1;
    const auto factors = arith::factorize(order);
    for (std::uint32_t a = 1; a < q_; ++a) {
      bool primitive = true;
      for (auto [r, e] : factors) {
        if (pow_poly(a, order / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) return a;
    }
    throw std::logic_error("no primitive element found");
  }

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 1;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

inline FiniteField build_field(std::uint32_t p, unsigned k, const Caps& caps = {}) { return FiniteField(p, k, caps); }

/// F_q for a prime power q.
inline FiniteField field_of_order(std::uint64_t q, const Caps& caps = {}) {
  std::uint64_t p = 0;
  unsigned k = 0;
  if (!arith::prime_power(q, p, k)) throw DomainError(std::to_string(q) + " is not a prime power");
  require_cap(q, caps.field_q, "finite field size");
  return FiniteField(static_cast<std::uint32_t>(p), k, caps);
}

/// F_q / Γ where Γ is the index-n subgroup of F_q^x. Cosets are labelled by
/// discrete log mod n, so the group is literally Z_n.
inline Pasture quotient_hyperfield(const FiniteField& f, std::uint32_t index, const Caps& caps = {}) {
  const std::uint32_t q1 = f.q() - 1;
  if (index < 1 || q1 % index != 0) {
    throw DomainError("index " + std::to_string(index) + " does not divide q-1 = " + std::to_string(q1));
  }
  const auto g = AbelianGroup::cyclic(static_cast<int>(index));
  auto table = hexagon_table(g, caps);
  const std::uint32_t n = index;
  HexSet nullset(table->size());
  // Scale every relation α + β + γ = 0 so that α = 1; then β = x ranges over
  // F^x with 1 + x ≠ 0 and γ = -(1 + x).
  for (std::uint32_t x = 1; x < f.q(); ++x) {
    const std::uint32_t s = f.add(1, x);
    if (s == 0) continue;
    const std::uint32_t c = f.log(f.neg(s)) % n;
    const std::uint32_t b = f.log(x) % n;
    nullset.set(table->hex((n - c) % n, (b + n - c) % n));
  }
  const Elem unit = f.log(f.minus_one()) % n;
  Pasture out(std::move(table), unit, std::move(nullset));
  if (!is_hyperfield_fast(out)) throw std::logic_error("quotient construction produced a non-hyperfield");
  return out;
}

inline Pasture quotient_hyperfield(std::uint64_t q, std::uint32_t index, const Caps& caps = {}) {
  return quotient_hyperfield(field_of_order(q, caps), index, caps);
}

/// Prime powers q with n | q - 1 and q - 1 <= bound, ascending.
inline std::vector<std::uint64_t> candidate_field_orders(std::uint64_t n, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q - 1 <= bound; ++q) {
    std::uint64_t p = 0;
    unsigned k = 0;
    if ((q - 1) % n == 0 && arith::prime_power(q, p, k)) out.push_back(q);
  }
  return out;
}

struct QuotientVerdict {
  enum class Status { quotient, not_quotient, inconclusive_full_sum };
  Status status = Status::inconclusive_full_sum;
  std::optional<std::uint64_t> q;      // witness field order
  std::optional<std::uint32_t> index;  // witness index
  std::uint64_t searched_bound = 0;    // largest q - 1 examined
};

inline std::string_view status_name(QuotientVerdict::Status s) {
  switch (s) {
    case QuotientVerdict::Status::quotient: return "quotient";
    case QuotientVerdict::Status::not_quotient: return "not_quotient";
    case QuotientVerdict::Status::inconclusive_full_sum: return "inconclusive_full_sum";
  }
  return "?";
}

/// Searches F_q / Γ with n | q - 1 for an ε-preserving isomorphic copy of h.
/// When 1 ⊞ -1 ≠ h any quotient must come from q - 1 <= n^4, so an empty
/// search proves not_quotient. Otherwise the search runs up to
/// `extended_bound` (default (n+1)^4) and an empty result is reported as
/// inconclusive.
inline QuotientVerdict is_quotient_of_finite_field(const Pasture& h, std::optional<std::uint64_t> extended_bound = {},
                                                   unsigned threads = 1, const Caps& caps = {}) {
  if (!is_hyperfield_fast(h)) throw DomainError("quotient recognition needs a hyperfield");
  const std::uint64_t n = h.order();
  const bool full = full_one_minus_one(h);
  const std::uint64_t n4 = n * n * n * n;
  const std::uint64_t bound = full ? std::max(n4, extended_bound.value_or((n + 1) * (n + 1) * (n + 1) * (n + 1))) : n4;
  require_cap(bound + 1, caps.field_q, "quotient search: field size");

  QuotientVerdict v;
  v.searched_bound = bound;
  if (h.group().is_cyclic()) {
    Caps inner = caps;
    inner.automorphism_order = std::max<std::size_t>(caps.automorphism_order, n);
    const AutomorphismAction action(h.table_ptr(), inner);
    const auto target = action.canonical_form(h.unit(), h.nullset());
    const auto qs = candidate_field_orders(n, bound);
    // Ordered reduction: each chunk reports the first matching candidate.
    constexpr std::uint64_t kNone = ~std::uint64_t{0};
    const std::uint64_t hit = parallel_reduce(
        qs.size(), threads, kNone,
        [&](std::uint64_t begin, std::uint64_t end) {
          for (std::uint64_t i = begin; i < end; ++i) {
            const auto quo = quotient_hyperfield(qs[i], static_cast<std::uint32_t>(n), caps);
            if (action.canonical_form(quo.unit(), quo.nullset()) == target) return qs[i];
          }
          return kNone;
        },
        [](std::uint64_t a, std::uint64_t b) { return a != kNone ? a : b; });
    if (hit != kNone) {
      v.status = QuotientVerdict::Status::quotient;
      v.q = hit;
      v.index = static_cast<std::uint32_t>(n);
      return v;
    }
  }
  v.status = full ? QuotientVerdict::Status::inconclusive_full_sum : QuotientVerdict::Status::not_quotient;
  return v;
}

}  // namespace hexafield
