#include <gtest/gtest.h>

#include "hexafield/galois.hpp"
#include "hexafield/lottery.hpp"
#include "hexafield/products.hpp"

using namespace hexafield;

namespace {

std::vector<Pasture> all_pastures_up_to(std::size_t order) {
  std::vector<Pasture> out;
  for (const auto& g : abelian_groups_up_to(order)) {
    const auto t = hexagon_table(g);
    for (Elem e : units_of_order_le_2(g)) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << t->size()); ++m) {
        out.emplace_back(t, e, HexSet::from_mask(t->size(), m));
      }
    }
  }
  return out;
}

}  // namespace

TEST(Products, KrasnerIsAUnit) {
  for (const auto& p : all_pastures_up_to(3)) {
    const auto prod = product(p, named::krasner());
    EXPECT_TRUE(are_isomorphic(prod, p)) << p.group().literal();
  }
}

TEST(Products, Examples) {
  EXPECT_TRUE(are_isomorphic(product(named::f2(), named::f2()), named::f2()));
  EXPECT_FALSE(is_hyperfield_fast(product(named::f3(), named::f3())));
  EXPECT_TRUE(product_theorem_verdict(named::krasner(), named::sign()));
  EXPECT_TRUE(product_theorem_verdict(named::f2(), named::f2()));
  EXPECT_FALSE(product_theorem_verdict(named::f3(), named::f3()));
  const auto ss = product(named::sign(), named::sign());
  EXPECT_TRUE(product_theorem_verdict(named::sign(), named::sign()));
  EXPECT_TRUE(is_hyperfield_fast(ss));
  EXPECT_TRUE(is_zero_over_zero(ss));
}

TEST(Products, ProductUnitAndGroup) {
  const auto prod = product_with_projections(named::f3(), named::f4());
  EXPECT_EQ(prod.result.group(), AbelianGroup::cyclic(6));
  EXPECT_EQ(prod.projection1[prod.result.unit()], named::f3().unit());
  EXPECT_EQ(prod.projection2[prod.result.unit()], named::f4().unit());
}

TEST(Products, VerdictRejectsNonHyperfields) {
  const auto bad = Pasture::from_pairs(AbelianGroup::cyclic(2), 0, {{0, 0}});
  EXPECT_THROW(product_theorem_verdict(bad, named::krasner()), DomainError);
}

TEST(Products, NullsetMatchesDefinition) {
  // Direct check of the defining set over all member pairs.
  const auto a = named::weak_sign(), b = named::f4();
  const auto pp = product_with_projections(a, b);
  const auto& r = pp.result;
  for (Elem u = 0; u < r.order(); ++u) {
    for (Elem v = 0; v < r.order(); ++v) {
      const bool want = a.contains(pp.projection1[u], pp.projection1[v]) &&
                        b.contains(pp.projection2[u], pp.projection2[v]);
      // membership of hex((u1,u2),(v1,v2)) is witnessed by some member pair
      bool got = false;
      for (const auto& m : r.table().members(r.table().hex(u, v))) {
        got = got || (a.contains(pp.projection1[m.u], pp.projection1[m.v]) &&
                      b.contains(pp.projection2[m.u], pp.projection2[m.v]));
      }
      EXPECT_EQ(r.contains(u, v), got);
      if (want) EXPECT_TRUE(r.contains(u, v));
    }
  }
}

TEST(Products, TheoremOnAllSmallHyperfields) {
  std::vector<Pasture> hyper;
  for (const auto& p : all_pastures_up_to(3)) {
    if (is_hyperfield_fast(p)) hyper.push_back(p);
  }
  ASSERT_FALSE(hyper.empty());
  for (const auto& h1 : hyper) {
    for (const auto& h2 : hyper) {
      const auto prod = product(h1, h2);
      EXPECT_EQ(is_hyperfield_fast(prod), product_theorem_verdict(h1, h2));
      if (is_zero_over_zero(h1) && is_zero_over_zero(h2)) EXPECT_TRUE(is_zero_over_zero(prod));
    }
  }
}

TEST(Products, NoMorphismFromNonFieldToField) {
  std::vector<Pasture> fields;
  for (std::uint64_t q = 2; q <= 9; ++q) {
    std::uint64_t p = 0;
    unsigned k = 0;
    if (arith::prime_power(q, p, k)) fields.push_back(quotient_hyperfield(q, static_cast<std::uint32_t>(q - 1)));
  }
  ASSERT_EQ(fields.size(), 7u);  // F2, F3, F4, F5, F7, F8, F9
  for (const auto& p : all_pastures_up_to(5)) {
    if (!is_hyperfield_fast(p) || is_field(p)) continue;
    for (const auto& f : fields) EXPECT_TRUE(all_morphisms(p, f).empty());
  }
}
