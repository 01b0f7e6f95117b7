#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hexafield/lottery.hpp"
#include "hexafield/morphisms.hpp"

using namespace hexafield;

namespace {

std::vector<Elem> identity_map(std::size_t n) {
  std::vector<Elem> f(n);
  for (Elem i = 0; i < n; ++i) f[i] = i;
  return f;
}

const auto kZ3 = AbelianGroup::cyclic(3);
// Z3 pairs: hex(1,1) = {(0,0)}, hex(1,g) = {(0,1),(1,0),(2,2)},
// hex(1,g^2) = {(0,2),(2,0),(1,1)}, hex(g,g^2) = {(1,2),(2,1)}.

}  // namespace

TEST(Morphisms, IsMorphismExamples) {
  const auto f3 = named::f3();
  EXPECT_TRUE(is_morphism(identity_map(2), f3, f3));
  EXPECT_TRUE(is_morphism(collapse_map(f3), f3, named::krasner()));
  EXPECT_FALSE(is_morphism(identity_map(2), f3, named::sign()));
}

TEST(Morphisms, NonHomomorphismThrows) {
  const auto p = Pasture(kZ3, 0, HexSet(4));
  EXPECT_THROW(is_morphism({0, 1, 1}, p, p), DomainError);
}

TEST(Morphisms, PastureAutomorphismExamples) {
  for (const auto& p : {named::f3(), named::sign(), named::weak_sign()}) {
    const auto autos = pasture_automorphisms(p);
    ASSERT_EQ(autos.size(), 1u);
    EXPECT_TRUE(autos[0].is_identity());
  }
  EXPECT_EQ(pasture_automorphisms(Pasture::from_pairs(kZ3, 0, {{0, 0}, {1, 2}})).size(), 2u);
  EXPECT_EQ(pasture_automorphisms(Pasture::from_pairs(kZ3, 0, {{0, 1}})).size(), 1u);
}

TEST(Morphisms, CanonicalFormExamples) {
  const auto a = Pasture::from_pairs(kZ3, 0, {{0, 1}});
  const auto b = Pasture::from_pairs(kZ3, 0, {{0, 2}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_TRUE(are_isomorphic(a, b));
  EXPECT_EQ(canonical_form(named::krasner()).nullset_min, named::krasner().nullset());
  const auto cf = canonical_form(b);
  EXPECT_EQ(canonical_form(cf.to_pasture()), cf);
}

TEST(Morphisms, BijectiveMorphismExamples) {
  const auto f3 = named::f3();
  const auto weak = named::weak_sign();
  EXPECT_TRUE(exists_bijective_morphism(f3, f3));
  EXPECT_TRUE(exists_bijective_morphism(f3, weak));
  EXPECT_FALSE(exists_bijective_morphism(weak, f3));
  EXPECT_THROW(exists_bijective_morphism(f3, named::f4()), DomainError);
}

TEST(Morphisms, CanonicalPartitionMatchesPairwiseIsomorphism) {
  for (int n : {2, 3}) {
    const auto g = AbelianGroup::cyclic(n);
    const auto t = hexagon_table(g);
    const auto autos = automorphisms(g);
    for (Elem e : units_of_order_le_2(g)) {
      std::vector<Pasture> all;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << t->size()); ++m) {
        all.emplace_back(t, e, HexSet::from_mask(t->size(), m));
      }
      for (const auto& p : all) {
        for (const auto& q : all) {
          bool iso = false;
          for (const auto& f : autos) {
            if (f(e) != e) continue;
            bool same = true;
            for (Elem u = 0; u < g.order(); ++u) {
              for (Elem v = 0; v < g.order(); ++v) same = same && p.contains(u, v) == q.contains(f(u), f(v));
            }
            iso = iso || same;
          }
          EXPECT_EQ(canonical_form(p) == canonical_form(q), iso);
        }
      }
    }
  }
}

TEST(Morphisms, CompositionOfMorphisms) {
  // F3 -> weak sign -> K, and F4 -> K through the trivial group.
  const auto f3 = named::f3(), weak = named::weak_sign(), k = named::krasner();
  const auto id = identity_map(2);
  ASSERT_TRUE(is_morphism(id, f3, weak));
  ASSERT_TRUE(is_morphism(collapse_map(weak), weak, k));
  std::vector<Elem> comp(2);
  for (Elem x = 0; x < 2; ++x) comp[x] = collapse_map(weak)[id[x]];
  EXPECT_TRUE(is_morphism(comp, f3, k));
}

TEST(Morphisms, EveryHyperfieldMapsToKrasner) {
  for (const auto& g : abelian_groups_up_to(5)) {
    const auto t = hexagon_table(g);
    for (Elem e : units_of_order_le_2(g)) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << t->size()); ++m) {
        const Pasture p(t, e, HexSet::from_mask(t->size(), m));
        if (!is_hyperfield_fast(p)) continue;
        EXPECT_TRUE(is_morphism(collapse_map(p), p, named::krasner()));
      }
    }
  }
}

TEST(Morphisms, AutomorphismsFormAGroup) {
  const auto g = AbelianGroup::parse("Z2xZ2");
  const auto t = hexagon_table(g);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << t->size()); ++m) {
    const Pasture p(t, 0, HexSet::from_mask(t->size(), m));
    const auto autos = pasture_automorphisms(p);
    std::set<std::vector<Elem>> s;
    for (const auto& a : autos) s.insert(a.images);
    EXPECT_TRUE(s.count(identity_map(4)));
    for (const auto& a : autos) {
      EXPECT_TRUE(s.count(a.inverse().images));
      for (const auto& b : autos) EXPECT_TRUE(s.count(a.after(b).images));
    }
  }
}

TEST(Morphisms, AllMorphismsAreTransitive) {
  std::vector<Pasture> zoo{named::f2(), named::krasner(), named::f3(), named::sign(), named::weak_sign(), named::f4()};
  for (const auto& a : zoo) {
    for (const auto& b : zoo) {
      for (const auto& c : zoo) {
        for (const auto& f : all_morphisms(a, b)) {
          for (const auto& h : all_morphisms(b, c)) {
            std::vector<Elem> comp(f.size());
            for (std::size_t x = 0; x < f.size(); ++x) comp[x] = h[f[x]];
            EXPECT_TRUE(is_morphism(comp, a, c));
          }
        }
      }
    }
  }
}

TEST(Morphisms, CapsAreEnforced) {
  const auto g = AbelianGroup::cyclic(17);
  EXPECT_THROW(canonical_form(Pasture(g, 0, HexSet(hexagon_table(g)->size()))), CapacityError);
}
