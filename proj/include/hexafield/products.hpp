#pragma once

#include <vector>

#include "hexafield/errors.hpp"
#include "hexafield/group.hpp"
#include "hexafield/morphisms.hpp"
#include "hexafield/pasture.hpp"

namespace hexafield {

/// Pasture product with its projections. Group elements of the product are
/// in invariant-factor form; `components` recovers the factor coordinates.
struct ProductPasture {
  Pasture result;
  std::vector<Elem> projection1;
  std::vector<Elem> projection2;
};

/// Unit (ε1, ε2); nullset { hexagon((u1,u2), (v1,v2)) : (u1,v1) selected in
/// P1 and (u2,v2) selected in P2 }, over all member pairs of each factor
/// hexagon.
inline ProductPasture product_with_projections(const Pasture& p1, const Pasture& p2, const Caps& caps = {}) {
  const std::size_t n1 = p1.order(), n2 = p2.order();
  require_cap(n1 * n2, caps.table_order, "pasture product: group order");
  std::vector<int> orders(p1.group().invariant_factors());
  for (int d : p2.group().invariant_factors()) orders.push_back(d);
  const auto norm = normalize_cyclic_product(orders);
  // Raw index of (a, b) is a * n2 + b because factor residues concatenate.
  auto elem = [&](Elem a, Elem b) { return norm.raw_to_elem[static_cast<std::size_t>(a) * n2 + b]; };
  auto table = hexagon_table(norm.group, caps);

  std::vector<FundamentalPair> sel1, sel2;
  p1.nullset().for_each([&](std::size_t h) {
    for (const auto& m : p1.table().members(static_cast<HexagonId>(h))) sel1.push_back(m);
  });
  p2.nullset().for_each([&](std::size_t h) {
    for (const auto& m : p2.table().members(static_cast<HexagonId>(h))) sel2.push_back(m);
  });
  HexSet nullset(table->size());
  for (const auto& a : sel1) {
    for (const auto& b : sel2) nullset.set(table->hex(elem(a.u, b.u), elem(a.v, b.v)));
  }
  ProductPasture out{Pasture(table, elem(p1.unit(), p2.unit()), std::move(nullset)), {}, {}};
  out.projection1.resize(n1 * n2);
  out.projection2.resize(n1 * n2);
  for (Elem a = 0; a < n1; ++a) {
    for (Elem b = 0; b < n2; ++b) {
      out.projection1[elem(a, b)] = a;
      out.projection2[elem(a, b)] = b;
    }
  }
  if (!is_morphism(out.projection1, out.result, p1) || !is_morphism(out.projection2, out.result, p2)) {
    throw std::logic_error("pasture product projections are not morphisms");
  }
  return out;
}

inline Pasture product(const Pasture& p1, const Pasture& p2, const Caps& caps = {}) {
  return product_with_projections(p1, p2, caps).result;
}

/// Right-hand side of the product criterion: both factors 0/0, or one of
/// them is K, or both are F2. Structural tests only.
inline bool product_theorem_verdict(const Pasture& h1, const Pasture& h2, const Caps& caps = {}) {
  if (!is_hyperfield_fast(h1) || !is_hyperfield_fast(h2)) {
    throw DomainError("product verdict needs two hyperfields");
  }
  if (is_krasner(h1) || is_krasner(h2)) return true;
  if (is_f2(h1) && is_f2(h2)) return true;
  return is_zero_over_zero(h1, caps) && is_zero_over_zero(h2, caps);
}

}  // namespace hexafield
