#pragma once

#include <map>
#include <vector>

#include "pong/algebra.hpp"
#include "pong/context.hpp"

namespace pong {

// Structure constants on the generators with displacement <= max_disp:
// the differential of each, and every nonzero product of a composable
// in-bound pair. Generators are indexed by their position in `generators`.
template <class Gen>
struct StructureTable {
  struct Product {
    int left = 0;
    int right = 0;
    Gen generator;
    Monomial monomial;
    friend bool operator==(const Product&, const Product&) = default;
  };

  Context context;
  int max_disp = 0;
  std::vector<Gen> generators;
  std::vector<Element<Gen>> differentials;  // aligned with generators
  std::vector<Product> products;            // sorted by (left, right)

  friend bool operator==(const StructureTable&, const StructureTable&) = default;
};

template <class Gen>
StructureTable<Gen> build_structure_table(const Context& ctx, int max_disp, std::vector<Gen> gens) {
  StructureTable<Gen> t{ctx, max_disp, std::move(gens), {}, {}};
  std::map<IdempotentState, std::vector<int>> by_source;
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    by_source[t.generators[i].source()].push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    const Gen& f = t.generators[i];
    t.differentials.push_back(differentiate_generator(f));
    auto it = by_source.find(f.target());
    if (it == by_source.end()) continue;
    for (int j : it->second) {
      if (auto p = multiply_generators(f, t.generators[static_cast<std::size_t>(j)])) {
        t.products.push_back({static_cast<int>(i), j, std::move(p->generator), std::move(p->monomial)});
      }
    }
  }
  return t;
}

// Loads a table into a GeneratorTable whose first ids are t.generators in
// order. Composable in-bound pairs missing from t.products are zero.
template <class Gen>
void seed_generator_table(GeneratorTable<Gen>& table, const StructureTable<Gen>& t) {
  using IdTerm = typename GeneratorTable<Gen>::IdTerm;
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    if (table.intern(t.generators[i]) != static_cast<int>(i)) {
      throw InvariantViolation("structure table seeded into a table with other generators");
    }
  }
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    std::vector<IdTerm> terms;
    for (const auto& [h, p] : t.differentials[i].terms()) {
      const int hid = table.intern(h);
      for (const Monomial& mono : p.monomials()) terms.push_back({hid, mono});
    }
    table.set_differential(static_cast<int>(i), std::move(terms));
  }
  std::map<IdempotentState, std::vector<int>> by_source;
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    by_source[t.generators[i].source()].push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < t.generators.size(); ++i) {
    auto it = by_source.find(t.generators[i].target());
    if (it == by_source.end()) continue;
    for (int j : it->second) table.set_product(static_cast<int>(i), j, std::nullopt);
  }
  for (const auto& p : t.products) table.set_product(p.left, p.right, IdTerm{table.intern(p.generator), p.monomial});
}

}  // namespace pong
