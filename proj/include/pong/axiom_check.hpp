#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pong/algebra.hpp"
#include "pong/parallel.hpp"
#include "pong/report.hpp"
#include "pong/structure_table.hpp"

namespace pong {

struct AxiomCheckOptions {
  bool outer_variables = false;  // check that v_1, v_m never appear in mu_2 (pong only)
  int jobs = 1;
};

namespace detail {

template <class Gen>
OperandDump dump(const Gen& g) {
  return {g.domain(), g.values()};
}

// A sum of (id, monomial) terms reduced modulo 2 into canonical order.
using IdSum = std::vector<std::pair<int, Monomial>>;

inline IdSum reduce_mod2(IdSum terms) {
  std::sort(terms.begin(), terms.end());
  IdSum out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

}  // namespace detail

// Exhaustive DGA axiom check over `gens` (all in-bound generators, sorted):
// d^2 = 0, Leibniz, associativity, weight conservation, grading, unit laws
// of the idempotents, and optionally the absence of v_1 and v_m from products. Operations
// on out-of-bound intermediate generators are computed exactly. A cached
// structure table over the same gens supplies their differentials and
// in-bound products instead of recomputing them.
template <class Gen>
VerificationReport check_axioms(const std::string& suite, const std::string& algebra, int m, int k,
                                int max_disp, const std::vector<Gen>& gens,
                                const std::vector<Gen>& idempotents, const AxiomCheckOptions& opts,
                                const StructureTable<Gen>* cached = nullptr) {
  if (cached && cached->generators != gens) throw InvalidArgument("cached table is for other generators");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = suite;
  report.algebra = algebra;
  report.m = m;
  report.k = k;
  report.max_disp = max_disp;
  const std::size_t c_d2 = report.check_index("d_squared");
  const std::size_t c_leibniz = report.check_index("leibniz");
  const std::size_t c_assoc = report.check_index("associativity");
  const std::size_t c_weight = report.check_index("weight_conservation");
  const std::size_t c_grading = report.check_index("grading");
  const std::size_t c_units = report.check_index("idempotent_units");
  const std::size_t c_outer = opts.outer_variables ? report.check_index("no_outer_variables") : 0;

  // Generators grouped by source idempotent, as indices into gens.
  std::map<IdempotentState, std::vector<int>> by_source;
  for (std::size_t i = 0; i < gens.size(); ++i) by_source[gens[i].source()].push_back(static_cast<int>(i));
  static const std::vector<int> kNone;
  auto starting_at = [&](const IdempotentState& s) -> const std::vector<int>& {
    auto it = by_source.find(s);
    return it == by_source.end() ? kNone : it->second;
  };

  run_chunked(gens.size(), opts.jobs, report, [&](std::size_t begin, std::size_t end, VerificationReport& rep) {
    GeneratorTable<Gen> table;
    for (const Gen& g : gens) table.intern(g);  // ids coincide with indices
    if (cached) seed_generator_table(table, *cached);
    for (const Gen& e : idempotents) table.intern(e);

    for (std::size_t fi = begin; fi < end; ++fi) {
      const int f = static_cast<int>(fi);
      const Gen& fg = gens[fi];
      const auto& fd = table.at(f);

      // Differential: d^2, weight, grading.
      const auto& df = table.differential(f);
      detail::IdSum dd;
      for (const auto& t : df) {
        for (const auto& u : table.differential(t.id)) dd.emplace_back(u.id, t.monomial * u.monomial);
        const auto& td = table.at(t.id);
        rep.record(c_weight, td.weight + t.monomial.weight() == fd.weight, [&] {
          return Failure{"", {detail::dump(fg), detail::dump(td.generator)}, "differential term changes weight"};
        });
        rep.record(c_grading, td.maslov == fd.maslov - 1, [&] {
          return Failure{"", {detail::dump(fg), detail::dump(td.generator)},
                         "differential term has grading " + std::to_string(td.maslov)};
        });
      }
      rep.record(c_d2, detail::reduce_mod2(std::move(dd)).empty(),
                 [&] { return Failure{"", {detail::dump(fg)}, "d(d(f)) != 0"}; });

      // Unit laws against every idempotent.
      for (const Gen& e : idempotents) {
        const int eid = table.intern(e);
        const auto& left = table.product(eid, f);
        const bool left_ok = e.source() == fg.source()
                                 ? (left && left->id == f && left->monomial.is_one())
                                 : !left;
        const auto& right = table.product(f, eid);
        const bool right_ok = e.source() == fg.target()
                                  ? (right && right->id == f && right->monomial.is_one())
                                  : !right;
        rep.record(c_units, left_ok && right_ok, [&] {
          return Failure{"", {detail::dump(e), detail::dump(fg)}, "idempotent does not act as a unit/projector"};
        });
      }

      for (int g : starting_at(fg.target())) {
        const auto& gd = table.at(g);
        const auto& fg_prod = table.product(f, g);

        if (fg_prod) {
          const auto& pd = table.at(fg_prod->id);
          rep.record(c_weight, pd.weight + fg_prod->monomial.weight() == fd.weight + gd.weight, [&] {
            return Failure{"", {detail::dump(fg), detail::dump(gd.generator)}, "product changes total weight"};
          });
          rep.record(c_grading, pd.maslov == fd.maslov + gd.maslov, [&] {
            return Failure{"", {detail::dump(fg), detail::dump(gd.generator)}, "product grading not additive"};
          });
          if (opts.outer_variables) {
            const auto& e = fg_prod->monomial.exponents();
            rep.record(c_outer, e.front() == 0 && e.back() == 0, [&] {
              return Failure{"", {detail::dump(fg), detail::dump(gd.generator)},
                             "product coefficient " + fg_prod->monomial.to_string() + " involves v_1 or v_m"};
            });
          }
        }

        // Leibniz: d(fg) = d(f) g + f d(g).
        detail::IdSum lhs;
        detail::IdSum rhs;
        if (fg_prod) {
          const int pid = fg_prod->id;
          const Monomial pm = fg_prod->monomial;
          for (const auto& t : table.differential(pid)) lhs.emplace_back(t.id, pm * t.monomial);
        }
        for (const auto& t : table.differential(f)) {
          if (const auto& p = table.product(t.id, g)) rhs.emplace_back(p->id, t.monomial * p->monomial);
        }
        for (const auto& t : table.differential(g)) {
          if (const auto& p = table.product(f, t.id)) rhs.emplace_back(p->id, t.monomial * p->monomial);
        }
        rep.record(c_leibniz, detail::reduce_mod2(std::move(lhs)) == detail::reduce_mod2(std::move(rhs)), [&] {
          return Failure{"", {detail::dump(fg), detail::dump(gd.generator)}, "d(fg) != d(f)g + f d(g)"};
        });

        // Associativity over every h composable after g.
        for (int h : starting_at(gd.generator.target())) {
          const auto& gh_prod = table.product(g, h);
          std::optional<Term<Gen>> left;
          std::optional<Term<Gen>> right;
          if (fg_prod) {
            left = table.product_uncached(fg_prod->id, h);
            if (left) left->monomial = fg_prod->monomial * left->monomial;
          }
          if (gh_prod) {
            right = table.product_uncached(f, gh_prod->id);
            if (right) right->monomial = gh_prod->monomial * right->monomial;
          }
          bool ok = left.has_value() == right.has_value();
          if (ok && left) ok = left->generator == right->generator && left->monomial == right->monomial;
          rep.record(c_assoc, ok, [&] {
            return Failure{"", {detail::dump(fg), detail::dump(gd.generator), detail::dump(table.generator(h))},
                           "(fg)h != f(gh)"};
          });
        }
      }
    }
  });

  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace pong
