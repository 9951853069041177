#include "pong/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "pong/diagram.hpp"
#include "pong/errors.hpp"
#include "pong/parallel.hpp"
#include "pong/pong_algebra.hpp"
#include "pong/table_cache.hpp"

namespace pong {

namespace {

using Clock = std::chrono::steady_clock;

VerificationReport make_report(const std::string& suite, const Context& c, int max_disp) {
  VerificationReport r;
  r.suite = suite;
  r.algebra = "pong";
  r.m = c.m;
  r.k = c.k;
  r.max_disp = max_disp;
  return r;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

OperandDump dump(const LiftedPermutation& f) { return {f.domain(), f.values()}; }

// Generators grouped by source idempotent.
std::map<IdempotentState, std::vector<std::size_t>> by_source(const std::vector<LiftedPermutation>& gens) {
  std::map<IdempotentState, std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < gens.size(); ++i) out[gens[i].source()].push_back(i);
  return out;
}

}  // namespace

VerificationReport verify_oracle_differential(const Context& ctx, int max_disp, int jobs) {
  const auto start = Clock::now();
  const Context c = make_pong_context(ctx.m, ctx.k);
  VerificationReport report = make_report("oracle-diff", c, max_disp);
  const std::size_t c_diff = report.check_index("oracle_differential");
  const std::size_t c_rect = report.check_index("empty_rectangle_terms");
  const std::size_t c_shape = report.check_index("bigon_classification");
  const auto gens = enumerate_generators(c, max_disp);

  run_chunked(gens.size(), jobs, report, [&](std::size_t begin, std::size_t end, VerificationReport& rep) {
    for (std::size_t i = begin; i < end; ++i) {
      const LiftedPermutation& f = gens[i];
      const PongElement algebra_side = diff(PongElement::generator(f));
      const PongElement oracle_side = oracle_differential(f);
      rep.record(c_diff, algebra_side == oracle_side, [&] {
        return Failure{"", {dump(f)}, "diff = " + algebra_side.to_string() + ", oracle = " + oracle_side.to_string()};
      });

      const auto rects = empty_rectangles(f);
      const int before = crossing_count(f);
      const DihedralGroup& group = f.group();
      for (const Crossing& cr : crossings(f)) {
        const bool drops_by_one = crossing_count(resolve(f, cr)) == before - 1;
        const auto it = std::find_if(rects.begin(), rects.end(),
                                     [&](const PlanarRectangle& r) { return r.x1 == cr.i && r.x2 == cr.j; });
        const bool empty = it != rects.end();
        rep.record(c_rect, empty == drops_by_one, [&] {
          return Failure{"", {dump(f)},
                         "crossing (" + std::to_string(cr.i) + "," + std::to_string(cr.j) + ") empty=" +
                             (empty ? "yes" : "no") + " drop-by-one=" + (drops_by_one ? "yes" : "no")};
        });
        if (!empty) continue;
        // Swapped by a reflection: same orbit, reached from the fundamental
        // domain by group elements of opposite sign.
        const Reduction ri = group.reduce(cr.i);
        const Reduction rj = group.reduce(cr.j);
        const bool swapped = ri.representative == rj.representative &&
                             ri.to_representative.sign != rj.to_representative.sign;
        rep.record(c_shape, (it->shape == Shape::Bigon) == swapped, [&] {
          return Failure{"", {dump(f)}, "misclassified rectangle at (" + std::to_string(cr.i) + "," +
                                            std::to_string(cr.j) + ")"};
        });
      }
    }
  });
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_oracle_product(const Context& ctx, int max_disp, int jobs) {
  const auto start = Clock::now();
  const Context c = make_pong_context(ctx.m, ctx.k);
  VerificationReport report = make_report("oracle-mul", c, max_disp);
  const std::size_t c_mul = report.check_index("oracle_product");
  const auto gens = enumerate_generators(c, max_disp);
  const auto groups = by_source(gens);

  run_chunked(gens.size(), jobs, report, [&](std::size_t begin, std::size_t end, VerificationReport& rep) {
    for (std::size_t i = begin; i < end; ++i) {
      const LiftedPermutation& f = gens[i];
      const PongElement ef = PongElement::generator(f);
      auto it = groups.find(f.target());
      if (it == groups.end()) continue;
      for (std::size_t j : it->second) {
        const LiftedPermutation& g = gens[j];
        const PongElement algebra_side = mu2(ef, PongElement::generator(g));
        const PongElement oracle_side = oracle_product(f, g);
        rep.record(c_mul, algebra_side == oracle_side, [&] {
          return Failure{"", {dump(f), dump(g)},
                         "mu2 = " + algebra_side.to_string() + ", oracle = " + oracle_side.to_string()};
        });
      }
    }
  });
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_order(const Context& ctx, int max_disp, int jobs) {
  const auto start = Clock::now();
  const Context c = make_pong_context(ctx.m, ctx.k);
  VerificationReport report = make_report("order", c, max_disp);
  const std::size_t c_weights = report.check_index("identify_weights");
  const std::size_t c_pos = report.check_index("positivity_agreement");
  const std::size_t c_mas = report.check_index("maslov_difference");
  const auto gens = enumerate_generators(c, max_disp);
  std::map<std::pair<IdempotentState, IdempotentState>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < gens.size(); ++i) classes[{gens[i].source(), gens[i].target()}].push_back(i);

  run_chunked(gens.size(), jobs, report, [&](std::size_t begin, std::size_t end, VerificationReport& rep) {
    for (std::size_t i = begin; i < end; ++i) {
      const LiftedPermutation& f = gens[i];
      const ResolutionSearch search(f);
      const WeightVector wf = weight_vector(f);
      const int cf = crossing_count(f);
      for (std::size_t j : classes.at({f.source(), f.target()})) {
        const LiftedPermutation& g = gens[j];
        const WeightVector d = wf - weight_vector(g);
        const std::vector<int> from_domain = domain_o_multiplicities(f, g);
        bool weights_ok = true;
        for (std::size_t t = 0; t < from_domain.size(); ++t) weights_ok = weights_ok && d.doubled[t] == 2 * from_domain[t];
        rep.record(c_weights, weights_ok, [&] {
          return Failure{"", {dump(f), dump(g)}, "weight difference " + d.to_string() + " vs domain multiplicities"};
        });

        const bool positive = domain_is_positive(f, g);
        const bool reachable = search.reaches(g);
        rep.record(c_pos, positive == reachable, [&] {
          return Failure{"", {dump(f), dump(g)},
                         std::string("positive=") + (positive ? "yes" : "no") + " reachable=" + (reachable ? "yes" : "no")};
        });
        if (positive) {
          const Rational mas = domain_maslov_index(f, g);
          const int drop = cf - crossing_count(g);
          rep.record(c_mas, mas == Rational(drop), [&] {
            return Failure{"", {dump(f), dump(g)},
                           "domain Maslov index " + to_fraction_string(mas) + ", crossing drop " + std::to_string(drop)};
          });
        }
      }
    }
  });
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_triangles(const Context& ctx, int max_disp, int jobs) {
  const auto start = Clock::now();
  const Context c = make_pong_context(ctx.m, ctx.k);
  VerificationReport report = make_report("euler", c, max_disp);
  const std::size_t c_pos = report.check_index("o_counts_nonnegative");
  const std::size_t c_agree = report.check_index("o_counts_agree");
  const std::size_t c_diag = report.check_index("triangle_maslov");
  const std::size_t c_euler = report.check_index("euler_identity");
  const std::size_t c_sarkar = report.check_index("sarkar_index");
  const std::size_t c_zero = report.check_index("maslov_zero_iff_additive");
  const auto gens = enumerate_generators(c, max_disp);
  const auto groups = by_source(gens);

  run_chunked(gens.size(), jobs, report, [&](std::size_t begin, std::size_t end, VerificationReport& rep) {
    for (std::size_t i = begin; i < end; ++i) {
      const LiftedPermutation& f = gens[i];
      auto it = groups.find(f.target());
      if (it == groups.end()) continue;
      const int cf = crossing_count(f);
      for (std::size_t j : it->second) {
        const LiftedPermutation& g = gens[j];
        const std::optional<TriangleDomain> dom = triangle_domain(f, g);
        if (!dom) continue;
        const auto operands = [&] { return std::vector<OperandDump>{dump(f), dump(g)}; };
        const auto& o = dom->o_counts;
        const int o1 = o.front();
        const int om = o.back();

        rep.record(c_pos, std::all_of(o.begin(), o.end(), [](int x) { return x >= 0; }),
                   [&] { return Failure{"", operands(), "negative O-count"}; });
        bool agree = true;
        for (std::size_t t = 0; t < o.size(); ++t) agree = agree && dom->weight_defect.doubled[t] == 2 * o[t];
        rep.record(c_agree, agree, [&] {
          return Failure{"", operands(), "weight defect " + dom->weight_defect.to_string() + " vs triangle O-counts"};
        });

        const int defect = cf + crossing_count(g) - crossing_count(dom->composite);
        if (o1 == 0 && om == 0) {
          rep.record(c_diag, dom->diag_count == defect, [&] {
            return Failure{"", operands(), "diagonal count " + std::to_string(dom->diag_count) + ", crossing defect " +
                                               std::to_string(defect)};
          });
        }
        const Rational expected = Rational(c.k, 4) + Rational(o1, 2) + Rational(om, 2);
        rep.record(c_euler, dom->euler == expected, [&] {
          return Failure{"", operands(), "Euler measure " + to_fraction_string(dom->euler) + ", expected " +
                                             to_fraction_string(expected)};
        });
        const Rational sarkar = Rational(2) * dom->euler - Rational(c.k, 2) + Rational(dom->diag_count);
        rep.record(c_sarkar, sarkar == Rational(dom->maslov), [&] {
          return Failure{"", operands(), "Sarkar index " + to_fraction_string(sarkar) + ", Maslov " +
                                             std::to_string(dom->maslov)};
        });
        rep.record(c_zero, (dom->maslov == 0) == (defect == 0), [&] {
          return Failure{"", operands(), "Maslov " + std::to_string(dom->maslov) + ", crossing defect " +
                                             std::to_string(defect)};
        });
      }
    }
  });
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dga", "asteroids", "oracle-diff", "oracle-mul", "order", "euler", "all"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const Context& ctx, int max_disp, int jobs,
                             TableCache* cache) {
  if (suite == "dga") {
    if (!cache) return verify_dga(ctx, max_disp, jobs);
    const PongTable table = cache->pong(ctx, max_disp);
    return verify_dga(ctx, max_disp, jobs, &table);
  }
  if (suite == "asteroids") {
    if (!cache) return a_verify(ctx, max_disp, jobs);
    const AsteroidsTable table = cache->asteroids(ctx, max_disp);
    return a_verify(ctx, max_disp, jobs, &table);
  }
  if (suite == "oracle-diff") return verify_oracle_differential(ctx, max_disp, jobs);
  if (suite == "oracle-mul") return verify_oracle_product(ctx, max_disp, jobs);
  if (suite == "order") return verify_order(ctx, max_disp, jobs);
  if (suite == "euler") return verify_triangles(ctx, max_disp, jobs);
  if (suite == "all") {
    const Context c = make_pong_context(ctx.m, ctx.k);
    VerificationReport all = make_report("all", c, max_disp);
    double total_ms = 0;
    for (const std::string& name : suite_names()) {
      if (name == "all") continue;
      const VerificationReport part = run_suite(name, c, max_disp, jobs, cache);
      all.merge(part, name + ".");
      total_ms += part.wall_time_ms;
    }
    all.wall_time_ms = total_ms;
    return all;
  }
  throw InvalidArgument("unknown suite \"" + suite + "\"");
}

}  // namespace pong
