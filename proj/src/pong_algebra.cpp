#include "pong/pong_algebra.hpp"

#include <functional>

#include "pong/axiom_check.hpp"
#include "pong/dihedral_group.hpp"
#include "pong/errors.hpp"

namespace pong {

namespace {

std::vector<IdempotentState> subsets(int n, int k) {
  std::vector<IdempotentState> out;
  IdempotentState cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= n - (k - static_cast<int>(cur.size())) + 1; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// Calls emit(values) for every value tuple in the displacement window whose
// residues (under `residue`) are pairwise distinct, in lexicographic order.
template <class Residue, class Emit>
void for_each_window(const IdempotentState& dom, int max_disp, int residue_count, Residue residue,
                     Emit emit) {
  std::vector<int> values(dom.size());
  std::vector<char> used(static_cast<std::size_t>(residue_count) + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == dom.size()) {
      emit(values);
      return;
    }
    for (int v = dom[pos] - max_disp; v <= dom[pos] + max_disp; ++v) {
      const auto r = static_cast<std::size_t>(residue(v));
      if (used[r]) continue;
      used[r] = 1;
      values[pos] = v;
      rec(pos + 1);
      used[r] = 0;
    }
  };
  rec(0);
}

void require_max_disp(int max_disp) {
  if (max_disp < 0) throw InvalidArgument("max displacement must be nonnegative");
}

}  // namespace

std::vector<IdempotentState> idempotent_states(const Context& ctx) {
  const Context c = make_pong_context(ctx.m, ctx.k);
  return subsets(c.m - 1, c.k);
}

LiftedPermutation idempotent(const Context& ctx, const IdempotentState& s) {
  return LiftedPermutation(ctx, s, s);
}

std::vector<LiftedPermutation> enumerate_generators(const Context& ctx, int max_disp) {
  require_max_disp(max_disp);
  const DihedralGroup group(ctx.m);
  std::vector<LiftedPermutation> out;
  for (const IdempotentState& dom : idempotent_states(ctx)) {
    for_each_window(dom, max_disp, ctx.m - 1, [&](int v) { return group.q1(v); },
                    [&](const std::vector<int>& values) { out.emplace_back(ctx, dom, values); });
  }
  return out;
}

std::vector<IdempotentState> a_idempotent_states(const Context& ctx) {
  const Context c = make_asteroids_context(ctx.m, ctx.k);
  return subsets(c.m, c.k);
}

CyclicLiftedPermutation a_idempotent(const Context& ctx, const IdempotentState& s) {
  return CyclicLiftedPermutation(ctx, s, s);
}

std::vector<CyclicLiftedPermutation> a_enumerate_generators(const Context& ctx, int max_disp) {
  require_max_disp(max_disp);
  std::vector<CyclicLiftedPermutation> out;
  for (const IdempotentState& dom : a_idempotent_states(ctx)) {
    for_each_window(dom, max_disp, ctx.m, [&](int v) { return floor_mod(v - 1, ctx.m) + 1; },
                    [&](const std::vector<int>& values) { out.emplace_back(ctx, dom, values); });
  }
  return out;
}

PongTable build_pong_table(const Context& ctx, int max_disp) {
  const Context c = make_pong_context(ctx.m, ctx.k);
  return build_structure_table(c, max_disp, enumerate_generators(c, max_disp));
}

AsteroidsTable build_asteroids_table(const Context& ctx, int max_disp) {
  const Context c = make_asteroids_context(ctx.m, ctx.k);
  return build_structure_table(c, max_disp, a_enumerate_generators(c, max_disp));
}

VerificationReport verify_dga(const Context& ctx, int max_disp, int jobs, const PongTable* cached) {
  const Context c = make_pong_context(ctx.m, ctx.k);
  std::vector<LiftedPermutation> units;
  for (const IdempotentState& s : idempotent_states(c)) units.push_back(idempotent(c, s));
  return check_axioms("dga", "pong", c.m, c.k, max_disp, enumerate_generators(c, max_disp), units,
                      {.outer_variables = true, .jobs = jobs}, cached);
}

VerificationReport a_verify(const Context& ctx, int max_disp, int jobs, const AsteroidsTable* cached) {
  const Context c = make_asteroids_context(ctx.m, ctx.k);
  std::vector<CyclicLiftedPermutation> units;
  for (const IdempotentState& s : a_idempotent_states(c)) units.push_back(a_idempotent(c, s));
  return check_axioms("asteroids", "asteroids", c.m, c.k, max_disp, a_enumerate_generators(c, max_disp),
                      units, {.outer_variables = false, .jobs = jobs}, cached);
}

}  // namespace pong
