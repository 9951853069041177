#pragma once

#include <vector>

#include "pong/algebra.hpp"
#include "pong/context.hpp"
#include "pong/cyclic_permutation.hpp"
#include "pong/lifted_permutation.hpp"
#include "pong/report.hpp"
#include "pong/structure_table.hpp"

namespace pong {

using PongElement = Element<LiftedPermutation>;
using AsteroidsElement = Element<CyclicLiftedPermutation>;
using PongTable = StructureTable<LiftedPermutation>;
using AsteroidsTable = StructureTable<CyclicLiftedPermutation>;

// All k-subsets of {1,...,m-1}, lexicographic.
std::vector<IdempotentState> idempotent_states(const Context& ctx);
LiftedPermutation idempotent(const Context& ctx, const IdempotentState& s);

// Every generator with |f(x_i) - x_i| <= max_disp, sorted by (domain, values).
std::vector<LiftedPermutation> enumerate_generators(const Context& ctx, int max_disp);

// Asteroids counterparts; states are k-subsets of {1,...,m}.
std::vector<IdempotentState> a_idempotent_states(const Context& ctx);
CyclicLiftedPermutation a_idempotent(const Context& ctx, const IdempotentState& s);
std::vector<CyclicLiftedPermutation> a_enumerate_generators(const Context& ctx, int max_disp);

PongTable build_pong_table(const Context& ctx, int max_disp);
AsteroidsTable build_asteroids_table(const Context& ctx, int max_disp);

// Exhaustive axiom suites over every generator with displacement <= max_disp,
// optionally reusing a table built for the same parameters.
VerificationReport verify_dga(const Context& ctx, int max_disp, int jobs = 1, const PongTable* cached = nullptr);
VerificationReport a_verify(const Context& ctx, int max_disp, int jobs = 1, const AsteroidsTable* cached = nullptr);

}  // namespace pong
