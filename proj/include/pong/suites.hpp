#pragma once

#include <string>
#include <vector>

#include "pong/context.hpp"
#include "pong/report.hpp"

namespace pong {

class TableCache;

// diff = oracle_differential on every generator, empty rectangles exactly
// at the crossings whose resolution drops the count by one, and bigons
// exactly at the crossings swapped by a reflection.
VerificationReport verify_oracle_differential(const Context& ctx, int max_disp, int jobs = 1);

// mu2 = oracle_product on every composable pair.
VerificationReport verify_oracle_product(const Context& ctx, int max_disp, int jobs = 1);

// On every pair with a connecting domain: weights match the domain's O
// multiplicities, positivity of the domain matches reachability by
// resolutions, and the domain's Maslov index is the crossing drop.
VerificationReport verify_order(const Context& ctx, int max_disp, int jobs = 1);

// On every composable pair: O-counts nonnegative and equal to the weight
// defect, diagonal count equal to the crossing defect when O_1 and O_m are
// avoided, the Euler measure identity, Sarkar's index formula, and Maslov
// index 0 exactly when crossings add.
VerificationReport verify_triangles(const Context& ctx, int max_disp, int jobs = 1);

const std::vector<std::string>& suite_names();  // dga, asteroids, ..., all

// Runs one named suite. "all" runs every pong suite plus the asteroids
// suite for the same (m, k), with check names prefixed by the suite.
// With a cache, the dga and asteroids suites take their structure tables
// from it; the oracle suites always recompute, since their point is an
// independent comparison. Throws InvalidArgument for unknown suites or
// invalid parameters.
VerificationReport run_suite(const std::string& suite, const Context& ctx, int max_disp, int jobs = 1,
                             TableCache* cache = nullptr);

}  // namespace pong
