#include "pong/lifted_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "pong/errors.hpp"

namespace pong {

LiftedPermutation::LiftedPermutation(Context ctx, std::vector<int> domain, std::vector<int> values)
    : ctx_(make_pong_context(ctx.m, ctx.k)),
      domain_(std::move(domain)),
      values_(std::move(values)),
      slot_(static_cast<std::size_t>(ctx_.m), -1) {
  if (static_cast<int>(domain_.size()) != ctx_.k || values_.size() != domain_.size()) {
    throw InvalidArgument("lifted permutation needs exactly k domain points and k values");
  }
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    const int x = domain_[i];
    if (x < 1 || x > ctx_.m - 1) {
      throw InvalidArgument("domain point " + std::to_string(x) + " outside {1,...,m-1}");
    }
    if (i > 0 && domain_[i - 1] >= x) throw InvalidArgument("domain must be strictly increasing");
    slot_[static_cast<std::size_t>(x)] = static_cast<int>(i);
  }
  const IdempotentState image = target();
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    throw InvalidArgument("values are not distinct modulo G_m");
  }
}

bool LiftedPermutation::contains(int x) const {
  return slot_[static_cast<std::size_t>(group().q1(x))] >= 0;
}

int LiftedPermutation::evaluate(int x) const {
  const DihedralGroup g(ctx_.m);
  const Reduction red = g.reduce(x);
  const int slot = slot_[static_cast<std::size_t>(red.representative)];
  if (slot < 0) {
    throw InvalidArgument(std::to_string(x) + " is not in the domain of " + to_string());
  }
  return g.apply(g.inverse(red.to_representative), values_[static_cast<std::size_t>(slot)]);
}

int LiftedPermutation::max_displacement() const {
  int d = 0;
  for (std::size_t i = 0; i < domain_.size(); ++i) d = std::max(d, std::abs(values_[i] - domain_[i]));
  return d;
}

IdempotentState LiftedPermutation::target() const {
  const DihedralGroup g(ctx_.m);
  IdempotentState image;
  image.reserve(values_.size());
  for (int v : values_) image.push_back(g.q1(v));
  std::sort(image.begin(), image.end());
  return image;
}

std::string LiftedPermutation::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (i) out << ", ";
    out << domain_[i] << "->" << values_[i];
  }
  out << "}@P(" << ctx_.m << ',' << ctx_.k << ')';
  return out.str();
}

std::size_t LiftedPermutation::hash() const {
  std::size_t h = static_cast<std::size_t>(ctx_.m) * 1000003u + static_cast<std::size_t>(ctx_.k);
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    h = h * 1099511628211ull + static_cast<std::size_t>(domain_[i]);
    h = h * 1099511628211ull + static_cast<std::size_t>(values_[i] + (1 << 20));
  }
  return h;
}

// Every strand of f has displacement at most max_displacement(), so a strand
// crosses level c only if it starts within that distance of c, and an
// inverting pair (i, j) always has j - i < 2 * max_displacement().

WeightVector weight_vector(const LiftedPermutation& f) {
  const int m = f.context().m;
  const int d = f.max_displacement();
  std::vector<int> doubled(static_cast<std::size_t>(m), 0);
  for (int j = 1; j <= m; ++j) {
    const int level = 2 * j - 1;  // doubled j - 1/2
    int count = 0;
    for (int i = j - d - 1; i <= j + d; ++i) {
      if (!f.contains(i)) continue;
      const int fi = f.evaluate(i);
      if ((2 * i < level && level < 2 * fi) || (2 * i > level && level > 2 * fi)) ++count;
    }
    doubled[static_cast<std::size_t>(j - 1)] = count;
  }
  return WeightVector(std::move(doubled));
}

Crossing canonical_crossing(const DihedralGroup& group, int i, int j) {
  // Each point orbit meets {1..2m-2} in exactly two points, so at most four
  // group elements move an endpoint there.
  const int period = group.period();
  std::optional<Crossing> best;
  for (int x : {i, j}) {
    const GroupElement g = group.reduce(x).to_representative;
    for (const GroupElement& h : {g, group.compose(group.reflection_high(), g)}) {
      const int a = group.apply(h, i);
      const int b = group.apply(h, j);
      const Crossing c{std::min(a, b), std::max(a, b)};
      if (c.i < 1 || c.i > period) continue;
      if (!best || c < *best) best = c;
    }
  }
  return *best;
}

std::vector<Crossing> crossings(const LiftedPermutation& f) {
  const DihedralGroup group = f.group();
  const int span = 2 * f.max_displacement();
  std::set<Crossing> classes;
  for (int i = 1; i <= group.period(); ++i) {
    if (!f.contains(i)) continue;
    const int fi = f.evaluate(i);
    for (int j = i + 1; j <= i + span; ++j) {
      if (f.contains(j) && f.evaluate(j) < fi) classes.insert(canonical_crossing(group, i, j));
    }
  }
  return {classes.begin(), classes.end()};
}

int crossing_count(const LiftedPermutation& f) {
  const DihedralGroup group = f.group();
  const int period = group.period();
  const int span = 2 * f.max_displacement();
  int translation_orbits = 0;
  int reflection_fixed = 0;
  for (int i = 1; i <= period; ++i) {
    if (!f.contains(i)) continue;
    const int fi = f.evaluate(i);
    for (int j = i + 1; j <= i + span; ++j) {
      if (!f.contains(j) || f.evaluate(j) >= fi) continue;
      ++translation_orbits;
      if (floor_mod(i + j - 1, period) == 0) ++reflection_fixed;
    }
  }
  return (translation_orbits + reflection_fixed) / 2;
}

LiftedPermutation resolve(const LiftedPermutation& f, const Crossing& c) {
  if (!(c.i < c.j) || !f.contains(c.i) || !f.contains(c.j) || !(f.evaluate(c.i) > f.evaluate(c.j))) {
    throw InvalidArgument("(" + std::to_string(c.i) + "," + std::to_string(c.j) +
                          ") is not a crossing of " + f.to_string());
  }
  const DihedralGroup group = f.group();
  const int fi = f.evaluate(c.i);
  const int fj = f.evaluate(c.j);
  const Reduction ri = group.reduce(c.i);
  const Reduction rj = group.reduce(c.j);
  const int new_i = group.apply(ri.to_representative, fj);
  const int new_j = group.apply(rj.to_representative, fi);
  if (ri.representative == rj.representative && new_i != new_j) {
    throw InvariantViolation("inconsistent self-orbit resolution of " + f.to_string());
  }
  std::vector<int> values = f.values();
  const auto& dom = f.domain();
  for (std::size_t s = 0; s < dom.size(); ++s) {
    if (dom[s] == ri.representative) values[s] = new_i;
    if (dom[s] == rj.representative) values[s] = new_j;
  }
  return LiftedPermutation(f.context(), dom, std::move(values));
}

std::optional<LiftedPermutation> compose(const LiftedPermutation& f, const LiftedPermutation& g) {
  if (f.context() != g.context()) throw InvalidArgument("compose: generators from different algebras");
  if (f.target() != g.source()) return std::nullopt;
  std::vector<int> values;
  values.reserve(f.values().size());
  for (int v : f.values()) values.push_back(g.evaluate(v));
  return LiftedPermutation(f.context(), f.domain(), std::move(values));
}

}  // namespace pong
