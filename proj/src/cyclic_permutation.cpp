#include "pong/cyclic_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "pong/dihedral_group.hpp"
#include "pong/errors.hpp"

namespace pong {

CyclicLiftedPermutation::CyclicLiftedPermutation(Context ctx, std::vector<int> domain,
                                                 std::vector<int> values)
    : ctx_(make_asteroids_context(ctx.m, ctx.k)),
      domain_(std::move(domain)),
      values_(std::move(values)),
      slot_(static_cast<std::size_t>(ctx_.m) + 1, -1) {
  if (static_cast<int>(domain_.size()) != ctx_.k || values_.size() != domain_.size()) {
    throw InvalidArgument("cyclic permutation needs exactly k domain points and k values");
  }
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    const int x = domain_[i];
    if (x < 1 || x > ctx_.m) {
      throw InvalidArgument("domain point " + std::to_string(x) + " outside {1,...,m}");
    }
    if (i > 0 && domain_[i - 1] >= x) throw InvalidArgument("domain must be strictly increasing");
    slot_[static_cast<std::size_t>(x)] = static_cast<int>(i);
  }
  const IdempotentState image = target();
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    throw InvalidArgument("values are not distinct modulo m");
  }
}

bool CyclicLiftedPermutation::contains(int x) const {
  return slot_[static_cast<std::size_t>(floor_mod(x - 1, ctx_.m) + 1)] >= 0;
}

int CyclicLiftedPermutation::evaluate(int x) const {
  const int r = floor_mod(x - 1, ctx_.m) + 1;
  const int slot = slot_[static_cast<std::size_t>(r)];
  if (slot < 0) throw InvalidArgument(std::to_string(x) + " is not in the domain of " + to_string());
  return values_[static_cast<std::size_t>(slot)] + (x - r);
}

int CyclicLiftedPermutation::max_displacement() const {
  int d = 0;
  for (std::size_t i = 0; i < domain_.size(); ++i) d = std::max(d, std::abs(values_[i] - domain_[i]));
  return d;
}

IdempotentState CyclicLiftedPermutation::target() const {
  IdempotentState image;
  image.reserve(values_.size());
  for (int v : values_) image.push_back(floor_mod(v - 1, ctx_.m) + 1);
  std::sort(image.begin(), image.end());
  return image;
}

std::string CyclicLiftedPermutation::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (i) out << ", ";
    out << domain_[i] << "->" << values_[i];
  }
  out << "}@A(" << ctx_.m << ',' << ctx_.k << ')';
  return out.str();
}

std::size_t CyclicLiftedPermutation::hash() const {
  std::size_t h = static_cast<std::size_t>(ctx_.m) * 999983u + static_cast<std::size_t>(ctx_.k);
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    h = h * 1099511628211ull + static_cast<std::size_t>(domain_[i]);
    h = h * 1099511628211ull + static_cast<std::size_t>(values_[i] + (1 << 20));
  }
  return h;
}

WeightVector weight_vector(const CyclicLiftedPermutation& f) {
  const int m = f.context().m;
  const int d = f.max_displacement();
  std::vector<int> doubled(static_cast<std::size_t>(m), 0);
  for (int a = 1; a <= m; ++a) {
    const int level = 2 * a - 1;
    int count = 0;
    for (int i = a - d - 1; i <= a + d; ++i) {
      if (!f.contains(i)) continue;
      const int fi = f.evaluate(i);
      if ((2 * i < level && level < 2 * fi) || (2 * fi < level && level < 2 * i)) ++count;
    }
    doubled[static_cast<std::size_t>(a - 1)] = count;
  }
  return WeightVector(std::move(doubled));
}

std::vector<Crossing> crossings(const CyclicLiftedPermutation& f) {
  const int m = f.context().m;
  const int span = 2 * f.max_displacement();
  std::vector<Crossing> out;
  for (int i = 1; i <= m; ++i) {
    if (!f.contains(i)) continue;
    const int fi = f.evaluate(i);
    for (int j = i + 1; j <= i + span; ++j) {
      if (f.contains(j) && f.evaluate(j) < fi) out.push_back({i, j});
    }
  }
  return out;
}

int crossing_count(const CyclicLiftedPermutation& f) {
  return static_cast<int>(crossings(f).size());
}

CyclicLiftedPermutation resolve(const CyclicLiftedPermutation& f, const Crossing& c) {
  if (!(c.i < c.j) || !f.contains(c.i) || !f.contains(c.j) || !(f.evaluate(c.i) > f.evaluate(c.j))) {
    throw InvalidArgument("(" + std::to_string(c.i) + "," + std::to_string(c.j) +
                          ") is not a crossing of " + f.to_string());
  }
  const int m = f.context().m;
  const int ri = floor_mod(c.i - 1, m) + 1;
  const int rj = floor_mod(c.j - 1, m) + 1;
  const int fi = f.evaluate(c.i);
  const int fj = f.evaluate(c.j);
  std::vector<int> values = f.values();
  const auto& dom = f.domain();
  for (std::size_t s = 0; s < dom.size(); ++s) {
    if (dom[s] == ri) values[s] = fj - (c.i - ri);
    if (dom[s] == rj) values[s] = fi - (c.j - rj);
  }
  return CyclicLiftedPermutation(f.context(), dom, std::move(values));
}

std::optional<CyclicLiftedPermutation> compose(const CyclicLiftedPermutation& f,
                                               const CyclicLiftedPermutation& g) {
  if (f.context() != g.context()) throw InvalidArgument("compose: generators from different algebras");
  if (f.target() != g.source()) return std::nullopt;
  std::vector<int> values;
  values.reserve(f.values().size());
  for (int v : f.values()) values.push_back(g.evaluate(v));
  return CyclicLiftedPermutation(f.context(), f.domain(), std::move(values));
}

}  // namespace pong
