#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pong/context.hpp"
#include "pong/dihedral_group.hpp"
#include "pong/weight_vector.hpp"

namespace pong {

// k-element subset of {1,...,m-1} (pong) or {1,...,m} (asteroids).
using IdempotentState = std::vector<int>;

// A G_m-equivariant partial permutation of Z, stored by its values on the
// orbit representatives x_1 < ... < x_k in {1,...,m-1}.
class LiftedPermutation {
 public:
  // Validates: strictly increasing domain inside {1,...,m-1}, |domain| = k,
  // q1 injective on the values. Throws InvalidArgument.
  LiftedPermutation(Context ctx, std::vector<int> domain, std::vector<int> values);

  const Context& context() const { return ctx_; }
  const std::vector<int>& domain() const { return domain_; }
  const std::vector<int>& values() const { return values_; }
  DihedralGroup group() const { return DihedralGroup(ctx_.m); }

  // x lies in the G_m-saturation of the domain.
  bool contains(int x) const;
  // Equivariant extension; throws InvalidArgument when x is not in the domain.
  int evaluate(int x) const;

  int max_displacement() const;

  IdempotentState source() const { return domain_; }
  // Sorted q1-images of the values.
  IdempotentState target() const;

  std::string to_string() const;

  friend bool operator==(const LiftedPermutation& a, const LiftedPermutation& b) {
    return a.ctx_ == b.ctx_ && a.domain_ == b.domain_ && a.values_ == b.values_;
  }
  friend auto operator<=>(const LiftedPermutation& a, const LiftedPermutation& b) {
    if (auto c = a.ctx_ <=> b.ctx_; c != 0) return c;
    if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

  std::size_t hash() const;

 private:
  Context ctx_;
  std::vector<int> domain_;
  std::vector<int> values_;
  std::vector<int> slot_;  // slot_[rep] = index into domain_, or -1
};

// Canonical representative (i, j), i < j, of a G_m-orbit of pairs.
struct Crossing {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

WeightVector weight_vector(const LiftedPermutation& f);

// Lexicographically smallest orbit representative with min in {1..2m-2}.
Crossing canonical_crossing(const DihedralGroup& group, int i, int j);

// One canonical representative per orbit class of inverting pairs, sorted.
std::vector<Crossing> crossings(const LiftedPermutation& f);

// Number of crossing classes, counted without canonicalization: translation
// orbits of inverting pairs plus those fixed by a reflection, halved.
int crossing_count(const LiftedPermutation& f);

// f_<i,j>: targets of the two strand orbits swapped. Throws InvalidArgument
// if c is not an inverting pair of f.
LiftedPermutation resolve(const LiftedPermutation& f, const Crossing& c);

// g o f, or nullopt when f's image idempotent differs from g's domain.
std::optional<LiftedPermutation> compose(const LiftedPermutation& f, const LiftedPermutation& g);

}  // namespace pong

template <>
struct std::hash<pong::LiftedPermutation> {
  std::size_t operator()(const pong::LiftedPermutation& f) const { return f.hash(); }
};
