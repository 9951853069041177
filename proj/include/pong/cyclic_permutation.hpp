#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pong/context.hpp"
#include "pong/lifted_permutation.hpp"
#include "pong/weight_vector.hpp"

namespace pong {

// An mZ-equivariant partial permutation of Z (f(x+m) = f(x)+m), stored by
// its values on x_1 < ... < x_k in {1,...,m}. Generator of A(m,k).
class CyclicLiftedPermutation {
 public:
  CyclicLiftedPermutation(Context ctx, std::vector<int> domain, std::vector<int> values);

  const Context& context() const { return ctx_; }
  const std::vector<int>& domain() const { return domain_; }
  const std::vector<int>& values() const { return values_; }

  bool contains(int x) const;
  int evaluate(int x) const;
  int max_displacement() const;

  IdempotentState source() const { return domain_; }
  IdempotentState target() const;

  std::string to_string() const;

  friend bool operator==(const CyclicLiftedPermutation& a, const CyclicLiftedPermutation& b) {
    return a.ctx_ == b.ctx_ && a.domain_ == b.domain_ && a.values_ == b.values_;
  }
  friend auto operator<=>(const CyclicLiftedPermutation& a, const CyclicLiftedPermutation& b) {
    if (auto c = a.ctx_ <=> b.ctx_; c != 0) return c;
    if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

  std::size_t hash() const;

 private:
  Context ctx_;
  std::vector<int> domain_;
  std::vector<int> values_;
  std::vector<int> slot_;  // slot_[residue] = index into domain_, or -1
};

// Entry a is twice the weight at level a - 1/2.
WeightVector weight_vector(const CyclicLiftedPermutation& f);

// Inverting pairs i < j normalized to i in {1,...,m}, sorted.
std::vector<Crossing> crossings(const CyclicLiftedPermutation& f);
int crossing_count(const CyclicLiftedPermutation& f);

CyclicLiftedPermutation resolve(const CyclicLiftedPermutation& f, const Crossing& c);

std::optional<CyclicLiftedPermutation> compose(const CyclicLiftedPermutation& f,
                                               const CyclicLiftedPermutation& g);

}  // namespace pong

template <>
struct std::hash<pong::CyclicLiftedPermutation> {
  std::size_t operator()(const pong::CyclicLiftedPermutation& f) const { return f.hash(); }
};
