#pragma once

// Structure maps shared by P(m,k) and A(m,k). A generator type Gen must
// provide context(), source(), target(), to_string() and the free functions
// weight_vector, crossings, crossing_count, resolve and compose.

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pong/element.hpp"
#include "pong/errors.hpp"
#include "pong/polynomial.hpp"
#include "pong/weight_vector.hpp"

namespace pong {

template <class Gen>
struct Term {
  Gen generator;
  Monomial monomial;
};

template <class Gen>
int maslov(const Gen& f) {
  return crossing_count(f);
}

template <class Gen>
WeightVector weight_of_term(const Gen& g, const Monomial& mono) {
  return weight_vector(g) + mono.weight();
}

// mu_2 on basis elements: v^w [g o f] when crossings add, zero otherwise
// (including when the idempotents do not match). f acts first.
template <class Gen>
std::optional<Term<Gen>> multiply_generators(const Gen& f, const Gen& g) {
  std::optional<Gen> h = compose(f, g);
  if (!h) return std::nullopt;
  const int expected = crossing_count(f) + crossing_count(g);
  const int actual = crossing_count(*h);
  if (actual > expected) {
    throw InvariantViolation("crossings of " + h->to_string() + " exceed those of " + f.to_string() +
                             " and " + g.to_string());
  }
  if (actual < expected) return std::nullopt;
  return Term<Gen>{*h, Monomial::from_doubled_weight(weight_vector(f) + weight_vector(g) -
                                                     weight_vector(*h))};
}

// Sum over crossings whose resolution has exactly one crossing fewer.
template <class Gen>
Element<Gen> differentiate_generator(const Gen& f) {
  Element<Gen> out;
  const int before = crossing_count(f);
  const WeightVector wf = weight_vector(f);
  for (const auto& c : crossings(f)) {
    Gen r = resolve(f, c);
    const int after = crossing_count(r);
    if (after >= before) {
      throw InvariantViolation("resolving a crossing of " + f.to_string() + " did not lower the count");
    }
    if (after < before - 1) continue;
    Monomial mono = Monomial::from_doubled_weight(wf - weight_vector(r));
    out.add(r, mono);
  }
  return out;
}

template <class Gen>
Element<Gen> mu2(const Element<Gen>& a, const Element<Gen>& b) {
  Element<Gen> out;
  for (const auto& [f, pf] : a.terms()) {
    for (const auto& [g, pg] : b.terms()) {
      if (f.context() != g.context()) throw InvalidArgument("mu2: operands from different algebras");
      if (auto t = multiply_generators(f, g)) out.add(t->generator, pf * pg * t->monomial);
    }
  }
  return out;
}

template <class Gen>
Element<Gen> diff(const Element<Gen>& a) {
  Element<Gen> out;
  for (const auto& [f, pf] : a.terms()) {
    const Element<Gen> df = differentiate_generator(f);
    for (const auto& [h, ph] : df.terms()) out.add(h, pf * ph);
  }
  return out;
}

// Memoized structure maps. Generators are interned to dense ids so that the
// verifier's pair and triple loops hash integers rather than vectors.
// References returned by at() and differential() stay valid while the table
// grows. Not thread-safe; give each worker its own table.
template <class Gen>
class GeneratorTable {
 public:
  struct Data {
    Gen generator;
    int maslov;
    WeightVector weight;
  };
  struct IdTerm {
    int id;
    Monomial monomial;
  };

  int intern(const Gen& g) {
    auto [it, inserted] = ids_.try_emplace(g, static_cast<int>(data_.size()));
    if (inserted) {
      data_.push_back({g, crossing_count(g), weight_vector(g)});
      differentials_.emplace_back();
    }
    return it->second;
  }

  const Data& at(int id) const { return data_[static_cast<std::size_t>(id)]; }
  const Gen& generator(int id) const { return at(id).generator; }
  std::size_t size() const { return data_.size(); }

  // Seeds the differential (e.g. from a cache file) without recomputing.
  void set_differential(int id, std::vector<IdTerm> terms) {
    differentials_[static_cast<std::size_t>(id)] = std::move(terms);
  }

  const std::vector<IdTerm>& differential(int id) {
    auto& slot = differentials_[static_cast<std::size_t>(id)];
    if (!slot) {
      std::vector<IdTerm> terms;
      const Element<Gen> d = differentiate_generator(generator(id));
      for (const auto& [h, p] : d.terms()) {
        const int hid = intern(h);
        for (const Monomial& mono : p.monomials()) terms.push_back({hid, mono});
      }
      slot = std::move(terms);
    }
    return *slot;
  }

  void set_product(int a, int b, std::optional<IdTerm> value) { products_[pair_key(a, b)] = std::move(value); }

  const std::optional<IdTerm>& product(int a, int b) {
    const std::uint64_t key = pair_key(a, b);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    std::optional<IdTerm> value;
    if (auto t = multiply_generators(generator(a), generator(b))) {
      value = IdTerm{intern(t->generator), std::move(t->monomial)};
    }
    return products_.emplace(key, std::move(value)).first->second;
  }

  // Same as product() but neither cached nor interned; for operands that
  // occur once, such as the triple products of the associativity check.
  std::optional<Term<Gen>> product_uncached(int a, int b) const {
    const Data& x = at(a);
    const Data& y = at(b);
    std::optional<Gen> h = compose(x.generator, y.generator);
    if (!h) return std::nullopt;
    const int actual = crossing_count(*h);
    if (actual > x.maslov + y.maslov) {
      throw InvariantViolation("crossings of " + h->to_string() + " exceed those of " +
                               x.generator.to_string() + " and " + y.generator.to_string());
    }
    if (actual < x.maslov + y.maslov) return std::nullopt;
    Monomial mono = Monomial::from_doubled_weight(x.weight + y.weight - weight_vector(*h));
    return Term<Gen>{std::move(*h), std::move(mono)};
  }

  Element<Gen> element(int id) { return Element<Gen>::generator(generator(id)); }

  Element<Gen> diff(const Element<Gen>& a) {
    Element<Gen> out;
    for (const auto& [f, pf] : a.terms()) {
      const int id = intern(f);
      for (const IdTerm& t : differential(id)) out.add(generator(t.id), pf * t.monomial);
    }
    return out;
  }

  Element<Gen> mu2(const Element<Gen>& a, const Element<Gen>& b) {
    Element<Gen> out;
    for (const auto& [f, pf] : a.terms()) {
      const int fid = intern(f);
      for (const auto& [g, pg] : b.terms()) {
        const std::optional<IdTerm>& t = product(fid, intern(g));
        if (t) out.add(generator(t->id), pf * pg * t->monomial);
      }
    }
    return out;
  }

 private:
  static std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }

  std::deque<Data> data_;
  std::deque<std::optional<std::vector<IdTerm>>> differentials_;
  std::unordered_map<Gen, int> ids_;
  std::unordered_map<std::uint64_t, std::optional<IdTerm>> products_;
};

}  // namespace pong
