#pragma once

#include <map>
#include <string>

#include "pong/errors.hpp"
#include "pong/polynomial.hpp"

namespace pong {

// Finite F_2[v]-linear combination of generators. Terms with zero
// coefficient are never stored, so the empty map is the zero element.
template <class Gen>
class Element {
 public:
  using Terms = std::map<Gen, Polynomial>;

  Element() = default;

  static Element generator(const Gen& g) {
    Element e;
    e.add(g, Monomial::one(g.context().m));
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Gen& g, const Monomial& mono) {
    if (mono.size() != g.context().m) throw InvalidArgument("monomial length differs from m");
    auto [it, inserted] = terms_.try_emplace(g);
    it->second.toggle(mono);
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add(const Gen& g, const Polynomial& p) {
    if (p.is_zero()) return;
    for (const Monomial& mono : p.monomials()) {
      if (mono.size() != g.context().m) throw InvalidArgument("monomial length differs from m");
    }
    auto [it, inserted] = terms_.try_emplace(g);
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Element& operator+=(const Element& other) {
    for (const auto& [g, p] : other.terms_) add(g, p);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }

  friend bool operator==(const Element&, const Element&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, p] : terms_) {
      if (!out.empty()) out += " + ";
      out += '(' + p.to_string() + ")*" + g.to_string();
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace pong
