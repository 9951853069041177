#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pong/weight_vector.hpp"

namespace pong {

// v_1^{e_1} ... v_m^{e_m}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int m) { return Monomial(std::vector<int>(static_cast<std::size_t>(m), 0)); }
  static Monomial variable(int m, int i);  // v_i, 1-based

  // Exponents (w_f - w_g) from a doubled weight difference. Throws
  // InvariantViolation unless every entry is even and nonnegative.
  static Monomial from_doubled_weight(const WeightVector& doubled_difference);

  const std::vector<int>& exponents() const { return exponents_; }
  int size() const { return static_cast<int>(exponents_.size()); }
  int degree() const;
  bool is_one() const { return degree() == 0; }

  // Weight of v^e: entry i is e_i, so the doubled vector is 2e.
  WeightVector weight() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  // "1", "v1", "v1*v2^3"
  std::string to_string() const;

 private:
  std::vector<int> exponents_;
};

// Element of F_2[v_1,...,v_m]: a set of monomials, sorted and unique.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Monomial& mono) : monomials_{mono} {}
  // Duplicates cancel in pairs.
  explicit Polynomial(std::vector<Monomial> monomials);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }

  // Adds (= removes, over F_2) a single monomial.
  void toggle(const Monomial& mono);

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Monomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Monomial> monomials_;
};

}  // namespace pong
