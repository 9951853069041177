#include "pong/polynomial.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

#include "pong/errors.hpp"

namespace pong {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw InvalidArgument("monomial exponents must be nonnegative");
  }
}

Monomial Monomial::variable(int m, int i) {
  if (i < 1 || i > m) throw InvalidArgument("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::from_doubled_weight(const WeightVector& doubled_difference) {
  std::vector<int> e;
  e.reserve(doubled_difference.size());
  for (int d : doubled_difference.doubled) {
    if (d < 0 || d % 2 != 0) {
      throw InvariantViolation("weight difference " + doubled_difference.to_string() +
                               " is not a monomial exponent vector");
    }
    e.push_back(d / 2);
  }
  Monomial out;
  out.exponents_ = std::move(e);
  return out;
}

int Monomial::degree() const { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

WeightVector Monomial::weight() const {
  std::vector<int> d;
  d.reserve(exponents_.size());
  for (int e : exponents_) d.push_back(2 * e);
  return WeightVector(std::move(d));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exponents_.size() != b.exponents_.size()) {
    throw InvalidArgument("monomials over different polynomial rings");
  }
  Monomial out = a;
  for (std::size_t i = 0; i < out.exponents_.size(); ++i) out.exponents_[i] += b.exponents_[i];
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'v' + std::to_string(i + 1);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

Polynomial::Polynomial(std::vector<Monomial> monomials) {
  std::sort(monomials.begin(), monomials.end());
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) monomials_.push_back(monomials[i]);
    i = j;
  }
}

void Polynomial::toggle(const Monomial& mono) {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), mono);
  if (it != monomials_.end() && *it == mono) {
    monomials_.erase(it);
  } else {
    monomials_.insert(it, mono);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  std::vector<Monomial> merged;
  merged.reserve(monomials_.size() + other.monomials_.size());
  std::set_symmetric_difference(monomials_.begin(), monomials_.end(), other.monomials_.begin(),
                                other.monomials_.end(), std::back_inserter(merged));
  monomials_ = std::move(merged);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Monomial> products;
  products.reserve(a.monomials_.size() * b.monomials_.size());
  for (const Monomial& x : a.monomials_) {
    for (const Monomial& y : b.monomials_) products.push_back(x * y);
  }
  return Polynomial(std::move(products));
}

Polynomial operator*(const Polynomial& a, const Monomial& b) {
  Polynomial out;
  out.monomials_.reserve(a.monomials_.size());
  // Multiplying by a monomial preserves the order.
  for (const Monomial& x : a.monomials_) out.monomials_.push_back(x * b);
  return out;
}

std::string Polynomial::to_string() const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (const Monomial& x : monomials_) {
    if (!out.empty()) out += " + ";
    out += x.to_string();
  }
  return out;
}

}  // namespace pong
