#pragma once

#include <compare>
#include <string>
#include <vector>

namespace pong {

// Weights live in (1/2)Z; entry j-1 stores 2*w_j.
struct WeightVector {
  std::vector<int> doubled;

  WeightVector() = default;
  explicit WeightVector(std::vector<int> d) : doubled(std::move(d)) {}

  std::size_t size() const { return doubled.size(); }

  WeightVector& operator+=(const WeightVector& other);
  WeightVector& operator-=(const WeightVector& other);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

  // Entrywise a <= b.
  friend bool entrywise_le(const WeightVector& a, const WeightVector& b);

  // "(1/2, 3/2, 1)"
  std::string to_string() const;
};

}  // namespace pong
