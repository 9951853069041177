#include "pong/weight_vector.hpp"

#include <sstream>

#include "pong/errors.hpp"

namespace pong {

namespace {
void require_same_size(const WeightVector& a, const WeightVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("weight vectors of different length");
}
}  // namespace

WeightVector& WeightVector::operator+=(const WeightVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < doubled.size(); ++i) doubled[i] += other.doubled[i];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < doubled.size(); ++i) doubled[i] -= other.doubled[i];
  return *this;
}

bool entrywise_le(const WeightVector& a, const WeightVector& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.doubled[i] > b.doubled[i]) return false;
  }
  return true;
}

std::string WeightVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < doubled.size(); ++i) {
    if (i) out << ", ";
    if (doubled[i] % 2 == 0) {
      out << doubled[i] / 2;
    } else {
      out << doubled[i] << "/2";
    }
  }
  out << ')';
  return out.str();
}

}  // namespace pong
