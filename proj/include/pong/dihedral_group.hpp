#pragma once

#include <compare>
#include <utility>

namespace pong {

// Element of the infinite dihedral group G_m generated by the reflections
// r_{1/2}(x) = 1-x and r_{m-1/2}(x) = 2m-1-x. Acts on Z by
//   x -> x + shift*(2m-2)        (sign = +1)
//   x -> 1 - x + shift*(2m-2)    (sign = -1)
struct GroupElement {
  int sign = 1;
  int shift = 0;

  bool is_identity() const { return sign == 1 && shift == 0; }
  bool is_reflection() const { return sign == -1; }

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// A point x expressed as g^{-1}(rep) with rep in {1,...,m-1}, so g(x) = rep.
struct Reduction {
  int representative = 0;
  GroupElement to_representative;
};

class DihedralGroup {
 public:
  explicit DihedralGroup(int m);

  int m() const { return m_; }
  // Translation length 2m-2.
  int period() const { return period_; }

  GroupElement identity() const { return {}; }
  GroupElement reflection_low() const { return {-1, 0}; }   // r_{1/2}
  GroupElement reflection_high() const { return {-1, 1}; }  // r_{m-1/2}
  GroupElement translation(int n) const { return {1, n}; }

  int apply(const GroupElement& g, int x) const {
    return (g.sign > 0 ? x : 1 - x) + g.shift * period_;
  }
  // Same action on half-integers, stored doubled (odd integers).
  int apply_doubled(const GroupElement& g, int doubled) const {
    return (g.sign > 0 ? doubled : 2 - doubled) + 2 * g.shift * period_;
  }

  // (g*h)(x) = g(h(x)).
  GroupElement compose(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;

  Reduction reduce(int x) const;

  // Quotient Z -> {1,...,m-1}.
  int q1(int x) const { return reduce(x).representative; }
  // Quotient (Z+1/2) -> {1,...,m}; the half-integer h is passed doubled.
  int q2_doubled(int doubled_half) const;
  // Q2(j - 1/2).
  int q2_level(int j) const { return q2_doubled(2 * j - 1); }

  // True when the half-integer (doubled) is the center of some reflection,
  // i.e. it lies over the orbifold points O_1 or O_m.
  bool is_rotation_center_doubled(int doubled_half) const;

 private:
  int m_;
  int period_;
};

// Floor-mod that is correct for negative numerators.
inline int floor_mod(int a, int b) {
  int r = a % b;
  return r < 0 ? r + b : r;
}

inline int floor_div(int a, int b) { return (a - floor_mod(a, b)) / b; }

}  // namespace pong
