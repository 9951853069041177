#include "pong/dihedral_group.hpp"

#include <string>

#include "pong/errors.hpp"

namespace pong {

DihedralGroup::DihedralGroup(int m) : m_(m), period_(2 * m - 2) {
  if (m < 2) throw InvalidArgument("G_m needs m >= 2, got " + std::to_string(m));
}

GroupElement DihedralGroup::compose(const GroupElement& g, const GroupElement& h) const {
  // g(h(x)) = sg*(sh*x + c_h) + c_g, with c = (1-s)/2 + n*P.
  const int sign = g.sign * h.sign;
  const int c_h = (1 - h.sign) / 2 + h.shift * period_;
  const int c_g = (1 - g.sign) / 2 + g.shift * period_;
  const int constant = g.sign * c_h + c_g;
  return {sign, (constant - (1 - sign) / 2) / period_};
}

GroupElement DihedralGroup::inverse(const GroupElement& g) const {
  if (g.sign < 0) return g;  // reflections are involutions
  return {1, -g.shift};
}

Reduction DihedralGroup::reduce(int x) const {
  // r in {1,...,2m-2}; the upper half is the r_{m-1/2} image of the lower half.
  const int r = floor_mod(x - 1, period_) + 1;
  const int n = (x - r) / period_;
  if (r <= m_ - 1) return {r, {1, -n}};
  const int d = 2 * m_ - 1 - r;
  // x = 1 - d + (n+1)P, so d = 1 - x + (n+1)P.
  return {d, {-1, n + 1}};
}

int DihedralGroup::q2_doubled(int doubled_half) const {
  if (floor_mod(doubled_half, 2) != 1) {
    throw InvalidArgument("q2 expects a half-integer (odd doubled value), got " +
                          std::to_string(doubled_half));
  }
  const int j = (doubled_half + 1) / 2;
  const int a = floor_mod(j - 1, period_) + 1;  // j mod P in {1..P}
  if (a <= m_) return a;
  return 2 * m_ - a;  // i = 2 - j (mod P)
}

bool DihedralGroup::is_rotation_center_doubled(int doubled_half) const {
  const int q = q2_doubled(doubled_half);
  return q == 1 || q == m_;
}

}  // namespace pong
