#include "pong/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "pong/errors.hpp"

namespace pong {

namespace {

void require_connecting_domain(const LiftedPermutation& f, const LiftedPermutation& g) {
  if (f.context() != g.context() || f.source() != g.source() || f.target() != g.target()) {
    throw NoConnectingDomain("no domain connects " + f.to_string() + " to " + g.to_string());
  }
}

int multiplicity(const LiftedPermutation& f, const LiftedPermutation& g, int i, int j) {
  // Only strands with g(a) <= j < f(a) or f(a) <= j < g(a) count, and those
  // start within one displacement of j.
  const int d = std::max(f.max_displacement(), g.max_displacement()) + 1;
  int count = 0;
  for (int a = j - d - 1; a <= std::min(i, j + d + 1); ++a) {
    if (!f.contains(a)) continue;
    const int fa = f.evaluate(a);
    const int ga = g.evaluate(a);
    if (ga <= j && j < fa) {
      ++count;
    } else if (fa <= j && j < ga) {
      --count;
    }
  }
  return count;
}

int sign_of(long v) { return (v > 0) - (v < 0); }

enum class Where { Outside, Boundary, Inside };

// Position of p relative to the closed triangle z + u * {a, b >= 0, a + b <= 1}.
template <class T>
Where locate(const LiftedTriangle& tri, const T& px, const T& py) {
  const int s = sign_of(tri.u);
  const T a = (px - T(tri.z.x)) * T(s);
  const T b = (py - T(tri.z.y)) * T(s);
  const T len = T(std::labs(tri.u));
  if (a < T(0) || b < T(0) || a + b > len) return Where::Outside;
  if (a == T(0) || b == T(0) || a + b == len) return Where::Boundary;
  return Where::Inside;
}

struct Box {
  long x0, x1, y0, y1;
};

Box box_of(const LiftedTriangle& t) {
  return {std::min(t.z.x, t.z.x + t.u), std::max(t.z.x, t.z.x + t.u), std::min(t.z.y, t.z.y + t.u),
          std::max(t.z.y, t.z.y + t.u)};
}

long floor_div_l(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div_l(long a, long b) { return -floor_div_l(-a, b); }

using Polygon = std::vector<QuarterPoint>;

// Splits a convex polygon by the line a*x + b*y = c. Pieces of zero area
// (the line only touching a vertex or an edge) are dropped.
void split(const Polygon& poly, long a, long b, long c, std::vector<Polygon>& out) {
  Polygon pos;
  Polygon neg;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const QuarterPoint& p = poly[i];
    const QuarterPoint& q = poly[(i + 1) % n];
    const long vp = a * p.x + b * p.y - c;
    const long vq = a * q.x + b * q.y - c;
    if (vp >= 0) pos.push_back(p);
    if (vp <= 0) neg.push_back(p);
    if ((vp > 0 && vq < 0) || (vp < 0 && vq > 0)) {
      const long den = vp - vq;
      const long nx = vp * (q.x - p.x);
      const long ny = vp * (q.y - p.y);
      if (nx % den != 0 || ny % den != 0) {
        throw InvariantViolation("arrangement vertex off the quarter lattice");
      }
      const QuarterPoint cut{p.x + nx / den, p.y + ny / den};
      pos.push_back(cut);
      neg.push_back(cut);
    }
  }
  for (Polygon* piece : {&pos, &neg}) {
    if (piece->size() < 3) continue;
    long area2 = 0;
    for (std::size_t i = 0; i < piece->size(); ++i) {
      const QuarterPoint& p = (*piece)[i];
      const QuarterPoint& q = (*piece)[(i + 1) % piece->size()];
      area2 += p.x * q.y - q.x * p.y;
    }
    if (area2 != 0) out.push_back(std::move(*piece));
  }
}

bool straddles(const Polygon& poly, long a, long b, long c) {
  bool above = false;
  bool below = false;
  for (const QuarterPoint& p : poly) {
    const long v = a * p.x + b * p.y - c;
    above = above || v > 0;
    below = below || v < 0;
  }
  return above && below;
}

// Does the convex polygon contain a rotation center (over O_1 or O_m)?
bool contains_rotation_center(const DihedralGroup& group, const Polygon& poly) {
  long lo = poly[0].x;
  long hi = poly[0].x;
  for (const QuarterPoint& p : poly) {
    lo = std::min(lo, p.x);
    hi = std::max(hi, p.x);
  }
  const std::size_t n = poly.size();
  for (long t = floor_div_l(lo, 4) - 1; t <= ceil_div_l(hi, 4) + 1; ++t) {
    if (!group.is_rotation_center_doubled(static_cast<int>(2 * t + 1))) continue;
    const long cx = 4 * t + 2;
    int pos = 0;
    int neg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const QuarterPoint& p = poly[i];
      const QuarterPoint& q = poly[(i + 1) % n];
      const long cr = (q.x - p.x) * (cx - p.y) - (q.y - p.y) * (cx - p.x);
      if (cr > 0) ++pos;
      if (cr < 0) ++neg;
    }
    if (pos == static_cast<int>(n) || neg == static_cast<int>(n)) return true;
    if (pos + neg < static_cast<int>(n) && (pos == 0 || neg == 0)) {
      throw GenericityError("rotation center on the boundary of a face");
    }
  }
  return false;
}

// Whether some G_m-translate of the rectangle other than itself meets its
// interior; the quotient of such a rectangle is not embedded.
bool overlaps_a_translate(const DihedralGroup& group, const PlanarRectangle& r) {
  const int period = group.period();
  for (int sign : {1, -1}) {
    const GroupElement base{sign, 0};
    const int bx0 = std::min(group.apply(base, r.x1), group.apply(base, r.x2));
    const int bx1 = std::max(group.apply(base, r.x1), group.apply(base, r.x2));
    const int by0 = std::min(group.apply(base, r.y1), group.apply(base, r.y2));
    const int by1 = std::max(group.apply(base, r.y1), group.apply(base, r.y2));
    // Open intervals (bx0 + nP, bx1 + nP) and (x1, x2) meet.
    const int n_lo = floor_div(r.x1 - bx1, period) + 1;
    const int n_hi = -floor_div(bx0 - r.x2, period) - 1;
    for (int n = n_lo; n <= n_hi; ++n) {
      const int x0 = bx0 + n * period;
      const int x1 = bx1 + n * period;
      const int y0 = by0 + n * period;
      const int y1 = by1 + n * period;
      if (sign > 0 && n == 0) continue;
      if (x0 == r.x1 && x1 == r.x2 && y0 == r.y2 && y1 == r.y1) continue;  // the bigon's own rotation
      if (x0 < r.x2 && r.x1 < x1 && y0 < r.y1 && r.y2 < y1) return true;
    }
  }
  return false;
}

}  // namespace

LatticeState lattice_state(const LiftedPermutation& f) {
  LatticeState s;
  for (std::size_t i = 0; i < f.domain().size(); ++i) s.points.emplace_back(f.domain()[i], f.values()[i]);
  return s;
}

LiftedPermutation from_lattice_state(const Context& ctx, const LatticeState& s) {
  const DihedralGroup group(make_pong_context(ctx.m, ctx.k).m);
  std::vector<std::pair<int, int>> reduced;
  for (const auto& [x, y] : s.points) {
    const Reduction r = group.reduce(x);
    reduced.emplace_back(r.representative, group.apply(r.to_representative, y));
  }
  std::sort(reduced.begin(), reduced.end());
  std::vector<int> domain;
  std::vector<int> values;
  for (const auto& [x, y] : reduced) {
    if (!domain.empty() && domain.back() == x) throw InvalidArgument("two state points on one alpha orbit");
    domain.push_back(x);
    values.push_back(y);
  }
  return LiftedPermutation(ctx, std::move(domain), std::move(values));
}

int local_multiplicity(const LiftedPermutation& f, const LiftedPermutation& g, int i, int j) {
  require_connecting_domain(f, g);
  return multiplicity(f, g, i, j);
}

std::vector<int> domain_o_multiplicities(const LiftedPermutation& f, const LiftedPermutation& g) {
  require_connecting_domain(f, g);
  std::vector<int> out;
  // O_i sits in the square centered at (i - 1/2, i - 1/2).
  for (int t = 0; t < f.context().m; ++t) out.push_back(multiplicity(f, g, t, t));
  return out;
}

std::vector<int> o_multiplicities(const LiftedPermutation& f, const LiftedPermutation& g) {
  const std::vector<int> from_domain = domain_o_multiplicities(f, g);
  const WeightVector diff = weight_vector(f) - weight_vector(g);
  std::vector<int> out;
  for (int d : diff.doubled) {
    if (d % 2 != 0) throw InvariantViolation("half-integral weight difference " + diff.to_string());
    out.push_back(d / 2);
  }
  if (out != from_domain) {
    throw InvariantViolation("weights and domain multiplicities disagree for " + f.to_string() + " -> " +
                             g.to_string());
  }
  return out;
}

Rational domain_maslov_index(const LiftedPermutation& f, const LiftedPermutation& g) {
  require_connecting_domain(f, g);
  const int m = f.context().m;
  const int orbifold = multiplicity(f, g, 0, 0) + multiplicity(f, g, m - 1, m - 1);
  int corners = 0;
  static constexpr int kQuadrants[4][2] = {{-1, -1}, {-1, 0}, {0, -1}, {0, 0}};
  for (std::size_t s = 0; s < f.domain().size(); ++s) {
    const int x = f.domain()[s];
    for (const auto& q : kQuadrants) {
      corners += multiplicity(f, g, x + q[0], f.values()[s] + q[1]);
      corners += multiplicity(f, g, x + q[0], g.values()[s] + q[1]);
    }
  }
  return Rational(orbifold, 2) + Rational(corners, 4);
}

ResolutionSearch::ResolutionSearch(const LiftedPermutation& start) : start_(start) {
  parent_.emplace(start, Step{std::nullopt, {}});
  std::deque<LiftedPermutation> queue{start};
  while (!queue.empty()) {
    const LiftedPermutation h = queue.front();
    queue.pop_front();
    const int ch = crossing_count(h);
    for (const Crossing& c : crossings(h)) {
      LiftedPermutation r = resolve(h, c);
      if (crossing_count(r) != ch - 1 || parent_.count(r)) continue;
      parent_.emplace(r, Step{h, c});
      queue.push_back(std::move(r));
    }
  }
}

std::vector<Crossing> ResolutionSearch::path_to(const LiftedPermutation& g) const {
  std::vector<Crossing> path;
  auto it = parent_.find(g);
  if (it == parent_.end()) throw InvalidArgument(g.to_string() + " is not reachable");
  while (it->second.from) {
    path.push_back(it->second.crossing);
    it = parent_.find(*it->second.from);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool domain_is_positive(const LiftedPermutation& f, const LiftedPermutation& g) {
  require_connecting_domain(f, g);
  // Multiplicities are G_m-invariant and vanish far from the diagonal.
  const int period = f.group().period();
  const int d = std::max(f.max_displacement(), g.max_displacement()) + 2;
  for (int i = 0; i < period; ++i) {
    for (int j = i - 2 * d; j <= i + 2 * d; ++j) {
      if (multiplicity(f, g, i, j) < 0) return false;
    }
  }
  return true;
}

PositivityResult positivity(const LiftedPermutation& f, const LiftedPermutation& g) {
  require_connecting_domain(f, g);
  return positivity(f, g, ResolutionSearch(f));
}

PositivityResult positivity(const LiftedPermutation& f, const LiftedPermutation& g,
                            const ResolutionSearch& from_f) {
  require_connecting_domain(f, g);
  if (f == g) return {Order::Equal, {}};
  const bool positive = domain_is_positive(f, g);
  const bool reachable = from_f.reaches(g);
  if (positive != reachable) {
    throw InvariantViolation("positivity of the domain " + f.to_string() + " -> " + g.to_string() +
                             (positive ? " holds but no resolution path exists" : " fails but a resolution path exists"));
  }
  if (!positive) return {Order::Incomparable, {}};
  const Rational mas = domain_maslov_index(f, g);
  if (mas != Rational(crossing_count(f) - crossing_count(g))) {
    throw InvariantViolation("Maslov index " + to_fraction_string(mas) + " of the domain " + f.to_string() +
                             " -> " + g.to_string() + " differs from the crossing drop");
  }
  return {Order::Greater, from_f.path_to(g)};
}

std::vector<PlanarRectangle> empty_rectangles(const LiftedPermutation& f) {
  const DihedralGroup group = f.group();
  const int period = group.period();
  std::vector<PlanarRectangle> out;
  for (const Crossing& c : crossings(f)) {
    const int y1 = f.evaluate(c.i);
    const int y2 = f.evaluate(c.j);
    bool empty = true;
    for (int x = c.i + 1; x < c.j && empty; ++x) {
      if (!f.contains(x)) continue;
      const int y = f.evaluate(x);
      empty = !(y2 < y && y < y1);
    }
    if (!empty) continue;
    // A reflection x -> 1 - x + nP swaps the corners iff i + j = 1 + nP.
    const Shape shape = floor_mod(c.i + c.j - 1, period) == 0 ? Shape::Bigon : Shape::Rectangle;
    const PlanarRectangle rect{c.i, y1, c.j, y2, shape};
    if (overlaps_a_translate(group, rect)) continue;
    out.push_back(rect);
  }
  return out;
}

PongElement oracle_differential(const LiftedPermutation& f) {
  PongElement out;
  for (const PlanarRectangle& r : empty_rectangles(f)) {
    const LiftedPermutation res = resolve(f, {r.x1, r.x2});
    const std::vector<int> mult = domain_o_multiplicities(f, res);
    if (std::any_of(mult.begin(), mult.end(), [](int e) { return e < 0; })) {
      throw InvariantViolation("empty rectangle with negative multiplicity in " + f.to_string());
    }
    out.add(res, Monomial(mult));
  }
  return out;
}

long beta_diagonal_quarter(const DihedralGroup& group, int t) {
  // Translates of a representative are pushed up by 1/4, reflections of it
  // down by 1/4, so the offsets form a single G_m-invariant family.
  return 4L * t + (group.reduce(t).to_representative.sign > 0 ? 1 : -1);
}

std::optional<TriangleDomain> triangle_domain(const LiftedPermutation& f, const LiftedPermutation& g) {
  std::optional<LiftedPermutation> h = compose(f, g);
  if (!h) return std::nullopt;
  const DihedralGroup group = f.group();
  const int m = f.context().m;

  std::vector<LiftedTriangle> tris;
  for (std::size_t s = 0; s < f.domain().size(); ++s) {
    const long x = f.domain()[s];
    const int a = f.values()[s];
    const long y = g.evaluate(a);
    const long u = 2 * beta_diagonal_quarter(group, a) - 4 * x - 4 * y;
    tris.push_back({{4 * x, 4 * y}, u});
  }

  std::vector<int> o_counts(static_cast<std::size_t>(m), 0);
  for (const LiftedTriangle& tri : tris) {
    const Box b = box_of(tri);
    const long lo = std::max(b.x0, b.y0);
    const long hi = std::min(b.x1, b.y1);
    for (long t = floor_div_l(lo, 4) - 1; t <= ceil_div_l(hi, 4) + 1; ++t) {
      const Where w = locate<long>(tri, 4 * t + 2, 4 * t + 2);
      if (w == Where::Boundary) throw GenericityError("marked point on a triangle boundary");
      if (w != Where::Inside) continue;
      const int label = group.q2_doubled(static_cast<int>(2 * t + 1));
      o_counts[static_cast<std::size_t>(label - 1)] += (label == 1 || label == m) ? 2 : 1;
    }
  }

  const WeightVector defect = weight_vector(f) + weight_vector(g) - weight_vector(*h);
  TriangleDomain dom{f, g, *h, tris, o_counts, defect, 0, Rational(0), 0};
  dom.diag_count = diagonal_count(group, tris);
  dom.euler = euler_measure(group, tris);
  dom.maslov = o_counts.front() + o_counts.back() + dom.diag_count;
  return dom;
}

int diagonal_count(const DihedralGroup& group, const std::vector<LiftedTriangle>& triangles) {
  const long period4 = 4L * group.period();
  long total = 0;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const LiftedTriangle& ti = triangles[i];
    const Box bi = box_of(ti);
    for (std::size_t j = 0; j < triangles.size(); ++j) {
      for (int sign : {1, -1}) {
        const LiftedTriangle& tj = triangles[j];
        const LiftedTriangle base{{sign > 0 ? tj.z.x : 4 - tj.z.x, sign > 0 ? tj.z.y : 4 - tj.z.y}, sign * tj.u};
        const Box bb = box_of(base);
        // Shifts whose translate's box can meet T_i's box (translations move
        // both coordinates by the same amount).
        const long n_lo = std::max(ceil_div_l(bi.x0 - bb.x1, period4), ceil_div_l(bi.y0 - bb.y1, period4));
        const long n_hi = std::min(floor_div_l(bi.x1 - bb.x0, period4), floor_div_l(bi.y1 - bb.y0, period4));
        for (long n = n_lo; n <= n_hi; ++n) {
          if (i == j && sign > 0 && n == 0) continue;
          const LiftedTriangle other{{base.z.x + n * period4, base.z.y + n * period4}, base.u};
          if (other.u == ti.u) continue;  // a translation has no fixed point
          // L(p) = z' + (u'/u)(p - z) fixes p* = (u z' - u' z) / (u - u').
          const Rational den(ti.u - other.u);
          const Rational px = Rational(ti.u * other.z.x - other.u * ti.z.x) / den;
          const Rational py = Rational(ti.u * other.z.y - other.u * ti.z.y) / den;
          const Where w = locate<Rational>(ti, px, py);
          if (w == Where::Boundary) throw GenericityError("fixed point on a triangle boundary");
          if (w == Where::Inside) total += 2;
        }
      }
    }
  }
  if (total % 2 != 0) throw InvariantViolation("odd diagonal count");
  return static_cast<int>(total / 2);
}

Rational euler_measure(const DihedralGroup& group, const std::vector<LiftedTriangle>& triangles) {
  long quarters = 0;  // 4 * e
  for (const LiftedTriangle& tri : triangles) {
    std::vector<Polygon> faces{{tri.z, tri.alpha_beta(), tri.beta_gamma()}};
    const Box b = box_of(tri);

    struct Line {
      long a, b, c;
    };
    std::vector<Line> lines;
    for (long x = floor_div_l(b.x0, 4) + 1; 4 * x < b.x1; ++x) lines.push_back({1, 0, 4 * x});
    for (long y = floor_div_l(b.y0, 4) + 1; 4 * y < b.y1; ++y) lines.push_back({0, 1, 4 * y});
    const long s0 = std::min({tri.z.x + tri.z.y, tri.z.x + tri.z.y + tri.u});
    const long s1 = std::max({tri.z.x + tri.z.y, tri.z.x + tri.z.y + tri.u});
    for (long t = floor_div_l(s0, 8) - 2; t <= ceil_div_l(s1, 8) + 2; ++t) {
      const long v = 2 * beta_diagonal_quarter(group, static_cast<int>(t));
      if (s0 < v && v < s1) lines.push_back({1, 1, v});
    }

    for (const Line& line : lines) {
      std::vector<Polygon> next;
      next.reserve(faces.size() + 4);
      for (Polygon& face : faces) {
        if (straddles(face, line.a, line.b, line.c)) {
          split(face, line.a, line.b, line.c, next);
        } else {
          next.push_back(std::move(face));
        }
      }
      faces = std::move(next);
    }

    for (const Polygon& face : faces) {
      const long stab = contains_rotation_center(group, face) ? 2 : 1;
      quarters += 4 * stab - static_cast<long>(face.size());
    }
  }
  return Rational(quarters, 4);
}

Rational euler_measure(const TriangleDomain& dom) { return euler_measure(dom.f.group(), dom.triangles); }

PongElement oracle_product(const LiftedPermutation& f, const LiftedPermutation& g) {
  PongElement out;
  const std::optional<TriangleDomain> dom = triangle_domain(f, g);
  if (!dom || dom->maslov != 0) return out;
  out.add(dom->composite, Monomial(dom->o_counts));
  return out;
}

}  // namespace pong
