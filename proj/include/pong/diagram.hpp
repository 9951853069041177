#pragma once

// Independent recomputation of the pong structure maps from the wrapped
// Heegaard diagram: alpha lines x = i, gamma lines y = j, beta lines of
// slope -1, O markings at (t+1/2, t+1/2). A generator corresponds to the
// lifted state given by its graph.

#include <optional>
#include <unordered_map>
#include <vector>

#include "pong/lifted_permutation.hpp"
#include "pong/pong_algebra.hpp"
#include "pong/rational.hpp"

namespace pong {

// The graph {(x_i, f(x_i))} of a generator over x_1 < ... < x_k in
// {1,...,m-1}: one lattice point per alpha and beta orbit.
struct LatticeState {
  std::vector<std::pair<int, int>> points;
  friend bool operator==(const LatticeState&, const LatticeState&) = default;
};

LatticeState lattice_state(const LiftedPermutation& f);
// Inverse of lattice_state. Points may be given in any order and moved by
// any element of G_m acting diagonally; throws InvalidArgument if two
// points share an alpha or a beta orbit.
LiftedPermutation from_lattice_state(const Context& ctx, const LatticeState& s);

// Multiplicity of the unique domain from the state of f to the state of g
// at the unit square centered at (i+1/2, j+1/2). Throws NoConnectingDomain
// unless f and g have the same source and target idempotents.
int local_multiplicity(const LiftedPermutation& f, const LiftedPermutation& g, int i, int j);

// Multiplicities of the connecting domain at O_1..O_m, read off the diagram.
std::vector<int> domain_o_multiplicities(const LiftedPermutation& f, const LiftedPermutation& g);

// (weight(f) - weight(g)) / 2, cross-checked against domain_o_multiplicities;
// a disagreement raises InvariantViolation.
std::vector<int> o_multiplicities(const LiftedPermutation& f, const LiftedPermutation& g);

// Maslov index of the connecting domain: e(phi) + n_x(phi) + n_y(phi), the
// Euler measure of a domain on this diagram being half the sum of its
// multiplicities at the two orbifold bigons.
Rational domain_maslov_index(const LiftedPermutation& f, const LiftedPermutation& g);

// Everything reachable from a generator by resolving one crossing at a time
// with the crossing count dropping by exactly one, with parent links.
class ResolutionSearch {
 public:
  explicit ResolutionSearch(const LiftedPermutation& start);

  bool reaches(const LiftedPermutation& g) const { return parent_.count(g) > 0; }
  // Crossings resolved along one path from start to g (empty if g = start).
  std::vector<Crossing> path_to(const LiftedPermutation& g) const;
  std::size_t size() const { return parent_.size(); }

 private:
  struct Step {
    std::optional<LiftedPermutation> from;
    Crossing crossing;
  };
  LiftedPermutation start_;
  std::unordered_map<LiftedPermutation, Step> parent_;
};

enum class Order { Incomparable, Equal, Greater };

struct PositivityResult {
  Order order = Order::Incomparable;
  std::vector<Crossing> path;  // resolutions taking f to g when Greater
};

// Whether the domain from f to g has nonnegative multiplicities everywhere.
bool domain_is_positive(const LiftedPermutation& f, const LiftedPermutation& g);

// Compares the positivity of the connecting domain with reachability by
// crossing resolutions; the two must agree, and on f > g the domain's Maslov
// index must equal cross(f) - cross(g). Violations raise InvariantViolation.
PositivityResult positivity(const LiftedPermutation& f, const LiftedPermutation& g);
PositivityResult positivity(const LiftedPermutation& f, const LiftedPermutation& g,
                            const ResolutionSearch& from_f);

enum class Shape { Bigon, Rectangle };

// Upper-left corner (x1, y1), lower-right corner (x2, y2).
struct PlanarRectangle {
  int x1 = 0;
  int y1 = 0;
  int x2 = 0;
  int y2 = 0;
  Shape shape = Shape::Rectangle;
  friend bool operator==(const PlanarRectangle&, const PlanarRectangle&) = default;
};

// One rectangle per crossing class whose interior misses the lifted state.
std::vector<PlanarRectangle> empty_rectangles(const LiftedPermutation& f);

// Sum over empty rectangles of v^(domain multiplicities at the O's) times
// the state obtained by swapping the rectangle's corners.
PongElement oracle_differential(const LiftedPermutation& f);

// Coordinates in quarter units: every vertex of the arrangement lies on
// (1/4)Z^2. The triangle has vertices z, z + (0,u), z + (u,0).
struct QuarterPoint {
  long x = 0;
  long y = 0;
  friend bool operator==(const QuarterPoint&, const QuarterPoint&) = default;
};

struct LiftedTriangle {
  QuarterPoint z;  // alpha-gamma corner (s, g(f(s)))
  long u = 0;      // signed leg length, never zero
  QuarterPoint alpha_beta() const { return {z.x, z.y + u}; }
  QuarterPoint beta_gamma() const { return {z.x + u, z.y}; }
};

struct TriangleDomain {
  LiftedPermutation f;
  LiftedPermutation g;
  LiftedPermutation composite;
  std::vector<LiftedTriangle> triangles;  // one per strand of f
  std::vector<int> o_counts;   // O-multiplicities of the triangles
  WeightVector weight_defect;  // weight(f) + weight(g) - weight(g o f), doubled
  int diag_count = 0;
  Rational euler;
  int maslov = 0;  // o_counts[1] + o_counts[m] + diag_count
};

// Where the beta line of orbit t meets the diagonal, in quarter units.
long beta_diagonal_quarter(const DihedralGroup& group, int t);

std::optional<TriangleDomain> triangle_domain(const LiftedPermutation& f, const LiftedPermutation& g);

// Twice the number of pairs of distinct translates of the triangles that
// meet the diagonal of the symmetric product, halved.
int diagonal_count(const DihedralGroup& group, const std::vector<LiftedTriangle>& triangles);

// Sum over the faces cut out by all alpha, beta and gamma lines of
// |stabilizer| - corners/4, where a face has stabilizer Z/2 when it contains
// a rotation center.
Rational euler_measure(const DihedralGroup& group, const std::vector<LiftedTriangle>& triangles);
Rational euler_measure(const TriangleDomain& dom);

// v^(o_counts) [g o f] when the triangles have Maslov index 0, else zero.
PongElement oracle_product(const LiftedPermutation& f, const LiftedPermutation& g);

}  // namespace pong
