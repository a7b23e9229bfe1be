#pragma once

// Projective-space kernel over an arbitrary FiniteField: exact linear algebra,
// points, subspaces, conics and twisted cubics.  The same code runs over GF(q)
// and GF(q^3); the field is always passed explicitly.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tsplash/field.hpp"

namespace tsplash {

using Vec = std::vector<Elem>;
using Mat = std::vector<Vec>;  // row-major

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace linalg {

bool is_zero(const Vec& v);
Vec scale(const FiniteField& F, Elem c, const Vec& v);
/// y + c x
Vec axpy(const FiniteField& F, Elem c, const Vec& x, const Vec& y);
Vec add(const FiniteField& F, const Vec& x, const Vec& y);
Vec sub(const FiniteField& F, const Vec& x, const Vec& y);
Elem dot(const FiniteField& F, const Vec& x, const Vec& y);

/// Reduced row echelon form in place; zero rows are dropped.  Returns pivot columns.
std::vector<int> rref(const FiniteField& F, Mat& m);
int rank(const FiniteField& F, Mat m);
/// Basis (as rows) of { x : m x = 0 } for vectors of length ncols.
Mat nullspace(const FiniteField& F, const Mat& m, int ncols);
/// Some x with a x = b, if one exists.
std::optional<Vec> solve(const FiniteField& F, const Mat& a, const Vec& b);

Mat identity(int n);
Mat transpose(const Mat& m);
Mat mul(const FiniteField& F, const Mat& a, const Mat& b);
Vec mul(const FiniteField& F, const Mat& a, const Vec& x);
std::optional<Mat> inverse(const FiniteField& F, const Mat& a);
Elem det(const FiniteField& F, Mat a);

/// 3-vector cross product (the line through two points of a plane, or the
/// meet of two lines).
Vec cross(const FiniteField& F, const Vec& a, const Vec& b);

}  // namespace linalg

/// A point of PG(n, F): homogeneous coordinates with first nonzero entry 1.
struct ProjPoint {
  Vec coords;

  ProjPoint() = default;
  explicit ProjPoint(Vec normalized) : coords(std::move(normalized)) {}
  static ProjPoint from(const FiniteField& F, const Vec& v);  // normalizes; throws on zero

  int ambient_dim() const { return static_cast<int>(coords.size()) - 1; }
  bool operator==(const ProjPoint&) const = default;
  auto operator<=>(const ProjPoint&) const = default;
};

struct ProjPointHash {
  std::size_t operator()(const ProjPoint& p) const noexcept;
};

/// Scales v so its first nonzero coordinate is 1.
Vec normalize(const FiniteField& F, Vec v);
/// True when u and v are nonzero multiples of each other.
bool proportional(const FiniteField& F, const Vec& u, const Vec& v);

/// Integer code of a normalized vector (coordinates read as base-|F| digits).
std::uint64_t encode(const FiniteField& F, const Vec& v);

/// A projective subspace, stored as its canonical (reduced row echelon) basis.
/// The empty subspace has no rows and dimension -1.
class ProjSubspace {
 public:
  ProjSubspace() = default;
  ProjSubspace(const FiniteField& F, Mat rows, int vec_len);
  static ProjSubspace empty(int vec_len) { return ProjSubspace(vec_len); }
  static ProjSubspace of_point(const ProjPoint& p);

  int dim() const { return static_cast<int>(basis_.size()) - 1; }
  int vec_len() const { return len_; }
  int ambient_dim() const { return len_ - 1; }
  bool is_empty() const { return basis_.empty(); }
  const Mat& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const FiniteField& F, const Vec& v) const;
  bool contains(const FiniteField& F, const ProjPoint& p) const { return contains(F, p.coords); }
  bool contains(const FiniteField& F, const ProjSubspace& other) const;
  /// Coordinates of v relative to basis(); v must lie in the subspace.
  Vec coords_of(const Vec& v) const;
  /// sum c_i basis_i
  Vec combine(const FiniteField& F, const Vec& c) const;

  bool operator==(const ProjSubspace& o) const { return len_ == o.len_ && basis_ == o.basis_; }
  auto operator<=>(const ProjSubspace& o) const {
    if (auto c = len_ <=> o.len_; c != 0) return c;
    return basis_ <=> o.basis_;
  }

 private:
  explicit ProjSubspace(int len) : len_(len) {}
  Mat basis_;
  std::vector<int> pivots_;
  int len_ = 0;
};

ProjSubspace span(const FiniteField& F, std::span<const ProjPoint> points);
ProjSubspace span(const FiniteField& F, std::span<const ProjSubspace> spaces);
ProjSubspace span(const FiniteField& F, const ProjSubspace& a, const ProjSubspace& b);
ProjSubspace span(const FiniteField& F, const ProjSubspace& a, const ProjPoint& p);
ProjSubspace meet(const FiniteField& F, const ProjSubspace& a, const ProjSubspace& b);

/// Number of points of PG(d, |F|).
std::uint64_t projective_count(int field_size, int d);
/// All points of S, each exactly once.
std::vector<ProjPoint> points_of(const FiniteField& F, const ProjSubspace& S);
/// Calls fn(normalized vector) for every point of S without materializing the list.
void for_each_point(const FiniteField& F, const ProjSubspace& S, const std::function<void(const Vec&)>& fn);
/// Every subspace of projective dimension d inside S (canonical form).
std::vector<ProjSubspace> subspaces_of(const FiniteField& F, const ProjSubspace& S, int d);
/// The whole space PG(n, F).
ProjSubspace whole_space(int n);

// ---------------------------------------------------------------------------
// Conics

/// a x^2 + b y^2 + c z^2 + d xy + e xz + f yz, coefficients in that order.
struct QuadForm {
  std::array<Elem, 6> c{};
  bool operator==(const QuadForm&) const = default;
  auto operator<=>(const QuadForm&) const = default;
};

Elem eval_form(const FiniteField& F, const QuadForm& Q, const Vec& xyz);
/// The polar form Q(x + y) - Q(x) - Q(y).
Elem polar_form(const FiniteField& F, const QuadForm& Q, const Vec& x, const Vec& y);
/// Half-discriminant 4abc + def - af^2 - be^2 - cd^2; zero iff Q is degenerate.
Elem discriminant(const FiniteField& F, const QuadForm& Q);
/// Line coordinates of the tangent at a point of the conic (gradient of Q).
Vec tangent_coords(const FiniteField& F, const QuadForm& Q, const Vec& xyz);
/// Characteristic 2 only: the common point (f, e, d) of all tangents.
Vec nucleus(const FiniteField& F, const QuadForm& Q);
QuadForm normalize_form(const FiniteField& F, QuadForm Q);

/// A non-degenerate conic in a plane of some PG(n, F).  The form uses
/// coordinates relative to the plane's canonical basis.
struct Conic {
  ProjSubspace plane;
  QuadForm form;
  std::vector<ProjPoint> points;  // ambient coordinates, q + 1 of them

  bool contains(const FiniteField& F, const ProjPoint& p) const;
};

/// Builds and validates a conic; throws if the form is degenerate.
Conic make_conic(const FiniteField& F, const ProjSubspace& plane, QuadForm form);
/// The plane coordinates, relative to `plane`, of an ambient point.
Vec plane_coords(const ProjSubspace& plane, const Vec& v);
/// Tangent line (ambient) of the conic at one of its points.
ProjSubspace conic_tangent(const FiniteField& F, const Conic& C, const ProjPoint& p);
/// A 3-column parametrization: C(s, t) = sum_k s^{2-k} t^k col_k, covering
/// every point of the conic once for (s, t) in PG(1, F).  Returned as three
/// ambient vectors.
Mat conic_parametrization(const FiniteField& F, const Conic& C);

// ---------------------------------------------------------------------------
// Twisted cubics

/// N(s, t) = sum_k s^{3-k} t^k param[k]: the point for h = t/s, and
/// h = infinity at (0, 1).
struct TwistedCubic {
  ProjSubspace ambient;
  Mat param;                      // 4 ambient vectors
  std::vector<ProjPoint> points;  // h = 0..q-1 (field indices) then h = infinity
};

TwistedCubic make_twisted_cubic(const FiniteField& F, Mat param);
/// Evaluates a degree-d parametrized curve (d + 1 vectors) at homogeneous (s, t),
/// possibly over a larger field than the one the vectors came from.
Vec eval_curve(const FiniteField& F, const Mat& param, Elem s, Elem t);
/// Derivative direction at (s, t) of the same curve.
Vec eval_curve_derivative(const FiniteField& F, const Mat& param, Elem s, Elem t);
/// Tangent line at the given point of N; throws if the point is not on N.
ProjSubspace tangent_of_cubic(const FiniteField& F, const TwistedCubic& N, const ProjPoint& p);
/// Index in N.points of p, or -1.
int cubic_index(const TwistedCubic& N, const ProjPoint& p);

// ---------------------------------------------------------------------------

/// The q + 1 planes of the 2-regulus through three pairwise disjoint planes.
/// The third plane must lie in the span of the first two.  Output order:
/// p1, p2, p3, then the remaining planes.
std::vector<ProjSubspace> regulus_through(const FiniteField& F, const ProjSubspace& p1,
                                          const ProjSubspace& p2, const ProjSubspace& p3);

/// Möbius map on PG(1): the 2x2 matrix sending the homogeneous points
/// x1, x2, x3 to y1, y2, y3 (each a 2-vector).
Mat mobius_from_pairs(const FiniteField& F, std::span<const Vec> xs, std::span<const Vec> ys);

}  // namespace tsplash
