#pragma once

// Points and lines of PG(2,q^3), order-q sublines and order-q subplanes.
// Points are normalized 3-vectors over GF(q^3); lines are normalized dual
// 3-vectors [a,b,c] meaning ax + by + cz = 0.  l_inf is [0,0,1].

#include <map>
#include <optional>
#include <vector>

#include "tsplash/field.hpp"
#include "tsplash/projgeom.hpp"

namespace tsplash {

inline const Vec kLineInf{0, 0, 1};

inline bool is_infinite(const Vec& P) { return P[2] == 0; }
Vec line_through(const FiniteField& E, const Vec& P, const Vec& Q);
Vec meet_lines(const FiniteField& E, const Vec& l, const Vec& m);
bool incident(const FiniteField& E, const Vec& P, const Vec& l);

/// Order-q subline {v0 + h v1 : h in GF(q)} u {v1}.
struct Subline {
  Vec v0, v1;
};

/// The subline through three distinct collinear points A, B, C: A is h = 0,
/// C is h = 1 and B is h = infinity.
Subline subline_through(const FieldCtx& ctx, const Vec& A, const Vec& B, const Vec& C);
/// Normalized points in parameter order h = 0..q-1, then infinity.
std::vector<Vec> subline_points(const FieldCtx& ctx, const Subline& s);
/// The line of PG(2,q^3) carrying the subline.
Vec subline_carrier(const FieldCtx& ctx, const Subline& s);

/// An order-q subplane given by its points and its lines (each line is the
/// list of indices of its q + 1 points).
struct Subplane {
  std::vector<Vec> points;
  std::vector<Vec> line_coords;
  std::vector<std::vector<int>> lines;

  int index_of(const Vec& P) const;
  int line_index_of(const Vec& l) const;
  bool contains(const Vec& P) const { return index_of(P) >= 0; }
  /// Sorted copy of the point list, usable as a set key.
  std::vector<Vec> point_key() const;
  /// Indices of the points on l_inf.
  std::vector<int> infinite_points() const;

  void reindex();
  std::map<Vec, int> point_pos, line_pos;
};

/// The image of PG(2,q) under the homography taking the standard frame to
/// (A, B, C, D).  nullopt if the four points are not in general position.
std::optional<Subplane> subplane_from_frame(const FieldCtx& ctx, const Vec& A, const Vec& B, const Vec& C,
                                            const Vec& D);

/// A subplane meeting l_inf in exactly one point.
struct TangentSubplane : Subplane {
  int T = -1;
  const Vec& centre() const { return points[T]; }
  /// Lines through T, and the rest.
  std::vector<int> lines_through_T() const;
};

std::optional<TangentSubplane> as_tangent(Subplane S);

/// Applies the homography x -> A x (A a 3x3 matrix over GF(q^3)).
Vec apply(const FiniteField& E, const Mat& A, const Vec& P);
Subplane transform(const FieldCtx& ctx, const Subplane& S, const Mat& A);
TangentSubplane transform(const FieldCtx& ctx, const TangentSubplane& S, const Mat& A);
Subline transform(const FieldCtx& ctx, const Subline& s, const Mat& A);

}  // namespace tsplash
