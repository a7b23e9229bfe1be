#include "tsplash/plane.hpp"

#include <algorithm>

namespace tsplash {

Vec line_through(const FiniteField& E, const Vec& P, const Vec& Q) {
  Vec l = linalg::cross(E, P, Q);
  if (linalg::is_zero(l)) throw GeometryError("line through coincident points");
  return normalize(E, l);
}

Vec meet_lines(const FiniteField& E, const Vec& l, const Vec& m) {
  Vec P = linalg::cross(E, l, m);
  if (linalg::is_zero(P)) throw GeometryError("meet of coincident lines");
  return normalize(E, P);
}

bool incident(const FiniteField& E, const Vec& P, const Vec& l) { return linalg::dot(E, P, l) == 0; }

Subline subline_through(const FieldCtx& ctx, const Vec& A, const Vec& B, const Vec& C) {
  const FiniteField& E = ctx.ext();
  Mat a{{A[0], B[0]}, {A[1], B[1]}, {A[2], B[2]}};
  if (linalg::rank(E, {A, B}) < 2) throw GeometryError("subline needs distinct points");
  auto ab = linalg::solve(E, a, C);
  if (!ab) throw GeometryError("points are not collinear");
  if ((*ab)[0] == 0 || (*ab)[1] == 0) throw GeometryError("subline needs distinct points");
  return {linalg::scale(E, (*ab)[0], A), linalg::scale(E, (*ab)[1], B)};
}

std::vector<Vec> subline_points(const FieldCtx& ctx, const Subline& s) {
  const FiniteField& E = ctx.ext();
  std::vector<Vec> out;
  for (int h = 0; h < ctx.q(); ++h) out.push_back(normalize(E, linalg::axpy(E, static_cast<Elem>(h), s.v1, s.v0)));
  out.push_back(normalize(E, s.v1));
  return out;
}

Vec subline_carrier(const FieldCtx& ctx, const Subline& s) { return line_through(ctx.ext(), s.v0, s.v1); }

// ---------------------------------------------------------------------------

int Subplane::index_of(const Vec& P) const {
  auto it = point_pos.find(P);
  return it == point_pos.end() ? -1 : it->second;
}

int Subplane::line_index_of(const Vec& l) const {
  auto it = line_pos.find(l);
  return it == line_pos.end() ? -1 : it->second;
}

std::vector<Vec> Subplane::point_key() const {
  std::vector<Vec> k = points;
  std::sort(k.begin(), k.end());
  return k;
}

std::vector<int> Subplane::infinite_points() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(points.size()); ++i)
    if (is_infinite(points[i])) out.push_back(i);
  return out;
}

void Subplane::reindex() {
  point_pos.clear();
  line_pos.clear();
  for (int i = 0; i < static_cast<int>(points.size()); ++i) point_pos[points[i]] = i;
  for (int i = 0; i < static_cast<int>(line_coords.size()); ++i) line_pos[line_coords[i]] = i;
}

namespace {

struct BasePlane {
  std::vector<Vec> points, lines;
  std::vector<std::vector<int>> incidence;
};

const BasePlane& base_plane(const FieldCtx& ctx) {
  static thread_local std::map<std::pair<int, std::vector<Elem>>, BasePlane> cache;
  const auto key = std::make_pair(ctx.q(), ctx.base_modulus());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const FiniteField& F = ctx.base();
  BasePlane bp;
  bp.points = [&] {
    std::vector<Vec> pts;
    for_each_point(F, whole_space(2), [&](const Vec& v) { pts.push_back(v); });
    return pts;
  }();
  bp.lines = bp.points;
  for (const auto& u : bp.lines) {
    std::vector<int> on;
    for (int i = 0; i < static_cast<int>(bp.points.size()); ++i)
      if (linalg::dot(F, u, bp.points[i]) == 0) on.push_back(i);
    bp.incidence.push_back(std::move(on));
  }
  return cache.emplace(key, std::move(bp)).first->second;
}

}  // namespace

std::optional<Subplane> subplane_from_frame(const FieldCtx& ctx, const Vec& A, const Vec& B, const Vec& C,
                                            const Vec& D) {
  const FiniteField& E = ctx.ext();
  Mat cols{A, B, C};
  Mat m = linalg::transpose(cols);
  if (linalg::det(E, m) == 0) return std::nullopt;
  auto abc = linalg::solve(E, m, D);
  if (!abc || (*abc)[0] == 0 || (*abc)[1] == 0 || (*abc)[2] == 0) return std::nullopt;
  Mat M(3, Vec(3));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) M[r][c] = E.mul(m[r][c], (*abc)[c]);
  Mat Minv_t = linalg::transpose(*linalg::inverse(E, M));

  const BasePlane& bp = base_plane(ctx);
  Subplane S;
  for (const auto& x : bp.points) S.points.push_back(normalize(E, linalg::mul(E, M, x)));
  for (const auto& u : bp.lines) S.line_coords.push_back(normalize(E, linalg::mul(E, Minv_t, u)));
  S.lines = bp.incidence;
  S.reindex();
  return S;
}

std::vector<int> TangentSubplane::lines_through_T() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(lines.size()); ++i)
    if (std::find(lines[i].begin(), lines[i].end(), T) != lines[i].end()) out.push_back(i);
  return out;
}

std::optional<TangentSubplane> as_tangent(Subplane S) {
  auto inf = S.infinite_points();
  if (inf.size() != 1) return std::nullopt;
  TangentSubplane B;
  static_cast<Subplane&>(B) = std::move(S);
  B.T = inf[0];
  return B;
}

Vec apply(const FiniteField& E, const Mat& A, const Vec& P) { return normalize(E, linalg::mul(E, A, P)); }

Subplane transform(const FieldCtx& ctx, const Subplane& S, const Mat& A) {
  const FiniteField& E = ctx.ext();
  auto inv = linalg::inverse(E, A);
  if (!inv) throw GeometryError("singular homography");
  Mat inv_t = linalg::transpose(*inv);
  Subplane R;
  R.lines = S.lines;
  for (const auto& P : S.points) R.points.push_back(apply(E, A, P));
  for (const auto& l : S.line_coords) R.line_coords.push_back(apply(E, inv_t, l));
  R.reindex();
  return R;
}

TangentSubplane transform(const FieldCtx& ctx, const TangentSubplane& S, const Mat& A) {
  auto R = as_tangent(transform(ctx, static_cast<const Subplane&>(S), A));
  if (!R) throw GeometryError("homography does not preserve tangency");
  return *R;
}

Subline transform(const FieldCtx& ctx, const Subline& s, const Mat& A) {
  const FiniteField& E = ctx.ext();
  return {linalg::mul(E, A, s.v0), linalg::mul(E, A, s.v1)};
}

}  // namespace tsplash
