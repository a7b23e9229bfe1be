#include "tsplash/collineation.hpp"

#include <algorithm>


namespace tsplash {

Mat multiplication_matrix(const FieldCtx& ctx, Elem a) {
  const FiniteField& E = ctx.ext();
  const Elem tau = static_cast<Elem>(ctx.q());
  Mat m(3, Vec(3));
  Elem x = a;
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) m[r][c] = E.coeff(x, r);
    x = E.mul(x, tau);
  }
  return m;
}

Mat companion(const FieldCtx& ctx) {
  const auto& t = ctx.poly();
  return {{0, 0, t.t0}, {1, 0, t.t1}, {0, 1, t.t2}};
}

LiftedHomography lift(const FieldCtx& ctx, const Mat& A) {
  const FiniteField& E = ctx.ext();
  if (A.size() != 3 || A[2][0] != 0 || A[2][1] != 0 || A[2][2] == 0)
    throw GeometryError("homography does not fix l_inf");
  if (linalg::det(E, A) == 0) throw GeometryError("singular homography");
  const Elem s = E.inv(A[2][2]);
  Mat a(3, Vec(3));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a[r][c] = E.mul(s, A[r][c]);

  Mat L(7, Vec(7, 0));
  for (int br = 0; br < 2; ++br) {
    for (int bc = 0; bc < 2; ++bc) {
      Mat blk = multiplication_matrix(ctx, a[br][bc]);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) L[3 * br + r][3 * bc + c] = blk[r][c];
    }
    for (int r = 0; r < 3; ++r) L[3 * br + r][6] = E.coeff(a[br][2], r);
  }
  L[6][6] = 1;
  return {a, L};
}

SingerCycle singer(const FieldCtx& ctx) {
  SingerCycle s;
  s.T = companion(ctx);
  s.M.assign(7, Vec(7, 0));
  for (int b = 0; b < 2; ++b)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) s.M[3 * b + r][3 * b + c] = s.T[r][c];
  s.M[6][6] = 1;
  return s;
}

Vec apply7(const FiniteField& F, const Mat& M, const Vec& v) { return normalize(F, linalg::mul(F, M, v)); }

std::vector<Vec> image_of(const FiniteField& F, const Mat& M, const std::vector<Vec>& pts) {
  std::vector<Vec> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(apply7(F, M, p));
  std::sort(out.begin(), out.end());
  return out;
}

ProjSubspace image_of(const FiniteField& F, const Mat& M, const ProjSubspace& S) {
  Mat rows;
  for (const auto& r : S.basis()) rows.push_back(linalg::mul(F, M, r));
  return ProjSubspace(F, std::move(rows), S.vec_len());
}

std::uint64_t orbit_size(const FiniteField& F, const Mat& M, std::vector<Vec> pts) {
  for (auto& p : pts) p = normalize(F, p);
  std::sort(pts.begin(), pts.end());
  std::vector<Vec> cur = pts;
  std::uint64_t n = 0;
  do {
    cur = image_of(F, M, cur);
    ++n;
    if (n > 100000000) throw GeometryError("orbit did not close");
  } while (cur != pts);
  return n;
}

Mat random_homography(const FieldCtx& ctx, std::mt19937_64& rng) {
  const FiniteField& E = ctx.ext();
  std::uniform_int_distribution<int> pick(0, E.size() - 1);
  for (;;) {
    Mat A{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}};
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 3; ++c) A[r][c] = static_cast<Elem>(pick(rng));
    if (E.sub(E.mul(A[0][0], A[1][1]), E.mul(A[0][1], A[1][0])) != 0) return A;
  }
}

}  // namespace tsplash
