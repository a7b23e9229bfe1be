#include "tsplash/splash.hpp"

#include <algorithm>
#include <set>

namespace tsplash {

namespace canon {
namespace {

Elem tau(const FieldCtx& ctx) { return static_cast<Elem>(ctx.q()); }
Elem thm(const FieldCtx& ctx, Elem e) { return ctx.theta_minus(ctx.fq(e)).value(); }
Vec pt(const FieldCtx& ctx, Elem a, Elem b) { return sigma_vec(ctx, a, b, 0); }

}  // namespace

Vec T(const FieldCtx&) { return {1, 0, 0}; }

Vec U(const FieldCtx& ctx, Elem f) {
  const FiniteField& E = ctx.ext();
  return normalize(E, {E.add(1, E.mul(f, tau(ctx))), 1, 1});
}

Vec P(const FieldCtx& ctx, Elem e, Elem d) {
  const FiniteField& E = ctx.ext();
  return normalize(E, {E.add(e, E.mul(d, tau(ctx))), e, E.add(e, tau(ctx))});
}

Vec S(const FieldCtx& ctx, Elem d) { return normalize(ctx.ext(), {d, 0, 1}); }

Vec R(const FieldCtx& ctx, Elem e, Elem d, Elem f, Elem h) {
  const FiniteField& E = ctx.ext();
  Elem k = E.add(E.sub(E.mul(f, h), E.mul(f, e)), d);
  return normalize(E, {E.add(h, E.mul(k, tau(ctx))), h, E.add(h, tau(ctx))});
}

Vec m(const FieldCtx& ctx, Elem e) {
  const FiniteField& E = ctx.ext();
  return normalize(E, {0, E.add(e, tau(ctx)), E.neg(e)});
}

Vec m_inf(const FieldCtx& ctx) { return normalize(ctx.ext(), {0, 1, ctx.ext().neg(1)}); }

Vec ell(const FieldCtx& ctx, Elem e, Elem d, Elem f) {
  const FiniteField& E = ctx.ext();
  Elem ef = E.mul(e, f);
  Elem b = E.add(E.add(E.sub(ef, d), 1), E.mul(f, tau(ctx)));
  return normalize(E, {E.neg(1), b, E.sub(d, ef)});
}

Vec C(const FieldCtx& ctx, Elem e) { return normalize(ctx.base(), pt(ctx, ctx.ext().mul(tau(ctx), thm(ctx, e)), 0)); }
Vec C_inf(const FieldCtx& ctx) { return normalize(ctx.base(), pt(ctx, tau(ctx), 0)); }

Vec Tpt(const FieldCtx& ctx, Elem e) {
  const FiniteField& E = ctx.ext();
  Elem t = thm(ctx, e);
  return normalize(ctx.base(), pt(ctx, E.mul(E.mul(t, t), tau(ctx)), 0));
}
Vec Tpt_inf(const FieldCtx& ctx) { return normalize(ctx.base(), pt(ctx, ctx.ext().mul(tau(ctx), tau(ctx)), 0)); }

Vec D(const FieldCtx& ctx, Elem e) {
  const FiniteField& E = ctx.ext();
  Elem t = thm(ctx, e);
  return normalize(ctx.base(), pt(ctx, 0, E.mul(E.mul(t, t), tau(ctx))));
}
Vec D_inf(const FieldCtx& ctx) { return normalize(ctx.base(), pt(ctx, 0, tau(ctx))); }

namespace {

// (1 - d + ef) tau + f tau^2
Elem i_first(const FieldCtx& ctx, Elem e, Elem d, Elem f) {
  const FiniteField& E = ctx.ext();
  const Elem t = tau(ctx);
  Elem k = E.add(E.sub(1, d), E.mul(e, f));
  return E.add(E.mul(k, t), E.mul(f, E.mul(t, t)));
}

}  // namespace

Vec I_P(const FieldCtx& ctx, Elem e, Elem d, Elem f) {
  const FiniteField& E = ctx.ext();
  Elem t2 = E.mul(thm(ctx, e), thm(ctx, e));
  return normalize(ctx.base(), pt(ctx, E.mul(i_first(ctx, e, d, f), t2), E.mul(tau(ctx), t2)));
}

Vec I_U(const FieldCtx& ctx, Elem e, Elem d, Elem f) {
  return normalize(ctx.base(), pt(ctx, i_first(ctx, e, d, f), tau(ctx)));
}

}  // namespace canon

TangentSubplane canonical_subplane(const FieldCtx& ctx) {
  const FiniteField& E = ctx.ext();
  const int q = ctx.q();
  TangentSubplane B;
  B.points.push_back(canon::T(ctx));
  for (int f = 0; f < q; ++f) B.points.push_back(canon::U(ctx, static_cast<Elem>(f)));
  for (int e = 0; e < q; ++e)
    for (int d = 0; d < q; ++d) B.points.push_back(canon::P(ctx, static_cast<Elem>(e), static_cast<Elem>(d)));
  B.T = 0;

  for (int e = 0; e < q; ++e) B.line_coords.push_back(canon::m(ctx, static_cast<Elem>(e)));
  B.line_coords.push_back(canon::m_inf(ctx));
  std::set<Vec> seen;
  for (int e = 0; e < q; ++e)
    for (int d = 0; d < q; ++d)
      for (int f = 0; f < q; ++f) {
        Vec l = canon::ell(ctx, static_cast<Elem>(e), static_cast<Elem>(d), static_cast<Elem>(f));
        if (seen.insert(l).second) B.line_coords.push_back(l);
      }

  for (const auto& l : B.line_coords) {
    std::vector<int> on;
    for (int i = 0; i < static_cast<int>(B.points.size()); ++i)
      if (incident(E, B.points[i], l)) on.push_back(i);
    if (static_cast<int>(on.size()) != q + 1) throw GeometryError("canonical line has the wrong number of points");
    B.lines.push_back(std::move(on));
  }
  B.reindex();
  return B;
}

// ---------------------------------------------------------------------------

Splash make_splash(const RegularSpread& S, const Vec& T, const std::vector<Vec>& member_tags) {
  Splash sp;
  sp.centre = S.index_of_tag(T);
  sp.is_member.assign(S.elements.size(), 0);
  sp.points.push_back(S.elements[sp.centre].tag);
  for (const auto& t : member_tags) {
    int i = S.index_of_tag(t);
    if (i == sp.centre) throw GeometryError("member equals the centre");
    if (sp.is_member[i]) continue;
    sp.is_member[i] = 1;
    sp.members.push_back(i);
  }
  std::sort(sp.members.begin(), sp.members.end());
  for (int i : sp.members) sp.points.push_back(S.elements[i].tag);
  return sp;
}

Splash splash_of(const RegularSpread& S, const TangentSubplane& B) {
  const FiniteField& E = S.E();
  std::vector<Vec> tags;
  for (const auto& l : B.line_coords) {
    if (normalize(E, l) == kLineInf) throw GeometryError("subplane contains l_inf");
    Vec X = meet_lines(E, l, kLineInf);
    if (X != B.centre()) tags.push_back(X);
  }
  return make_splash(S, B.centre(), tags);
}

namespace {

bool on_common_subline(const FieldCtx& ctx, const Vec& T, const Vec& A, const Vec& B, const Vec& C) {
  auto pts = subline_points(ctx, subline_through(ctx, T, A, B));
  Vec c = normalize(ctx.ext(), C);
  return std::find(pts.begin(), pts.end(), c) != pts.end();
}

}  // namespace

Splash complete_splash(const RegularSpread& S, const Vec& T, const Vec& A, const Vec& B, const Vec& C) {
  const FiniteField& E = S.E();
  for (const auto* v : {&T, &A, &B, &C})
    if (!is_infinite(*v)) throw GeometryError("splash points must lie on l_inf");
  std::vector<Vec> xs{{T[0], T[1]}, {A[0], A[1]}, {B[0], B[1]}};
  std::vector<Vec> ys{{1, 0}, {0, 1}, {1, 1}};
  Mat M = mobius_from_pairs(E, xs, ys);
  Vec w = linalg::mul(E, M, Vec{C[0], C[1]});
  if (w[1] == 0) throw GeometryError("fourth point equals the centre");
  Elem x = E.div(w[0], w[1]);
  if (x < S.q()) throw GeometryError("points lie on a common subline with the centre");
  Mat Minv = *linalg::inverse(E, M);
  std::vector<Vec> tags;
  for (int a = 0; a < S.q(); ++a)
    for (int b = 0; b < S.q(); ++b) {
      Elem v = E.add(static_cast<Elem>(a), E.mul(static_cast<Elem>(b), x));
      Vec y = linalg::mul(E, Minv, Vec{v, 1});
      tags.push_back({y[0], y[1], 0});
    }
  return make_splash(S, T, tags);
}

// ---------------------------------------------------------------------------

bool cover_criterion(const RegularSpread& S, const Splash& sp, const ProjSubspace& pi) {
  const FiniteField& F = S.F();
  if (pi.dim() != 2 || !S.sigma_inf.contains(F, pi)) return false;
  if (meet(F, pi, S.elements[sp.centre].plane).dim() != 1) return false;
  std::vector<int> hit;
  for_each_point(F, pi, [&](const Vec& v) {
    int o = S.owner(v);
    if (o != sp.centre && sp.is_member[o] && std::find(hit.begin(), hit.end(), o) == hit.end()) hit.push_back(o);
  });
  const Vec& T = S.elements[sp.centre].tag;
  const int n = static_cast<int>(hit.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (!on_common_subline(S.ctx, T, S.elements[hit[i]].tag, S.elements[hit[j]].tag, S.elements[hit[k]].tag))
          return true;
  return false;
}

bool covers_splash(const RegularSpread& S, const Splash& sp, const ProjSubspace& pi) {
  const FiniteField& F = S.F();
  if (pi.dim() != 2 || !S.sigma_inf.contains(F, pi)) return false;
  if (meet(F, pi, S.elements[sp.centre].plane).dim() != 1) return false;
  std::vector<int> hits(S.elements.size(), 0);
  bool inside = true;
  for_each_point(F, pi, [&](const Vec& v) {
    int o = S.owner(v);
    if (o == sp.centre) return;
    if (!sp.is_member[o]) inside = false;
    ++hits[o];
  });
  if (!inside) return false;
  for (int m : sp.members)
    if (hits[m] != 1) return false;
  return true;
}

bool is_cover_plane(const RegularSpread& S, const Splash& sp, const ProjSubspace& pi) {
  return cover_criterion(S, sp, pi) && covers_splash(S, sp, pi);
}

std::vector<CoverPlane> cover_planes(const RegularSpread& S, const Splash& sp) {
  const FiniteField& F = S.F();
  const auto& centre = S.elements[sp.centre].plane;
  const auto member_pts = points_of(F, S.elements[sp.members.at(0)].plane);
  std::vector<CoverPlane> out;
  for (const auto& line : subspaces_of(F, centre, 1))
    for (const auto& M : member_pts) {
      ProjSubspace pi = span(F, line, M);
      if (covers_splash(S, sp, pi)) out.push_back({pi, line});
    }
  return out;
}

std::vector<CoverPlane> cover_planes_by_scan(const RegularSpread& S, const Splash& sp) {
  const FiniteField& F = S.F();
  const auto& centre = S.elements[sp.centre].plane;
  std::vector<CoverPlane> out;
  for (auto& pi : subspaces_of(F, S.sigma_inf, 2)) {
    ProjSubspace l = meet(F, pi, centre);
    if (l.dim() == 1 && covers_splash(S, sp, pi)) out.push_back({std::move(pi), std::move(l)});
  }
  return out;
}

CoverPlane cover_plane_through_point(const RegularSpread& S, const Splash& sp, const std::vector<CoverPlane>& planes,
                                     const Vec& M) {
  const FiniteField& F = S.F();
  int o = S.owner(M);
  if (o == sp.centre) throw GeometryError("point lies in the centre");
  if (!sp.is_member[o]) throw GeometryError("point is not in the splash");
  const CoverPlane* found = nullptr;
  for (const auto& c : planes)
    if (c.plane.contains(F, M)) {
      if (found) throw GeometryError("more than one cover plane through the point");
      found = &c;
    }
  if (!found) throw GeometryError("no cover plane through the point");
  return *found;
}

Conic pencil_image(const RegularSpread& S, const Splash& sp, const std::vector<CoverPlane>& planes, const Vec& P,
                   int U) {
  const FiniteField& F = S.F();
  if (!S.elements[sp.centre].plane.contains(F, P)) throw GeometryError("point is not in the centre");
  if (!sp.is_member.at(U)) throw GeometryError("element is not a splash member");
  std::vector<ProjPoint> pts;
  for (const auto& c : planes)
    if (c.centre_line.contains(F, P)) {
      ProjSubspace x = meet(F, c.plane, S.elements[U].plane);
      if (x.dim() != 0) throw GeometryError("cover plane does not meet the member in a point");
      pts.emplace_back(x.basis()[0]);
    }
  auto fits = special_conics_through(S, U, pts);
  if (fits.size() != 1) throw GeometryError("pencil does not determine a unique special conic");
  return fits[0];
}

// ---------------------------------------------------------------------------

Shadow shadow_of(const RegularSpread& S, const TwistedCubic& N) {
  const FiniteField& F = S.F();
  if (!is_special_cubic(S, N)) throw GeometryError("cubic is not special");
  Shadow D;
  D.host = host_element(S, N.ambient);
  for (const auto& p : N.points) {
    ProjSubspace x = meet(F, tangent_of_cubic(F, N, p), S.sigma_inf);
    if (x.dim() != 0) throw GeometryError("tangent does not meet Sigma_inf in a point");
    ProjPoint d(x.basis()[0]);
    if (!S.elements[D.host].plane.contains(F, d)) throw GeometryError("shadow point outside the host");
    D.points.push_back(d);
  }
  return D;
}

std::vector<Vec> sorted_points(const Shadow& D) {
  std::vector<Vec> v;
  for (const auto& p : D.points) v.push_back(p.coords);
  std::sort(v.begin(), v.end());
  return v;
}

ShadowCount count_distinct_shadows(const RegularSpread& S, const ProjSubspace& space) {
  const FiniteField& E = S.E();
  int L = host_element(S, space);
  if (L < 0) throw GeometryError("3-space is not about a spread element");
  Vec A;
  for (const auto& r : space.basis())
    if (r[6] != 0) A = affine_preimage(S.ctx, r);
  if (A.empty()) throw GeometryError("3-space lies in Sigma_inf");
  const Vec& Lt = S.elements[L].tag;
  std::vector<Vec> pts;
  for (int l = 0; l < E.size(); ++l) pts.push_back(normalize(E, linalg::axpy(E, static_cast<Elem>(l), Lt, A)));

  std::set<std::vector<Vec>> sublines;
  std::set<std::vector<Vec>> shadows;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Subline b = subline_through(S.ctx, pts[i], pts[j], pts[k]);
        auto sp = subline_points(S.ctx, b);
        if (std::any_of(sp.begin(), sp.end(), [](const Vec& v) { return is_infinite(v); })) continue;
        std::sort(sp.begin(), sp.end());
        if (!sublines.insert(sp).second) continue;
        shadows.insert(sorted_points(shadow_of(S, cubic_of_subline(S, b))));
      }
  return {static_cast<long>(sublines.size()), static_cast<long>(shadows.size())};
}

// ---------------------------------------------------------------------------

namespace {

bool on_line(const Subplane& B, int line, int p) {
  const auto& l = B.lines[line];
  return std::find(l.begin(), l.end(), p) != l.end();
}

ProjPoint sigma_point(const RegularSpread& S, const Vec& P) { return ProjPoint::from(S.F(), sigma_of(S.ctx, P)); }

}  // namespace

ProjPoint I_point(const RegularSpread& S, const TangentSubplane& B, int P, int ell) {
  const FiniteField& F = S.F();
  if (P == B.T || is_infinite(B.points[P])) throw GeometryError("I-point needs an affine point");
  if (!on_line(B, ell, P)) throw GeometryError("point is not on the line");
  if (on_line(B, ell, B.T)) throw GeometryError("line passes through T");
  const auto& l = B.lines[ell];
  TwistedCubic N = cubic_of_subline(S, subline_through(S.ctx, B.points[l[0]], B.points[l[1]], B.points[l[2]]));
  ProjSubspace x = meet(F, tangent_of_cubic(F, N, sigma_point(S, B.points[P])), S.sigma_inf);
  if (x.dim() != 0) throw GeometryError("tangent does not meet Sigma_inf in a point");
  return ProjPoint(x.basis()[0]);
}

ProjSubspace I_line(const RegularSpread& S, const TangentSubplane& B, int P) {
  std::vector<ProjPoint> pts;
  for (int li = 0; li < static_cast<int>(B.lines.size()); ++li)
    if (on_line(B, li, P) && !on_line(B, li, B.T)) pts.push_back(I_point(S, B, P, li));
  ProjSubspace l = span(S.F(), pts);
  if (l.dim() != 1) throw GeometryError("I-points are not collinear");
  return l;
}

CoverPlane I_plane(const RegularSpread& S, const TangentSubplane& B, int m) {
  const FiniteField& F = S.F();
  if (!on_line(B, m, B.T)) throw GeometryError("line does not pass through T");
  std::vector<ProjSubspace> ls;
  for (int p : B.lines[m])
    if (p != B.T) ls.push_back(I_line(S, B, p));
  ProjSubspace pi = span(F, ls);
  if (pi.dim() != 2) throw GeometryError("I-lines do not span a plane");
  return {pi, meet(F, pi, S.elements[S.index_of_tag(B.centre())].plane)};
}

ProjSubspace tangent_subspace(const RegularSpread& S, const TangentSubplane& B, int P) {
  return span(S.F(), I_line(S, B, P), sigma_point(S, B.points[P]));
}

std::optional<Subplane> subplane_through_sublines(const FieldCtx& ctx, const Vec& T, const Vec& A, const Vec& A2,
                                                  const Vec& X, const Vec& X2) {
  const FiniteField& E = ctx.ext();
  auto coeffs = [&](const Vec& U, const Vec& V) {
    return linalg::solve(E, {{U[0], T[0]}, {U[1], T[1]}, {U[2], T[2]}}, V);
  };
  auto a = coeffs(A, A2), x = coeffs(X, X2);
  if (!a || !x || (*a)[0] == 0 || (*a)[1] == 0 || (*x)[0] == 0 || (*x)[1] == 0) return std::nullopt;
  const Elem ta = (*a)[1];
  const Vec Ap = linalg::scale(E, (*a)[0], A);
  const Vec Xp = linalg::scale(E, E.mul(E.div(ta, (*x)[1]), (*x)[0]), X);
  const Vec Tp = linalg::scale(E, ta, T);
  return subplane_from_frame(ctx, A, X, T, linalg::add(E, linalg::add(E, Ap, Xp), Tp));
}

Subplane perp_subplane(const FieldCtx& ctx, const TangentSubplane& B, int P) {
  const FiniteField& E = ctx.ext();
  std::vector<Vec> at_inf;
  int pt_line = -1;
  for (int li = 0; li < static_cast<int>(B.lines.size()); ++li) {
    if (!on_line(B, li, P)) continue;
    if (on_line(B, li, B.T)) pt_line = li;
    else at_inf.push_back(meet_lines(E, B.line_coords[li], kLineInf));
  }
  int X2 = -1;
  for (int p : B.lines.at(pt_line))
    if (p != P && p != B.T) X2 = p;
  auto sub = subplane_through_sublines(ctx, B.centre(), at_inf.at(0), at_inf.at(1), B.points[P], B.points[X2]);
  if (!sub) throw GeometryError("tangent subspace sublines are degenerate");
  return *sub;
}

ProjSubspace affine_image_span(const RegularSpread& S, const Subplane& B) {
  std::vector<ProjPoint> pts;
  for (const auto& P : B.points)
    if (!is_infinite(P)) pts.push_back(sigma_point(S, P));
  return span(S.F(), pts);
}

}  // namespace tsplash
