#pragma once

// Tangent splashes: the canonical coordinatized tangent subplane, splashes,
// cover planes, shadows, I-points/lines/planes and tangent subspaces.

#include <vector>

#include "tsplash/bruckbose.hpp"
#include "tsplash/plane.hpp"
#include "tsplash/projgeom.hpp"

namespace tsplash {

/// Coordinates of the canonical tangent subplane.  Arguments are GF(q)
/// elements (the same indices in GF(q^3)); all results are normalized.
namespace canon {
Vec T(const FieldCtx& ctx);
Vec U(const FieldCtx& ctx, Elem f);             // (1 + f tau, 1, 1)
Vec P(const FieldCtx& ctx, Elem e, Elem d);     // (e + d tau, e, e + tau)
Vec S(const FieldCtx& ctx, Elem d);             // (d, 0, 1)
Vec R(const FieldCtx& ctx, Elem e, Elem d, Elem f, Elem h);
Vec m(const FieldCtx& ctx, Elem e);             // [0, e + tau, -e]
Vec m_inf(const FieldCtx& ctx);                 // [0, 1, -1]
Vec ell(const FieldCtx& ctx, Elem e, Elem d, Elem f);  // [-1, ef - d + 1 + f tau, d - ef]
/// C_e = sigma(tau thm(e), 0, 0) and C_inf = sigma(tau, 0, 0).
Vec C(const FieldCtx& ctx, Elem e);
Vec C_inf(const FieldCtx& ctx);
/// T_e = sigma(thm(e)^2 tau, 0, 0) and T_inf = sigma(tau^2, 0, 0).
Vec Tpt(const FieldCtx& ctx, Elem e);
Vec Tpt_inf(const FieldCtx& ctx);
/// D_e = sigma(0, thm(e)^2 tau, 0) and D_inf = sigma(0, tau, 0).
Vec D(const FieldCtx& ctx, Elem e);
Vec D_inf(const FieldCtx& ctx);
/// I_{P_{e,d}, l_{e,d,f}} and I_{U_f, l_{e,d,f}}.
Vec I_P(const FieldCtx& ctx, Elem e, Elem d, Elem f);
Vec I_U(const FieldCtx& ctx, Elem e, Elem d, Elem f);
}  // namespace canon

/// Points T, U_0..U_{q-1}, P_{e,d} (e major); lines m_0..m_{q-1}, m_inf,
/// then the distinct l_{e,d,f}.
TangentSubplane canonical_subplane(const FieldCtx& ctx);

struct Splash {
  int centre = -1;
  std::vector<int> members;      // element indices, sorted
  std::vector<Vec> points;       // l_inf points, centre first
  std::vector<char> is_member;   // by element index

  bool operator==(const Splash& o) const { return centre == o.centre && members == o.members; }
};

Splash splash_of(const RegularSpread& S, const TangentSubplane& B);
/// A splash from its centre and member tags.
Splash make_splash(const RegularSpread& S, const Vec& T, const std::vector<Vec>& member_tags);
/// The tangent splash with centre T through A, B, C (points of l_inf, with T
/// not on a common subline).
Splash complete_splash(const RegularSpread& S, const Vec& T, const Vec& A, const Vec& B, const Vec& C);

struct CoverPlane {
  ProjSubspace plane;
  ProjSubspace centre_line;
  bool operator==(const CoverPlane& o) const { return plane == o.plane; }
};

/// pi meets the centre in a line and three members whose tags, with T, are
/// not on a common subline of l_inf.
bool cover_criterion(const RegularSpread& S, const Splash& sp, const ProjSubspace& pi);
/// pi lies in the splash, meets the centre in a line and every member once.
bool covers_splash(const RegularSpread& S, const Splash& sp, const ProjSubspace& pi);
bool is_cover_plane(const RegularSpread& S, const Splash& sp, const ProjSubspace& pi);

/// One cover plane per line of the centre, built from the first member.
std::vector<CoverPlane> cover_planes(const RegularSpread& S, const Splash& sp);
/// Every plane of Sigma_inf, filtered.
std::vector<CoverPlane> cover_planes_by_scan(const RegularSpread& S, const Splash& sp);
/// The unique cover plane through a member point.
CoverPlane cover_plane_through_point(const RegularSpread& S, const Splash& sp,
                                     const std::vector<CoverPlane>& planes, const Vec& M);
/// The q+1 cover planes through a centre point meet member U in a special conic.
Conic pencil_image(const RegularSpread& S, const Splash& sp, const std::vector<CoverPlane>& planes,
                   const Vec& P, int U);

struct Shadow {
  int host = -1;
  std::vector<ProjPoint> points;  // in cubic order
};

Shadow shadow_of(const RegularSpread& S, const TwistedCubic& N);
std::vector<Vec> sorted_points(const Shadow& D);

struct ShadowCount {
  long sublines = 0;
  long shadows = 0;
};

/// Enumerates every special twisted cubic in a 3-space about a spread
/// element and counts the distinct shadows.
ShadowCount count_distinct_shadows(const RegularSpread& S, const ProjSubspace& space);

/// Tangent at sigma(P) of the cubic of line `ell` of B, met with Sigma_inf.
ProjPoint I_point(const RegularSpread& S, const TangentSubplane& B, int P, int ell);
ProjSubspace I_line(const RegularSpread& S, const TangentSubplane& B, int P);
CoverPlane I_plane(const RegularSpread& S, const TangentSubplane& B, int m);
ProjSubspace tangent_subspace(const RegularSpread& S, const TangentSubplane& B, int P);

/// The secant subplane through P built in PG(2,q^3) from the sublines
/// {l_i cap l_inf} and PT cap B.
Subplane perp_subplane(const FieldCtx& ctx, const TangentSubplane& B, int P);
/// The unique subplane containing two sublines through a common point T
/// (given as T, A, A2 and T, X, X2).
std::optional<Subplane> subplane_through_sublines(const FieldCtx& ctx, const Vec& T, const Vec& A, const Vec& A2,
                                                  const Vec& X, const Vec& X2);
/// Span of the sigma-images of a subplane's affine points.
ProjSubspace affine_image_span(const RegularSpread& S, const Subplane& B);

}  // namespace tsplash
