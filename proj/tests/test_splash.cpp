#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "tsplash/collineation.hpp"
#include "tsplash/splash.hpp"

using namespace tsplash;

namespace {

Elem el(int x) { return static_cast<Elem>(x); }

int point_idx(const Subplane& B, const Vec& P) {
  int i = B.index_of(P);
  REQUIRE(i >= 0);
  return i;
}

int line_idx(const Subplane& B, const Vec& l) {
  int i = B.line_index_of(l);
  REQUIRE(i >= 0);
  return i;
}

ProjPoint pp(const Vec& v) { return ProjPoint(v); }

std::vector<Vec> sorted(std::vector<Vec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("canonical subplane") {
  for (int q : {2, 3}) {
    auto ctx = FieldCtx::create(q);
    const FiniteField& E = ctx.ext();
    auto B = canonical_subplane(ctx);
    const int n = q * q + q + 1;
    REQUIRE(static_cast<int>(B.points.size()) == n);
    REQUIRE(static_cast<int>(B.lines.size()) == n);
    CHECK(B.infinite_points() == std::vector<int>{0});
    CHECK(B.contains(Vec{1, 1, 1}));
    for (int d = 0; d < q; ++d) CHECK(B.contains(canon::S(ctx, el(d))));
    for (int d = 0; d < q; ++d) CHECK(B.line_index_of(normalize(E, {1, E.sub(el(d), 1), E.neg(el(d))})) >= 0);

    // Any two points on exactly one line, any two lines through exactly one point.
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        int on = 0, through = 0;
        for (const auto& l : B.lines)
          if (std::count(l.begin(), l.end(), a) && std::count(l.begin(), l.end(), b)) ++on;
        for (int p = 0; p < n; ++p)
          if (std::count(B.lines[a].begin(), B.lines[a].end(), p) && std::count(B.lines[b].begin(), B.lines[b].end(), p))
            ++through;
        REQUIRE(on == 1);
        REQUIRE(through == 1);
      }

    for (int e = 0; e < q; ++e)
      for (int d = 0; d < q; ++d)
        for (int f = 0; f < q; ++f)
          for (int h = 0; h < q; ++h) {
            Vec R = canon::R(ctx, el(e), el(d), el(f), el(h));
            REQUIRE(incident(E, R, canon::ell(ctx, el(e), el(d), el(f))));
            REQUIRE(incident(E, R, canon::m(ctx, el(h))));
            REQUIRE(B.contains(R));
          }
  }
}

TEST_CASE("splash of the canonical subplane") {
  for (int q : {2, 3, 4}) {
    auto ctx = FieldCtx::create(q);
    auto S = build_spread(ctx);
    const FiniteField& E = ctx.ext();
    auto B = canonical_subplane(ctx);
    auto sp = splash_of(S, B);
    REQUIRE(static_cast<int>(sp.members.size()) == q * q);
    CHECK(sp.centre == S.index_of_tag({1, 0, 0}));
    std::vector<Vec> tags;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) tags.push_back({E.add(el(a), E.mul(el(b), el(q))), 1, 0});
    CHECK(sp == make_splash(S, {1, 0, 0}, tags));
    CHECK(sp == complete_splash(S, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {el(q), 1, 0}));
    if (q > 2) CHECK_THROWS_AS(complete_splash(S, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 1, 0}), GeometryError);
  }
}

TEST_CASE("splashes of transformed subplanes") {
  auto ctx = FieldCtx::create(3);
  auto S = build_spread(ctx);
  const FiniteField& E = ctx.ext();
  auto B = canonical_subplane(ctx);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Mat A = random_homography(ctx, rng);
    auto B2 = transform(ctx, B, A);
    auto sp = splash_of(S, B2);
    REQUIRE(sp.members.size() == 9);
    std::vector<Vec> tags;
    for (const auto& l : B2.line_coords) {
      Vec X = meet_lines(E, l, kLineInf);
      if (X != B2.centre()) tags.push_back(X);
    }
    REQUIRE(sp == make_splash(S, B2.centre(), tags));
    const auto& p = sp.points;
    bool completed = false;
    for (size_t k = 3; k < p.size() && !completed; ++k) {
      try {
        completed = sp == complete_splash(S, p[0], p[1], p[2], p[k]);
      } catch (const GeometryError&) {
      }
    }
    REQUIRE(completed);
  }
}

TEST_CASE("cover planes") {
  for (int q : {2, 3, 4}) {
    auto ctx = FieldCtx::create(q);
    auto S = build_spread(ctx);
    const FiniteField& F = ctx.base();
    auto sp = splash_of(S, canonical_subplane(ctx));
    auto planes = cover_planes(S, sp);
    REQUIRE(static_cast<int>(planes.size()) == q * q + q + 1);
    std::set<ProjSubspace> lines;
    for (const auto& c : planes) {
      lines.insert(c.centre_line);
      REQUIRE(is_cover_plane(S, sp, c.plane));
      REQUIRE(points_of(F, c.plane).size() == static_cast<size_t>(q * q + q + 1));
    }
    CHECK(static_cast<int>(lines.size()) == q * q + q + 1);
    CHECK_FALSE(is_cover_plane(S, sp, S.elements[sp.centre].plane));
    CHECK_FALSE(is_cover_plane(S, sp, S.elements[sp.members[0]].plane));

    // Every member point lies on exactly one cover plane; distinct points on distinct planes.
    for (int m : sp.members) {
      std::set<ProjSubspace> seen;
      for (const auto& M : points_of(F, S.elements[m].plane)) seen.insert(cover_plane_through_point(S, sp, planes, M.coords).plane);
      REQUIRE(static_cast<int>(seen.size()) == q * q + q + 1);
    }
    CHECK_THROWS_AS(cover_plane_through_point(S, sp, planes, points_of(F, S.elements[sp.centre].plane)[0].coords),
                    GeometryError);
  }
}

TEST_CASE("cover planes against the full scan") {
  for (int q : {2, 3}) {
    auto ctx = FieldCtx::create(q);
    auto S = build_spread(ctx);
    const FiniteField& F = ctx.base();
    auto sp = splash_of(S, canonical_subplane(ctx));
    auto a = cover_planes(S, sp), b = cover_planes_by_scan(S, sp);
    std::set<ProjSubspace> sa, sb;
    for (const auto& c : a) sa.insert(c.plane);
    for (const auto& c : b) sb.insert(c.plane);
    CHECK(sa == sb);

    // The criterion agrees with full coverage on every plane meeting [T] in a line.
    int rejected = 0;
    for (const auto& pi : subspaces_of(F, S.sigma_inf, 2)) {
      if (meet(F, pi, S.elements[sp.centre].plane).dim() != 1) continue;
      bool c = cover_criterion(S, sp, pi);
      REQUIRE(c == covers_splash(S, sp, pi));
      if (!c) ++rejected;
    }
    CHECK(rejected > 0);
  }
}

TEST_CASE("cover plane map in canonical coordinates") {
  for (int q : {2, 3, 4, 5}) {
    auto ctx = FieldCtx::create(q);
    auto S = build_spread(ctx);
    const FiniteField& F = ctx.base();
    const FiniteField& E = ctx.ext();
    auto sp = splash_of(S, canonical_subplane(ctx));
    auto planes = cover_planes(S, sp);
    const Elem tau = el(q), t1 = ctx.poly().t1, t2 = ctx.poly().t2;
    const Vec P1 = sigma_vec(ctx, 1, 0, 0);
    for (int a = 0; a <= q; ++a) {
      Vec dir, Ua;
      if (a == q) {
        dir = sigma_vec(ctx, E.mul(tau, tau), 0, 0);
        Ua = sigma_vec(ctx, 0, E.sub(E.mul(tau, tau), t1), 0);
      } else {
        Elem A = el(a);
        dir = sigma_vec(ctx, E.add(tau, E.mul(A, E.mul(tau, tau))), 0, 0);
        Elem fa = E.from_coeffs({F.sub(F.add(1, F.mul(A, t2)), F.mul(F.mul(A, A), t1)), A, F.mul(A, A)});
        Ua = sigma_vec(ctx, 0, fa, 0);
      }
      ProjSubspace ma = span(F, std::vector<ProjPoint>{ProjPoint::from(F, P1), ProjPoint::from(F, dir)});
      auto c = cover_plane_through_point(S, sp, planes, normalize(F, Ua));
      REQUIRE(c.centre_line == ma);
    }
    for (int e = 0; e <= q; ++e) {
      Vec De = e == q ? canon::D_inf(ctx) : canon::D(ctx, el(e));
      Vec Ce = e == q ? canon::C_inf(ctx) : canon::C(ctx, el(e));
      Vec Te = e == q ? canon::Tpt_inf(ctx) : canon::Tpt(ctx, el(e));
      auto c = cover_plane_through_point(S, sp, planes, De);
      REQUIRE(c.centre_line == span(F, std::vector<ProjPoint>{pp(Ce), pp(Te)}));
    }
  }
}

TEST_CASE("pencil images") {
  for (int q : {2, 3}) {
    auto ctx = FieldCtx::create(q);
    auto S = build_spread(ctx);
    const FiniteField& F = ctx.base();
    auto sp = splash_of(S, canonical_subplane(ctx));
    auto planes = cover_planes(S, sp);
    const int U = S.index_of_tag({0, 1, 0});
    Conic C1 = pencil_image(S, sp, planes, sigma_vec(ctx, 1, 0, 0), U);
    QuadForm CU{{0, 1, F.neg(ctx.poly().t1), 0, F.neg(1), ctx.poly().t2}};
    CHECK(normalize_form(F, C1.form) == normalize_form(F, CU));

    std::vector<int> us = q == 2 ? sp.members : std::vector<int>{U, sp.members.back()};
    for (int m : us) {
      std::set<QuadForm> forms;
      for (const auto& P : points_of(F, S.elements[sp.centre].plane)) {
        Conic c = pencil_image(S, sp, planes, P.coords, m);
        REQUIRE(is_special_conic(S, c));
        forms.insert(normalize_form(F, c.form));
      }
      REQUIRE(static_cast<int>(forms.size()) == q * q + q + 1);
      std::set<QuadForm> all;
      for (const auto& c : special_conics(S, m)) all.insert(normalize_form(F, c.form));
      REQUIRE(forms == all);
    }
  }
}

TEST_CASE("shadow of the canonical subline l_1") {
  for (int q : {2, 3, 4, 5}) {
    auto ctx = FieldCtx::create(q);
    auto S = build_spread(ctx);
    const FiniteField& E = ctx.ext();
    auto B = canonical_subplane(ctx);
    const auto& l1 = B.lines[line_idx(B, normalize(E, {1, 0, E.neg(1)}))];
    auto N = cubic_of_subline(S, subline_through(ctx, B.points[l1[0]], B.points[l1[1]], B.points[l1[2]]));
    auto D = shadow_of(S, N);
    CHECK(D.host == S.index_of_tag({0, 1, 0}));
    std::vector<Vec> want{canon::D_inf(ctx)};
    for (int e = 0; e < q; ++e) want.push_back(canon::D(ctx, el(e)));
    CHECK(sorted_points(D) == sorted(want));

    const int n = static_cast<int>(D.points.size());
    if (q % 2 == 0) {
      auto fits = special_conics_through(S, D.host, D.points);
      REQUIRE(fits.size() == 1);
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k)
            REQUIRE(special_conics_through(S, D.host, {D.points[i], D.points[j], D.points[k]}).empty());
    }
  }
}

TEST_CASE("distinct shadows in a 3-space") {
  auto ctx = FieldCtx::create(2);
  auto S = build_spread(ctx);
  auto space = line_to_3space(S, normalize(ctx.ext(), {1, 0, ctx.ext().neg(1)}));
  auto c = count_distinct_shadows(S, space);
  CHECK(c.sublines == 56);
  CHECK(c.shadows == 7);
}

TEST_CASE("I-points, I-lines and I-planes") {
  for (int q : {2, 3}) {
    auto ctx = FieldCtx::create(q);
    auto S = build_spread(ctx);
    const FiniteField& F = ctx.base();
    auto B = canonical_subplane(ctx);
    auto V = surface_of_subplane(S, B);
    auto sp = splash_of(S, B);
    for (int e = 0; e < q; ++e)
      for (int d = 0; d < q; ++d)
        for (int f = 0; f < q; ++f) {
          int l = line_idx(B, canon::ell(ctx, el(e), el(d), el(f)));
          int P = point_idx(B, canon::P(ctx, el(e), el(d)));
          int U = point_idx(B, canon::U(ctx, el(f)));
          REQUIRE(I_point(S, B, P, l).coords == canon::I_P(ctx, el(e), el(d), el(f)));
          REQUIRE(I_point(S, B, U, l).coords == canon::I_U(ctx, el(e), el(d), el(f)));
          REQUIRE(S.owner(I_point(S, B, P, l).coords) == S.index_of_tag(meet_lines(ctx.ext(), B.line_coords[l], kLineInf)));
        }
    for (int e = 0; e < q; ++e)
      for (int d = 0; d < q; ++d) {
        auto I = I_line(S, B, point_idx(B, canon::P(ctx, el(e), el(d))));
        REQUIRE(I.contains(F, canon::C(ctx, el(e))));
      }
    for (int f = 0; f < q; ++f) REQUIRE(I_line(S, B, point_idx(B, canon::U(ctx, el(f)))).contains(F, canon::C_inf(ctx)));
    CHECK_THROWS_AS(I_point(S, B, point_idx(B, canon::U(ctx, 0)), line_idx(B, canon::m_inf(ctx))), GeometryError);

    std::set<ProjSubspace> tangents;
    for (int e = 0; e <= q; ++e) {
      int m = line_idx(B, e == q ? canon::m_inf(ctx) : canon::m(ctx, el(e)));
      auto pl = I_plane(S, B, m);
      Vec Ce = e == q ? canon::C_inf(ctx) : canon::C(ctx, el(e));
      Vec Te = e == q ? canon::Tpt_inf(ctx) : canon::Tpt(ctx, el(e));
      REQUIRE(pl.centre_line == span(F, std::vector<ProjPoint>{pp(Ce), pp(Te)}));
      REQUIRE(pl.centre_line == conic_tangent(F, V.conic, pp(Ce)));
      REQUIRE(is_cover_plane(S, sp, pl.plane));
      tangents.insert(pl.centre_line);
    }
    CHECK(static_cast<int>(tangents.size()) == q + 1);

    // The I-planes meet [L] in the shadow of the subline of B through L.
    std::vector<CoverPlane> iplanes;
    for (int m : B.lines_through_T()) iplanes.push_back(I_plane(S, B, m));
    for (int li = 0; li < static_cast<int>(B.lines.size()); ++li) {
      const auto& l = B.lines[li];
      if (std::count(l.begin(), l.end(), B.T)) continue;
      auto N = cubic_of_subline(S, subline_through(ctx, B.points[l[0]], B.points[l[1]], B.points[l[2]]));
      auto D = shadow_of(S, N);
      std::vector<Vec> hits;
      for (const auto& c : iplanes) {
        auto x = meet(F, c.plane, S.elements[D.host].plane);
        REQUIRE(x.dim() == 0);
        hits.push_back(x.basis()[0]);
      }
      REQUIRE(sorted(hits) == sorted_points(D));
    }
  }
}

TEST_CASE("tangent subspaces") {
  for (int q : {2, 3}) {
    auto ctx = FieldCtx::create(q);
    auto S = build_spread(ctx);
    const FiniteField& F = ctx.base();
    auto B = canonical_subplane(ctx);
    auto V = surface_of_subplane(S, B);
    for (int P = 0; P < static_cast<int>(B.points.size()); ++P) {
      if (P == B.T) continue;
      auto X = tangent_subspace(S, B, P);
      REQUIRE(X.dim() == 2);
      ProjPoint sP = ProjPoint::from(F, sigma_of(ctx, B.points[P]));
      int gens = 0;
      for (const auto& g : V.generators)
        if (g.contains(F, sP)) {
          ++gens;
          REQUIRE(X.contains(F, g));
        }
      REQUIRE(gens == 1);
      REQUIRE(X == affine_image_span(S, perp_subplane(ctx, B, P)));
      for (int li = 0; li < static_cast<int>(B.lines.size()); ++li) {
        const auto& l = B.lines[li];
        if (!std::count(l.begin(), l.end(), P) || std::count(l.begin(), l.end(), B.T)) continue;
        auto N = cubic_of_subline(S, subline_through(ctx, B.points[l[0]], B.points[l[1]], B.points[l[2]]));
        REQUIRE(X.contains(F, tangent_of_cubic(F, N, sP)));
      }
      std::set<int> owners;
      for_each_point(F, meet(F, X, S.sigma_inf), [&](const Vec& v) { owners.insert(S.owner(v)); });
      REQUIRE(static_cast<int>(owners.size()) == q + 1);
    }
  }
}
