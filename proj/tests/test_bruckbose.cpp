#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "tsplash/bruckbose.hpp"

using namespace tsplash;

namespace {

ProjSubspace extend(const RegularSpread& S, const ProjSubspace& P) {
  return ProjSubspace(S.E(), P.basis(), P.vec_len());
}

}  // namespace

TEST_CASE("sigma") {
  auto ctx = FieldCtx::create(3);
  auto one = ctx.fq3(1);
  CHECK(sigma(ctx, one, one, ctx.fq(1)).coords == Vec{1, 0, 0, 1, 0, 0, 1});
  CHECK(sigma(ctx, ctx.tau(), ctx.fq3(0), ctx.fq(0)).coords == Vec{0, 1, 0, 0, 0, 0, 0});
  for (auto e : ctx.fq_elements()) {
    Vec v = sigma_vec(ctx, (ctx.theta_minus(e) * ctx.tau()).value(), 0, 0);
    Vec want{ctx.t0().value(), (e * e + e * ctx.t2()).value(), (-e).value(), 0, 0, 0, 0};
    REQUIRE(v == want);
  }
  CHECK_THROWS(sigma(ctx, ctx.fq3(0), ctx.fq3(0), ctx.fq(0)));
  Vec P{ctx.tau().value(), 7, 1};
  CHECK(affine_preimage(ctx, sigma_of(ctx, P)) == P);
}

TEST_CASE("spread partitions Sigma_inf") {
  for (int q : {2, 3, 4, 5}) {
    auto S = build_spread(FieldCtx::create(q));
    const std::uint64_t n = static_cast<std::uint64_t>(q) * q * q + 1;
    REQUIRE(S.elements.size() == n);
    std::set<ProjPoint> seen;
    std::uint64_t incidences = 0;
    for (size_t i = 0; i < S.elements.size(); ++i) {
      for (const auto& P : points_of(S.F(), S.elements[i].plane)) {
        seen.insert(P);
        ++incidences;
        REQUIRE(S.owner(P.coords) == static_cast<int>(i));
      }
    }
    CHECK(incidences == n * (q * q + q + 1));
    CHECK(seen.size() == projective_count(q, 5));
  }
}

TEST_CASE("spread elements meet the transversals") {
  for (int q : {2, 3}) {
    auto S = build_spread(FieldCtx::create(q));
    const auto& ctx = S.ctx;
    const FiniteField& E = S.E();
    Elem x0 = E.sub(E.add(ctx.poly().t1, E.mul(ctx.poly().t2, ctx.tau().value())),
                    E.mul(ctx.tau().value(), ctx.tau().value()));
    Elem x1 = E.sub(ctx.poly().t2, ctx.tau().value());
    CHECK(S.g.contains(E, Vec{x0, x1, E.neg(1), 0, 0, 0, 0}));
    CHECK(S.g.contains(E, Vec{0, 0, 0, x0, x1, E.neg(1), 0}));
    std::set<Vec> on_g;
    for (const auto& el : S.elements) {
      auto ext = extend(S, el.plane);
      auto m = meet(E, ext, S.g);
      REQUIRE(m.dim() == 0);
      REQUIRE(ext.contains(E, el.transversal[0]));
      REQUIRE(ext.contains(E, el.transversal[1]));
      REQUIRE(ext.contains(E, el.transversal[2]));
      REQUIRE(S.g.contains(E, el.transversal[0]));
      on_g.insert(el.transversal[0]);
    }
    CHECK(on_g.size() == S.elements.size());
    // Conjugate lines g^q and g^{q^2} also meet every element.
    const auto& el = S.element_of({1, 0, 0});
    Vec conj0(7), conj1(7);
    for (int i = 0; i < 7; ++i) conj0[i] = ctx.frobenius(el.transversal[0][i]);
    CHECK(normalize(E, conj0) == el.transversal[1]);
    for (int i = 0; i < 7; ++i) conj1[i] = ctx.frobenius(conj0[i]);
    CHECK(normalize(E, conj1) == el.transversal[2]);
  }
}

TEST_CASE("element_of matches sigma of the scaled tag") {
  for (int q : {2, 3}) {
    auto S = build_spread(FieldCtx::create(q));
    const FiniteField& E = S.E();
    for (int a = 0; a < E.size(); ++a) {
      Vec T = normalize(E, {static_cast<Elem>(a), 1, 0});
      const auto& el = S.element_of(T);
      for (int lam = 1; lam < E.size(); ++lam) {
        Vec v = sigma_vec(S.ctx, E.mul(lam, T[0]), E.mul(lam, T[1]), 0);
        REQUIRE(el.plane.contains(S.F(), v));
      }
    }
    const auto& elT = S.element_of({1, 0, 0});
    for (int lam = 1; lam < E.size(); ++lam) REQUIRE(elT.plane.contains(S.F(), sigma_vec(S.ctx, lam, 0, 0)));
    CHECK(S.index_of_tag({static_cast<Elem>(q - 1), 0, 0}) == S.index_of_tag({1, 0, 0}));
    CHECK_THROWS_AS(S.index_of_tag({1, 0, 1}), GeometryError);
  }
}

TEST_CASE("spread is regular") {
  auto check = [](const RegularSpread& S, int i, int j, int k) {
    auto R = regulus_through(S.F(), S.elements[i].plane, S.elements[j].plane, S.elements[k].plane);
    REQUIRE(static_cast<int>(R.size()) == S.q() + 1);
    std::set<int> idx;
    for (const auto& P : R) {
      int e = S.element_with_plane(P);
      REQUIRE(e >= 0);
      idx.insert(e);
    }
    REQUIRE(static_cast<int>(idx.size()) == S.q() + 1);
    return idx;
  };
  {
    auto S = build_spread(FieldCtx::create(2));
    const int n = static_cast<int>(S.elements.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) check(S, i, j, k);
  }
  for (int q : {3, 4}) {
    auto S = build_spread(FieldCtx::create(q));
    std::mt19937_64 rng(q);
    const int n = static_cast<int>(S.elements.size());
    for (int t = 0; t < 200; ++t) {
      int i = rng() % n, j = rng() % n, k = rng() % n;
      if (i == j || j == k || i == k) continue;
      check(S, i, j, k);
    }
  }
}

TEST_CASE("regulus of elements is the image of a subline of l_inf") {
  auto S = build_spread(FieldCtx::create(2));
  const FiniteField& E = S.E();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    Vec A{1, 0, 0}, B{static_cast<Elem>(rng() % E.size()), 1, 0}, C{static_cast<Elem>(rng() % E.size()), 1, 0};
    if (B == C) continue;
    auto b = subline_through(S.ctx, A, B, C);
    auto img = subline_image(S, b);
    REQUIRE(std::holds_alternative<ReguliImage>(img));
    auto els = std::get<ReguliImage>(img).elements;
    auto R = regulus_through(S.F(), S.elements[els[0]].plane, S.elements[els.back()].plane,
                             S.elements[els[1]].plane);
    std::set<int> a(els.begin(), els.end()), r;
    for (const auto& P : R) r.insert(S.element_with_plane(P));
    REQUIRE(a == r);
  }
}

TEST_CASE("lines of PG(2,q^3) become 3-spaces") {
  auto S = build_spread(FieldCtx::create(2));
  const FiniteField& E = S.E();
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    Vec l{static_cast<Elem>(rng() % E.size()), static_cast<Elem>(rng() % E.size()),
          static_cast<Elem>(rng() % E.size())};
    if (l[0] == 0 && l[1] == 0) continue;
    auto space = line_to_3space(S, l);
    REQUIRE(space.dim() == 3);
    Vec L{l[1], E.neg(l[0]), 0};
    REQUIRE(meet(S.F(), space, S.sigma_inf) == S.element_of(L).plane);
    for (int x = 0; x < E.size(); ++x)
      for (int y = 0; y < E.size(); ++y) {
        Vec P{static_cast<Elem>(x), static_cast<Elem>(y), 1};
        if (incident(E, P, l)) REQUIRE(space.contains(S.F(), sigma_of(S.ctx, P)));
      }
    // Another line through L.
    Vec m = line_through(E, L, {0, 0, 1});
    if (normalize(E, m) == normalize(E, l)) m = line_through(E, L, {1, 1, 1});
    if (normalize(E, m) == normalize(E, l)) continue;
    REQUIRE(meet(S.F(), space, line_to_3space(S, m)) == S.element_of(L).plane);
  }
  CHECK_THROWS_AS(line_to_3space(S, {0, 0, 1}), GeometryError);
}

TEST_CASE("subline images") {
  auto S = build_spread(FieldCtx::create(3));
  const auto& ctx = S.ctx;
  const FiniteField& E = S.E();
  const Elem tau = ctx.tau().value();

  // One point at infinity: a line of PG(6,q) off Sigma_inf.
  auto b1 = subline_through(ctx, {0, 0, 1}, {1, 0, 0}, {1, 0, 1});
  auto img1 = subline_image(S, b1);
  REQUIRE(std::holds_alternative<ProjSubspace>(img1));
  auto line = std::get<ProjSubspace>(img1);
  CHECK(line.dim() == 1);
  CHECK(!S.sigma_inf.contains(S.F(), line));

  // The line [1,0,-1] through P_inf = (1,1,1) and the points (e+tau, e, e+tau).
  Vec Pinf{1, 1, 1};
  auto P = [&](Elem e) { return normalize(E, {E.add(e, tau), e, E.add(e, tau)}); };
  auto b = subline_through(ctx, P(0), Pinf, P(1));
  auto pts = subline_points(ctx, b);
  std::set<Vec> want{Pinf};
  for (int e = 0; e < 3; ++e) want.insert(P(static_cast<Elem>(e)));
  CHECK(std::set<Vec>(pts.begin(), pts.end()) == want);
  auto img = subline_image(S, b);
  REQUIRE(std::holds_alternative<TwistedCubic>(img));
  const auto& N = std::get<TwistedCubic>(img);
  std::set<ProjPoint> npts(N.points.begin(), N.points.end()), wsig;
  for (const auto& w : want) wsig.insert(ProjPoint::from(S.F(), sigma_of(ctx, w)));
  CHECK(npts == wsig);
  CHECK(is_special_cubic(S, N));
  CHECK(host_element(S, N.ambient) == S.index_of_tag({0, 1, 0}));

  // Round trip: preimages of the cubic are the subline.
  std::set<Vec> back;
  for (const auto& p : N.points) back.insert(affine_preimage(ctx, p.coords));
  std::set<Vec> want_aff;
  for (const auto& w : want) want_aff.insert(linalg::scale(E, E.inv(w[2]), w));
  CHECK(back == want_aff);

  CHECK_THROWS_AS(subline_through(ctx, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}), GeometryError);
}

TEST_CASE("closed-form cubic N_e and its transversal parameter") {
  for (int q : {2, 3, 5}) {
    auto S = build_spread(FieldCtx::create(q));
    const auto& ctx = S.ctx;
    const FiniteField& F = S.F();
    const FiniteField& E = S.E();
    Elem t0 = ctx.poly().t0, t1 = ctx.poly().t1, t2 = ctx.poly().t2;
    // Columns of e^0..e^3 in (x0,x1,x2,y0,y1,y2,z).
    Mat param(4, Vec(7, 0));
    Vec theta{t0, F.neg(t1), t2, 1};
    Vec y0{0, F.neg(t1), t2, 1}, y1{0, F.neg(t2), F.neg(1), 0}, y2{0, 1, 0, 0};
    for (int k = 0; k < 4; ++k) {
      param[k][0] = theta[k];
      param[k][3] = y0[k];
      param[k][4] = y1[k];
      param[k][5] = y2[k];
      param[k][6] = theta[k];
    }
    auto N = make_twisted_cubic(F, param);
    auto b = subline_through(ctx, normalize(E, {ctx.tau().value(), 0, ctx.tau().value()}), {1, 1, 1},
                             normalize(E, {E.add(1, ctx.tau().value()), 1, E.add(1, ctx.tau().value())}));
    auto M = cubic_of_subline(S, b);
    CHECK(std::set<ProjPoint>(N.points.begin(), N.points.end()) ==
          std::set<ProjPoint>(M.points.begin(), M.points.end()));
    Vec at = eval_curve(E, param, 1, E.neg(ctx.tau().value()));
    int U = S.index_of_tag({0, 1, 0});
    bool hit = false;
    for (const auto& X : S.elements[U].transversal) hit = hit || normalize(E, at) == X;
    CHECK(hit);
    CHECK(is_special_cubic(S, N));
  }
}

TEST_CASE("a generic cubic in the same 3-space is not special") {
  auto S = build_spread(FieldCtx::create(3));
  const FiniteField& F = S.F();
  const FiniteField& E = S.E();
  auto space = line_to_3space(S, {1, 0, 2});
  int host = host_element(S, space);
  REQUIRE(host >= 0);
  std::mt19937_64 rng(21);
  int non_special = 0;
  for (int t = 0; t < 200; ++t) {
    Mat coef(4, Vec(4));
    for (auto& r : coef)
      for (auto& x : r) x = static_cast<Elem>(rng() % 3);
    if (linalg::det(F, coef) == 0) continue;
    Mat param;
    for (const auto& r : coef) param.push_back(space.combine(F, r));
    auto N = make_twisted_cubic(F, param);
    bool affine = true;
    for (const auto& p : N.points) affine = affine && p.coords[6] != 0;
    if (!affine) continue;
    // Independent membership scan over GF(27).
    bool meets = false;
    for (const auto& X : S.elements[host].transversal)
      for (int h = 0; h <= E.size(); ++h) {
        Vec v = h < E.size() ? eval_curve(E, param, 1, static_cast<Elem>(h)) : param[3];
        meets = meets || (!linalg::is_zero(v) && proportional(E, v, X));
      }
    CHECK(is_special_cubic(S, N) == meets);
    non_special += !meets;
  }
  CHECK(non_special > 0);
}

TEST_CASE("special conics") {
  for (int q : {2, 3, 4}) {
    auto S = build_spread(FieldCtx::create(q));
    const auto& ctx = S.ctx;
    const FiniteField& F = S.F();
    const int expect = q * q + q + 1;
    const int T = S.index_of_tag({1, 0, 0}), U = S.index_of_tag({0, 1, 0});
    REQUIRE(static_cast<int>(special_conics(S, T).size()) == expect);
    REQUIRE(static_cast<int>(special_conics(S, U).size()) == expect);
    if (q == 2)
      for (int i = 0; i < static_cast<int>(S.elements.size()); ++i)
        REQUIRE(static_cast<int>(special_conics(S, i).size()) == expect);

    // t0 z^2 - xy - t2 xz in [T].
    QuadForm CT{{0, 0, ctx.poly().t0, F.neg(1), F.neg(ctx.poly().t2), 0}};
    auto C = make_conic(F, S.elements[T].plane, CT);
    CHECK(is_special_conic(S, C));
    // y1^2 - t1 y2^2 + t2 y1 y2 - y0 y2 in [U].
    QuadForm CU{{0, 1, F.neg(ctx.poly().t1), 0, F.neg(1), ctx.poly().t2}};
    CHECK(is_special_conic(S, make_conic(F, S.elements[U].plane, CU)));
    // A non-special conic.
    QuadForm X{{1, 1, 1, 0, 0, 0}};
    if (q % 2 == 1 && discriminant(F, X) != 0) CHECK_FALSE(is_special_conic(S, make_conic(F, S.elements[T].plane, X)));
  }
}
