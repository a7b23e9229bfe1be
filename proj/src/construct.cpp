#include "tsplash/construct.hpp"

#include <algorithm>
#include <set>

namespace tsplash {

namespace {

// Coefficient vector of the quadratic form u^T A u on 3-vectors, in QuadForm order.
Vec monomials(const FiniteField& F, const Vec& u) {
  return {F.mul(u[0], u[0]), F.mul(u[1], u[1]), F.mul(u[2], u[2]),
          F.mul(u[0], u[1]), F.mul(u[0], u[2]), F.mul(u[1], u[2])};
}

// Odd characteristic only.
Mat form_matrix(const FiniteField& F, const QuadForm& Q) {
  const Elem h = F.inv(F.add(1, 1));
  const auto& c = Q.c;
  return {{c[0], F.mul(h, c[3]), F.mul(h, c[4])},
          {F.mul(h, c[3]), c[1], F.mul(h, c[5])},
          {F.mul(h, c[4]), F.mul(h, c[5]), c[2]}};
}

QuadForm matrix_form(const FiniteField& F, const Mat& m) {
  return {{m[0][0], m[1][1], m[2][2], F.add(m[0][1], m[1][0]), F.add(m[0][2], m[2][0]), F.add(m[1][2], m[2][1])}};
}

std::vector<ProjPoint> conic_on_line(const FiniteField& F, const Conic& C, const ProjSubspace& line) {
  std::vector<ProjPoint> out;
  for (const auto& p : C.points)
    if (line.contains(F, p)) out.push_back(p);
  return out;
}

}  // namespace

Vec line_coords_in_plane(const FiniteField& F, const ProjSubspace& plane, const ProjSubspace& line) {
  if (line.dim() != 1 || !plane.contains(F, line)) throw GeometryError("not a line of the plane");
  Vec a = plane.coords_of(line.basis()[0]), b = plane.coords_of(line.basis()[1]);
  return normalize(F, linalg::cross(F, a, b));
}

Conic special_conic_with_nucleus(const RegularSpread& S, int T_elem, const ProjPoint& N) {
  const FiniteField& F = S.F();
  if (F.characteristic() != 2) throw GeometryError("nucleus needs even q");
  const auto& plane = S.elements[T_elem].plane;
  if (!plane.contains(F, N)) throw GeometryError("nucleus is not in the element");
  std::vector<Conic> hits;
  for (auto& c : special_conics(S, T_elem)) {
    Vec n = normalize(F, plane.combine(F, nucleus(F, c.form)));
    if (n == N.coords) hits.push_back(std::move(c));
  }
  if (hits.size() != 1) throw GeometryError("no unique special conic with this nucleus");
  return hits[0];
}

EnvelopeConic envelope_to_conic(const RegularSpread& S, int T_elem, const std::vector<ProjSubspace>& lines) {
  const FiniteField& F = S.F();
  const auto& plane = S.elements[T_elem].plane;
  const int q = S.q();
  if (static_cast<int>(lines.size()) != q + 1) throw GeometryError("envelope needs q+1 lines");
  std::vector<Vec> u;
  for (const auto& l : lines) u.push_back(line_coords_in_plane(F, plane, l));
  if (std::set<Vec>(u.begin(), u.end()).size() != u.size()) throw GeometryError("envelope lines repeat");

  EnvelopeConic out;
  if (F.characteristic() == 2) {
    Vec n = linalg::cross(F, u[0], u[1]);
    for (const auto& v : u)
      if (linalg::dot(F, n, v) != 0) throw GeometryError("envelope lines are not concurrent");
    ProjPoint N = ProjPoint::from(F, plane.combine(F, n));
    out.conic = special_conic_with_nucleus(S, T_elem, N);
    out.nucleus = N;
  } else {
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = i + 1; j < u.size(); ++j)
        for (size_t k = j + 1; k < u.size(); ++k)
          if (linalg::det(F, {u[i], u[j], u[k]}) == 0) throw GeometryError("three envelope lines are concurrent");
    Mat eqs;
    for (const auto& v : u) eqs.push_back(monomials(F, v));
    Mat ker = linalg::nullspace(F, eqs, 6);
    if (ker.empty()) throw GeometryError("lines lie on no dual conic");
    std::vector<Conic> fits;
    for_each_point(F, ProjSubspace(F, ker, 6), [&](const Vec& c) {
      QuadForm dual{{c[0], c[1], c[2], c[3], c[4], c[5]}};
      if (discriminant(F, dual) == 0) return;
      Mat inv = *linalg::inverse(F, form_matrix(F, dual));
      Conic C = make_conic(F, plane, normalize_form(F, matrix_form(F, inv)));
      if (!is_special_conic(S, C)) return;
      for (const auto& l : lines)
        if (conic_on_line(F, C, l).size() != 1) return;
      fits.push_back(std::move(C));
    });
    if (fits.size() != 1) throw GeometryError("dual conic fit is not unique");
    out.conic = fits[0];
  }
  for (const auto& l : lines) {
    auto pts = conic_on_line(F, out.conic, l);
    if (pts.size() != 1) throw GeometryError("envelope line is not tangent to the conic");
    out.contact.push_back(pts[0]);
  }
  if (F.characteristic() != 2) {
    // Contact points are the poles of the lines under the dual form.
    Mat A = form_matrix(F, out.conic.form);
    Mat Ainv = *linalg::inverse(F, A);
    for (size_t i = 0; i < u.size(); ++i) {
      ProjPoint pole = ProjPoint::from(F, plane.combine(F, linalg::mul(F, Ainv, u[i])));
      if (pole != out.contact[i]) throw GeometryError("contact point is not the pole of its line");
    }
  }
  return out;
}

Projectivity1D eta_projectivity(const RegularSpread& S, const TwistedCubic& N, const Conic& C, const Mat& conic_param) {
  const FiniteField& F = S.F();
  const FiniteField& E = S.E();
  if (!is_special_cubic(S, N) || !is_special_conic(S, C)) throw GeometryError("eta needs special directrices");
  const int host = host_element(S, N.ambient), centre = conic_element(S, C);
  std::vector<Vec> xs, ys;
  for (int i = 0; i < 3; ++i) {
    int h = curve_ext_param(E, N.param, S.elements[host].transversal[i]);
    int k = curve_ext_param(E, conic_param, S.elements[centre].transversal[i]);
    if (h < 0 || k < 0) throw GeometryError("transversal point is not on the extended curve");
    xs.push_back(param_vec(static_cast<Elem>(h), E.size()));
    ys.push_back(param_vec(static_cast<Elem>(k), E.size()));
  }
  Mat M = mobius_from_pairs(E, xs, ys);
  Vec flat{M[0][0], M[0][1], M[1][0], M[1][1]};
  flat = normalize(E, flat);
  for (Elem x : flat)
    if (x >= F.size()) throw GeometryError("eta is not defined over GF(q)");
  Projectivity1D eta;
  eta.matrix = {{flat[0], flat[1]}, {flat[2], flat[3]}};
  for (int i = 0; i <= F.size(); ++i) {
    Vec y = linalg::mul(F, eta.matrix, param_vec(static_cast<Elem>(i), F.size()));
    eta.pairing.push_back(param_index(F, normalize(F, y)));
  }
  return eta;
}

// ---------------------------------------------------------------------------

std::optional<TangentSubplane> subplane_from_points(const FieldCtx& ctx, const std::vector<Vec>& pts) {
  const FiniteField& E = ctx.ext();
  const int q = ctx.q();
  if (static_cast<int>(pts.size()) != q * q + q + 1) return std::nullopt;
  std::vector<Vec> inf, aff;
  for (const auto& p : pts) (is_infinite(p) ? inf : aff).push_back(normalize(E, p));
  if (inf.size() != 1) return std::nullopt;
  const Vec& T = inf[0];
  const Vec& A = aff[0];
  for (size_t i = 1; i < aff.size(); ++i) {
    const Vec& B = aff[i];
    if (incident(E, T, line_through(E, A, B))) continue;
    for (size_t j = i + 1; j < aff.size(); ++j) {
      const Vec& X = aff[j];
      if (linalg::det(E, {T, A, X}) == 0 || linalg::det(E, {T, B, X}) == 0 || linalg::det(E, {A, B, X}) == 0)
        continue;
      auto sub = subplane_from_frame(ctx, A, B, T, X);
      if (!sub) continue;
      std::vector<Vec> want = pts;
      for (auto& w : want) w = normalize(E, w);
      std::sort(want.begin(), want.end());
      if (sub->point_key() != want) return std::nullopt;
      return as_tangent(std::move(*sub));
    }
  }
  return std::nullopt;
}

Construction construct_subplane(const RegularSpread& S, const Splash& sp, const Subline& ell) {
  return construct_subplane(S, sp, cover_planes(S, sp), ell);
}

Construction construct_subplane(const RegularSpread& S, const Splash& sp, const std::vector<CoverPlane>& planes,
                                const Subline& ell) {
  const FiniteField& F = S.F();
  const FiniteField& E = S.E();
  for (const auto& p : subline_points(S.ctx, ell))
    if (is_infinite(p)) throw GeometryError("subline meets l_inf");
  Construction K;
  K.L = S.index_of_tag(meet_lines(E, subline_carrier(S.ctx, ell), kLineInf));
  if (K.L == sp.centre) throw GeometryError("subline's line passes through the centre");
  if (!sp.is_member[K.L]) throw GeometryError("subline's line misses the splash");

  // Step 1: the shadow.
  TwistedCubic N = cubic_of_subline(S, ell);
  K.shadow = shadow_of(S, N);

  // Step 2: cover planes through the shadow points meet [T] in an envelope.
  std::vector<ProjSubspace> lines;
  for (const auto& d : K.shadow.points) {
    K.shadow_planes.push_back(cover_plane_through_point(S, sp, planes, d.coords));
    lines.push_back(K.shadow_planes.back().centre_line);
  }
  K.envelope = envelope_to_conic(S, sp.centre, lines);

  // Step 3: join each cubic point to the contact point of its line.
  RuledSurface& V = K.surface;
  V.conic = K.envelope.conic;
  V.conic_param = conic_parametrization(F, V.conic);
  V.cubic = N;
  V.centre = sp.centre;
  V.host = K.L;
  auto by_param = conic_points_by_param(F, V.conic_param);
  for (const auto& c : K.envelope.contact)
    K.phi.push_back(static_cast<int>(std::find(by_param.begin(), by_param.end(), c) - by_param.begin()));
  V.pairing = K.phi;
  fill_generators(S, V);
  K.eta = eta_projectivity(S, N, V.conic, V.conic_param);

  auto sub = subplane_from_points(S.ctx, surface_plane_points(S, V));
  if (!sub) throw GeometryError("ruled surface is not the image of a tangent subplane");
  K.subplane = std::move(*sub);
  return K;
}

// ---------------------------------------------------------------------------

std::vector<TangentSubplane> brute_force_subplanes(const RegularSpread& S, const Splash& sp, const Subline& ell) {
  const FieldCtx& ctx = S.ctx;
  const FiniteField& E = S.E();
  auto ell_pts = subline_points(ctx, ell);
  const Vec carrier = subline_carrier(ctx, ell);
  std::set<std::vector<Vec>> seen;
  std::vector<TangentSubplane> out;
  for (const auto& Tp : sp.points)
    for (int x = 0; x < E.size(); ++x)
      for (int y = 0; y < E.size(); ++y) {
        Vec X{static_cast<Elem>(x), static_cast<Elem>(y), 1};
        if (incident(E, X, carrier)) continue;
        auto sub = subplane_from_frame(ctx, ell_pts[0], ell_pts[1], Tp, X);
        if (!sub) continue;
        if (!std::all_of(ell_pts.begin(), ell_pts.end(), [&](const Vec& p) { return sub->contains(p); })) continue;
        auto B = as_tangent(std::move(*sub));
        if (!B || B->centre() != Tp) continue;
        auto key = B->point_key();
        if (seen.count(key)) continue;
        if (!(splash_of(S, *B) == sp)) continue;
        seen.insert(key);
        out.push_back(std::move(*B));
      }
  return out;
}

TangentSubplane brute_force_unique_subplane(const RegularSpread& S, const Splash& sp, const Subline& ell) {
  const FiniteField& E = S.E();
  for (const auto& p : subline_points(S.ctx, ell))
    if (is_infinite(p)) throw GeometryError("subline meets l_inf");
  int L = S.index_of_tag(meet_lines(E, subline_carrier(S.ctx, ell), kLineInf));
  if (L == sp.centre || !sp.is_member[L]) throw GeometryError("subline's line must meet a non-centre splash point");
  auto all = brute_force_subplanes(S, sp, ell);
  if (all.size() != 1) throw GeometryError("expected exactly one subplane, found " + std::to_string(all.size()));
  return all[0];
}

Subline random_subline(const RegularSpread& S, const Splash& sp, std::mt19937_64& rng) {
  const FiniteField& E = S.E();
  std::uniform_int_distribution<int> pick(0, E.size() - 1);
  std::uniform_int_distribution<int> mem(0, static_cast<int>(sp.members.size()) - 1);
  const Vec L = S.elements[sp.members[mem(rng)]].tag;
  const Vec A{static_cast<Elem>(pick(rng)), static_cast<Elem>(pick(rng)), 1};
  auto P = [&](int t) { return normalize(E, linalg::axpy(E, static_cast<Elem>(t), L, A)); };
  for (;;) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    Subline s = subline_through(S.ctx, P(a), P(b), P(c));
    auto pts = subline_points(S.ctx, s);
    if (std::none_of(pts.begin(), pts.end(), [](const Vec& v) { return is_infinite(v); })) return s;
  }
}

}  // namespace tsplash
