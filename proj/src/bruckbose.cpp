#include "tsplash/bruckbose.hpp"

#include <algorithm>

namespace tsplash {

Vec sigma_vec(const FieldCtx& ctx, Elem alpha, Elem beta, Elem z) {
  const FiniteField& E = ctx.ext();
  return {E.coeff(alpha, 0), E.coeff(alpha, 1), E.coeff(alpha, 2), E.coeff(beta, 0),
          E.coeff(beta, 1),  E.coeff(beta, 2),  z};
}

ProjPoint sigma(const FieldCtx& ctx, Fq3 alpha, Fq3 beta, Fq z) {
  return ProjPoint::from(ctx.base(), sigma_vec(ctx, alpha.value(), beta.value(), z.value()));
}

Vec sigma_of(const FieldCtx& ctx, const Vec& P) {
  const FiniteField& E = ctx.ext();
  if (P[2] == 0) return sigma_vec(ctx, P[0], P[1], 0);
  Elem inv = E.inv(P[2]);
  return sigma_vec(ctx, E.mul(inv, P[0]), E.mul(inv, P[1]), 1);
}

Vec unsigma(const FieldCtx& ctx, const Vec& v) {
  const FiniteField& E = ctx.ext();
  return {E.from_coeffs({v[0], v[1], v[2]}), E.from_coeffs({v[3], v[4], v[5]}), v[6]};
}

Vec affine_preimage(const FieldCtx& ctx, const Vec& v) {
  if (v[6] == 0) throw GeometryError("point of Sigma_inf has no affine preimage");
  const FiniteField& F = ctx.base();
  Vec w = linalg::scale(F, F.inv(v[6]), v);
  return unsigma(ctx, w);
}

// ---------------------------------------------------------------------------

int RegularSpread::index_of_tag(const Vec& T) const {
  if (T.size() != 3 || T[2] != 0) throw GeometryError("point is not on l_inf");
  auto it = tag_index_.find(normalize(E(), T));
  if (it == tag_index_.end()) throw GeometryError("no spread element for tag");
  return it->second;
}

int RegularSpread::owner(const Vec& v) const {
  if (v.size() != 7 || v[6] != 0) throw GeometryError("point is not in Sigma_inf");
  int o = owner_[encode(F(), normalize(F(), v))];
  if (o < 0) throw GeometryError("point not covered by the spread");
  return o;
}

int RegularSpread::element_with_plane(const ProjSubspace& P) const {
  if (P.dim() != 2 || P.vec_len() != 7) return -1;
  for (const auto& r : P.basis())
    if (r[6] != 0) return -1;
  int idx = owner(P.basis()[0]);
  return elements[idx].plane == P ? idx : -1;
}

RegularSpread build_spread(const FieldCtx& ctx) {
  const FiniteField& E = ctx.ext();
  const FiniteField& F = ctx.base();
  RegularSpread S(ctx);
  const Elem tau = ctx.tau().value();
  const Elem t1 = ctx.poly().t1, t2 = ctx.poly().t2;
  const Elem x0 = E.sub(E.add(t1, E.mul(t2, tau)), E.mul(tau, tau));
  const Elem x1 = E.sub(t2, tau);
  const Elem x2 = E.neg(1);
  const Vec R1{x0, x1, x2, 0, 0, 0, 0}, R2{0, 0, 0, x0, x1, x2, 0};
  S.g = ProjSubspace(E, {R1, R2}, 7);
  Mat id7 = linalg::identity(7);
  id7.pop_back();
  S.sigma_inf = ProjSubspace(F, id7, 7);

  auto frob = [&](const Vec& v) {
    Vec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = ctx.frobenius(v[i]);
    return w;
  };
  auto trace = [&](const Vec& v) {
    Vec a = frob(v), b = frob(a), t(v.size());
    for (size_t i = 0; i < v.size(); ++i) t[i] = E.add(v[i], E.add(a[i], b[i]));
    return t;
  };

  std::uint64_t cells = 1;
  for (int i = 0; i < 6; ++i) cells *= F.size();
  S.owner_.assign(cells, -1);

  std::vector<Vec> gpts;
  for (int mu = 0; mu < E.size(); ++mu) gpts.push_back(linalg::axpy(E, static_cast<Elem>(mu), R2, R1));
  gpts.push_back(R2);

  for (const Vec& P : gpts) {
    Mat rows;
    for (Elem lam : {Elem{1}, tau, E.mul(tau, tau)}) rows.push_back(trace(linalg::scale(E, lam, P)));
    SpreadElement el;
    el.plane = ProjSubspace(F, std::move(rows), 7);
    if (el.plane.dim() != 2) throw GeometryError("transversal point does not give a plane");
    Vec t = unsigma(ctx, el.plane.basis()[0]);
    el.tag = normalize(E, t);
    el.transversal[0] = normalize(E, P);
    el.transversal[1] = normalize(E, frob(P));
    el.transversal[2] = normalize(E, frob(frob(P)));
    const int idx = static_cast<int>(S.elements.size());
    if (!S.tag_index_.emplace(el.tag, idx).second) throw GeometryError("two spread elements share a tag");
    for_each_point(F, el.plane, [&](const Vec& v) {
      int& o = S.owner_[encode(F, v)];
      if (o >= 0) throw GeometryError("spread elements overlap");
      o = idx;
    });
    S.elements.push_back(std::move(el));
  }
  return S;
}

ProjSubspace line_to_3space(const RegularSpread& S, const Vec& line) {
  const FiniteField& E = S.E();
  Vec l = normalize(E, line);
  if (l == kLineInf) throw GeometryError("l_inf has no 3-space");
  Vec L{l[1], E.neg(l[0]), 0};
  Vec A = l[0] != 0 ? Vec{E.neg(E.div(l[2], l[0])), 0, 1} : Vec{0, E.neg(E.div(l[2], l[1])), 1};
  return span(S.F(), S.element_of(L).plane, ProjPoint::from(S.F(), sigma_of(S.ctx, A)));
}

Mat cubic_param_of_subline(const RegularSpread& S, const Subline& b) {
  const FieldCtx& ctx = S.ctx;
  const FiniteField& E = S.E();
  const Elem z0 = b.v0[2], z1 = b.v1[2];
  const Elem z0q = ctx.frobenius(z0), z0qq = ctx.frobenius(z0q);
  const Elem z1q = ctx.frobenius(z1), z1qq = ctx.frobenius(z1q);
  // Multiply through by w(h) = (z0 + h z1)^q (z0 + h z1)^{q^2} so the last
  // coordinate becomes the norm of z0 + h z1, which lies in GF(q).
  const Elem w0 = E.mul(z0q, z0qq);
  const Elem w1 = E.add(E.mul(z0q, z1qq), E.mul(z1q, z0qq));
  const Elem w2 = E.mul(z1q, z1qq);
  auto comb = [&](Elem a, const Vec& x, Elem c, const Vec& y) {
    Vec r(3);
    for (int i = 0; i < 3; ++i) r[i] = E.add(E.mul(a, x[i]), E.mul(c, y[i]));
    return r;
  };
  const Vec zero(3, 0);
  std::array<Vec, 4> c{comb(w0, b.v0, 0, zero), comb(w1, b.v0, w0, b.v1), comb(w2, b.v0, w1, b.v1),
                       comb(w2, b.v1, 0, zero)};
  Mat param;
  for (const auto& ck : c) {
    if (!ctx.in_subfield(ctx.fq3(ck[2]))) throw GeometryError("norm coefficient outside GF(q)");
    param.push_back(sigma_vec(ctx, ck[0], ck[1], ck[2]));
  }
  return param;
}

SublineImage subline_image(const RegularSpread& S, const Subline& b) {
  auto pts = subline_points(S.ctx, b);
  int inf = 0;
  for (const auto& P : pts) inf += is_infinite(P);
  if (inf == static_cast<int>(pts.size())) {
    ReguliImage r;
    for (const auto& P : pts) r.elements.push_back(S.index_of_tag(P));
    return r;
  }
  if (inf == 1) {
    Mat rows;
    for (const auto& P : pts)
      if (!is_infinite(P) && rows.size() < 2) rows.push_back(sigma_of(S.ctx, P));
    return ProjSubspace(S.F(), std::move(rows), 7);
  }
  if (inf == 0) return make_twisted_cubic(S.F(), cubic_param_of_subline(S, b));
  throw GeometryError("point set is not an order-q subline");
}

TwistedCubic cubic_of_subline(const RegularSpread& S, const Subline& b) {
  auto img = subline_image(S, b);
  if (!std::holds_alternative<TwistedCubic>(img)) throw GeometryError("subline meets l_inf");
  return std::get<TwistedCubic>(std::move(img));
}

// ---------------------------------------------------------------------------

Vec transversal_plane_coords(const RegularSpread& S, int elem, int which) {
  const auto& el = S.elements.at(elem);
  return el.plane.coords_of(el.transversal[which]);
}

namespace {

std::array<Elem, 6> monomials(const FiniteField& K, const Vec& x) {
  return {K.mul(x[0], x[0]), K.mul(x[1], x[1]), K.mul(x[2], x[2]),
          K.mul(x[0], x[1]), K.mul(x[0], x[2]), K.mul(x[1], x[2])};
}

QuadForm to_form(const Vec& v) {
  QuadForm Q;
  std::copy(v.begin(), v.end(), Q.c.begin());
  return Q;
}

}  // namespace

ProjSubspace special_form_space(const RegularSpread& S, int elem) {
  const FiniteField& E = S.E();
  auto m = monomials(E, transversal_plane_coords(S, elem, 0));
  // The form has GF(q) coefficients, so vanishing at one transversal point
  // forces it at the conjugates; each tau-coefficient gives one equation.
  Mat eqs(3, Vec(6));
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 6; ++i) eqs[j][i] = E.coeff(m[i], j);
  return ProjSubspace(S.F(), linalg::nullspace(S.F(), eqs, 6), 6);
}

std::vector<Conic> special_conics(const RegularSpread& S, int elem) {
  std::vector<Conic> out;
  const auto& plane = S.elements.at(elem).plane;
  for_each_point(S.F(), special_form_space(S, elem), [&](const Vec& f) {
    QuadForm Q = to_form(f);
    if (discriminant(S.F(), Q) != 0) out.push_back(make_conic(S.F(), plane, Q));
  });
  return out;
}

std::vector<Conic> special_conics_through(const RegularSpread& S, int elem, const std::vector<ProjPoint>& pts) {
  const FiniteField& F = S.F();
  const auto& plane = S.elements.at(elem).plane;
  ProjSubspace space = special_form_space(S, elem);
  const int k = space.dim() + 1;
  Mat eqs;
  for (const auto& p : pts) {
    if (!plane.contains(F, p)) throw GeometryError("point is not in the spread element");
    Vec c = plane.coords_of(p.coords);
    Vec row(k);
    for (int i = 0; i < k; ++i) row[i] = eval_form(F, to_form(space.basis()[i]), c);
    eqs.push_back(row);
  }
  Mat ker = eqs.empty() ? linalg::identity(k) : linalg::nullspace(F, eqs, k);
  std::vector<Conic> out;
  if (ker.empty()) return out;
  for_each_point(F, ProjSubspace(F, ker, k), [&](const Vec& lam) {
    QuadForm Q = to_form(space.combine(F, lam));
    if (discriminant(F, Q) != 0) out.push_back(make_conic(F, plane, Q));
  });
  return out;
}

int conic_element(const RegularSpread& S, const Conic& C) { return S.element_with_plane(C.plane); }

bool is_special_conic(const RegularSpread& S, const Conic& C) {
  int elem = conic_element(S, C);
  if (elem < 0) return false;
  for (int i = 0; i < 3; ++i)
    if (eval_form(S.E(), C.form, transversal_plane_coords(S, elem, i)) != 0) return false;
  return true;
}

int host_element(const RegularSpread& S, const ProjSubspace& space) {
  if (space.dim() != 3) return -1;
  return S.element_with_plane(meet(S.F(), space, S.sigma_inf));
}

int curve_ext_param(const FiniteField& E, const Mat& param, const Vec& X) {
  const Vec target = normalize(E, X);
  for (int h = 0; h < E.size(); ++h) {
    Vec v = eval_curve(E, param, 1, static_cast<Elem>(h));
    if (!linalg::is_zero(v) && normalize(E, v) == target) return h;
  }
  if (normalize(E, param.back()) == target) return E.size();
  return -1;
}

bool is_special_cubic(const RegularSpread& S, const TwistedCubic& N) {
  int host = host_element(S, N.ambient);
  if (host < 0) return false;
  for (const auto& p : N.points)
    if (p.coords[6] == 0) return false;
  for (int i = 0; i < 3; ++i)
    if (curve_ext_param(S.E(), N.param, S.elements[host].transversal[i]) < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::vector<ProjPoint> conic_points_by_param(const FiniteField& F, const Mat& conic_param) {
  std::vector<ProjPoint> out;
  for (int k = 0; k < F.size(); ++k) out.push_back(ProjPoint::from(F, eval_curve(F, conic_param, 1, static_cast<Elem>(k))));
  out.push_back(ProjPoint::from(F, eval_curve(F, conic_param, 0, 1)));
  return out;
}

Vec param_vec(Elem k, int field_size) { return k < field_size ? Vec{1, k} : Vec{0, 1}; }

int param_index(const FiniteField& F, const Vec& st) {
  if (st[0] == 0) return F.size();
  return F.div(st[1], st[0]);
}

void fill_generators(const RegularSpread& S, RuledSurface& V) {
  auto cpts = conic_points_by_param(S.F(), V.conic_param);
  V.generators.clear();
  for (size_t i = 0; i < V.cubic.points.size(); ++i) {
    const ProjPoint pts[] = {V.cubic.points[i], cpts.at(V.pairing[i])};
    V.generators.push_back(span(S.F(), std::span<const ProjPoint>(pts)));
  }
}

std::optional<Mat> pairing_projectivity(const FiniteField& F, const std::vector<int>& pairing) {
  const int n = F.size();
  if (static_cast<int>(pairing.size()) != n + 1) return std::nullopt;
  std::vector<int> sorted = pairing;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i <= n; ++i)
    if (sorted[i] != i) return std::nullopt;
  std::vector<Vec> xs, ys;
  for (int i = 0; i < 3; ++i) {
    xs.push_back(param_vec(static_cast<Elem>(i), n));
    ys.push_back(param_vec(static_cast<Elem>(pairing[i]), n));
  }
  // Index 2 is infinity when q = 2.
  Mat M = mobius_from_pairs(F, xs, ys);
  for (int i = 0; i <= n; ++i) {
    Vec y = linalg::mul(F, M, param_vec(static_cast<Elem>(i), n));
    if (param_index(F, normalize(F, y)) != pairing[i]) return std::nullopt;
  }
  return M;
}

RuledSurface surface_of_subplane(const RegularSpread& S, const TangentSubplane& B, int cubic_line) {
  const FiniteField& F = S.F();
  RuledSurface V;
  V.centre = S.index_of_tag(B.centre());

  // Generators: the lines of B through T, each meeting Sigma_inf in a point of [T].
  std::vector<int> through = B.lines_through_T();
  std::vector<ProjPoint> conic_pts;
  for (int li : through) {
    Mat rows;
    for (int p : B.lines[li])
      if (p != B.T && rows.size() < 2) rows.push_back(sigma_of(S.ctx, B.points[p]));
    ProjSubspace line(F, std::move(rows), 7);
    ProjSubspace at_inf = meet(F, line, S.sigma_inf);
    if (at_inf.dim() != 0) throw GeometryError("generator does not meet Sigma_inf in a point");
    conic_pts.emplace_back(at_inf.basis()[0]);
  }
  auto fits = special_conics_through(S, V.centre, conic_pts);
  if (fits.size() != 1) throw GeometryError("generator points do not determine a special conic");
  V.conic = fits[0];
  V.conic_param = conic_parametrization(F, V.conic);
  auto by_param = conic_points_by_param(F, V.conic_param);

  if (cubic_line < 0) {
    for (int li = 0; li < static_cast<int>(B.lines.size()); ++li)
      if (std::find(B.lines[li].begin(), B.lines[li].end(), B.T) == B.lines[li].end()) {
        cubic_line = li;
        break;
      }
  }
  const auto& cl = B.lines.at(cubic_line);
  if (std::find(cl.begin(), cl.end(), B.T) != cl.end()) throw GeometryError("cubic line passes through T");
  V.cubic = cubic_of_subline(S, subline_through(S.ctx, B.points[cl[0]], B.points[cl[1]], B.points[cl[2]]));
  V.host = host_element(S, V.cubic.ambient);

  for (const auto& N : V.cubic.points) {
    int p = B.index_of(normalize(S.E(), affine_preimage(S.ctx, N.coords)));
    if (p < 0) throw GeometryError("cubic point is not in the subplane");
    int gen = -1;
    for (size_t j = 0; j < through.size(); ++j)
      if (std::find(B.lines[through[j]].begin(), B.lines[through[j]].end(), p) != B.lines[through[j]].end())
        gen = static_cast<int>(j);
    auto it = std::find(by_param.begin(), by_param.end(), conic_pts[gen]);
    V.pairing.push_back(static_cast<int>(it - by_param.begin()));
  }
  fill_generators(S, V);
  return V;
}

bool is_tangent_surface(const RegularSpread& S, const RuledSurface& V) {
  const FiniteField& F = S.F();
  const FiniteField& E = S.E();
  if (!is_special_conic(S, V.conic) || conic_element(S, V.conic) != V.centre) return false;
  if (!is_special_cubic(S, V.cubic) || host_element(S, V.cubic.ambient) != V.host) return false;
  if (V.host == V.centre) return false;
  auto M = pairing_projectivity(F, V.pairing);
  if (!M) return false;
  // The generator through the transversal point of the host on g^{q^i}
  // must be g^{q^i} itself.
  for (int i = 0; i < 3; ++i) {
    int h = curve_ext_param(E, V.cubic.param, S.elements[V.host].transversal[i]);
    int k = curve_ext_param(E, V.conic_param, S.elements[V.centre].transversal[i]);
    if (h < 0 || k < 0) return false;
    Vec img = normalize(E, linalg::mul(E, *M, param_vec(static_cast<Elem>(h), E.size())));
    if (img != param_vec(static_cast<Elem>(k), E.size())) return false;
  }
  return true;
}

std::vector<Vec> surface_plane_points(const RegularSpread& S, const RuledSurface& V) {
  std::vector<Vec> out{S.elements[V.centre].tag};
  for (const auto& gline : V.generators)
    for_each_point(S.F(), gline, [&](const Vec& v) {
      if (v[6] != 0) out.push_back(normalize(S.E(), affine_preimage(S.ctx, v)));
    });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tsplash
