#include "tsplash/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "tsplash/bruckbose.hpp"
#include "tsplash/collineation.hpp"
#include "tsplash/construct.hpp"
#include "tsplash/splash.hpp"

namespace tsplash {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

long long CheckReport::count(const std::string& key) const {
  for (const auto& [k, v] : counts)
    if (k == key) return v;
  return -1;
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> reg{
      {"spread_partition", "regular spread from transversal lines", Cost::moderate, 5},
      {"cover_count", "cover plane count", Cost::moderate, 5},
      {"shadow_parity", "shadow structure by parity", Cost::moderate, 5},
      {"orbit_sizes", "Singer orbits of conic directrix and shadow", Cost::cheap, 5},
      {"shadow_count", "shadow count in a non-centre element", Cost::exhaustive, 4},
      {"interaction", "I-point, I-line and I-plane coordinates", Cost::exhaustive, 5},
      {"tangent_subspace", "tangent subspace of a point", Cost::exhaustive, 5},
      {"pencil_bijection", "cover plane map on pencils", Cost::moderate, 4},
      {"eta_equals_phi", "contact pairing equals transversal projectivity", Cost::moderate, 5},
      {"construct_roundtrip", "subplane construction from splash and subline", Cost::moderate, 5},
      {"uniqueness_oracle", "uniqueness of the tangent subplane", Cost::exhaustive, 3},
  };
  return reg;
}

FieldCtx make_context(const RunConfig& cfg) {
  auto pp = prime_power(cfg.q);
  if (!pp) throw ConfigError("q=" + std::to_string(cfg.q) + " is not a prime power");
  if (cfg.base_prime && *cfg.base_prime != pp->first)
    throw ConfigError("q=" + std::to_string(cfg.q) + " is not a power of " + std::to_string(*cfg.base_prime));
  if (cfg.base_modulus && pp->second == 1) throw ConfigError("a base modulus only applies to non-prime q");
  if (cfg.base_modulus && static_cast<int>(cfg.base_modulus->size()) != pp->second)
    throw ConfigError("base modulus needs " + std::to_string(pp->second) + " coefficients");
  try {
    if (!cfg.t && !cfg.base_modulus) return FieldCtx::create(cfg.q);
    return FieldCtx::create(cfg.q, cfg.t ? *cfg.t : FieldCtx::default_cubic(cfg.q), cfg.base_modulus);
  } catch (const FieldError& e) {
    throw ConfigError(e.what());
  }
}

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure(what);
}

Elem el(int x) { return static_cast<Elem>(x); }

// Shared objects for one run.
struct Env {
  explicit Env(FieldCtx c)
      : ctx(c), S(build_spread(c)), B(canonical_subplane(c)), sp(splash_of(S, B)) {}
  FieldCtx ctx;
  RegularSpread S;
  TangentSubplane B;
  Splash sp;

  const std::vector<CoverPlane>& planes() {
    if (!planes_) planes_ = cover_planes(S, sp);
    return *planes_;
  }
  Subline l1() const {
    const FiniteField& E = ctx.ext();
    const auto& l = B.lines[B.line_index_of(normalize(E, {1, 0, E.neg(1)}))];
    return subline_through(ctx, B.points[l[0]], B.points[l[1]], B.points[l[2]]);
  }
  int q() const { return ctx.q(); }

 private:
  std::optional<std::vector<CoverPlane>> planes_;
};

using Counts = std::vector<std::pair<std::string, long long>>;

struct Ctx {
  Env& env;
  const RunConfig& cfg;
  std::mt19937_64& rng;
  CheckReport& report;
  void count(const std::string& k, long long v) { report.counts.emplace_back(k, v); }
};

nlohmann::ordered_json mat_json(const Mat& m) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& r : m) j.push_back(r);
  return j;
}

nlohmann::ordered_json points_json(const std::vector<Vec>& pts) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& p : pts) j.push_back(p);
  return j;
}

// ---------------------------------------------------------------------------

void check_spread_partition(Ctx& c) {
  const RegularSpread& S = c.env.S;
  const FiniteField& F = S.F();
  const FiniteField& E = S.E();
  const long long q = c.env.q();
  expect(static_cast<long long>(S.elements.size()) == q * q * q + 1, "wrong number of spread elements");
  std::set<Vec> seen;
  long long incidences = 0;
  for (const auto& el : S.elements) {
    for_each_point(F, el.plane, [&](const Vec& v) {
      ++incidences;
      seen.insert(v);
    });
    ProjSubspace ext(E, el.plane.basis(), 7);
    for (int i = 0; i < 3; ++i) expect(ext.contains(E, el.transversal[i]), "element misses a transversal");
    Vec f = el.transversal[0];
    for (auto& x : f) x = S.ctx.frobenius(x);
    expect(normalize(E, f) == normalize(E, el.transversal[1]), "transversal points are not conjugate");
    expect(S.g.contains(E, el.transversal[0]), "transversal point is not on g");
  }
  expect(incidences == static_cast<long long>(seen.size()), "spread elements overlap");
  expect(seen.size() == projective_count(F.size(), 5), "spread does not cover Sigma_inf");
  c.count("elements", static_cast<long long>(S.elements.size()));
  c.count("point_incidences", incidences);
  c.count("sigma_inf_points", static_cast<long long>(seen.size()));

  long long triples = 0;
  auto regular = [&](int a, int b, int d) {
    for (const auto& p : regulus_through(F, S.elements[a].plane, S.elements[b].plane, S.elements[d].plane))
      expect(S.element_with_plane(p) >= 0, "regulus leaves the spread");
    ++triples;
  };
  const int n = static_cast<int>(S.elements.size());
  if (q == 2) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int d = b + 1; d < n; ++d) regular(a, b, d);
  } else {
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (triples < 200) {
      int a = pick(c.rng), b = pick(c.rng), d = pick(c.rng);
      if (a != b && b != d && a != d) regular(a, b, d);
    }
  }
  c.count("regularity_triples", triples);
}

void check_cover_count(Ctx& c) {
  Env& env = c.env;
  const FiniteField& F = env.S.F();
  const long long q = env.q();
  const auto& planes = env.planes();
  std::set<ProjSubspace> lines, pset;
  for (const auto& p : planes) {
    lines.insert(p.centre_line);
    pset.insert(p.plane);
    expect(is_cover_plane(env.S, env.sp, p.plane), "constructed plane fails the cover criterion");
  }
  c.count("cover_planes", static_cast<long long>(planes.size()));
  c.count("distinct_centre_lines", static_cast<long long>(lines.size()));
  expect(static_cast<long long>(planes.size()) == q * q + q + 1, "wrong number of cover planes");
  expect(lines.size() == planes.size(), "cover planes share a centre line");
  if (q <= 3) {
    auto all = subspaces_of(F, env.S.sigma_inf, 2);
    std::set<ProjSubspace> scan;
    const auto& centre = env.S.elements[env.sp.centre].plane;
    for (const auto& pi : all)
      if (meet(F, pi, centre).dim() == 1 && covers_splash(env.S, env.sp, pi)) scan.insert(pi);
    c.count("scanned_planes", static_cast<long long>(all.size()));
    c.count("scan_cover_planes", static_cast<long long>(scan.size()));
    expect(scan == pset, "scan disagrees with the constructive cover planes");
  }
  nlohmann::ordered_json cert;
  cert["splash"] = points_json(env.sp.points);
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : planes) arr.push_back(mat_json(p.plane.basis()));
  cert["planes"] = arr;
  c.report.certificate = cert;
}

bool shadow_parity_holds(const RegularSpread& S, const Shadow& D) {
  if (S.q() % 2 == 0) {
    auto fits = special_conics_through(S, D.host, D.points);
    return fits.size() == 1;
  }
  const int n = static_cast<int>(D.points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (!special_conics_through(S, D.host, {D.points[i], D.points[j], D.points[k]}).empty()) return false;
  return true;
}

void check_shadow_parity(Ctx& c) {
  Env& env = c.env;
  long long tested = 0, bad = 0;
  auto test = [&](const Subline& s) {
    ++tested;
    if (!shadow_parity_holds(env.S, shadow_of(env.S, cubic_of_subline(env.S, s)))) ++bad;
  };
  test(env.l1());
  for (int i = 0; i < c.cfg.samples; ++i) test(transform(env.ctx, env.l1(), random_homography(env.ctx, c.rng)));
  c.count("cubics", tested);
  c.count("violations", bad);
  expect(bad == 0, "a shadow breaks the parity dichotomy");
}

void check_orbit_sizes(Ctx& c) {
  Env& env = c.env;
  const FiniteField& F = env.S.F();
  const long long n = env.q() * env.q() + env.q() + 1;
  Mat M = singer(env.ctx).M;
  std::vector<Vec> conic, shadow;
  for (const auto& p : surface_of_subplane(env.S, env.B).conic.points) conic.push_back(p.coords);
  for (const auto& p : shadow_of(env.S, cubic_of_subline(env.S, env.l1())).points) shadow.push_back(p.coords);
  long long a = static_cast<long long>(orbit_size(F, M, conic));
  long long b = static_cast<long long>(orbit_size(F, M, shadow));
  c.count("conic_orbit", a);
  c.count("shadow_orbit", b);
  expect(a == n && b == n, "orbit size differs from q^2+q+1");
}

void check_shadow_count(Ctx& c) {
  Env& env = c.env;
  const long long q = env.q();
  auto space = line_to_3space(env.S, normalize(env.S.E(), {1, 0, env.S.E().neg(1)}));
  auto r = count_distinct_shadows(env.S, space);
  c.count("special_cubics", r.sublines);
  c.count("distinct_shadows", r.shadows);
  expect(r.sublines == q * q * q * (q * q * q - 1), "wrong number of sublines");
  expect(r.shadows == q * q + q + 1, "wrong number of distinct shadows");
}

void check_interaction(Ctx& c) {
  Env& env = c.env;
  const RegularSpread& S = env.S;
  const FiniteField& F = S.F();
  const FieldCtx& ctx = env.ctx;
  const TangentSubplane& B = env.B;
  const int q = env.q();
  auto V = surface_of_subplane(S, B);
  long long ipts = 0, ilines = 0, iplanes = 0;
  for (int e = 0; e < q; ++e)
    for (int d = 0; d < q; ++d)
      for (int f = 0; f < q; ++f) {
        int l = B.line_index_of(canon::ell(ctx, el(e), el(d), el(f)));
        int P = B.index_of(canon::P(ctx, el(e), el(d)));
        int U = B.index_of(canon::U(ctx, el(f)));
        expect(I_point(S, B, P, l).coords == canon::I_P(ctx, el(e), el(d), el(f)), "I-point of P_{e,d} differs");
        expect(I_point(S, B, U, l).coords == canon::I_U(ctx, el(e), el(d), el(f)), "I-point of U_f differs");
        ipts += 2;
      }
  for (int e = 0; e < q; ++e)
    for (int d = 0; d < q; ++d) {
      expect(I_line(S, B, B.index_of(canon::P(ctx, el(e), el(d)))).contains(F, canon::C(ctx, el(e))),
             "I-line misses C_e");
      ++ilines;
    }
  for (int f = 0; f < q; ++f) {
    expect(I_line(S, B, B.index_of(canon::U(ctx, el(f)))).contains(F, canon::C_inf(ctx)), "I-line misses C_inf");
    ++ilines;
  }
  for (int e = 0; e <= q; ++e) {
    int m = B.line_index_of(e == q ? canon::m_inf(ctx) : canon::m(ctx, el(e)));
    auto pl = I_plane(S, B, m);
    Vec Ce = e == q ? canon::C_inf(ctx) : canon::C(ctx, el(e));
    Vec Te = e == q ? canon::Tpt_inf(ctx) : canon::Tpt(ctx, el(e));
    expect(pl.centre_line == span(F, std::vector<ProjPoint>{ProjPoint(Ce), ProjPoint(Te)}), "I-plane trace is not C_eT_e");
    expect(pl.centre_line == conic_tangent(F, V.conic, ProjPoint(Ce)), "I-plane trace is not a tangent");
    expect(is_cover_plane(S, env.sp, pl.plane), "I-plane is not a cover plane");
    ++iplanes;
  }
  c.count("i_points", ipts);
  c.count("i_lines", ilines);
  c.count("i_planes", iplanes);
}

void check_tangent_subspace(Ctx& c) {
  Env& env = c.env;
  const RegularSpread& S = env.S;
  const FiniteField& F = S.F();
  const TangentSubplane& B = env.B;
  auto V = surface_of_subplane(S, B);
  long long n = 0;
  for (int P = 0; P < static_cast<int>(B.points.size()); ++P) {
    if (P == B.T) continue;
    auto X = tangent_subspace(S, B, P);
    expect(X == affine_image_span(S, perp_subplane(env.ctx, B, P)), "tangent subspace differs from the secant image");
    ProjPoint sP = ProjPoint::from(F, sigma_of(env.ctx, B.points[P]));
    for (const auto& g : V.generators)
      if (g.contains(F, sP)) expect(X.contains(F, g), "tangent subspace misses the generator");
    ++n;
  }
  c.count("points", n);
}

void check_pencil_bijection(Ctx& c) {
  Env& env = c.env;
  const RegularSpread& S = env.S;
  const FiniteField& F = S.F();
  const int U = S.index_of_tag({0, 1, 0});
  std::set<QuadForm> forms, all;
  long long pencils = 0;
  for (const auto& P : points_of(F, S.elements[env.sp.centre].plane)) {
    Conic cn = pencil_image(S, env.sp, env.planes(), P.coords, U);
    expect(is_special_conic(S, cn), "pencil image is not special");
    forms.insert(normalize_form(F, cn.form));
    ++pencils;
  }
  for (const auto& cn : special_conics(S, U)) all.insert(normalize_form(F, cn.form));
  c.count("pencils", pencils);
  c.count("distinct_conics", static_cast<long long>(forms.size()));
  c.count("special_conics", static_cast<long long>(all.size()));
  expect(forms == all, "pencil map is not a bijection onto the special conics");
}

std::pair<Splash, Subline> random_pair(Env& env, std::mt19937_64& rng) {
  auto B = transform(env.ctx, env.B, random_homography(env.ctx, rng));
  Splash sp = splash_of(env.S, B);
  Subline s = random_subline(env.S, sp, rng);
  return {sp, s};
}

void check_eta_equals_phi(Ctx& c) {
  Env& env = c.env;
  long long surfaces = 0, pairs = 0;
  auto test = [&](const Splash& sp, const std::vector<CoverPlane>& planes, const Subline& s) {
    auto K = construct_subplane(env.S, sp, planes, s);
    expect(K.phi == K.eta.pairing, "contact pairing differs from eta");
    ++surfaces;
    pairs += static_cast<long long>(K.phi.size());
  };
  test(env.sp, env.planes(), env.l1());
  for (int i = 0; i < c.cfg.samples; ++i) {
    auto [sp, s] = random_pair(env, c.rng);
    test(sp, cover_planes(env.S, sp), s);
  }
  c.count("surfaces", surfaces);
  c.count("rational_pairs", pairs);
}

void check_construct_roundtrip(Ctx& c) {
  Env& env = c.env;
  const RegularSpread& S = env.S;
  const FiniteField& F = S.F();
  auto K0 = construct_subplane(S, env.sp, env.planes(), env.l1());
  expect(K0.subplane.point_key() == env.B.point_key(), "canonical inputs do not give the canonical subplane");
  long long n = 1;
  std::optional<nlohmann::ordered_json> cert;
  for (int i = 0; i < c.cfg.samples; ++i) {
    auto [sp, s] = random_pair(env, c.rng);
    auto K = construct_subplane(S, sp, s);
    for (const auto& p : subline_points(env.ctx, s)) expect(K.subplane.contains(p), "output misses the subline");
    expect(splash_of(S, K.subplane) == sp, "output has a different splash");
    expect(is_tangent_surface(S, K.surface), "output surface is not a tangent surface");
    int li = K.subplane.line_index_of(subline_carrier(env.ctx, s));
    expect(li >= 0, "subline is not on a line of the output");
    auto V = surface_of_subplane(S, K.subplane, li);
    expect(normalize_form(F, V.conic.form) == normalize_form(F, K.surface.conic.form), "conic directrix changed");
    auto g1 = V.generators, g2 = K.surface.generators;
    std::sort(g1.begin(), g1.end());
    std::sort(g2.begin(), g2.end());
    expect(g1 == g2, "generators changed");
    ++n;
    if (!cert) {
      cert = nlohmann::ordered_json::object();
      (*cert)["splash"] = points_json(sp.points);
      (*cert)["subline"] = points_json(subline_points(env.ctx, s));
      (*cert)["subplane"] = points_json(K.subplane.point_key());
    }
  }
  c.count("constructions", n);
  if (cert) c.report.certificate = *cert;
}

void check_uniqueness_oracle(Ctx& c) {
  Env& env = c.env;
  long long pairs = 0;
  auto test = [&](const Splash& sp, const Subline& s) {
    auto O = brute_force_subplanes(env.S, sp, s);
    expect(O.size() == 1, "search found " + std::to_string(O.size()) + " subplanes");
    expect(O[0].point_key() == construct_subplane(env.S, sp, s).subplane.point_key(), "construction differs from the search");
    ++pairs;
  };
  test(env.sp, env.l1());
  const int n = env.q() == 2 ? c.cfg.samples : std::min(c.cfg.samples, 5);
  for (int i = 0; i < n; ++i) {
    auto [sp, s] = random_pair(env, c.rng);
    test(sp, s);
  }
  c.count("pairs", pairs);
}

using CheckFn = std::function<void(Ctx&)>;

const std::vector<CheckFn>& check_functions() {
  static const std::vector<CheckFn> fns{
      check_spread_partition, check_cover_count,     check_shadow_parity,    check_orbit_sizes,
      check_shadow_count,     check_interaction,     check_tangent_subspace, check_pencil_bijection,
      check_eta_equals_phi,   check_construct_roundtrip, check_uniqueness_oracle,
  };
  return fns;
}

}  // namespace

std::vector<CheckReport> run_checks(const RunConfig& cfg) {
  const auto& reg = check_registry();
  std::vector<bool> want(reg.size(), cfg.checks.empty());
  for (const auto& name : cfg.checks) {
    if (name == "all") {
      std::fill(want.begin(), want.end(), true);
      continue;
    }
    auto it = std::find_if(reg.begin(), reg.end(), [&](const CheckInfo& i) { return i.name == name; });
    if (it == reg.end()) {
      std::string valid;
      for (const auto& i : reg) valid += (valid.empty() ? "" : ", ") + i.name;
      throw ConfigError("unknown check '" + name + "'; valid checks: " + valid);
    }
    want[it - reg.begin()] = true;
  }

  Env env(make_context(cfg));
  std::vector<CheckReport> out;
  for (size_t i = 0; i < reg.size(); ++i) {
    if (!want[i]) continue;
    CheckReport r;
    r.name = reg[i].name;
    r.paper_anchor = reg[i].anchor;
    if (env.q() > reg[i].max_q) {
      r.status = Status::skipped;
      r.message = "q=" + std::to_string(env.q()) + " exceeds the bound q<=" + std::to_string(reg[i].max_q);
      out.push_back(std::move(r));
      continue;
    }
    std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + i + 1);
    Ctx c{env, cfg, rng, r};
    auto t0 = std::chrono::steady_clock::now();
    try {
      check_functions()[i](c);
    } catch (const std::exception& e) {
      r.status = Status::fail;
      r.message = e.what();
    }
    if (cfg.timings)
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::ordered_json report_json(const FieldCtx& ctx, const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json j;
  j["q"] = ctx.q();
  j["poly"] = {ctx.poly().t0, ctx.poly().t1, ctx.poly().t2};
  j["base"] = {ctx.p(), ctx.base_modulus()};
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["name"] = r.name;
    o["paper_anchor"] = r.paper_anchor;
    o["status"] = to_string(r.status);
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.counts) counts[k] = v;
    o["counts"] = counts;
    if (r.elapsed_ms) o["elapsed_ms"] = *r.elapsed_ms;
    if (!r.message.empty()) o["message"] = r.message;
    if (r.certificate) o["certificate"] = *r.certificate;
    arr.push_back(o);
  }
  j["checks"] = arr;
  return j;
}

bool validate_cover_certificate(const FieldCtx& ctx, const nlohmann::ordered_json& cert) {
  auto S = build_spread(ctx);
  std::vector<Vec> pts = cert.at("splash").get<std::vector<Vec>>();
  if (pts.empty()) return false;
  Splash sp = make_splash(S, pts[0], std::vector<Vec>(pts.begin() + 1, pts.end()));
  std::set<ProjSubspace> lines;
  for (const auto& m : cert.at("planes")) {
    ProjSubspace pi(S.F(), m.get<Mat>(), 7);
    if (!covers_splash(S, sp, pi)) return false;
    lines.insert(meet(S.F(), pi, S.elements[sp.centre].plane));
  }
  const std::size_t q = ctx.q();
  return lines.size() == q * q + q + 1 && cert.at("planes").size() == lines.size();
}

bool validate_roundtrip_certificate(const FieldCtx& ctx, const nlohmann::ordered_json& cert) {
  auto S = build_spread(ctx);
  const FiniteField& E = ctx.ext();
  std::vector<Vec> sp_pts = cert.at("splash").get<std::vector<Vec>>();
  std::vector<Vec> line = cert.at("subline").get<std::vector<Vec>>();
  std::vector<Vec> pts = cert.at("subplane").get<std::vector<Vec>>();
  const std::size_t q = ctx.q();
  if (sp_pts.empty() || line.size() != q + 1) return false;
  for (auto& v : line) v = normalize(E, v);
  auto through = subline_points(ctx, subline_through(ctx, line[0], line[1], line[2]));
  std::sort(through.begin(), through.end());
  std::sort(line.begin(), line.end());
  if (through != line) return false;
  auto B = subplane_from_points(ctx, pts);
  if (!B) return false;
  for (const auto& p : line)
    if (!B->contains(p)) return false;
  Splash sp = make_splash(S, sp_pts[0], std::vector<Vec>(sp_pts.begin() + 1, sp_pts.end()));
  return splash_of(S, *B) == sp;
}

}  // namespace tsplash
