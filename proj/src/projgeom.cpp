#include "tsplash/projgeom.hpp"

#include <algorithm>
#include <set>

namespace tsplash {

namespace linalg {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

Vec scale(const FiniteField& F, Elem c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = F.mul(c, v[i]);
  return r;
}

Vec axpy(const FiniteField& F, Elem c, const Vec& x, const Vec& y) {
  Vec r(y);
  for (size_t i = 0; i < x.size(); ++i) r[i] = F.add(r[i], F.mul(c, x[i]));
  return r;
}

Vec add(const FiniteField& F, const Vec& x, const Vec& y) { return axpy(F, 1, x, y); }

Vec sub(const FiniteField& F, const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = F.sub(x[i], y[i]);
  return r;
}

Elem dot(const FiniteField& F, const Vec& x, const Vec& y) {
  Elem s = 0;
  for (size_t i = 0; i < x.size(); ++i) s = F.add(s, F.mul(x[i], y[i]));
  return s;
}

std::vector<int> rref(const FiniteField& F, Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Elem inv = F.inv(m[r][c]);
    for (int j = c; j < cols; ++j) m[r][j] = F.mul(inv, m[r][j]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Elem f = F.neg(m[i][c]);
      for (int j = c; j < cols; ++j) m[i][j] = F.add(m[i][j], F.mul(f, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

int rank(const FiniteField& F, Mat m) { return static_cast<int>(rref(F, m).size()); }

Mat nullspace(const FiniteField& F, const Mat& m, int ncols) {
  Mat a = m;
  auto piv = rref(F, a);
  std::vector<bool> is_piv(ncols, false);
  for (int c : piv) is_piv[c] = true;
  Mat out;
  for (int free = 0; free < ncols; ++free) {
    if (is_piv[free]) continue;
    Vec x(ncols, 0);
    x[free] = 1;
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = F.neg(a[r][free]);
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vec> solve(const FiniteField& F, const Mat& a, const Vec& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  Mat aug(rows);
  for (int i = 0; i < rows; ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  auto piv = rref(F, aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vec x(cols, 0);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

Mat identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat t(m[0].size(), Vec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Mat mul(const FiniteField& F, const Mat& a, const Mat& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat c(n, Vec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      Elem x = a[i][l];
      if (x == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] = F.add(c[i][j], F.mul(x, b[l][j]));
    }
  return c;
}

Vec mul(const FiniteField& F, const Mat& a, const Vec& x) {
  Vec y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) y[i] = dot(F, a[i], x);
  return y;
}

std::optional<Mat> inverse(const FiniteField& F, const Mat& a) {
  const int n = static_cast<int>(a.size());
  Mat aug(n);
  for (int i = 0; i < n; ++i) {
    aug[i] = a[i];
    aug[i].resize(2 * n, 0);
    aug[i][n + i] = 1;
  }
  auto piv = rref(F, aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv(n);
  for (int i = 0; i < n; ++i) inv[i] = Vec(aug[i].begin() + n, aug[i].end());
  return inv;
}

Elem det(const FiniteField& F, Mat a) {
  const int n = static_cast<int>(a.size());
  Elem d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = F.neg(d);
    }
    d = F.mul(d, a[c][c]);
    Elem inv = F.inv(a[c][c]);
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Elem f = F.neg(F.mul(a[i][c], inv));
      for (int j = c; j < n; ++j) a[i][j] = F.add(a[i][j], F.mul(f, a[c][j]));
    }
  }
  return d;
}

Vec cross(const FiniteField& F, const Vec& a, const Vec& b) {
  return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])), F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
          F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

}  // namespace linalg

// ---------------------------------------------------------------------------

Vec normalize(const FiniteField& F, Vec v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1) {
      Elem inv = F.inv(v[i]);
      for (size_t j = i; j < v.size(); ++j) v[j] = F.mul(inv, v[j]);
    }
    return v;
  }
  throw GeometryError("zero vector is not a projective point");
}

bool proportional(const FiniteField& F, const Vec& u, const Vec& v) {
  if (linalg::is_zero(u) || linalg::is_zero(v)) return false;
  return normalize(F, u) == normalize(F, v);
}

ProjPoint ProjPoint::from(const FiniteField& F, const Vec& v) { return ProjPoint(normalize(F, v)); }

std::size_t ProjPointHash::operator()(const ProjPoint& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Elem e : p.coords) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t encode(const FiniteField& F, const Vec& v) {
  std::uint64_t code = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * F.size() + *it;
  return code;
}

ProjSubspace::ProjSubspace(const FiniteField& F, Mat rows, int vec_len) : basis_(std::move(rows)), len_(vec_len) {
  for (const auto& r : basis_)
    if (static_cast<int>(r.size()) != len_) throw GeometryError("mixed ambient dimensions");
  pivots_ = linalg::rref(F, basis_);
}

ProjSubspace ProjSubspace::of_point(const ProjPoint& p) {
  ProjSubspace s(static_cast<int>(p.coords.size()));
  s.basis_.push_back(p.coords);
  for (size_t i = 0; i < p.coords.size(); ++i)
    if (p.coords[i] != 0) {
      s.pivots_.push_back(static_cast<int>(i));
      break;
    }
  return s;
}

bool ProjSubspace::contains(const FiniteField& F, const Vec& v) const {
  if (static_cast<int>(v.size()) != len_) throw GeometryError("mixed ambient dimensions");
  Vec r = v;
  for (size_t i = 0; i < basis_.size(); ++i) {
    Elem c = r[pivots_[i]];
    if (c == 0) continue;
    Elem f = F.neg(c);
    const Vec& row = basis_[i];
    for (int j = pivots_[i]; j < len_; ++j) r[j] = F.add(r[j], F.mul(f, row[j]));
  }
  return linalg::is_zero(r);
}

bool ProjSubspace::contains(const FiniteField& F, const ProjSubspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& r) { return contains(F, r); });
}

Vec ProjSubspace::coords_of(const Vec& v) const {
  Vec c(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec ProjSubspace::combine(const FiniteField& F, const Vec& c) const {
  Vec v(len_, 0);
  for (size_t i = 0; i < basis_.size(); ++i)
    if (c[i] != 0) v = linalg::axpy(F, c[i], basis_[i], v);
  return v;
}

ProjSubspace span(const FiniteField& F, std::span<const ProjPoint> points) {
  if (points.empty()) throw GeometryError("span of nothing");
  Mat rows;
  for (const auto& p : points) rows.push_back(p.coords);
  return ProjSubspace(F, std::move(rows), static_cast<int>(points[0].coords.size()));
}

ProjSubspace span(const FiniteField& F, std::span<const ProjSubspace> spaces) {
  if (spaces.empty()) throw GeometryError("span of nothing");
  Mat rows;
  const int len = spaces[0].vec_len();
  for (const auto& s : spaces) {
    if (s.vec_len() != len) throw GeometryError("mixed ambient dimensions");
    rows.insert(rows.end(), s.basis().begin(), s.basis().end());
  }
  return ProjSubspace(F, std::move(rows), len);
}

ProjSubspace span(const FiniteField& F, const ProjSubspace& a, const ProjSubspace& b) {
  const ProjSubspace both[] = {a, b};
  return span(F, std::span<const ProjSubspace>(both));
}

ProjSubspace span(const FiniteField& F, const ProjSubspace& a, const ProjPoint& p) {
  return span(F, a, ProjSubspace::of_point(p));
}

ProjSubspace meet(const FiniteField& F, const ProjSubspace& a, const ProjSubspace& b) {
  if (a.vec_len() != b.vec_len()) throw GeometryError("mixed ambient dimensions");
  if (a.is_empty() || b.is_empty()) return ProjSubspace::empty(a.vec_len());
  // Columns are the basis vectors of a and b; a kernel vector (x, y) gives
  // the common vector sum x_i a_i = -sum y_j b_j.
  const int ka = a.dim() + 1, kb = b.dim() + 1, len = a.vec_len();
  Mat m(len, Vec(ka + kb));
  for (int r = 0; r < len; ++r) {
    for (int i = 0; i < ka; ++i) m[r][i] = a.basis()[i][r];
    for (int j = 0; j < kb; ++j) m[r][ka + j] = b.basis()[j][r];
  }
  Mat ker = linalg::nullspace(F, m, ka + kb);
  if (ker.empty()) return ProjSubspace::empty(len);
  Mat rows;
  for (const auto& k : ker) rows.push_back(a.combine(F, Vec(k.begin(), k.begin() + ka)));
  return ProjSubspace(F, std::move(rows), len);
}

std::uint64_t projective_count(int field_size, int d) {
  std::uint64_t n = 0, pw = 1;
  for (int i = 0; i <= d; ++i) {
    n += pw;
    pw *= field_size;
  }
  return n;
}

void for_each_point(const FiniteField& F, const ProjSubspace& S, const std::function<void(const Vec&)>& fn) {
  const int k = S.dim() + 1;
  const int n = F.size();
  const Mat& B = S.basis();
  for (int lead = 0; lead < k; ++lead) {
    const int free = k - 1 - lead;
    std::vector<int> c(free, 0);
    while (true) {
      Vec v = B[lead];
      for (int j = 0; j < free; ++j)
        if (c[j]) v = linalg::axpy(F, static_cast<Elem>(c[j]), B[lead + 1 + j], v);
      fn(v);
      int j = 0;
      while (j < free && ++c[j] == n) c[j++] = 0;
      if (j == free) break;
    }
  }
}

std::vector<ProjPoint> points_of(const FiniteField& F, const ProjSubspace& S) {
  std::vector<ProjPoint> out;
  out.reserve(projective_count(F.size(), S.dim()));
  for_each_point(F, S, [&](const Vec& v) { out.emplace_back(v); });
  return out;
}

std::vector<ProjSubspace> subspaces_of(const FiniteField& F, const ProjSubspace& S, int d) {
  const int k = S.dim() + 1;
  const int r = d + 1;
  std::vector<ProjSubspace> out;
  if (r <= 0 || r > k) return out;
  const int n = F.size();
  // Enumerate r x k reduced echelon coefficient matrices, one per pivot set.
  std::vector<int> piv(r);
  for (int i = 0; i < r; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<int, int>> slots;  // (row, col) of free entries
    for (int i = 0; i < r; ++i)
      for (int c = piv[i] + 1; c < k; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(i, c);
    std::vector<int> val(slots.size(), 0);
    while (true) {
      Mat coef(r, Vec(k, 0));
      for (int i = 0; i < r; ++i) coef[i][piv[i]] = 1;
      for (size_t s = 0; s < slots.size(); ++s) coef[slots[s].first][slots[s].second] = static_cast<Elem>(val[s]);
      Mat rows;
      for (const auto& c : coef) rows.push_back(S.combine(F, c));
      out.emplace_back(F, std::move(rows), S.vec_len());
      size_t j = 0;
      while (j < val.size() && ++val[j] == n) val[j++] = 0;
      if (j == val.size()) break;
    }
    int i = r - 1;
    while (i >= 0 && piv[i] == k - r + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

ProjSubspace whole_space(int n) {
  // Identity rows are already in canonical form, so no field is needed.
  static const auto gf2 = FiniteField::prime(2);
  return ProjSubspace(*gf2, linalg::identity(n + 1), n + 1);
}

// ---------------------------------------------------------------------------

Elem eval_form(const FiniteField& F, const QuadForm& Q, const Vec& v) {
  const auto& c = Q.c;
  Elem x = v[0], y = v[1], z = v[2];
  Elem s = F.mul(c[0], F.mul(x, x));
  s = F.add(s, F.mul(c[1], F.mul(y, y)));
  s = F.add(s, F.mul(c[2], F.mul(z, z)));
  s = F.add(s, F.mul(c[3], F.mul(x, y)));
  s = F.add(s, F.mul(c[4], F.mul(x, z)));
  s = F.add(s, F.mul(c[5], F.mul(y, z)));
  return s;
}

Elem polar_form(const FiniteField& F, const QuadForm& Q, const Vec& x, const Vec& y) {
  return F.sub(F.sub(eval_form(F, Q, linalg::add(F, x, y)), eval_form(F, Q, x)), eval_form(F, Q, y));
}

Elem discriminant(const FiniteField& F, const QuadForm& Q) {
  auto [a, b, c, d, e, f] = Q.c;
  Elem four = F.add(F.add(1, 1), F.add(1, 1));
  Elem t = F.mul(four, F.mul(a, F.mul(b, c)));
  t = F.add(t, F.mul(d, F.mul(e, f)));
  t = F.sub(t, F.mul(a, F.mul(f, f)));
  t = F.sub(t, F.mul(b, F.mul(e, e)));
  t = F.sub(t, F.mul(c, F.mul(d, d)));
  return t;
}

Vec tangent_coords(const FiniteField& F, const QuadForm& Q, const Vec& v) {
  auto [a, b, c, d, e, f] = Q.c;
  Elem two = F.add(1, 1);
  Elem x = v[0], y = v[1], z = v[2];
  return {F.add(F.mul(F.mul(two, a), x), F.add(F.mul(d, y), F.mul(e, z))),
          F.add(F.mul(F.mul(two, b), y), F.add(F.mul(d, x), F.mul(f, z))),
          F.add(F.mul(F.mul(two, c), z), F.add(F.mul(e, x), F.mul(f, y)))};
}

Vec nucleus(const FiniteField& F, const QuadForm& Q) {
  if (F.characteristic() != 2) throw GeometryError("nucleus exists only in characteristic 2");
  return normalize(F, Vec{Q.c[5], Q.c[4], Q.c[3]});
}

QuadForm normalize_form(const FiniteField& F, QuadForm Q) {
  Vec v(Q.c.begin(), Q.c.end());
  v = normalize(F, v);
  std::copy(v.begin(), v.end(), Q.c.begin());
  return Q;
}

bool Conic::contains(const FiniteField& F, const ProjPoint& p) const {
  if (!plane.contains(F, p)) return false;
  return eval_form(F, form, plane.coords_of(p.coords)) == 0;
}

Vec plane_coords(const ProjSubspace& plane, const Vec& v) { return plane.coords_of(v); }

Conic make_conic(const FiniteField& F, const ProjSubspace& plane, QuadForm form) {
  if (plane.dim() != 2) throw GeometryError("a conic needs a plane");
  if (discriminant(F, form) == 0) throw GeometryError("degenerate conic");
  Conic C{plane, normalize_form(F, form), {}};
  for_each_point(F, plane, [&](const Vec& v) {
    if (eval_form(F, C.form, plane.coords_of(v)) == 0) C.points.emplace_back(v);
  });
  if (static_cast<int>(C.points.size()) != F.size() + 1) throw GeometryError("conic has wrong point count");
  return C;
}

ProjSubspace conic_tangent(const FiniteField& F, const Conic& C, const ProjPoint& p) {
  if (!C.contains(F, p)) throw GeometryError("point is not on the conic");
  Vec u = tangent_coords(F, C.form, C.plane.coords_of(p.coords));
  Mat ker = linalg::nullspace(F, Mat{u}, 3);
  Mat rows;
  for (const auto& k : ker) rows.push_back(C.plane.combine(F, k));
  return ProjSubspace(F, std::move(rows), C.plane.vec_len());
}

Mat conic_parametrization(const FiniteField& F, const Conic& C) {
  const Vec a = C.plane.coords_of(C.points.front().coords);
  // Two further basis vectors completing a to a basis; the line they span
  // misses A, and each point Y on it gives the second intersection of AY.
  Mat e = linalg::identity(3);
  Vec b0, b1;
  for (int i = 0; i < 3 && b1.empty(); ++i)
    for (int j = i + 1; j < 3; ++j)
      if (linalg::rank(F, {a, e[i], e[j]}) == 3) {
        b0 = e[i];
        b1 = e[j];
        break;
      }
  const QuadForm& Q = C.form;
  Elem q0 = eval_form(F, Q, b0), q1 = eval_form(F, Q, b1), q01 = polar_form(F, Q, b0, b1);
  Elem pa0 = polar_form(F, Q, a, b0), pa1 = polar_form(F, Q, a, b1);
  Vec s2 = linalg::sub(F, linalg::scale(F, q0, a), linalg::scale(F, pa0, b0));
  Vec st = linalg::sub(F, linalg::scale(F, q01, a),
                       linalg::add(F, linalg::scale(F, pa0, b1), linalg::scale(F, pa1, b0)));
  Vec t2 = linalg::sub(F, linalg::scale(F, q1, a), linalg::scale(F, pa1, b1));
  return {C.plane.combine(F, s2), C.plane.combine(F, st), C.plane.combine(F, t2)};
}

// ---------------------------------------------------------------------------

Vec eval_curve(const FiniteField& F, const Mat& param, Elem s, Elem t) {
  const int d = static_cast<int>(param.size()) - 1;
  Vec v(param[0].size(), 0);
  for (int k = 0; k <= d; ++k) {
    Elem c = F.mul(F.pow(s, d - k), F.pow(t, k));
    if (c != 0) v = linalg::axpy(F, c, param[k], v);
  }
  return v;
}

Vec eval_curve_derivative(const FiniteField& F, const Mat& param, Elem s, Elem t) {
  const int d = static_cast<int>(param.size()) - 1;
  if (s == 0) return param[d - 1];
  Elem h = F.div(t, s);
  Vec v(param[0].size(), 0);
  Elem k_elem = 0;
  for (int k = 1; k <= d; ++k) {
    k_elem = F.add(k_elem, 1);
    Elem c = F.mul(k_elem, F.pow(h, k - 1));
    if (c != 0) v = linalg::axpy(F, c, param[k], v);
  }
  return v;
}

TwistedCubic make_twisted_cubic(const FiniteField& F, Mat param) {
  if (param.size() != 4) throw GeometryError("twisted cubic needs 4 parameter vectors");
  const int len = static_cast<int>(param[0].size());
  ProjSubspace amb(F, param, len);
  if (amb.dim() != 3) throw GeometryError("twisted cubic parametrization is not of full rank");
  TwistedCubic N{amb, std::move(param), {}};
  for (int h = 0; h < F.size(); ++h) N.points.push_back(ProjPoint::from(F, eval_curve(F, N.param, 1, static_cast<Elem>(h))));
  N.points.push_back(ProjPoint::from(F, eval_curve(F, N.param, 0, 1)));
  return N;
}

int cubic_index(const TwistedCubic& N, const ProjPoint& p) {
  auto it = std::find(N.points.begin(), N.points.end(), p);
  return it == N.points.end() ? -1 : static_cast<int>(it - N.points.begin());
}

ProjSubspace tangent_of_cubic(const FiniteField& F, const TwistedCubic& N, const ProjPoint& p) {
  int idx = cubic_index(N, p);
  if (idx < 0) throw GeometryError("point is not on the twisted cubic");
  const bool inf = idx == F.size();
  Elem s = inf ? 0 : 1, t = inf ? 1 : static_cast<Elem>(idx);
  Mat rows{eval_curve(F, N.param, s, t), eval_curve_derivative(F, N.param, s, t)};
  ProjSubspace line(F, std::move(rows), N.ambient.vec_len());
  if (line.dim() != 1) throw GeometryError("degenerate tangent");
  return line;
}

// ---------------------------------------------------------------------------

std::vector<ProjSubspace> regulus_through(const FiniteField& F, const ProjSubspace& p1, const ProjSubspace& p2,
                                          const ProjSubspace& p3) {
  if (p1.dim() != 2 || p2.dim() != 2 || p3.dim() != 2) throw GeometryError("regulus_through needs planes");
  if (!meet(F, p1, p2).is_empty() || !meet(F, p1, p3).is_empty() || !meet(F, p2, p3).is_empty())
    throw GeometryError("regulus_through needs pairwise disjoint planes");
  // Write each basis vector of p3 as x + y with x in p1, y in p2; p3 is then
  // the graph of the linear map x -> y and the regulus is {graph of c * map}.
  Mat cols;
  for (const auto& r : p1.basis()) cols.push_back(r);
  for (const auto& r : p2.basis()) cols.push_back(r);
  Mat a = linalg::transpose(cols);
  Mat xs, ys;
  for (const auto& w : p3.basis()) {
    auto sol = linalg::solve(F, a, w);
    if (!sol) throw GeometryError("third plane is not in the span of the first two");
    xs.push_back(p1.combine(F, Vec(sol->begin(), sol->begin() + 3)));
    ys.push_back(p2.combine(F, Vec(sol->begin() + 3, sol->end())));
  }
  std::vector<ProjSubspace> out{p1, p2};
  for (int c = 1; c < F.size(); ++c) {
    Mat rows;
    for (int j = 0; j < 3; ++j) rows.push_back(linalg::axpy(F, static_cast<Elem>(c), ys[j], xs[j]));
    out.emplace_back(F, std::move(rows), p1.vec_len());
  }
  return out;
}

Mat mobius_from_pairs(const FiniteField& F, std::span<const Vec> xs, std::span<const Vec> ys) {
  auto frame = [&](std::span<const Vec> p) {
    // Columns l1 p1, l2 p2 with p3 = l1 p1 + l2 p2.
    Mat a{{p[0][0], p[1][0]}, {p[0][1], p[1][1]}};
    auto l = linalg::solve(F, a, p[2]);
    if (!l || (*l)[0] == 0 || (*l)[1] == 0 || linalg::det(F, a) == 0)
      throw GeometryError("Möbius map needs three distinct points");
    return Mat{{F.mul((*l)[0], p[0][0]), F.mul((*l)[1], p[1][0])}, {F.mul((*l)[0], p[0][1]), F.mul((*l)[1], p[1][1])}};
  };
  Mat ax = frame(xs), ay = frame(ys);
  auto inv = linalg::inverse(F, ax);
  return linalg::mul(F, ay, *inv);
}

}  // namespace tsplash
