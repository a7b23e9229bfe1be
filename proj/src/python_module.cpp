#include <algorithm>
#include <array>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tsplash/bruckbose.hpp"
#include "tsplash/checks.hpp"
#include "tsplash/construct.hpp"
#include "tsplash/splash.hpp"

namespace py = pybind11;
using namespace tsplash;

namespace {

// Points cross the boundary as lists of field-element indices.
using Points = std::vector<Vec>;

class Geometry {
 public:
  Geometry(int q, std::optional<std::array<int, 3>> t)
      : ctx_(t ? FieldCtx::create(q, CubicPoly{static_cast<Elem>((*t)[0]), static_cast<Elem>((*t)[1]),
                                               static_cast<Elem>((*t)[2])})
               : FieldCtx::create(q)),
        S_(build_spread(ctx_)) {}

  int q() const { return ctx_.q(); }
  std::array<int, 3> poly() const { return {ctx_.poly().t0, ctx_.poly().t1, ctx_.poly().t2}; }

  Points canonical_subplane() const { return tsplash::canonical_subplane(ctx_).point_key(); }

  Vec sigma(const Vec& P) const { return sigma_of(ctx_, P); }

  Points subline(const Vec& A, const Vec& B, const Vec& C) const {
    auto pts = subline_points(ctx_, subline_through(ctx_, A, B, C));
    std::sort(pts.begin(), pts.end());
    return pts;
  }

  Points splash_of_subplane(const Points& pts) const { return splash_of(S_, subplane(pts)).points; }

  Points complete_splash(const Vec& T, const Vec& A, const Vec& B, const Vec& C) const {
    return tsplash::complete_splash(S_, T, A, B, C).points;
  }

  std::vector<Mat> cover_planes(const Points& splash) const {
    std::vector<Mat> out;
    for (const auto& p : tsplash::cover_planes(S_, to_splash(splash))) out.push_back(p.plane.basis());
    return out;
  }

  Points construct(const Points& splash, const Points& line) const {
    return construct_subplane(S_, to_splash(splash), to_subline(line)).subplane.point_key();
  }

  std::vector<Points> brute_force(const Points& splash, const Points& line) const {
    std::vector<Points> out;
    for (const auto& B : brute_force_subplanes(S_, to_splash(splash), to_subline(line))) out.push_back(B.point_key());
    return out;
  }

 private:
  TangentSubplane subplane(const Points& pts) const {
    auto B = subplane_from_points(ctx_, pts);
    if (!B) throw GeometryError("points do not form a tangent subplane");
    return *B;
  }
  Splash to_splash(const Points& pts) const {
    if (pts.empty()) throw GeometryError("empty splash");
    return make_splash(S_, pts[0], Points(pts.begin() + 1, pts.end()));
  }
  Subline to_subline(const Points& pts) const {
    if (pts.size() < 3) throw GeometryError("a subline needs three points");
    return subline_through(ctx_, pts[0], pts[1], pts[2]);
  }

  FieldCtx ctx_;
  RegularSpread S_;
};

std::string run_json(int q, std::vector<std::string> checks, int samples, std::uint64_t seed) {
  RunConfig cfg;
  cfg.q = q;
  cfg.checks = std::move(checks);
  cfg.samples = samples;
  cfg.seed = seed;
  auto ctx = make_context(cfg);
  return report_json(ctx, run_checks(cfg)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::class_<Geometry>(m, "Geometry")
      .def(py::init<int, std::optional<std::array<int, 3>>>(), py::arg("q"), py::arg("t") = py::none())
      .def_property_readonly("q", &Geometry::q)
      .def_property_readonly("poly", &Geometry::poly)
      .def("canonical_subplane", &Geometry::canonical_subplane)
      .def("sigma", &Geometry::sigma, py::arg("point"))
      .def("subline", &Geometry::subline, py::arg("a"), py::arg("b"), py::arg("c"))
      .def("splash", &Geometry::splash_of_subplane, py::arg("subplane"),
           "Points of l_inf on the subplane's splash, centre first.")
      .def("complete_splash", &Geometry::complete_splash, py::arg("centre"), py::arg("a"), py::arg("b"),
           py::arg("c"))
      .def("cover_planes", &Geometry::cover_planes, py::arg("splash"))
      .def("construct", &Geometry::construct, py::arg("splash"), py::arg("subline"))
      .def("brute_force", &Geometry::brute_force, py::arg("splash"), py::arg("subline"));
  m.def("_run_json", &run_json, py::arg("q"), py::arg("checks"), py::arg("samples"), py::arg("seed"));
}
