// verify: run named checks for one choice of q and polynomials.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tsplash/checks.hpp"

namespace {

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check tangent splash statements over GF(q^3)"};
  tsplash::RunConfig cfg;
  std::optional<int> base_prime;
  std::string base_poly, t, checks = "all", json_path;
  bool quiet = false;
  app.add_option("--q", cfg.q, "order of the base field")->default_val(2);
  app.add_option("--base-prime", base_prime, "characteristic (must divide q)");
  app.add_option("--base-poly", base_poly, "modulus of GF(q) over GF(p): lower coefficients, constant first");
  app.add_option("--t", t, "cubic x^3 - t2 x^2 - t1 x - t0 as t0,t1,t2");
  app.add_option("--checks", checks, "comma list of checks, or all")->default_val("all");
  app.add_option("--samples", cfg.samples, "randomized cases per check")->default_val(20);
  app.add_option("--seed", cfg.seed, "PRNG seed")->default_val(1);
  app.add_option("--json", json_path, "write the report here");
  app.add_flag("--quiet", quiet, "no table on stdout");
  app.add_flag("--timings", cfg.timings, "include elapsed_ms in reports");
  CLI11_PARSE(app, argc, argv);

  try {
    cfg.base_prime = base_prime;
    if (!base_poly.empty()) {
      std::vector<tsplash::Elem> m;
      for (int v : parse_ints(base_poly)) m.push_back(static_cast<tsplash::Elem>(v));
      cfg.base_modulus = m;
    }
    if (!t.empty()) {
      auto v = parse_ints(t);
      if (v.size() != 3) throw tsplash::ConfigError("--t needs three values t0,t1,t2");
      for (int x : v)
        if (x < 0 || x >= cfg.q) throw tsplash::ConfigError("--t values must lie in 0..q-1");
      cfg.t = tsplash::CubicPoly{static_cast<tsplash::Elem>(v[0]), static_cast<tsplash::Elem>(v[1]),
                                 static_cast<tsplash::Elem>(v[2])};
    }
    cfg.checks = split(checks);
    auto ctx = tsplash::make_context(cfg);
    auto reports = tsplash::run_checks(cfg);

    int failed = 0;
    for (const auto& r : reports)
      if (r.status == tsplash::Status::fail) ++failed;
    if (!quiet) {
      std::printf("q=%d  t=(%d,%d,%d)\n", ctx.q(), ctx.poly().t0, ctx.poly().t1, ctx.poly().t2);
      for (const auto& r : reports) {
        std::string counts;
        for (const auto& [k, v] : r.counts) counts += " " + k + "=" + std::to_string(v);
        std::printf("%-20s %-8s%s", r.name.c_str(), tsplash::to_string(r.status), counts.c_str());
        if (r.elapsed_ms) std::printf("  (%.1f ms)", *r.elapsed_ms);
        if (!r.message.empty()) std::printf("  [%s]", r.message.c_str());
        std::printf("\n");
      }
    }
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw std::runtime_error("cannot write " + json_path);
      out << tsplash::report_json(ctx, reports).dump(2) << "\n";
    }
    return failed == 0 ? 0 : 1;
  } catch (const tsplash::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
