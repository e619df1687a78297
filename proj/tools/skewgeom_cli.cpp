// skewgeom: run verification suites from the command line.
//
// Exit codes: 0 all checks pass, 1 a check fails, 2 usage or parse error,
// 3 sampling infeasible.

#include "skewgeom/errors.hpp"
#include "skewgeom/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace skewgeom;

int emit(const VerificationReport& rep, const std::string& json_path) {
  std::cout << rep.to_text();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 2;
    }
    out << rep.to_json().dump(2) << "\n";
  }
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for skew-circulant structures on 4-manifolds"};
  app.require_subcommand(1);

  SuiteOptions opt;
  double tol = 0.0;
  std::string json_path, A, B, alpha;
  std::vector<double> direction;
  double a = 0.0, b = 0.0;
  bool grid = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--points", opt.points, "accepted sample points")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "generator seed");
    sub->add_option("--tol", tol, "override every residual tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--json", json_path, "write the machine-readable report here");
  };

  CLI::App* chart = app.add_subcommand("chart-verify", "chart and Hermitian identities");
  chart->add_option("--A", A, "expression for A")->required();
  chart->add_option("--B", B, "expression for B")->required();
  common(chart);

  CLI::App* conf = app.add_subcommand("conformal-verify", "conformal change alpha g");
  conf->add_option("--A", A, "expression for A")->required();
  conf->add_option("--B", B, "expression for B")->required();
  conf->add_option("--alpha", alpha, "positive conformal factor")->required();
  common(conf);

  CLI::App* curv = app.add_subcommand("curvature-report", "curvature of g and g~");
  curv->add_option("--A", A, "expression for A")->required();
  curv->add_option("--B", B, "expression for B")->required();
  curv->add_option("--direction", direction, "v1,v2,v3,v4")->delimiter(',')->expected(4);
  common(curv);

  CLI::App* lie = app.add_subcommand("lie-report", "left-invariant structure on g45");
  CLI::Option* oa = lie->add_option("--a", a, "bracket parameter a");
  CLI::Option* ob = lie->add_option("--b", b, "bracket parameter b");
  CLI::Option* og = lie->add_flag("--grid", grid, "sweep a, b over {-1, -0.75, ..., 1}");
  oa->needs(ob);
  ob->needs(oa);
  og->excludes(oa)->excludes(ob);
  common(lie);

  CLI::App* all = app.add_subcommand("all", "every suite over the built-in corpus");
  common(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (tol > 0.0) opt.tol = tol;

  try {
    if (chart->parsed()) return emit(chart_suite(parse_family(A, B), opt), json_path);
    if (conf->parsed())
      return emit(conformal_suite(parse_family(A, B), {parse(alpha)}, opt), json_path);
    if (curv->parsed()) {
      std::optional<Vec4d> x;
      if (!direction.empty()) x = Vec4d(direction[0], direction[1], direction[2], direction[3]);
      return emit(curvature_suite(parse_family(A, B), opt, x), json_path);
    }
    if (lie->parsed()) {
      if (grid) return emit(lie_grid_suite(opt), json_path);
      if (oa->count() == 0) {
        std::cerr << "error: lie-report needs --a and --b, or --grid\n";
        return 2;
      }
      return emit(lie_suite(a, b, opt), json_path);
    }
    if (all->parsed()) return emit(full_suite(opt), json_path);
  } catch (const SamplingInfeasible& e) {
    std::cerr << "sampling infeasible: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
