#include "zxlat/errors.hpp"
#include "zxlat/eval/contract.hpp"
#include "zxlat/models/graph_io.hpp"
#include "zxlat/verify/suites.hpp"
#include "zxlat/zx/io.hpp"
#include "zxlat/zx/rules.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace zxlat;

namespace {

constexpr int kBadArgs = 2;
constexpr int kOverCap = 3;

zx::ZxDiagram readDiagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path);
  }
  try {
    return zx::fromJson(json::parse(in));
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

int emit(const verify::Report& r) {
  std::cout << r.toJson().dump(2) << "\n";
  return r.exitCode();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"ZX-calculus engine and lattice duality verifier"};
  app.require_subcommand(1);

  verify::SuiteOptions opts;
  std::string dumpPath;
  app.add_option("--seed", opts.seed, "seed for random states")->default_val(0);
  app.add_option("--states", opts.randomStates, "random states per identity")
      ->default_val(5)
      ->check(CLI::PositiveNumber);
  app.add_option("--dump-state", dumpPath, "write D|+...+> in the binary state format");

  std::size_t L = 0;
  double lambda1 = 1.0;
  auto* v1 = app.add_subcommand("verify-1d", "Kramers-Wannier identities on a chain");
  v1->add_option("--L", L, "number of sites")->required()->check(CLI::Range(3, 64));
  v1->add_option("--lambda", lambda1, "deformation coupling")->default_val(1.0);

  std::size_t lx = 0;
  std::size_t ly = 0;
  std::size_t lz = 0;
  double lambda3 = 1.0;
  bool eigensolve = false;
  auto* v3 = app.add_subcommand("verify-3d", "Wegner duality identities on a 3-torus");
  v3->add_option("--Lx", lx)->required()->check(CLI::Range(2, 64));
  v3->add_option("--Ly", ly)->required()->check(CLI::Range(2, 64));
  v3->add_option("--Lz", lz)->required()->check(CLI::Range(2, 64));
  v3->add_option("--lambda", lambda3, "deformation coupling")->default_val(1.0);
  v3->add_flag("--eigensolve", eigensolve, "confirm the ground energy iteratively");

  std::string graphPath;
  auto* vg = app.add_subcommand("verify-graph", "graph-framework identities for a model file");
  vg->add_option("file", graphPath)->required();

  std::string diagramPath;
  auto* simp = app.add_subcommand("simplify", "simplify a diagram and print the trace");
  simp->add_option("diagram", diagramPath)->required();

  std::size_t denseCap = 12;
  auto* con = app.add_subcommand("contract", "dense matrix of a diagram");
  con->add_option("diagram", diagramPath)->required();
  con->add_option("--dense-cap", denseCap, "largest number of boundary legs")
      ->default_val(12);

  std::size_t perRule = 3;
  auto* self = app.add_subcommand("selftest-rules", "soundness of every rewrite rule");
  self->add_option("--instances", perRule, "instances per rule")->default_val(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }
  if (!dumpPath.empty()) {
    opts.dumpState = dumpPath;
  }

  try {
    if (*v1) {
      return emit(verify::verify1d(L, lambda1, opts));
    }
    if (*v3) {
      return emit(verify::verify3d(lx, ly, lz, lambda3, eigensolve, opts));
    }
    if (*vg) {
      std::vector<std::string> warnings;
      const auto m = models::loadGraphFile(graphPath, &warnings);
      for (const auto& w : warnings) {
        std::cerr << "warning: " << w << "\n";
      }
      return emit(verify::verifyGraph(m, opts));
    }
    if (*self) {
      return emit(verify::selftestRules(opts, perRule));
    }
    if (*simp) {
      const auto d = readDiagram(diagramPath);
      const auto result = zx::simplify(d);
      json trace = json::array();
      for (const auto& m : result.trace) {
        trace.push_back({{"rule", zx::ruleName(m.rule)},
                         {"anchors", m.anchors},
                         {"direction", m.direction == zx::Direction::Forward
                                           ? "forward"
                                           : "backward"}});
      }
      std::cout << json{{"diagram", zx::toJson(result.diagram)}, {"trace", trace}}.dump(2)
                << "\n";
      return 0;
    }
    if (*con) {
      const auto d = readDiagram(diagramPath);
      eval::ContractOptions co;
      co.denseCap = denseCap;
      const auto mat = eval::contract(d, co);
      json re = json::array();
      json im = json::array();
      for (std::size_t r = 0; r < mat.rows(); ++r) {
        json rr = json::array();
        json ii = json::array();
        for (std::size_t c = 0; c < mat.cols(); ++c) {
          rr.push_back(mat(r, c).real());
          ii.push_back(mat(r, c).imag());
        }
        re.push_back(rr);
        im.push_back(ii);
      }
      std::cout << json{{"inputs", d.inputs().size()},
                        {"outputs", d.outputs().size()},
                        {"rows", mat.rows()},
                        {"cols", mat.cols()},
                        {"re", re},
                        {"im", im}}
                       .dump(2)
                << "\n";
      return 0;
    }
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOverCap;
  } catch (const KernelTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOverCap;
  } catch (const SearchCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOverCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  }
  return kBadArgs;
}
