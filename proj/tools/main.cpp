#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "shiftlap/acceptance.hpp"
#include "shiftlap/bvp_solver.hpp"
#include "shiftlap/difference_operators.hpp"
#include "shiftlap/energy_resistance.hpp"
#include "shiftlap/green_laplacian.hpp"
#include "shiftlap/io.hpp"

namespace {

using namespace shiftlap;

std::filesystem::path resolve_out(const RunConfig& config, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return p;
  return std::filesystem::path(config.outdir) / p;
}

void emit(const RunConfig& config, const std::optional<std::string>& out,
          const std::string& content) {
  if (out) {
    write_text_file(resolve_out(config, *out), content);
  } else {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
  }
}

std::vector<std::pair<int, Rational>> indexed(const std::vector<Rational>& values) {
  std::vector<std::pair<int, Rational>> rows;
  rows.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) rows.emplace_back(static_cast<int>(i), values[i]);
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact difference operators, energies, kernels and boundary problems "
               "on the one-sided full shift"};
  app.require_subcommand(1);

  RunConfig config;
  if (const char* env = std::getenv("SHIFTLAP_OUTDIR")) config.outdir = env;
  std::string config_file;
  app.add_option("--config", config_file, "JSON file mirroring the run configuration");
  app.add_option("--outdir", config.outdir, "directory for written outputs");
  app.add_option("--point-cap", config.point_cap, "hard cap on enumerated points");
  app.add_option("--seed", config.seed, "seed for the deterministic generator");

  int arg_n = 3;
  int arg_m = 1;
  int arg_mmax = 6;
  std::string arg_f;
  std::string arg_u;
  std::string arg_zeta;
  std::string arg_prefix;
  std::string arg_a;
  std::string arg_b;
  std::optional<std::string> arg_out;
  bool arg_float = false;
  bool arg_green = false;
  int arg_sample_depth = -1;
  int arg_verify = -1;

  auto* vm_enum = app.add_subcommand("vm-enum", "list a level set in its order");
  vm_enum->add_option("--N", arg_n, "alphabet size")->required();
  vm_enum->add_option("--m", arg_m, "level")->required();
  vm_enum->add_option("--out", arg_out, "write JSON here instead of stdout");

  auto* op_cmd = app.add_subcommand("operator", "dense difference operator as CSV");
  op_cmd->add_option("--N", arg_n, "alphabet size")->required();
  op_cmd->add_option("--m", arg_m, "level")->required();
  op_cmd->add_option("--out", arg_out, "write CSV here instead of stdout");

  auto* check_cmd = app.add_subcommand("check", "structural checks for one level");
  check_cmd->add_option("--N", arg_n, "alphabet size")->required();
  check_cmd->add_option("--m", arg_m, "level")->required();
  check_cmd->add_option("--out", arg_out, "write the JSON report here");

  auto* trace_cmd = app.add_subcommand("energy-trace", "level forms of a function file");
  trace_cmd->add_option("--f", arg_f, "locally constant function (JSON)")->required();
  trace_cmd->add_option("--mmax", arg_mmax, "last level")->required();
  trace_cmd->add_option("--out", arg_out, "write CSV here instead of stdout");

  auto* res_cmd = app.add_subcommand("resistance", "effective resistance of a pair");
  res_cmd->add_option("--N", arg_n, "alphabet size")->required();
  res_cmd->add_option("--m", arg_m, "level (picks the canonical separated pair)");
  res_cmd->add_option("--a", arg_a, "first point, e.g. 12~1");
  res_cmd->add_option("--b", arg_b, "second point");
  res_cmd->add_flag("--float", arg_float, "64-bit solver with residual report");
  res_cmd->add_option("--out", arg_out, "write JSON here instead of stdout");

  auto* geval_cmd = app.add_subcommand("green-eval", "kernel value at a pair of points");
  geval_cmd->add_option("x", arg_a, "first point")->required();
  geval_cmd->add_option("y", arg_b, "second point")->required();
  geval_cmd->add_option("--N", arg_n, "alphabet size")->required();
  geval_cmd->add_option("--out", arg_out, "write JSON here instead of stdout");

  auto* gapply_cmd = app.add_subcommand("green-apply", "integral operator over a level");
  gapply_cmd->add_option("--f", arg_f, "source function (JSON)")->required();
  gapply_cmd->add_option("--level", arg_m, "level")->required();
  gapply_cmd->add_option("--out", arg_out, "write JSON here instead of stdout");

  auto* ltrace_cmd = app.add_subcommand("laplacian-trace",
                                        "renormalized operator values along a prefix");
  ltrace_cmd->add_option("u", arg_u, "function file (JSON)")->required();
  ltrace_cmd->add_option("--prefix", arg_prefix, "tracked coordinates, e.g. 1212")->required();
  ltrace_cmd->add_option("--mmax", arg_mmax, "last level")->required();
  ltrace_cmd->add_flag("--green", arg_green,
                       "trace the integral operator applied to the file instead");
  ltrace_cmd->add_option("--out", arg_out, "write CSV here instead of stdout");

  auto* bvp_cmd = app.add_subcommand("solve-bvp", "assemble and verify a boundary problem");
  bvp_cmd->add_option("--f", arg_f, "source function (JSON)")->required();
  bvp_cmd->add_option("--zeta", arg_zeta, "boundary values (JSON)")->required();
  bvp_cmd->add_option("--sample-depth", arg_sample_depth, "emit a sampled function file");
  bvp_cmd->add_option("--verify", arg_verify, "verify residuals up to this level");
  bvp_cmd->add_option("--out-prefix", arg_out, "path prefix for written files");

  auto* report_cmd = app.add_subcommand("report-all", "run the full verification suite");
  for (CLI::App* sub : {vm_enum, op_cmd, check_cmd, trace_cmd, res_cmd, geval_cmd,
                        gapply_cmd, ltrace_cmd, bvp_cmd, report_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!config_file.empty()) {
      const std::string outdir_flag = config.outdir;
      config = RunConfig::from_json(read_json_file(config_file));
      if (app.count("--outdir")) config.outdir = outdir_flag;
    }
    config.validate();

    if (vm_enum->parsed()) {
      const LevelSet vm = LevelSet::enumerate(Alphabet(arg_n), arg_m, config.point_cap);
      emit(config, arg_out, level_set_to_json(vm).dump(2));
      return 0;
    }

    if (op_cmd->parsed()) {
      emit(config, arg_out, matrix_to_csv(build_dense_H(Alphabet(arg_n), arg_m, config.point_cap)));
      return 0;
    }

    if (check_cmd->parsed()) {
      const StructuralReport report =
          structural_check(Alphabet(arg_n), arg_m, config.seed, config.point_cap);
      emit(config, arg_out, structural_report_to_json(report).dump(2));
      if (!report.all_pass()) {
        for (const auto& c : report.checks)
          if (!c.pass) std::cerr << "failed: " << c.name << '\n';
        return 1;
      }
      return 0;
    }

    if (trace_cmd->parsed()) {
      const CylinderFunction f = cylinder_from_json(read_json_file(arg_f));
      const EnergyTrace trace = energy_trace(f.evaluator(), arg_mmax, config.point_cap);
      emit(config, arg_out, sequence_csv(indexed(trace.values)));
      return 0;
    }

    if (res_cmd->parsed()) {
      const Alphabet a(arg_n);
      nlohmann::json out;
      if (!arg_a.empty() || !arg_b.empty()) {
        const Point pa = Point::parse(a, arg_a);
        const Point pb = Point::parse(a, arg_b);
        out = resistance_to_json(effective_resistance(pa, pb, config.point_cap));
      } else {
        const auto [pa, pb] = unbounded_pair(a, arg_m);
        if (arg_float || config.float_solver) {
          const ConstrainedMinimumF min = min_energy_with_constraints_double(
              a, arg_m, {{pa, Rational(1)}, {pb, Rational(0)}}, config.point_cap);
          out = {{"a", pa.str()},
                 {"b", pb.str()},
                 {"level", arg_m},
                 {"min_energy_float", min.energy},
                 {"resistance_float", 1.0 / min.energy},
                 {"residual_inf", min.residual_inf},
                 {"residual_ok", min.residual_ok},
                 {"exceeds_level_plus_one", 1.0 / min.energy > arg_m + 1}};
        } else {
          out = resistance_to_json(effective_resistance(pa, pb, config.point_cap));
        }
        if (arg_m >= 2) {
          const auto [d1, d2] = default_witness_deltas(a, arg_m);
          out["witness"] = witness_to_json(resistance_witness(a, arg_m, d1, d2, config.point_cap));
        }
      }
      emit(config, arg_out, out.dump(2));
      return 0;
    }

    if (geval_cmd->parsed()) {
      const Alphabet a(arg_n);
      const Point x = Point::parse(a, arg_a);
      const Point y = Point::parse(a, arg_b);
      const GreenValue g = green_function(x, y);
      const nlohmann::json out = {{"x", x.str()},
                                  {"y", y.str()},
                                  {"value", g.value.str()},
                                  {"decimal", decimal_string(g.value)}};
      emit(config, arg_out, out.dump(2));
      return 0;
    }

    if (gapply_cmd->parsed()) {
      const CylinderFunction f = cylinder_from_json(read_json_file(arg_f));
      const LevelSet vm = LevelSet::enumerate(f.alphabet(), arg_m, config.point_cap);
      emit(config, arg_out, level_vector_to_json(green_operator_level(f, vm)).dump(2));
      return 0;
    }

    if (ltrace_cmd->parsed()) {
      const CylinderFunction file = cylinder_from_json(read_json_file(arg_u));
      Word prefix;
      for (char c : arg_prefix) {
        if (c == '.') continue;
        if (c < '1' || c > '9') throw std::invalid_argument("bad prefix symbol");
        prefix.push_back(c - '0');
      }
      const PointEvaluator u =
          arg_green ? green_operator_evaluator(file) : file.evaluator();
      const LaplacianTrace trace = pointwise_laplacian_trace(u, prefix, arg_mmax);
      std::vector<std::pair<int, Rational>> rows;
      for (const auto& e : trace) rows.emplace_back(e.level, e.value);
      emit(config, arg_out, sequence_csv(rows));
      return 0;
    }

    if (bvp_cmd->parsed()) {
      const CylinderFunction f = cylinder_from_json(read_json_file(arg_f));
      const nlohmann::json zj = read_json_file(arg_zeta);
      std::vector<Rational> zeta;
      for (const auto& v : zj.at("values"))
        zeta.push_back(Rational::from_string(v.get<std::string>()));
      const BvpSolution sol = solve_bvp(f, BoundaryData(Alphabet(zj.at("N").get<int>()), zeta));

      const std::string prefix = arg_out.value_or("bvp");
      nlohmann::json summary = {{"boundary", zj.at("values")}};
      if (arg_sample_depth >= 0) {
        const CylinderFunction sample = sol.sampled(arg_sample_depth, config.point_cap);
        write_text_file(resolve_out(config, prefix + "_sample.json"),
                        cylinder_to_json(sample).dump(2));
        summary["sample_file"] = prefix + "_sample.json";
      }
      bool ok = true;
      if (arg_verify >= 1) {
        const BvpVerification v = verify_solution(sol, arg_verify, config.point_cap);
        write_text_file(resolve_out(config, prefix + "_verify.json"),
                        verification_to_json(v).dump(2));
        summary["verify_file"] = prefix + "_verify.json";
        summary["verified"] = v.pass;
        ok = v.pass;
      }
      std::cout << summary.dump(2) << '\n';
      return ok ? 0 : 1;
    }

    if (report_cmd->parsed()) {
      const auto results = acceptance::run_all(std::cout, config.seed);
      return acceptance::all_pass(results) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
