#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "shiftlap/io.hpp"
#include "shiftlap/rng.hpp"

using namespace shiftlap;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SHIFTLAP_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "shiftlap_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("decimal rendering") {
  CHECK(decimal_string(Rational(0)) == "0");
  CHECK(decimal_string(Rational(1, 3)) == "0.333333333333");
  CHECK(decimal_string(Rational(2, 3)) == "0.666666666667");
  CHECK(decimal_string(Rational(1)) == "1.00000000000");
  CHECK(decimal_string(Rational(-1, 8)) == "-0.125000000000");
  CHECK(decimal_string(Rational(1, 1024)) == "0.000976562500000");
  CHECK(decimal_string(Rational(1, 100000)) == "1.00000000000e-05");
  CHECK(decimal_string(Rational::int_pow(10, 15)) == "1.00000000000e+15");
  CHECK(decimal_string(Rational(123456, 1000)) == "123.456000000");
  CHECK(decimal_string(Rational(1, 2), 3) == "0.500");
}

TEST_CASE("function and level files round trip") {
  SplitMix64 rng(81);
  const Alphabet a(3);
  std::vector<Rational> cells(word_count(a, 2));
  for (auto& v : cells) v = random_small_rational(rng);
  const CylinderFunction f(a, 2, cells);
  CHECK(cylinder_from_json(cylinder_to_json(f)) == f);

  std::vector<Rational> values(word_count(a, 2));
  for (auto& v : values) v = random_small_rational(rng);
  const LevelVector u(a, 1, std::vector<Rational>(values.begin(), values.begin() + 9));
  const LevelVector back = level_vector_from_json(level_vector_to_json(u));
  CHECK(back.level == u.level);
  CHECK(back.values == u.values);

  const nlohmann::json j = level_set_to_json(LevelSet::enumerate(Alphabet(2), 1));
  CHECK(j.at("points") == nlohmann::json({"~1", "~2", "2~1", "1~2"}));
}

TEST_CASE("csv emission") {
  RationalMatrix m(2, 2);
  m.at(0, 0) = Rational(-1);
  m.at(0, 1) = Rational(1, 2);
  CHECK(matrix_to_csv(m) == "-1,1/2\n0,0\n");

  const std::string csv = sequence_csv({{0, Rational(1)}, {1, Rational(1, 3)}});
  CHECK(csv == "m,exact,decimal\n0,1,1.00000000000\n1,1/3,0.333333333333\n");
  CHECK(sequence_csv({}) == "m,exact,decimal\n");
}

TEST_CASE("run config round trip and validation") {
  RunConfig c;
  c.alphabet = 4;
  c.seed = 99;
  c.float_solver = true;
  const RunConfig back = RunConfig::from_json(c.to_json());
  CHECK(back.alphabet == 4);
  CHECK(back.seed == 99);
  CHECK(back.float_solver);
  CHECK_THROWS_AS(RunConfig::from_json({{"N", 1}}), std::invalid_argument);
}

TEST_CASE("cli enumerates levels in order") {
  const RunResult r = run_cli("vm-enum --N 2 --m 1");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("points") == nlohmann::json({"~1", "~2", "2~1", "1~2"}));
}

TEST_CASE("cli emits the dense operator") {
  const RunResult r = run_cli("operator --N 2 --m 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "-1,1\n1,-1\n");
}

TEST_CASE("cli structural check passes and is deterministic") {
  const RunResult r1 = run_cli("check --N 3 --m 1");
  CHECK(r1.exit_code == 0);
  const RunResult r2 = run_cli("check --N 3 --m 1");
  CHECK(r1.output == r2.output);
  CHECK(nlohmann::json::parse(r1.output).at("all_pass") == true);
}

TEST_CASE("cli green evaluation") {
  const RunResult r = run_cli("green-eval 1~2 1~3 --N 3");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("value") == "1/3");
}

TEST_CASE("cli resistance reports the comparison flag") {
  const RunResult r = run_cli("resistance --N 3 --m 2");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("exceeds_level_plus_one") == true);
  CHECK(j.contains("witness"));
  CHECK(j.at("witness").contains("below_bound"));
}

TEST_CASE("cli traces the unit source through the kernel") {
  const auto dir = temp_dir();
  const auto f_path = dir / "one.json";
  write_text_file(f_path, cylinder_to_json(CylinderFunction::constant(
                              Alphabet(2), Rational(1))).dump());
  const RunResult r =
      run_cli("laplacian-trace " + f_path.string() + " --prefix 1212 --mmax 4 --green");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "m,exact,decimal\n1,-1,-1.00000000000\n2,-1,-1.00000000000\n"
                    "3,-1,-1.00000000000\n4,-1,-1.00000000000\n");
}

TEST_CASE("cli solves and verifies a boundary problem") {
  const auto dir = temp_dir();
  write_text_file(dir / "f.json",
                  cylinder_to_json(CylinderFunction::constant(Alphabet(2), Rational(1)))
                      .dump());
  write_text_file(dir / "zeta.json", R"({"N": 2, "values": ["0", "1"]})");
  const RunResult r = run_cli("solve-bvp --f " + (dir / "f.json").string() + " --zeta " +
                              (dir / "zeta.json").string() + " --verify 4 --outdir " +
                              dir.string() + " --out-prefix case");
  CHECK(r.exit_code == 0);
  const auto verify = read_json_file(dir / "case_verify.json");
  CHECK(verify.at("pass") == true);
  CHECK(verify.at("boundary_exact") == true);
}

TEST_CASE("cli signals usage errors") {
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("vm-enum").exit_code == 2);             // missing required options
  CHECK(run_cli("green-eval 1~2 1~9 --N 3").exit_code == 2);  // symbol outside range
}

TEST_CASE("cli energy trace of a locally constant function") {
  const auto dir = temp_dir();
  const CylinderFunction step(Alphabet(2), 1, {Rational(1), Rational(0)});
  write_text_file(dir / "step.json", cylinder_to_json(step).dump());
  const RunResult r =
      run_cli("energy-trace --f " + (dir / "step.json").string() + " --mmax 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "m,exact,decimal\n0,1,1.00000000000\n1,1,1.00000000000\n"
                    "2,1,1.00000000000\n3,1,1.00000000000\n");
}
