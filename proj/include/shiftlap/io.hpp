#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "shiftlap/bvp_solver.hpp"
#include "shiftlap/difference_operators.hpp"
#include "shiftlap/energy_resistance.hpp"
#include "shiftlap/matrix.hpp"
#include "shiftlap/measure_functions.hpp"
#include "shiftlap/shift_space.hpp"

namespace shiftlap {

// Round-half-up decimal rendering with the given significant digits; exact
// rationals stay authoritative, this is for plots and logs.
std::string decimal_string(const Rational& v, int significant = 12);

nlohmann::json cylinder_to_json(const CylinderFunction& f);
CylinderFunction cylinder_from_json(const nlohmann::json& j);

nlohmann::json level_vector_to_json(const LevelVector& u);
LevelVector level_vector_from_json(const nlohmann::json& j);

nlohmann::json level_set_to_json(const LevelSet& vm);

std::string matrix_to_csv(const RationalMatrix& m);

// CSV with columns (m, exact, decimal).
std::string sequence_csv(const std::vector<std::pair<int, Rational>>& rows);

nlohmann::json structural_report_to_json(const StructuralReport& report);
nlohmann::json verification_to_json(const BvpVerification& v);
nlohmann::json resistance_to_json(const ResistanceResult& r);
nlohmann::json witness_to_json(const WitnessResult& w);

void write_text_file(const std::filesystem::path& path, const std::string& content);
nlohmann::json read_json_file(const std::filesystem::path& path);

// Run-wide knobs; defaults favor reproducibility (fixed seed).
struct RunConfig {
  int alphabet = 3;
  int level_cap = 16;
  std::size_t point_cap = kDefaultPointCap;
  bool float_solver = false;
  std::uint64_t seed = kDefaultSeed;
  std::string outdir = ".";

  void validate() const;
  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

}  // namespace shiftlap
