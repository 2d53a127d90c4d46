#include "shiftlap/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace shiftlap {

std::string decimal_string(const Rational& v, int significant) {
  if (significant < 1) throw std::invalid_argument("need at least one digit");
  if (v.is_zero()) return "0";
  const bool negative = v.sign() < 0;
  mpz_class num = ::abs(v.numerator());
  const mpz_class& den = v.denominator();

  // Decimal exponent e with 10^e <= |v| < 10^{e+1}.
  long e = static_cast<long>(mpz_sizeinbase(mpz_class(num / den).get_mpz_t(), 10)) - 1;
  if (num < den) {
    e = -1;
    mpz_class scaled = num * 10;
    while (scaled < den) {
      scaled *= 10;
      --e;
    }
  } else {
    // sizeinbase may overshoot by one.
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e >= 0 ? e : 0));
    if (num / den < p) --e;
  }

  const long shift = significant - 1 - e;
  mpz_class n2 = num;
  mpz_class d2 = den;
  if (shift >= 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    n2 *= p;
  } else {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    d2 *= p;
  }
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
  if (2 * r >= d2) q += 1;

  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) > significant) {  // rounding carried over
    digits.pop_back();
    ++e;
  }

  std::string out;
  if (e >= significant || e < -4) {
    out += digits.substr(0, 1);
    out += '.';
    out += digits.substr(1);
    out += 'e';
    out += (e < 0 ? "-" : "+");
    const long ea = e < 0 ? -e : e;
    if (ea < 10) out += '0';
    out += std::to_string(ea);
  } else if (e >= 0) {
    out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
          digits.substr(static_cast<std::size_t>(e + 1));
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  }
  return negative ? "-" + out : out;
}

nlohmann::json cylinder_to_json(const CylinderFunction& f) {
  nlohmann::json values = nlohmann::json::array();
  for (const Rational& v : f.values()) values.push_back(v.str());
  return {{"N", f.alphabet().n}, {"depth", f.depth()}, {"values", values}};
}

CylinderFunction cylinder_from_json(const nlohmann::json& j) {
  const Alphabet a(j.at("N").get<int>());
  const int depth = j.at("depth").get<int>();
  std::vector<Rational> values;
  for (const auto& v : j.at("values"))
    values.push_back(Rational::from_string(v.get<std::string>()));
  return CylinderFunction(a, depth, std::move(values));
}

nlohmann::json level_vector_to_json(const LevelVector& u) {
  nlohmann::json values = nlohmann::json::array();
  for (const Rational& v : u.values) values.push_back(v.str());
  return {{"N", u.alphabet.n}, {"level", u.level}, {"values", values}};
}

LevelVector level_vector_from_json(const nlohmann::json& j) {
  const Alphabet a(j.at("N").get<int>());
  const int level = j.at("level").get<int>();
  std::vector<Rational> values;
  for (const auto& v : j.at("values"))
    values.push_back(Rational::from_string(v.get<std::string>()));
  return LevelVector(a, level, std::move(values));
}

nlohmann::json level_set_to_json(const LevelSet& vm) {
  nlohmann::json points = nlohmann::json::array();
  for (const Point& p : vm.points()) points.push_back(p.str());
  return {{"N", vm.alphabet().n}, {"level", vm.level()}, {"points", points}};
}

std::string matrix_to_csv(const RationalMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << m.at(r, c).str();
    }
    out << '\n';
  }
  return out.str();
}

std::string sequence_csv(const std::vector<std::pair<int, Rational>>& rows) {
  std::ostringstream out;
  out << "m,exact,decimal\n";
  for (const auto& [m, v] : rows)
    out << m << ',' << v.str() << ',' << decimal_string(v) << '\n';
  return out.str();
}

nlohmann::json structural_report_to_json(const StructuralReport& report) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& c : report.checks) {
    nlohmann::json entry = {{"pass", c.pass}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks[c.name] = entry;
  }
  return {{"N", report.alphabet},
          {"level", report.level},
          {"size", report.size},
          {"all_pass", report.all_pass()},
          {"checks", checks}};
}

nlohmann::json verification_to_json(const BvpVerification& v) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& r : v.residuals)
    levels.push_back({{"level", r.level},
                      {"max_residual", r.max_residual.str()},
                      {"asserted", r.asserted}});
  nlohmann::json out = {{"boundary_exact", v.boundary_exact},
                        {"asserted_from", v.asserted_from},
                        {"levels", levels},
                        {"pass", v.pass}};
  if (v.first_failure)
    out["first_failure"] = {{"level", v.first_failure->first},
                            {"point", v.first_failure->second}};
  return out;
}

nlohmann::json resistance_to_json(const ResistanceResult& r) {
  return {{"a", r.a.str()},
          {"b", r.b.str()},
          {"level", r.level},
          {"min_energy", r.min_energy.str()},
          {"min_energy_decimal", decimal_string(r.min_energy)},
          {"resistance", r.resistance.str()},
          {"resistance_decimal", decimal_string(r.resistance)},
          {"exceeds_level_plus_one", r.resistance > Rational(r.level + 1)}};
}

nlohmann::json witness_to_json(const WitnessResult& w) {
  return {{"a", w.a.str()},
          {"b", w.b.str()},
          {"delta1", w.delta1.str()},
          {"delta2", w.delta2.str()},
          {"energy", w.energy.str()},
          {"energy_decimal", decimal_string(w.energy)},
          {"bound", w.bound.str()},
          {"below_bound", w.below_bound}};
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  nlohmann::json j;
  in >> j;
  return j;
}

void RunConfig::validate() const {
  if (alphabet < 2) throw std::invalid_argument("config: alphabet needs N >= 2");
  if (level_cap < 0) throw std::invalid_argument("config: negative level cap");
  if (point_cap == 0) throw std::invalid_argument("config: zero point cap");
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  if (j.contains("N")) c.alphabet = j.at("N").get<int>();
  if (j.contains("level_cap")) c.level_cap = j.at("level_cap").get<int>();
  if (j.contains("point_cap")) c.point_cap = j.at("point_cap").get<std::size_t>();
  if (j.contains("float_solver")) c.float_solver = j.at("float_solver").get<bool>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("outdir")) c.outdir = j.at("outdir").get<std::string>();
  c.validate();
  return c;
}

nlohmann::json RunConfig::to_json() const {
  return {{"N", alphabet},          {"level_cap", level_cap}, {"point_cap", point_cap},
          {"float_solver", float_solver}, {"seed", seed},     {"outdir", outdir}};
}

}  // namespace shiftlap
