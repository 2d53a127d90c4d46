#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "shiftlap/bvp_solver.hpp"
#include "shiftlap/difference_operators.hpp"
#include "shiftlap/energy_resistance.hpp"
#include "shiftlap/green_laplacian.hpp"
#include "shiftlap/io.hpp"

namespace py = pybind11;
using namespace shiftlap;

namespace {

std::vector<Rational> parse_values(const std::vector<std::string>& raw) {
  std::vector<Rational> out;
  out.reserve(raw.size());
  for (const auto& s : raw) out.push_back(Rational::from_string(s));
  return out;
}

std::vector<std::string> render_values(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

Word parse_prefix(const std::string& text) {
  Word w;
  for (char c : text) {
    if (c == '.') continue;
    if (c < '1' || c > '9') throw std::invalid_argument("bad prefix symbol");
    w.push_back(c - '0');
  }
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact difference operators, Dirichlet forms, Green kernel and boundary "
            "problems on the one-sided full shift";

  m.def("enumerate_level", [](int n, int level) {
    const LevelSet vm = LevelSet::enumerate(Alphabet(n), level);
    std::vector<std::string> out;
    out.reserve(vm.size());
    for (const Point& p : vm.points()) out.push_back(p.str());
    return out;
  }, py::arg("n"), py::arg("m"), "Level set in its order, points serialized");

  m.def("shift", [](int n, const std::string& p) {
    return shift(Point::parse(Alphabet(n), p)).str();
  }, py::arg("n"), py::arg("point"));

  m.def("inverse_branch", [](int n, int symbol, const std::string& p) {
    return inverse_branch(symbol, Point::parse(Alphabet(n), p)).str();
  }, py::arg("n"), py::arg("symbol"), py::arg("point"));

  m.def("rho", [](int n, const std::string& x, const std::string& y) -> py::object {
    const Alphabet a(n);
    const RhoValue r = rho(Point::parse(a, x), Point::parse(a, y));
    if (r.is_infinite) return py::none();
    return py::int_(r.value);
  }, py::arg("n"), py::arg("x"), py::arg("y"),
     "First disagreement index, None for equal points");

  m.def("distance", [](int n, const std::string& x, const std::string& y) {
    const Alphabet a(n);
    return distance(Point::parse(a, x), Point::parse(a, y)).str();
  }, py::arg("n"), py::arg("x"), py::arg("y"));

  m.def("neighbours", [](int n, const std::string& p, int level) {
    std::vector<std::string> out;
    for (const Point& q : neighbours(Point::parse(Alphabet(n), p), level))
      out.push_back(q.str());
    return out;
  }, py::arg("n"), py::arg("point"), py::arg("m"));

  m.def("connecting_chain", [](int n, const std::string& p) {
    std::vector<std::string> out;
    for (const Point& q : connecting_chain(Point::parse(Alphabet(n), p)))
      out.push_back(q.str());
    return out;
  }, py::arg("n"), py::arg("point"));

  m.def("dense_operator", [](int n, int level) {
    const RationalMatrix h = build_dense_H(Alphabet(n), level);
    std::vector<std::vector<std::string>> out(h.rows());
    for (std::size_t r = 0; r < h.rows(); ++r) {
      out[r].reserve(h.cols());
      for (std::size_t c = 0; c < h.cols(); ++c) out[r].push_back(h.at(r, c).str());
    }
    return out;
  }, py::arg("n"), py::arg("m"));

  m.def("dirichlet_form", [](int n, int level, const std::vector<std::string>& u,
                             const std::vector<std::string>& v) {
    const Alphabet a(n);
    const DifferenceOperator op(a, level);
    return op.form(LevelVector(a, level, parse_values(u)),
                   LevelVector(a, level, parse_values(v))).str();
  }, py::arg("n"), py::arg("m"), py::arg("u"), py::arg("v"));

  m.def("structural_check", [](int n, int level) {
    std::map<std::string, bool> out;
    for (const auto& c : structural_check(Alphabet(n), level).checks) out[c.name] = c.pass;
    return out;
  }, py::arg("n"), py::arg("m"));

  m.def("green_value", [](int n, const std::string& x, const std::string& y) {
    const Alphabet a(n);
    return green_function(Point::parse(a, x), Point::parse(a, y)).value.str();
  }, py::arg("n"), py::arg("x"), py::arg("y"));

  m.def("green_apply_level", [](int n, int depth, const std::vector<std::string>& values,
                                int level) {
    const Alphabet a(n);
    const CylinderFunction f(a, depth, parse_values(values));
    return render_values(
        green_operator_level(f, LevelSet::enumerate(a, level)).values);
  }, py::arg("n"), py::arg("depth"), py::arg("values"), py::arg("m"));

  m.def("effective_resistance", [](int n, const std::string& a_text,
                                   const std::string& b_text) {
    const Alphabet a(n);
    const ResistanceResult r =
        effective_resistance(Point::parse(a, a_text), Point::parse(a, b_text));
    std::map<std::string, std::string> out;
    out["level"] = std::to_string(r.level);
    out["min_energy"] = r.min_energy.str();
    out["resistance"] = r.resistance.str();
    return out;
  }, py::arg("n"), py::arg("a"), py::arg("b"));

  m.def("energy_trace", [](int n, int depth, const std::vector<std::string>& values,
                           int m_max) {
    const CylinderFunction f(Alphabet(n), depth, parse_values(values));
    return render_values(energy_trace(f.evaluator(), m_max).values);
  }, py::arg("n"), py::arg("depth"), py::arg("values"), py::arg("m_max"));

  m.def("unit_green_trace", [](int n, const std::string& prefix, int m_max) {
    const Alphabet a(n);
    const PointEvaluator u =
        green_operator_evaluator(CylinderFunction::constant(a, Rational(1)));
    std::vector<std::string> out;
    for (const auto& e : pointwise_laplacian_trace(u, parse_prefix(prefix), m_max))
      out.push_back(e.value.str());
    return out;
  }, py::arg("n"), py::arg("prefix"), py::arg("m_max"));

  m.def("solve_bvp_eval", [](int n, int depth, const std::vector<std::string>& f_values,
                             const std::vector<std::string>& zeta,
                             const std::vector<std::string>& points) {
    const Alphabet a(n);
    const BvpSolution sol = solve_bvp(CylinderFunction(a, depth, parse_values(f_values)),
                                      BoundaryData(a, parse_values(zeta)));
    std::vector<std::string> out;
    out.reserve(points.size());
    for (const auto& text : points) out.push_back(sol.evaluate(Point::parse(a, text)).str());
    return out;
  }, py::arg("n"), py::arg("depth"), py::arg("f_values"), py::arg("zeta"), py::arg("points"));

  m.attr("__version__") = "0.1.0";
}
