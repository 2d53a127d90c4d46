#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlap/green_laplacian.hpp"
#include "shiftlap/measure_functions.hpp"
#include "shiftlap/shift_space.hpp"

namespace shiftlap {

// Pinned values on the fixed points, one per symbol.
struct BoundaryData {
  Alphabet alphabet;
  std::vector<Rational> values;

  BoundaryData(Alphabet a, std::vector<Rational> v);
  const Rational& at(Symbol l) const { return values[static_cast<std::size_t>(l - 1)]; }
};

// u = (locally constant part) - G f. The locally constant part starts as the
// depth-1 lift of the boundary data and may carry added perturbations that vanish
// on the fixed points, so boundary values always reproduce exactly.
class BvpSolution {
 public:
  BvpSolution(CylinderFunction locally_constant_part, CylinderFunction source,
              BoundaryData boundary);

  const CylinderFunction& harmonic_part() const { return harmonic_; }
  const CylinderFunction& source() const { return source_; }
  const BoundaryData& boundary() const { return boundary_; }

  Rational evaluate(const Point& p) const;
  PointEvaluator evaluator() const;

  // Locally constant sample: the form-preserving lift of the restriction to V_m.
  CylinderFunction sampled(int m, std::size_t cap = kDefaultPointCap) const;

 private:
  CylinderFunction harmonic_;
  CylinderFunction source_;
  BoundaryData boundary_;
};

// Assembles the solution of (renormalized operator) u = f with pinned boundary.
BvpSolution solve_bvp(const CylinderFunction& f, const BoundaryData& zeta);

// Adds a locally constant h with h = 0 on every fixed point; the result solves
// the same problem. Throws when h does not vanish on the boundary.
BvpSolution add_harmonic_perturbation(const BvpSolution& sol, const CylinderFunction& h);

struct LevelResidual {
  int level;
  Rational max_residual;
  bool asserted;  // required to vanish at this level
};

struct BvpVerification {
  bool boundary_exact;
  int asserted_from;
  std::vector<LevelResidual> residuals;
  bool pass;
  std::optional<std::pair<int, std::string>> first_failure;  // (level, point)
};

// Boundary values checked exactly; residuals N^{m+1}(H_m u)(p) - f(p) over fresh
// points are required to vanish once the level clears both the source depth - 1
// and the locally constant part's depth; earlier levels are reported only.
BvpVerification verify_solution(const BvpSolution& sol, int m_max,
                                std::size_t cap = kDefaultPointCap);

}  // namespace shiftlap
