#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shiftlap/difference_operators.hpp"
#include "shiftlap/measure_functions.hpp"
#include "shiftlap/shift_space.hpp"

namespace shiftlap {

// Level forms of the restrictions of u; non-decreasing in the level.
// stabilized is set when the tail is provably constant (locally constant u past
// its depth), cleared to false when the last step still grew, and left empty when
// neither is known.
struct EnergyTrace {
  std::vector<Rational> values;  // index = level
  std::optional<bool> stabilized;
};

EnergyTrace energy_trace(const PointEvaluator& u, int m_max,
                         std::size_t cap = kDefaultPointCap);

// Exact energy of a locally constant function: the level forms stop growing at
// depth-1, so one form evaluation suffices; depth 0 has energy 0.
Rational energy_of_cylinder(const CylinderFunction& f,
                            std::size_t cap = kDefaultPointCap);

struct ConstrainedMinimum {
  Rational energy;
  LevelVector minimizer;
};

// Exact minimizer of the level form subject to pinned values: solves the linear
// system that zeroes the operator at every unconstrained point.
ConstrainedMinimum min_energy_with_constraints(
    Alphabet alphabet, int m, const std::vector<std::pair<Point, Rational>>& constraints,
    std::size_t cap = kDefaultPointCap);

// Float route for the sizes where exact elimination is impractical.
struct ConstrainedMinimumF {
  double energy;
  double residual_inf;  // max |A x - b| over the reduced system
  bool residual_ok;     // residual_inf <= 1e-9
  std::vector<double> minimizer;
};
ConstrainedMinimumF min_energy_with_constraints_double(
    Alphabet alphabet, int m, const std::vector<std::pair<Point, Rational>>& constraints,
    std::size_t cap = kDefaultPointCap);

struct ResistanceResult {
  Point a;
  Point b;
  int level;
  Rational min_energy;
  Rational resistance;  // 1 / min_energy
  LevelVector minimizer;
};

// Computed at level max(depth a, depth b); the constrained minimum does not
// change at deeper levels, so this is the exact resistance. Requires a != b.
ResistanceResult effective_resistance(const Point& a, const Point& b,
                                      std::size_t cap = kDefaultPointCap);

// Deterministic pair in V_m \ V_{m-1} whose expansions alternate and disagree
// coordinatewise. Exists for every m >= 1 when N >= 3; for N = 2 only m = 1 is
// admitted. Throws when no admissible pair exists.
std::pair<Point, Point> unbounded_pair(Alphabet alphabet, int m);

// Largest admissible equal pair of deltas, halved from the first bound until the
// second (quadratic) bound holds as well.
std::pair<Rational, Rational> default_witness_deltas(Alphabet alphabet, int m);

struct WitnessResult {
  Point a;
  Point b;
  Rational delta1;
  Rational delta2;
  LevelVector values;
  Rational energy;
  Rational bound;  // 1/(m+1)
  bool below_bound;
};

// The explicit low-energy candidate: 1 at a, 0 at b, arithmetic schedules down the
// two connecting chains, one shared constant elsewhere. Its exact form value is
// reported against 1/(m+1); the inequality itself is recorded, not assumed.
WitnessResult resistance_witness(Alphabet alphabet, int m, const Rational& delta1,
                                 const Rational& delta2,
                                 std::size_t cap = kDefaultPointCap);

}  // namespace shiftlap
