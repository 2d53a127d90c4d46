#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shiftlap/measure_functions.hpp"
#include "shiftlap/shift_space.hpp"

namespace shiftlap {

// Green kernel value. The infinite case only arises for a diagonal pair outside
// the eventually-constant points, so every Point-pair query is finite; the flag
// keeps the kernel's full signature.
struct GreenValue {
  Rational value;
  bool is_infinite = false;
};

// Kernel through its defining double sum: level by level, the indicator factors
// collapse to the truncations of x and y, and the level matrix entry is read off
// from whether the truncations coincide or are related fresh points.
GreenValue green_function(const Point& x, const Point& y);

// Closed form: coordinate-change counts below the disagreement index. Must agree
// with green_function everywhere.
GreenValue green_function_fast(const Point& x, const Point& y);

// g(p, .) as an exact locally constant function of depth depth(p)+1;
// identically zero when p is a fixed point.
CylinderFunction green_section(const Point& p);

// Integral of g(p, .) f against the balanced Bernoulli measure, exact for
// locally constant f.
Rational green_operator(const CylinderFunction& f, const Point& p);

PointEvaluator green_operator_evaluator(const CylinderFunction& f);

// Batch of green_operator over a whole level, in the level order.
LevelVector green_operator_level(const CylinderFunction& f, const LevelSet& vm);

// max over fresh points p of V_m of |N^{m+1} (H_m u|Vm)(p) - f(p)|; m >= 1.
Rational laplacian_residual(const PointEvaluator& u, const PointEvaluator& f, int m,
                            std::size_t cap = kDefaultPointCap);

// Renormalized operator values along the fresh points that track a prefix;
// the probe tail is the smallest symbol differing from the last tracked one.
struct LaplacianTraceEntry {
  int level;
  Point probe;
  Rational value;  // N^{m+1} (H_m u)(probe)
};
using LaplacianTrace = std::vector<LaplacianTraceEntry>;

LaplacianTrace pointwise_laplacian_trace(const PointEvaluator& u, const Word& x_prefix,
                                         int m_max);

struct GreenBoundReport {
  bool bound_holds;
  bool fast_matches;
  std::size_t pairs_checked;
  std::size_t equality_pairs;  // pairs attaining (2 rho - 3)/N
  std::optional<std::pair<Point, Point>> violation;
};

// Exhaustive over ordered pairs of the level: kernel within |(2 rho - 3)/N| and
// the two evaluation routes identical.
GreenBoundReport check_green_bound(Alphabet alphabet, int depth,
                                   std::size_t cap = kDefaultPointCap);

}  // namespace shiftlap
