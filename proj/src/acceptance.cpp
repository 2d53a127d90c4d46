#include "shiftlap/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "shiftlap/bvp_solver.hpp"
#include "shiftlap/difference_operators.hpp"
#include "shiftlap/energy_resistance.hpp"
#include "shiftlap/green_laplacian.hpp"
#include "shiftlap/io.hpp"
#include "shiftlap/measure_functions.hpp"

namespace shiftlap::acceptance {

namespace {

struct GridPoint {
  Alphabet alphabet;
  int level;
};

// Every (N, m), N in 2..5, with N^{m+1} <= 1300.
std::vector<GridPoint> operator_grid() {
  std::vector<GridPoint> grid;
  for (int n = 2; n <= 5; ++n) {
    std::size_t size = static_cast<std::size_t>(n);
    for (int m = 0; size <= 1300; ++m, size *= static_cast<std::size_t>(n))
      grid.push_back({Alphabet(n), m});
  }
  return grid;
}

LevelVector random_level_vector(Alphabet a, int m, SplitMix64& rng) {
  std::vector<Rational> values(word_count(a, m + 1));
  for (auto& v : values) v = random_small_rational(rng);
  return LevelVector(a, m, std::move(values));
}

CylinderFunction random_cylinder(Alphabet a, int depth, SplitMix64& rng) {
  std::vector<Rational> values(word_count(a, depth));
  for (auto& v : values) v = random_small_rational(rng);
  return CylinderFunction(a, depth, std::move(values));
}

Point random_point(Alphabet a, int max_depth, SplitMix64& rng) {
  const int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_depth) + 1));
  Word prefix(static_cast<std::size_t>(len));
  for (auto& s : prefix) s = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(a.n))) + 1;
  const Symbol tail = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(a.n))) + 1;
  return Point(a, std::move(prefix), tail);
}

// u(x) = sum_i x_i 2^{-i}, exact at eventually-constant points:
// (sum_{i<=d} x_i 2^{d-i} + tail) / 2^d, the tail contributing its geometric series.
PointEvaluator coordinate_series_evaluator(Alphabet a) {
  return PointEvaluator(a, [](const Point& p) {
    const int d = p.depth();
    long long num = 0;
    for (int i = 1; i <= d; ++i) num = 2 * num + p.coord(i);
    num += p.tail();
    return Rational(num, 1LL << d);
  });
}

using Clock = std::chrono::steady_clock;

CriterionResult timed(int number, std::string name,
                      const std::function<std::pair<bool, std::string>()>& body) {
  const auto start = Clock::now();
  bool pass = false;
  std::string detail;
  try {
    auto [p, d] = body();
    pass = p;
    detail = std::move(d);
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return CriterionResult{number, std::move(name), pass, std::move(detail), seconds};
}

std::string grid_label(const GridPoint& g) {
  return "N=" + std::to_string(g.alphabet.n) + ",m=" + std::to_string(g.level);
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream& log, std::uint64_t seed) {
  std::vector<CriterionResult> results;
  const auto grid = operator_grid();

  // Filled by the first criterion, reused by the second.
  std::vector<StructuralReport> reports;

  const auto emit = [&](CriterionResult r) {
    log << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.number << ": " << r.name;
    if (!r.detail.empty()) log << " (" << r.detail << ")";
    std::ostringstream secs;
    secs.precision(1);
    secs << std::fixed << r.seconds;
    log << " [" << secs.str() << "s]" << std::endl;
    results.push_back(std::move(r));
  };

  emit(timed(1, "operator structure over the grid", [&]() -> std::pair<bool, std::string> {
    const auto start = Clock::now();
    for (const auto& g : grid)
      reports.push_back(structural_check(g.alphabet, g.level, seed + 1));
    static const char* wanted[] = {"symmetric",
                                   "zero_row_sums",
                                   "off_diagonal_in_01",
                                   "diagonal_matches_depth_rule",
                                   "constants_in_kernel",
                                   "rank_is_size_minus_one",
                                   "form_nonnegative_on_seeded_vectors"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (const auto& check : reports[i].checks) {
        for (const char* name : wanted) {
          if (check.name == name && !check.pass)
            return {false, grid_label(grid[i]) + " failed " + check.name};
        }
      }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > 120.0) return {false, "runtime target exceeded"};
    return {true, std::to_string(grid.size()) + " grid points"};
  }));

  emit(timed(2, "block identities", [&]() -> std::pair<bool, std::string> {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i].level < 1) continue;
      for (const auto& check : reports[i].checks) {
        if (check.name == "x_times_minus_green_is_identity" ||
            check.name == "schur_complement_matches_previous_level") {
          ++checked;
          if (!check.pass) return {false, grid_label(grid[i]) + " failed " + check.name};
        }
      }
    }
    return {true, std::to_string(checked) + " identities"};
  }));

  emit(timed(3, "form equals summed squared differences", [&]() -> std::pair<bool, std::string> {
    SplitMix64 rng(seed + 3);
    for (const auto& g : grid) {
      const DifferenceOperator op(g.alphabet, g.level);
      for (int trial = 0; trial < 100; ++trial) {
        const LevelVector u = random_level_vector(g.alphabet, g.level, rng);
        const LevelVector v = random_level_vector(g.alphabet, g.level, rng);
        if (!(op.form(u, v) == op.form_pairwise(u, v)))
          return {false, grid_label(g) + " mismatch"};
      }
    }
    return {true, "100 pairs x " + std::to_string(grid.size()) + " grid points"};
  }));

  emit(timed(4, "unit clamp never increases the form", [&]() -> std::pair<bool, std::string> {
    SplitMix64 rng(seed + 4);
    std::size_t samples = 0;
    while (samples < 500) {
      for (const auto& g : grid) {
        const DifferenceOperator op(g.alphabet, g.level);
        const LevelVector u = random_level_vector(g.alphabet, g.level, rng);
        const LevelVector c = unit_clamp(u);
        if (op.form(c, c) > op.form(u, u)) return {false, grid_label(g) + " clamp grew"};
        if (++samples >= 500) break;
      }
    }
    return {true, "500 vectors"};
  }));

  emit(timed(5, "form-preserving extension is unique minimum", [&]() -> std::pair<bool, std::string> {
    SplitMix64 rng(seed + 5);
    std::size_t cases = 0;
    for (const auto& g : grid) {
      if (g.level > 4) continue;
      const DifferenceOperator op_m(g.alphabet, g.level);
      const DifferenceOperator op_up(g.alphabet, g.level + 1);
      const std::size_t fresh_from = word_count(g.alphabet, g.level + 1);
      const std::size_t fresh_count = op_up.level_set().size() - fresh_from;
      for (int trial = 0; trial < 5; ++trial) {
        const LevelVector v = random_level_vector(g.alphabet, g.level, rng);
        const Rational base = op_m.form(v, v);
        const CylinderFunction ext = min_energy_extension(v, op_m.level_set());
        LevelVector lifted = restrict_to_level(ext.evaluator(), op_up.level_set());
        if (!(op_up.form(lifted, lifted) == base)) return {false, grid_label(g) + " form moved"};
        for (int alt = 0; alt < 3; ++alt) {
          LevelVector other = lifted;
          bool changed = false;
          for (std::size_t i = 0; i < fresh_count; ++i) {
            if (rng.below(3) != 0) continue;
            const Rational bump = random_small_rational(rng);
            if (bump.is_zero()) continue;
            other.values[fresh_from + i] += bump;
            changed = true;
          }
          if (!changed) {
            other.values[fresh_from + rng.below(fresh_count)] += Rational(1);
          }
          if (!(op_up.form(other, other) > base))
            return {false, grid_label(g) + " non-strict competing extension"};
        }
        ++cases;
      }
    }
    return {true, std::to_string(cases) + " extensions"};
  }));

  emit(timed(6, "kernel bound and closed form", [&]() -> std::pair<bool, std::string> {
    const GreenBoundReport r2 = check_green_bound(Alphabet(2), 4);
    if (!r2.bound_holds || !r2.fast_matches)
      return {false, "N=2 depth 4 exhaustive check failed"};
    const GreenBoundReport r3 = check_green_bound(Alphabet(3), 3);
    if (!r3.bound_holds || !r3.fast_matches)
      return {false, "N=3 depth 3 exhaustive check failed"};
    SplitMix64 rng(seed + 6);
    std::size_t random_pairs = 0;
    for (int n = 2; n <= 4; ++n) {
      const Alphabet a(n);
      for (int trial = 0; trial < 3334; ++trial) {
        const Point x = random_point(a, 8, rng);
        const Point y = random_point(a, 8, rng);
        if (!(green_function(x, y).value == green_function_fast(x, y).value))
          return {false, "route mismatch at N=" + std::to_string(n)};
        ++random_pairs;
      }
    }
    return {true, std::to_string(r2.pairs_checked + r3.pairs_checked) + " exhaustive + " +
                      std::to_string(random_pairs) + " random pairs"};
  }));

  emit(timed(7, "operator of the kernel integral identity", [&]() -> std::pair<bool, std::string> {
    SplitMix64 rng(seed + 7);
    std::size_t checked = 0;
    for (int n = 2; n <= 3; ++n) {
      const Alphabet a(n);
      const LevelSet v4 = LevelSet::enumerate(a, 4);
      for (int trial = 0; trial < 50; ++trial) {
        const CylinderFunction f =
            random_cylinder(a, static_cast<int>(rng.below(4)), rng);
        const LevelVector gf = restrict_to_level(green_operator_evaluator(f), v4);
        for (int level = 1; level <= 4; ++level) {
          const std::size_t fresh_from = word_count(a, level);
          const std::size_t classes = word_count(a, level);
          for (std::size_t c = 0; c < classes; ++c) {
            Word w = word_at(a, level, c);
            w.push_back(0);
            Rational sum;
            std::vector<std::size_t> members(static_cast<std::size_t>(a.n));
            for (Symbol l = 1; l <= a.n; ++l) {
              w.back() = l;
              members[static_cast<std::size_t>(l - 1)] = v4.index_of(cell_point(a, w));
            }
            for (std::size_t idx : members) sum += gf.values[idx];
            for (std::size_t idx : members) {
              if (idx < fresh_from) continue;
              const Point& p = v4.at(idx);
              if (p.depth() != level) continue;
              const Rational lhs = sum - Rational(a.n) * gf.values[idx];
              const Rational rhs = -(CylinderFunction::indicator(p, level) * f).integrate();
              if (!(lhs == rhs)) return {false, "mismatch at " + p.str()};
              ++checked;
            }
          }
        }
      }
    }
    return {true, std::to_string(checked) + " point identities, 50 sources per alphabet"};
  }));

  emit(timed(8, "boundary problem solutions verify exactly", [&]() -> std::pair<bool, std::string> {
    const auto start = Clock::now();
    SplitMix64 rng(seed + 8);
    std::size_t solved = 0;
    for (int n = 2; n <= 3; ++n) {
      const Alphabet a(n);
      for (int depth = 0; depth <= 2; ++depth) {
        const CylinderFunction f = random_cylinder(a, depth, rng);
        std::vector<Rational> zeta(static_cast<std::size_t>(a.n));
        for (auto& z : zeta) z = random_small_rational(rng);
        const BvpSolution sol = solve_bvp(f, BoundaryData(a, std::move(zeta)));
        const BvpVerification v = verify_solution(sol, 6);
        if (!v.boundary_exact) return {false, "boundary drift at N=" + std::to_string(n)};
        if (!v.pass) {
          std::string where = v.first_failure
                                  ? (" at level " + std::to_string(v.first_failure->first) +
                                     ", point " + v.first_failure->second)
                                  : "";
          return {false, "nonzero residual" + where};
        }
        ++solved;
      }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > 300.0) return {false, "runtime target exceeded"};
    return {true, std::to_string(solved) + " seeded problems, levels 1..6"};
  }));

  emit(timed(9, "constrained minimum stays under 1/(m+1)", [&]() -> std::pair<bool, std::string> {
    const Alphabet a(3);
    std::string notes;
    for (int m = 2; m <= 6; ++m) {
      const auto [pa, pb] = unbounded_pair(a, m);
      const Rational bound(1, m + 1);
      notes += (notes.empty() ? "m=" : "; m=") + std::to_string(m);
      if (m <= 4) {
        const ConstrainedMinimum min = min_energy_with_constraints(
            a, m, {{pa, Rational(1)}, {pb, Rational(0)}});
        if (!(min.energy < bound))
          return {false, "exact minimum not below bound at m=" + std::to_string(m)};
        notes += " exact " + min.energy.str();
      } else {
        const ConstrainedMinimumF min = min_energy_with_constraints_double(
            a, m, {{pa, Rational(1)}, {pb, Rational(0)}});
        if (min.residual_inf > 1e-9)
          return {false, "float residual too large at m=" + std::to_string(m)};
        const double margin = bound.to_double() - min.energy;
        if (margin < 10.0 * std::max(min.residual_inf, 1e-15))
          return {false, "margin too thin at m=" + std::to_string(m)};
        notes += " float " + std::to_string(min.energy);
      }
      const auto [d1, d2] = default_witness_deltas(a, m);
      const WitnessResult w = resistance_witness(a, m, d1, d2);
      notes += w.below_bound ? ", witness below" : ", witness above";
    }
    return {true, notes};
  }));

  emit(timed(10, "pointwise renormalized operator limits", [&]() -> std::pair<bool, std::string> {
    SplitMix64 rng(seed + 10);
    for (int n = 2; n <= 3; ++n) {
      const Alphabet a(n);
      Word prefix;
      for (int i = 0; i < 8; ++i) prefix.push_back(i % 2 == 0 ? 1 : 2);
      const PointEvaluator g1 =
          green_operator_evaluator(CylinderFunction::constant(a, Rational(1)));
      for (const auto& entry : pointwise_laplacian_trace(g1, prefix, 8)) {
        if (!(entry.value == Rational(-1)))
          return {false, "G(1) trace is not -1 at level " + std::to_string(entry.level)};
      }
      // Locally constant u of depth K: the trace vanishes once the level
      // reaches K, where related points share length-K prefixes.
      for (int depth = 0; depth <= 3; ++depth) {
        for (int trial = 0; trial < 5; ++trial) {
          const CylinderFunction u = random_cylinder(a, depth, rng);
          const int from = std::max(1, depth);
          for (const auto& entry : pointwise_laplacian_trace(u.evaluator(), prefix, 8)) {
            if (entry.level >= from && !entry.value.is_zero())
              return {false, "depth-" + std::to_string(depth) +
                                 " trace nonzero at level " + std::to_string(entry.level)};
          }
        }
      }
    }
    return {true, "G(1) traces -1 through level 8; locally constant traces vanish"};
  }));

  emit(timed(11, "harmonic approximation halves per level", [&]() -> std::pair<bool, std::string> {
    for (int n = 2; n <= 3; ++n) {
      const Alphabet a(n);
      const PointEvaluator u = coordinate_series_evaluator(a);
      const Rational factor = Rational(1, 2) + Rational(1, 1'000'000'000'000LL);
      Rational previous;
      for (int m = 1; m <= 8; ++m) {
        const CylinderFunction um = harmonic_approximation(u, m);
        const LevelSet grid_set = LevelSet::enumerate(a, m + 2);
        Rational sup;
        for (const Point& p : grid_set.points()) {
          const Rational diff = (u(p) - um.evaluate(p)).abs();
          if (diff > sup) sup = diff;
        }
        if (m > 1 && sup > factor * previous)
          return {false, "contraction factor exceeded at m=" + std::to_string(m) +
                             ", N=" + std::to_string(n)};
        previous = sup;
      }
    }
    return {true, "levels 1..8, N in {2,3}"};
  }));

  return results;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace shiftlap::acceptance
