#include "shiftlap/bvp_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftlap {

BoundaryData::BoundaryData(Alphabet a, std::vector<Rational> v)
    : alphabet(a), values(std::move(v)) {
  if (values.size() != static_cast<std::size_t>(alphabet.n))
    throw DimensionError("boundary data needs one value per symbol");
}

BvpSolution::BvpSolution(CylinderFunction locally_constant_part, CylinderFunction source,
                         BoundaryData boundary)
    : harmonic_(std::move(locally_constant_part)),
      source_(std::move(source)),
      boundary_(std::move(boundary)) {
  if (!(harmonic_.alphabet() == source_.alphabet()) ||
      !(harmonic_.alphabet() == boundary_.alphabet))
    throw std::invalid_argument("solution parts over different alphabets");
}

Rational BvpSolution::evaluate(const Point& p) const {
  return harmonic_.evaluate(p) - green_operator(source_, p);
}

PointEvaluator BvpSolution::evaluator() const {
  BvpSolution copy = *this;
  return PointEvaluator(harmonic_.alphabet(),
                        [copy](const Point& p) { return copy.evaluate(p); });
}

CylinderFunction BvpSolution::sampled(int m, std::size_t cap) const {
  const LevelSet vm = LevelSet::enumerate(harmonic_.alphabet(), m, cap);
  return min_energy_extension(restrict_to_level(evaluator(), vm), vm);
}

BvpSolution solve_bvp(const CylinderFunction& f, const BoundaryData& zeta) {
  if (!(f.alphabet() == zeta.alphabet))
    throw std::invalid_argument("source and boundary data over different alphabets");
  CylinderFunction lift(zeta.alphabet, 1, zeta.values);
  return BvpSolution(std::move(lift), f, zeta);
}

BvpSolution add_harmonic_perturbation(const BvpSolution& sol, const CylinderFunction& h) {
  if (!(h.alphabet() == sol.harmonic_part().alphabet()))
    throw std::invalid_argument("perturbation over a different alphabet");
  for (Symbol l = 1; l <= h.alphabet().n; ++l)
    if (!h.evaluate(Point::fixed(h.alphabet(), l)).is_zero())
      throw std::invalid_argument("perturbation must vanish on the boundary");
  return BvpSolution(sol.harmonic_part() + h, sol.source(), sol.boundary());
}

BvpVerification verify_solution(const BvpSolution& sol, int m_max, std::size_t cap) {
  const Alphabet a = sol.harmonic_part().alphabet();
  BvpVerification out;
  out.boundary_exact = true;
  for (Symbol l = 1; l <= a.n; ++l) {
    if (!(sol.evaluate(Point::fixed(a, l)) == sol.boundary().at(l))) {
      out.boundary_exact = false;
      break;
    }
  }

  // The G-route residual vanishes once cells of length m+1 refine the source;
  // the locally constant part needs the level to reach its own depth.
  out.asserted_from =
      std::max({1, sol.source().depth() - 1, sol.harmonic_part().depth()});

  const LevelSet vtop = LevelSet::enumerate(a, std::max(m_max, 1), cap);
  const LevelVector full = restrict_to_level(sol.evaluator(), vtop);
  const Rational n_members(a.n);

  out.pass = out.boundary_exact;
  for (int m = 1; m <= m_max; ++m) {
    const Rational scale = Rational::int_pow(a.n, static_cast<unsigned>(m + 1));
    const std::size_t fresh_from = word_count(a, m);
    Rational worst;
    std::string worst_point;
    const std::size_t n_classes = word_count(a, m);
    for (std::size_t c = 0; c < n_classes; ++c) {
      Word w = word_at(a, m, c);
      w.push_back(0);
      std::vector<std::size_t> members(static_cast<std::size_t>(a.n));
      Rational sum;
      for (Symbol l = 1; l <= a.n; ++l) {
        w.back() = l;
        const std::size_t idx = vtop.index_of(cell_point(a, w));
        members[static_cast<std::size_t>(l - 1)] = idx;
        sum += full.values[idx];
      }
      for (std::size_t idx : members) {
        if (idx < fresh_from) continue;
        const Point& p = vtop.at(idx);
        const Rational res =
            (scale * (sum - n_members * full.values[idx]) - sol.source().evaluate(p)).abs();
        if (res > worst) {
          worst = res;
          worst_point = p.str();
        }
      }
    }
    const bool asserted = m >= out.asserted_from;
    if (asserted && !worst.is_zero()) {
      out.pass = false;
      if (!out.first_failure) out.first_failure = std::make_pair(m, worst_point);
    }
    out.residuals.push_back({m, std::move(worst), asserted});
  }
  return out;
}

}  // namespace shiftlap
