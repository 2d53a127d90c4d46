#include "shiftlap/energy_resistance.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftlap {

EnergyTrace energy_trace(const PointEvaluator& u, int m_max, std::size_t cap) {
  if (m_max < 0) throw std::invalid_argument("negative trace level");
  const Alphabet a = u.alphabet();
  const LevelSet vtop = LevelSet::enumerate(a, m_max, cap);
  const LevelVector r = restrict_to_level(u, vtop);

  // Level forms accumulate: each level adds the squared differences over its
  // fresh classes, so one pass per level over the class words suffices.
  EnergyTrace trace;
  Rational energy;
  for (int i = 0; i <= m_max; ++i) {
    const std::size_t n_classes = word_count(a, i);
    for (std::size_t c = 0; c < n_classes; ++c) {
      Word w = word_at(a, i, c);
      w.push_back(0);
      std::vector<std::size_t> members(static_cast<std::size_t>(a.n));
      for (Symbol l = 1; l <= a.n; ++l) {
        w.back() = l;
        members[static_cast<std::size_t>(l - 1)] = vtop.index_of(cell_point(a, w));
      }
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          const Rational d = r.values[members[x]] - r.values[members[y]];
          if (!d.is_zero()) energy += d * d;
        }
    }
    trace.values.push_back(energy);
  }

  if (u.cylinder_depth().has_value() && m_max >= std::max(*u.cylinder_depth() - 1, 0)) {
    trace.stabilized = true;
  } else if (m_max >= 1 && trace.values.back() > trace.values[trace.values.size() - 2]) {
    trace.stabilized = false;
  }
  return trace;
}

Rational energy_of_cylinder(const CylinderFunction& f, std::size_t cap) {
  if (f.depth() == 0) return Rational(0);
  const int m = f.depth() - 1;
  const DifferenceOperator op(f.alphabet(), m, cap);
  const LevelVector u = restrict_to_level(f.evaluator(), op.level_set());
  return op.form(u, u);
}

namespace {

std::vector<std::pair<std::size_t, Rational>> constraint_indices(
    const LevelSet& vm, const std::vector<std::pair<Point, Rational>>& constraints) {
  if (constraints.empty()) throw std::invalid_argument("need at least one constraint");
  std::vector<std::pair<std::size_t, Rational>> out;
  out.reserve(constraints.size());
  for (const auto& [p, value] : constraints) {
    const auto idx = vm.find(p);
    if (!idx) throw std::invalid_argument("constrained point outside the level: " + p.str());
    for (const auto& [seen, v] : out)
      if (seen == *idx) throw std::invalid_argument("point constrained twice: " + p.str());
    out.emplace_back(*idx, value);
  }
  return out;
}

}  // namespace

ConstrainedMinimum min_energy_with_constraints(
    Alphabet alphabet, int m, const std::vector<std::pair<Point, Rational>>& constraints,
    std::size_t cap) {
  const DifferenceOperator op(alphabet, m, cap);
  const LevelSet& vm = op.level_set();
  const std::size_t n = vm.size();
  const auto pinned = constraint_indices(vm, constraints);

  std::vector<bool> is_pinned(n, false);
  std::vector<Rational> u(n);
  for (const auto& [idx, value] : pinned) {
    is_pinned[idx] = true;
    u[idx] = value;
  }
  std::vector<std::size_t> free_idx;
  free_idx.reserve(n - pinned.size());
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pinned[i]) free_idx.push_back(i);

  if (!free_idx.empty()) {
    const RationalMatrix h = op.dense();
    const std::size_t k = free_idx.size();
    RationalMatrix a(k, k);
    std::vector<Rational> rhs(k);
    for (std::size_t r = 0; r < k; ++r) {
      const std::size_t row = free_idx[r];
      for (std::size_t c = 0; c < k; ++c) a.at(r, c) = h.at(row, free_idx[c]);
      Rational s;
      for (const auto& [idx, value] : pinned) {
        const Rational& hv = h.at(row, idx);
        if (!hv.is_zero()) s -= hv * value;
      }
      rhs[r] = s;
    }
    const std::vector<Rational> x = solve_linear(a, rhs);
    for (std::size_t r = 0; r < k; ++r) u[free_idx[r]] = x[r];
  }

  LevelVector minimizer(alphabet, m, std::move(u));
  const std::vector<Rational> hu = op.apply_raw(minimizer.values);
  for (std::size_t i : free_idx)
    if (!hu[i].is_zero())
      throw SingularSystemError("constrained minimizer not flat at a free point");
  Rational energy;
  for (std::size_t i = 0; i < n; ++i)
    if (!minimizer.values[i].is_zero()) energy -= minimizer.values[i] * hu[i];
  return ConstrainedMinimum{std::move(energy), std::move(minimizer)};
}

ConstrainedMinimumF min_energy_with_constraints_double(
    Alphabet alphabet, int m, const std::vector<std::pair<Point, Rational>>& constraints,
    std::size_t cap) {
  const DifferenceOperator op(alphabet, m, cap);
  const LevelSet& vm = op.level_set();
  const std::size_t n = vm.size();
  const auto pinned = constraint_indices(vm, constraints);

  std::vector<bool> is_pinned(n, false);
  std::vector<double> u(n, 0.0);
  for (const auto& [idx, value] : pinned) {
    is_pinned[idx] = true;
    u[idx] = value.to_double();
  }
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pinned[i]) free_idx.push_back(i);

  // Dense operator in floats, assembled straight from the class structure.
  std::vector<double> h(n * n, 0.0);
  for (int i = 0; i <= m; ++i)
    for (const auto& members : op.classes_at(i))
      for (std::size_t x = 0; x < members.size(); ++x)
        for (std::size_t y = 0; y < members.size(); ++y)
          if (x != y) h[members[x] * n + members[y]] += 1.0;
  for (std::size_t i = 0; i < n; ++i)
    h[i * n + i] = -static_cast<double>((m - vm.at(i).depth() + 1) * (alphabet.n - 1));

  double residual = 0.0;
  if (!free_idx.empty()) {
    const std::size_t k = free_idx.size();
    std::vector<double> a(k * k);
    std::vector<double> rhs(k, 0.0);
    for (std::size_t r = 0; r < k; ++r) {
      const std::size_t row = free_idx[r];
      for (std::size_t c = 0; c < k; ++c) a[r * k + c] = h[row * n + free_idx[c]];
      double s = 0.0;
      for (const auto& [idx, value] : pinned) s -= h[row * n + idx] * value.to_double();
      rhs[r] = s;
    }
    const std::vector<double> x = solve_linear_double(a, k, rhs);
    for (std::size_t r = 0; r < k; ++r) u[free_idx[r]] = x[r];
    for (std::size_t r = 0; r < k; ++r) {
      double s = -rhs[r];
      for (std::size_t c = 0; c < k; ++c) s += a[r * k + c] * x[c];
      residual = std::max(residual, std::abs(s));
    }
  }

  double energy = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < n; ++c) s += h[r * n + c] * u[c];
    energy -= u[r] * s;
  }
  return ConstrainedMinimumF{energy, residual, residual <= 1e-9, std::move(u)};
}

ResistanceResult effective_resistance(const Point& a, const Point& b, std::size_t cap) {
  if (!(a.alphabet() == b.alphabet()))
    throw std::invalid_argument("resistance across different alphabets");
  if (a == b) throw std::invalid_argument("resistance undefined for a pair of equal points");
  const int level = std::max(a.depth(), b.depth());
  ConstrainedMinimum min = min_energy_with_constraints(
      a.alphabet(), level, {{a, Rational(1)}, {b, Rational(0)}}, cap);
  Rational resistance = Rational(1) / min.energy;
  return ResistanceResult{a,        b, level, std::move(min.energy), std::move(resistance),
                          std::move(min.minimizer)};
}

std::pair<Point, Point> unbounded_pair(Alphabet alphabet, int m) {
  if (m < 1) throw std::invalid_argument("unbounded pair needs level >= 1");
  if (alphabet.n == 2 && m > 1)
    throw std::invalid_argument("no admissible pair for two symbols beyond level 1");
  Word a_word(static_cast<std::size_t>(m) + 1);
  Word b_word(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i < m + 1; ++i) {
    a_word[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1 : 2;
    b_word[static_cast<std::size_t>(i)] =
        alphabet.n >= 3 ? ((i % 2 == 0) ? 2 : 3) : ((i % 2 == 0) ? 2 : 1);
  }
  return {cell_point(alphabet, a_word), cell_point(alphabet, b_word)};
}

namespace {

// delta_i < 1/(2m(N-1)) and d1^2 + d2^2 < 6(m^2-m-1) / ((m^4+m)(N-1)^2(2N^2-N)).
bool deltas_admissible(Alphabet alphabet, int m, const Rational& d1, const Rational& d2) {
  if (d1.sign() <= 0 || d2.sign() <= 0) return false;
  const Rational linear_bound(1, 2LL * m * (alphabet.n - 1));
  if (!(d1 < linear_bound) || !(d2 < linear_bound)) return false;
  const long long n1 = alphabet.n - 1;
  const Rational quad_bound =
      Rational(6 * (static_cast<long long>(m) * m - m - 1)) /
      Rational((static_cast<long long>(m) * m * m * m + m) * n1 * n1 *
               (2LL * alphabet.n * alphabet.n - alphabet.n));
  return d1 * d1 + d2 * d2 < quad_bound;
}

}  // namespace

std::pair<Rational, Rational> default_witness_deltas(Alphabet alphabet, int m) {
  if (m < 2) throw std::invalid_argument("witness deltas need level >= 2");
  Rational d = Rational(1, 2LL * m * (alphabet.n - 1)) / Rational(2);
  for (int i = 0; i < 128 && !deltas_admissible(alphabet, m, d, d); ++i) d /= Rational(2);
  if (!deltas_admissible(alphabet, m, d, d))
    throw std::invalid_argument("no admissible deltas at this level");
  return {d, d};
}

WitnessResult resistance_witness(Alphabet alphabet, int m, const Rational& delta1,
                                 const Rational& delta2, std::size_t cap) {
  if (m < 2) throw std::invalid_argument("witness construction needs level >= 2");
  const auto [a, b] = unbounded_pair(alphabet, m);
  if (!deltas_admissible(alphabet, m, delta1, delta2))
    throw std::invalid_argument("deltas violate the admissibility bounds");

  const DifferenceOperator op(alphabet, m, cap);
  const LevelSet& vm = op.level_set();
  const Rational top_a = Rational(1) - Rational(static_cast<long long>(m) *
                                                (alphabet.n - 1)) * delta1;
  const Rational fill = top_a - (delta1 + delta2) / Rational(2);
  std::vector<Rational> u(vm.size(), fill);

  // Chain classes from the deep end toward V_0: the fresh members first, then the
  // inherited one, each one further step along the arithmetic schedule.
  const auto schedule = [&](const Point& anchor, const Rational& start,
                            const Rational& step) {
    u[vm.index_of(anchor)] = start;
    int taken = 0;
    for (int i = m; i >= 1; --i) {
      Word head = anchor.head(i);
      const Symbol fold = head.back();            // tail matching this symbol folds down
      const Symbol deeper = anchor.coord(i + 1);  // the chain member already valued
      head.push_back(0);
      for (Symbol l = 1; l <= alphabet.n; ++l) {
        if (l == fold || l == deeper) continue;
        head.back() = l;
        ++taken;
        u[vm.index_of(cell_point(alphabet, head))] = start + step * Rational(taken);
      }
      head.back() = fold;
      ++taken;
      u[vm.index_of(cell_point(alphabet, head))] = start + step * Rational(taken);
    }
  };
  schedule(a, Rational(1), -delta1);
  schedule(b, Rational(0), delta2);

  LevelVector values(alphabet, m, std::move(u));
  Rational energy = op.form(values, values);
  const Rational bound(1, m + 1);
  const bool below = energy < bound;
  return WitnessResult{a,      b,      delta1,            delta2,
                       std::move(values), std::move(energy), bound, below};
}

}  // namespace shiftlap
