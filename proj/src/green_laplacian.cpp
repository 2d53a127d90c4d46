#include "shiftlap/green_laplacian.hpp"

#include <algorithm>
#include <stdexcept>

namespace shiftlap {

GreenValue green_function(const Point& x, const Point& y) {
  if (!(x.alphabet() == y.alphabet()))
    throw std::invalid_argument("green function across different alphabets");
  const Alphabet a = x.alphabet();
  const RhoValue r = rho(x, y);
  // Terms beyond both depths vanish: the truncation of an eventually-constant
  // point is no longer fresh there. Terms at or beyond rho vanish because the
  // truncations stop being related.
  int top = std::max(x.depth(), y.depth());
  if (!r.is_infinite) top = std::min(top, r.value - 1);

  const Rational diag(2, a.n);
  const Rational off(1, a.n);
  Rational sum;
  for (int m = 1; m <= top; ++m) {
    const Point xm(a, x.head(m), x.coord(m + 1));
    const Point ym(a, y.head(m), y.coord(m + 1));
    if (xm.depth() != m || ym.depth() != m) continue;
    if (xm == ym) {
      sum += diag;
    } else if (xm.head(m) == ym.head(m)) {
      sum += off;
    }
  }
  return GreenValue{std::move(sum), false};
}

GreenValue green_function_fast(const Point& x, const Point& y) {
  if (!(x.alphabet() == y.alphabet()))
    throw std::invalid_argument("green function across different alphabets");
  const int n = x.alphabet().n;
  const RhoValue r = rho(x, y);
  if (r.is_infinite) {
    long long changes = 0;
    for (int m = 1; m <= x.depth(); ++m)
      if (x.coord(m) != x.coord(m + 1)) ++changes;
    return GreenValue{Rational(2 * changes, n), false};
  }
  if (r.value == 1) return GreenValue{Rational(0), false};
  long long changes = 0;
  for (int m = 1; m <= r.value - 2; ++m)
    if (x.coord(m) != x.coord(m + 1)) ++changes;
  const bool last = x.coord(r.value - 1) != x.coord(r.value) &&
                    y.coord(r.value - 1) != y.coord(r.value);
  return GreenValue{Rational(2 * changes + (last ? 1 : 0), n), false};
}

CylinderFunction green_section(const Point& p) {
  const Alphabet a = p.alphabet();
  const int depth = p.depth() + 1;
  const std::size_t cells = word_count(a, depth);
  std::vector<Rational> values(cells);
  for (std::size_t i = 0; i < cells; ++i)
    values[i] = green_function(p, cell_point(a, word_at(a, depth, i))).value;
  return CylinderFunction(a, depth, std::move(values));
}

Rational green_operator(const CylinderFunction& f, const Point& p) {
  if (!(f.alphabet() == p.alphabet()))
    throw std::invalid_argument("green operator: alphabet mismatch");
  return (green_section(p) * f).integrate();
}

PointEvaluator green_operator_evaluator(const CylinderFunction& f) {
  return PointEvaluator(f.alphabet(),
                        [f](const Point& p) { return green_operator(f, p); });
}

LevelVector green_operator_level(const CylinderFunction& f, const LevelSet& vm) {
  std::vector<Rational> values;
  values.reserve(vm.size());
  for (const Point& p : vm.points()) values.push_back(green_operator(f, p));
  return LevelVector(vm.alphabet(), vm.level(), std::move(values));
}

Rational laplacian_residual(const PointEvaluator& u, const PointEvaluator& f, int m,
                            std::size_t cap) {
  if (m < 1) throw std::invalid_argument("laplacian residual needs level >= 1");
  const Alphabet a = u.alphabet();
  const LevelSet vm = LevelSet::enumerate(a, m, cap);
  const LevelVector r = restrict_to_level(u, vm);
  const Rational scale = Rational::int_pow(a.n, static_cast<unsigned>(m + 1));
  const Rational n_members(a.n);
  const std::size_t fresh_from = word_count(a, m);

  Rational worst;
  const std::size_t n_classes = word_count(a, m);
  for (std::size_t c = 0; c < n_classes; ++c) {
    Word w = word_at(a, m, c);
    w.push_back(0);
    std::vector<std::size_t> members(static_cast<std::size_t>(a.n));
    Rational sum;
    for (Symbol l = 1; l <= a.n; ++l) {
      w.back() = l;
      const std::size_t idx = vm.index_of(cell_point(a, w));
      members[static_cast<std::size_t>(l - 1)] = idx;
      sum += r.values[idx];
    }
    for (std::size_t idx : members) {
      if (idx < fresh_from) continue;  // only points fresh at this level
      const Rational h = sum - n_members * r.values[idx];
      const Rational res = (scale * h - f(vm.at(idx))).abs();
      if (res > worst) worst = res;
    }
  }
  return worst;
}

LaplacianTrace pointwise_laplacian_trace(const PointEvaluator& u, const Word& x_prefix,
                                         int m_max) {
  if (m_max < 1) throw std::invalid_argument("trace needs at least one level");
  if (static_cast<int>(x_prefix.size()) < m_max)
    throw std::invalid_argument("prefix shorter than the requested trace depth");
  const Alphabet a = u.alphabet();
  for (Symbol s : x_prefix)
    if (!a.contains(s)) throw std::invalid_argument("prefix symbol outside alphabet");

  LaplacianTrace trace;
  trace.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    Word head(x_prefix.begin(), x_prefix.begin() + m);
    const Symbol last = head.back();
    Symbol tail = 1;
    while (tail == last) ++tail;  // smallest admissible tail keeps the probe fresh
    const Point probe(a, head, tail);

    head.push_back(0);
    Rational sum;
    for (Symbol l = 1; l <= a.n; ++l) {
      head.back() = l;
      sum += u(cell_point(a, head));
    }
    head.pop_back();
    const Rational h = sum - Rational(a.n) * u(probe);
    trace.push_back({m, probe,
                     Rational::int_pow(a.n, static_cast<unsigned>(m + 1)) * h});
  }
  return trace;
}

GreenBoundReport check_green_bound(Alphabet alphabet, int depth, std::size_t cap) {
  const LevelSet vd = LevelSet::enumerate(alphabet, depth, cap);
  GreenBoundReport report{true, true, 0, 0, std::nullopt};
  for (const Point& x : vd.points()) {
    for (const Point& y : vd.points()) {
      ++report.pairs_checked;
      const GreenValue g = green_function(x, y);
      const GreenValue gf = green_function_fast(x, y);
      if (!(g.value == gf.value)) report.fast_matches = false;
      const RhoValue r = rho(x, y);
      if (r.is_infinite) continue;  // diagonal: no finite bound to compare
      const Rational bound = Rational(2LL * r.value - 3, alphabet.n).abs();
      if (g.value > bound) {
        report.bound_holds = false;
        if (!report.violation) report.violation = std::make_pair(x, y);
      } else if (g.value == bound && r.value >= 2) {
        ++report.equality_pairs;
      }
    }
  }
  return report;
}

}  // namespace shiftlap
