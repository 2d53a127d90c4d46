#include "doctest.h"
#include "shiftlap/difference_operators.hpp"
#include "shiftlap/measure_functions.hpp"
#include "shiftlap/rng.hpp"

using namespace shiftlap;

namespace {

Point pt(int n, const std::string& text) { return Point::parse(Alphabet(n), text); }

CylinderFunction random_cylinder(Alphabet a, int depth, SplitMix64& rng) {
  std::vector<Rational> values(word_count(a, depth));
  for (auto& v : values) v = random_small_rational(rng);
  return CylinderFunction(a, depth, std::move(values));
}

}  // namespace

TEST_CASE("cylinder measure") {
  CHECK(bernoulli_measure(Alphabet(2), {1, 1}) == Rational(1, 4));
  CHECK(bernoulli_measure(Alphabet(3), {}) == Rational(1));
  CHECK(bernoulli_measure(Alphabet(3), {1, 2, 3}) == Rational(1, 27));
}

TEST_CASE("word indexing is a lexicographic bijection") {
  const Alphabet a(3);
  for (int k = 0; k <= 3; ++k) {
    const std::size_t count = word_count(a, k);
    for (std::size_t i = 0; i < count; ++i) CHECK(word_index(a, word_at(a, k, i)) == i);
  }
  CHECK(word_index(a, {1, 1}) == 0);
  CHECK(word_index(a, {1, 2}) == 1);
  CHECK(word_index(a, {2, 1}) == 3);
}

TEST_CASE("indicator values and mass") {
  const CylinderFunction ind = CylinderFunction::indicator(pt(2, "2~1"), 1);
  CHECK(ind.depth() == 2);
  CHECK(ind.values() == std::vector<Rational>{Rational(0), Rational(0), Rational(1),
                                              Rational(0)});
  CHECK(ind.integrate() == Rational(1, 4));

  const CylinderFunction ind0 = CylinderFunction::indicator(pt(2, "~1"), 0);
  CHECK(ind0.evaluate(pt(2, "~1")) == Rational(1));
  CHECK(ind0.evaluate(pt(2, "~2")) == Rational(0));
  CHECK(ind0.evaluate(pt(2, "1~2")) == Rational(1));  // starts with 1

  CHECK_THROWS_AS(CylinderFunction::indicator(pt(2, "2~1"), 0), std::invalid_argument);

  SplitMix64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Alphabet a(3);
    Word prefix(rng.below(4));
    for (auto& s : prefix) s = static_cast<Symbol>(rng.below(3)) + 1;
    const Point p(a, prefix, static_cast<Symbol>(rng.below(3)) + 1);
    const int m = p.depth() + static_cast<int>(rng.below(3));
    CHECK(CylinderFunction::indicator(p, m).integrate() ==
          bernoulli_measure(a, p.head(m + 1)));
  }
}

TEST_CASE("evaluation picks the cell of the first coordinates") {
  const CylinderFunction c = CylinderFunction::constant(Alphabet(3), Rational(5, 7));
  CHECK(c.evaluate(pt(3, "123~1")) == Rational(5, 7));
  const CylinderFunction ind = CylinderFunction::indicator(pt(2, "2~1"), 1);
  CHECK(ind.evaluate(pt(2, "21~2")) == Rational(1));
  CHECK(ind.evaluate(pt(2, "~2")) == Rational(0));
}

TEST_CASE("refine keeps the function and its integral") {
  const CylinderFunction one = CylinderFunction::constant(Alphabet(2), Rational(1));
  const CylinderFunction refined = one.refine(2);
  CHECK(refined.depth() == 2);
  for (const Rational& v : refined.values()) CHECK(v == Rational(1));

  SplitMix64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const Alphabet a(2);
    const CylinderFunction f = random_cylinder(a, static_cast<int>(rng.below(3)), rng);
    const CylinderFunction g = f.refine(f.depth() + static_cast<int>(rng.below(3)));
    CHECK(g.integrate() == f.integrate());
    CHECK(f.refine(f.depth()) == f);
    CHECK(f == g);
    const LevelSet v3 = LevelSet::enumerate(a, 3);
    for (const Point& p : v3.points()) CHECK(f.evaluate(p) == g.evaluate(p));
  }
  CHECK_THROWS_AS(one.refine(2).refine(1), std::invalid_argument);
}

TEST_CASE("integration is linear and vanishes on disjoint products") {
  SplitMix64 rng(33);
  const Alphabet a(3);
  for (int trial = 0; trial < 30; ++trial) {
    const CylinderFunction f = random_cylinder(a, 2, rng);
    const CylinderFunction g = random_cylinder(a, 1, rng);
    const Rational alpha = random_small_rational(rng);
    CHECK((f.scaled(alpha) + g).integrate() == alpha * f.integrate() + g.integrate());
  }
  const CylinderFunction i1 = CylinderFunction::indicator(pt(3, "~1"), 0);
  const CylinderFunction i2 = CylinderFunction::indicator(pt(3, "~2"), 0);
  CHECK((i1 * i2).integrate() == Rational(0));
  CHECK(CylinderFunction::constant(a, Rational(7, 3)).integrate() == Rational(7, 3));

  // monotone: raising one cell raises the integral
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> base(word_count(a, 2));
    for (auto& v : base) v = random_small_rational(rng);
    const CylinderFunction f(a, 2, base);
    std::vector<Rational> raised = base;
    raised[rng.below(raised.size())] += Rational(1 + rng.below(5));
    CHECK(f.integrate() < CylinderFunction(a, 2, raised).integrate());
  }
}

TEST_CASE("restriction of an indicator in level order") {
  const Alphabet a(2);
  const LevelSet v1 = LevelSet::enumerate(a, 1);
  const CylinderFunction ind = CylinderFunction::indicator(pt(2, "~1"), 0);
  const LevelVector r = restrict_to_level(ind.evaluator(), v1);
  CHECK(r.values == std::vector<Rational>{Rational(1), Rational(0), Rational(0),
                                          Rational(1)});
  const LevelVector ones =
      restrict_to_level(CylinderFunction::constant(a, Rational(1)).evaluator(), v1);
  for (const Rational& v : ones.values) CHECK(v == Rational(1));
}

TEST_CASE("minimum extension on the pinned example") {
  const Alphabet a(2);
  const LevelSet v1 = LevelSet::enumerate(a, 1);
  const LevelVector v(a, 1, {Rational(1), Rational(0), Rational(0), Rational(1)});
  const CylinderFunction ext = min_energy_extension(v, v1);
  CHECK(ext.depth() == 2);
  CHECK(ext.values() == std::vector<Rational>{Rational(1), Rational(1), Rational(0),
                                              Rational(0)});

  const LevelSet v0 = LevelSet::enumerate(a, 0);
  const CylinderFunction lift =
      min_energy_extension(LevelVector(a, 0, {Rational(1), Rational(0)}), v0);
  CHECK(lift.evaluate(pt(2, "~1")) == Rational(1));
  CHECK(lift.evaluate(pt(2, "~2")) == Rational(0));

  const CylinderFunction const_ext = min_energy_extension(
      LevelVector(a, 1, std::vector<Rational>(4, Rational(3, 5))), v1);
  for (const Rational& x : const_ext.values()) CHECK(x == Rational(3, 5));
}

TEST_CASE("extension is a section of restriction") {
  SplitMix64 rng(34);
  for (int n : {2, 3}) {
    const Alphabet a(n);
    for (int m = 0; m <= 2; ++m) {
      const LevelSet vm = LevelSet::enumerate(a, m);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> values(vm.size());
        for (auto& v : values) v = random_small_rational(rng);
        const LevelVector u(a, m, values);
        const CylinderFunction ext = min_energy_extension(u, vm);
        CHECK(restrict_to_level(ext.evaluator(), vm).values == values);
      }
    }
  }
}

TEST_CASE("extension preserves the level form exactly") {
  SplitMix64 rng(35);
  for (int n : {2, 3}) {
    const Alphabet a(n);
    for (int m = 0; m <= 2; ++m) {
      const DifferenceOperator op(a, m);
      const DifferenceOperator up(a, m + 1);
      for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rational> values(op.level_set().size());
        for (auto& v : values) v = random_small_rational(rng);
        const LevelVector u(a, m, std::move(values));
        const CylinderFunction ext = min_energy_extension(u, op.level_set());
        const LevelVector lifted = restrict_to_level(ext.evaluator(), up.level_set());
        CHECK(up.form(lifted, lifted) == op.form(u, u));
      }
    }
  }
}

TEST_CASE("harmonic approximation samples the level") {
  const Alphabet a(2);
  // The evaluator x -> sum x_i 2^{-i} at the two fixed points.
  const PointEvaluator u(a, [](const Point& p) {
    long long num = 0;
    const int d = p.depth();
    for (int i = 1; i <= d; ++i) num = 2 * num + p.coord(i);
    num += p.tail();
    return Rational(num, 1LL << d);
  });
  const CylinderFunction u0 = harmonic_approximation(u, 0);
  CHECK(u0.values() == std::vector<Rational>{Rational(1), Rational(2)});

  const CylinderFunction c = CylinderFunction::constant(a, Rational(4, 9));
  CHECK(harmonic_approximation(c.evaluator(), 2) == c);

  SplitMix64 rng(36);
  const CylinderFunction f = random_cylinder(a, 2, rng);
  CHECK(harmonic_approximation(f.evaluator(), 1) ==
        min_energy_extension(restrict_to_level(f.evaluator(), LevelSet::enumerate(a, 1)),
                             LevelSet::enumerate(a, 1)));
  CHECK(harmonic_approximation(f.evaluator(), 3) == f);

  // Agreement with u on the sampled level.
  const LevelSet v2 = LevelSet::enumerate(a, 2);
  const CylinderFunction u2 = harmonic_approximation(u, 2);
  for (const Point& p : v2.points()) CHECK(u2.evaluate(p) == u(p));
}

TEST_CASE("level vector prefixes slice lower levels") {
  SplitMix64 rng(37);
  const Alphabet a(3);
  const LevelSet v2 = LevelSet::enumerate(a, 2);
  std::vector<Rational> values(v2.size());
  for (auto& v : values) v = random_small_rational(rng);
  const LevelVector u(a, 2, values);
  const LevelVector u1 = level_prefix(u, 1);
  CHECK(u1.values.size() == 9);
  for (std::size_t i = 0; i < 9; ++i) CHECK(u1.values[i] == values[i]);
  CHECK_THROWS_AS(level_prefix(u, 3), std::invalid_argument);
  CHECK_THROWS_AS(LevelVector(a, 1, values), DimensionError);
}
