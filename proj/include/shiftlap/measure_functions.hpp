#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "shiftlap/rational.hpp"
#include "shiftlap/shift_space.hpp"

namespace shiftlap {

// mu of the cylinder fixed by the word: 1/N^{|w|}; the empty word is the full space.
Rational bernoulli_measure(const Alphabet& alphabet, const Word& w);

// Number of length-k words, i.e. N^k.
std::size_t word_count(const Alphabet& alphabet, int k);

// Lexicographic index of a length-k word and its inverse.
std::size_t word_index(const Alphabet& alphabet, const Word& w);
Word word_at(const Alphabet& alphabet, int k, std::size_t index);

// Values on V_m listed in the level order; length N^{m+1}.
struct LevelVector {
  Alphabet alphabet;
  int level;
  std::vector<Rational> values;

  LevelVector(Alphabet a, int m, std::vector<Rational> v);
};

// First N^{n+1} entries of a level-m vector form the level-n vector, n <= m.
LevelVector level_prefix(const LevelVector& u, int n);

// A map point -> exact value, total on all eventually-constant points.
// cylinder_depth is set when the map is known to be locally constant of that depth.
class PointEvaluator {
 public:
  using Fn = std::function<Rational(const Point&)>;

  PointEvaluator(Alphabet alphabet, Fn fn, std::optional<int> cylinder_depth = std::nullopt)
      : alphabet_(alphabet), fn_(std::move(fn)), cylinder_depth_(cylinder_depth) {}

  Rational operator()(const Point& p) const { return fn_(p); }
  const Alphabet& alphabet() const { return alphabet_; }
  std::optional<int> cylinder_depth() const { return cylinder_depth_; }

 private:
  Alphabet alphabet_;
  Fn fn_;
  std::optional<int> cylinder_depth_;
};

// Depth-K locally constant function: one exact value per length-K word, indexed
// lexicographically; K = 0 is a single global constant.
class CylinderFunction {
 public:
  CylinderFunction(Alphabet alphabet, int depth, std::vector<Rational> values);

  static CylinderFunction constant(Alphabet alphabet, Rational value, int depth = 0);

  // 1 on the cylinder of p's first m+1 symbols, 0 elsewhere; depth m+1.
  // Requires depth(p) <= m.
  static CylinderFunction indicator(const Point& p, int m);

  const Alphabet& alphabet() const { return alphabet_; }
  int depth() const { return depth_; }
  const std::vector<Rational>& values() const { return values_; }

  Rational evaluate(const Point& x) const;
  Rational value_at_word(const Word& w) const;  // |w| >= depth

  CylinderFunction refine(int new_depth) const;
  Rational integrate() const;

  CylinderFunction operator-() const;
  CylinderFunction scaled(const Rational& s) const;
  friend CylinderFunction operator+(const CylinderFunction& f, const CylinderFunction& g);
  friend CylinderFunction operator-(const CylinderFunction& f, const CylinderFunction& g);
  friend CylinderFunction operator*(const CylinderFunction& f, const CylinderFunction& g);
  friend bool operator==(const CylinderFunction& f, const CylinderFunction& g);

  PointEvaluator evaluator() const;

 private:
  Alphabet alphabet_;
  int depth_;
  std::vector<Rational> values_;
};

// u restricted to V_m, in the level order.
LevelVector restrict_to_level(const PointEvaluator& u, const LevelSet& vm);

// The unique form-preserving extension of level data: constant on each cylinder of
// length m+1, with the value the data takes at that cell's point of V_m.
CylinderFunction min_energy_extension(const LevelVector& v, const LevelSet& vm);

// Depth-(m+1) sampling of u at the points of V_m; agrees with u on V_m.
CylinderFunction harmonic_approximation(const PointEvaluator& u, int m,
                                        std::size_t cap = kDefaultPointCap);

}  // namespace shiftlap
