#include "shiftlap/measure_functions.hpp"

#include <stdexcept>

namespace shiftlap {

Rational bernoulli_measure(const Alphabet& alphabet, const Word& w) {
  for (Symbol s : w)
    if (!alphabet.contains(s)) throw std::invalid_argument("word symbol outside alphabet");
  return Rational(1) / Rational::int_pow(alphabet.n, static_cast<unsigned>(w.size()));
}

std::size_t word_count(const Alphabet& alphabet, int k) {
  std::size_t c = 1;
  for (int i = 0; i < k; ++i) c *= static_cast<std::size_t>(alphabet.n);
  return c;
}

std::size_t word_index(const Alphabet& alphabet, const Word& w) {
  std::size_t idx = 0;
  for (Symbol s : w) {
    if (!alphabet.contains(s)) throw std::invalid_argument("word symbol outside alphabet");
    idx = idx * static_cast<std::size_t>(alphabet.n) + static_cast<std::size_t>(s - 1);
  }
  return idx;
}

Word word_at(const Alphabet& alphabet, int k, std::size_t index) {
  Word w(static_cast<std::size_t>(k));
  for (int i = k; i-- > 0;) {
    w[static_cast<std::size_t>(i)] =
        static_cast<Symbol>(index % static_cast<std::size_t>(alphabet.n)) + 1;
    index /= static_cast<std::size_t>(alphabet.n);
  }
  return w;
}

LevelVector::LevelVector(Alphabet a, int m, std::vector<Rational> v)
    : alphabet(a), level(m), values(std::move(v)) {
  if (m < 0) throw std::invalid_argument("negative level");
  if (values.size() != word_count(alphabet, m + 1))
    throw DimensionError("level vector length must be N^(m+1)");
}

LevelVector level_prefix(const LevelVector& u, int n) {
  if (n < 0 || n > u.level) throw std::invalid_argument("level_prefix: bad level");
  const std::size_t len = word_count(u.alphabet, n + 1);
  return LevelVector(u.alphabet, n,
                     std::vector<Rational>(u.values.begin(),
                                           u.values.begin() + static_cast<std::ptrdiff_t>(len)));
}

CylinderFunction::CylinderFunction(Alphabet alphabet, int depth, std::vector<Rational> values)
    : alphabet_(alphabet), depth_(depth), values_(std::move(values)) {
  if (depth_ < 0) throw std::invalid_argument("negative cylinder depth");
  if (values_.size() != word_count(alphabet_, depth_))
    throw DimensionError("cylinder function needs N^depth values");
}

CylinderFunction CylinderFunction::constant(Alphabet alphabet, Rational value, int depth) {
  return CylinderFunction(alphabet, depth,
                          std::vector<Rational>(word_count(alphabet, depth), value));
}

CylinderFunction CylinderFunction::indicator(const Point& p, int m) {
  if (p.depth() > m)
    throw std::invalid_argument("indicator: point is deeper than the requested level");
  std::vector<Rational> values(word_count(p.alphabet(), m + 1));
  values[word_index(p.alphabet(), p.head(m + 1))] = Rational(1);
  return CylinderFunction(p.alphabet(), m + 1, std::move(values));
}

Rational CylinderFunction::evaluate(const Point& x) const {
  if (!(x.alphabet() == alphabet_))
    throw std::invalid_argument("evaluate: alphabet mismatch");
  return values_[word_index(alphabet_, x.head(depth_))];
}

Rational CylinderFunction::value_at_word(const Word& w) const {
  if (static_cast<int>(w.size()) < depth_)
    throw std::invalid_argument("value_at_word: word shorter than depth");
  Word head(w.begin(), w.begin() + depth_);
  return values_[word_index(alphabet_, head)];
}

CylinderFunction CylinderFunction::refine(int new_depth) const {
  if (new_depth < depth_) throw std::invalid_argument("refine: depth may only grow");
  if (new_depth == depth_) return *this;
  const std::size_t reps = word_count(alphabet_, new_depth - depth_);
  std::vector<Rational> values;
  values.reserve(values_.size() * reps);
  for (const Rational& v : values_)
    for (std::size_t r = 0; r < reps; ++r) values.push_back(v);
  return CylinderFunction(alphabet_, new_depth, std::move(values));
}

Rational CylinderFunction::integrate() const {
  Rational sum;
  for (const Rational& v : values_) sum += v;
  return sum / Rational::int_pow(alphabet_.n, static_cast<unsigned>(depth_));
}

CylinderFunction CylinderFunction::operator-() const {
  std::vector<Rational> values;
  values.reserve(values_.size());
  for (const Rational& v : values_) values.push_back(-v);
  return CylinderFunction(alphabet_, depth_, std::move(values));
}

CylinderFunction CylinderFunction::scaled(const Rational& s) const {
  std::vector<Rational> values;
  values.reserve(values_.size());
  for (const Rational& v : values_) values.push_back(v * s);
  return CylinderFunction(alphabet_, depth_, std::move(values));
}

namespace {

template <typename Op>
CylinderFunction zip(const CylinderFunction& f, const CylinderFunction& g, Op op) {
  if (!(f.alphabet() == g.alphabet()))
    throw std::invalid_argument("cylinder functions over different alphabets");
  const int depth = std::max(f.depth(), g.depth());
  const CylinderFunction a = f.refine(depth);
  const CylinderFunction b = g.refine(depth);
  std::vector<Rational> values;
  values.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i)
    values.push_back(op(a.values()[i], b.values()[i]));
  return CylinderFunction(f.alphabet(), depth, std::move(values));
}

}  // namespace

CylinderFunction operator+(const CylinderFunction& f, const CylinderFunction& g) {
  return zip(f, g, [](const Rational& x, const Rational& y) { return x + y; });
}

CylinderFunction operator-(const CylinderFunction& f, const CylinderFunction& g) {
  return zip(f, g, [](const Rational& x, const Rational& y) { return x - y; });
}

CylinderFunction operator*(const CylinderFunction& f, const CylinderFunction& g) {
  return zip(f, g, [](const Rational& x, const Rational& y) { return x * y; });
}

bool operator==(const CylinderFunction& f, const CylinderFunction& g) {
  if (!(f.alphabet() == g.alphabet())) return false;
  const int depth = std::max(f.depth(), g.depth());
  return f.refine(depth).values() == g.refine(depth).values();
}

PointEvaluator CylinderFunction::evaluator() const {
  CylinderFunction copy = *this;
  return PointEvaluator(
      alphabet_, [copy](const Point& p) { return copy.evaluate(p); }, depth_);
}

LevelVector restrict_to_level(const PointEvaluator& u, const LevelSet& vm) {
  std::vector<Rational> values;
  values.reserve(vm.size());
  for (const Point& p : vm.points()) values.push_back(u(p));
  return LevelVector(vm.alphabet(), vm.level(), std::move(values));
}

CylinderFunction min_energy_extension(const LevelVector& v, const LevelSet& vm) {
  if (vm.level() != v.level || !(vm.alphabet() == v.alphabet))
    throw std::invalid_argument("min_energy_extension: level set mismatch");
  const int depth = v.level + 1;
  const std::size_t cells = word_count(v.alphabet, depth);
  std::vector<Rational> values(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    const Word w = word_at(v.alphabet, depth, i);
    values[i] = v.values[vm.index_of(cell_point(v.alphabet, w))];
  }
  return CylinderFunction(v.alphabet, depth, std::move(values));
}

CylinderFunction harmonic_approximation(const PointEvaluator& u, int m, std::size_t cap) {
  if (m < 0) throw std::invalid_argument("negative level");
  const Alphabet a = u.alphabet();
  const int depth = m + 1;
  std::size_t cells = 1;
  for (int i = 0; i < depth; ++i) {
    cells *= static_cast<std::size_t>(a.n);
    if (cells > cap) throw ResourceLimitError("harmonic approximation exceeds point cap");
  }
  std::vector<Rational> values(cells);
  for (std::size_t i = 0; i < cells; ++i)
    values[i] = u(cell_point(a, word_at(a, depth, i)));
  return CylinderFunction(a, depth, std::move(values));
}

}  // namespace shiftlap
