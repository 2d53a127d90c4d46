#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "shiftlap/errors.hpp"
#include "shiftlap/rational.hpp"

namespace shiftlap {

using Symbol = int;           // symbols are 1..N
using Word = std::vector<Symbol>;

inline constexpr std::size_t kDefaultPointCap = 1'000'000;

// Symbol set {1, ..., N}, N >= 2.
struct Alphabet {
  int n;

  explicit Alphabet(int n_) : n(n_) {
    if (n < 2) throw std::invalid_argument("alphabet needs at least two symbols");
  }
  bool contains(Symbol s) const { return s >= 1 && s <= n; }
  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.n == b.n; }
};

// An eventually-constant sequence: a finite prefix followed by one repeating symbol.
// Canonical form keeps the prefix shortest (its last symbol differs from the tail),
// so depth() is the least m with the point in V_m.
class Point {
 public:
  Point(Alphabet alphabet, Word prefix, Symbol tail);
  static Point fixed(Alphabet alphabet, Symbol l) { return Point(alphabet, {}, l); }

  const Alphabet& alphabet() const { return alphabet_; }
  const Word& prefix() const { return prefix_; }
  Symbol tail() const { return tail_; }
  int depth() const { return static_cast<int>(prefix_.size()); }

  // 1-based coordinate of the full expansion.
  Symbol coord(int i) const {
    return i <= depth() ? prefix_[static_cast<std::size_t>(i - 1)] : tail_;
  }
  // First k coordinates.
  Word head(int k) const;

  // Serialized as "<prefix>~<tail>", e.g. "12~1"; symbols joined with '.' when N > 9.
  std::string str() const;
  static Point parse(Alphabet alphabet, std::string_view text);

  friend bool operator==(const Point& a, const Point& b) {
    return a.alphabet_ == b.alphabet_ && a.tail_ == b.tail_ && a.prefix_ == b.prefix_;
  }

 private:
  Alphabet alphabet_;
  Word prefix_;
  Symbol tail_;
};

struct PointHash {
  std::size_t operator()(const Point& p) const;
};

// sigma: drop the first coordinate.
Point shift(const Point& p);

// sigma_l: prepend the symbol l.
Point inverse_branch(Symbol l, const Point& p);

// First index of disagreement; infinite exactly when the points are equal.
struct RhoValue {
  bool is_infinite;
  int value;  // meaningful when finite
};
RhoValue rho(const Point& x, const Point& y);

// d(x, y) = 1/2^rho, 0 when the points coincide.
Rational distance(const Point& x, const Point& y);

// The point of V_{|word|-1} whose first |word| coordinates spell the word;
// the length-k words enumerate V_{k-1} cells bijectively.
Point cell_point(Alphabet alphabet, const Word& word);

// V_m in its total order: V_{m-1} first (in its own order), then each new point
// keyed by (position of its shift in V_{m-1}, first symbol) ascending.
class LevelSet {
 public:
  static LevelSet enumerate(Alphabet alphabet, int m, std::size_t cap = kDefaultPointCap);

  const Alphabet& alphabet() const { return alphabet_; }
  int level() const { return level_; }
  std::size_t size() const { return points_.size(); }
  const Point& at(std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  std::optional<std::size_t> find(const Point& p) const;
  std::size_t index_of(const Point& p) const;  // throws std::out_of_range

 private:
  LevelSet(Alphabet alphabet, int m) : alphabet_(alphabet), level_(m) {}

  Alphabet alphabet_;
  int level_;
  std::vector<Point> points_;
  std::unordered_map<Point, std::size_t, PointHash> index_;
};

// The N-1 points of V_m that are m-related to p (the deleted neighbourhood).
// Requires depth(p) <= m.
std::vector<Point> neighbours(const Point& p, int m);

// For p of depth exactly m >= 1: the N-2 neighbours inside V_m \ V_{m-1} plus the
// single one inherited from V_{m-1}.
struct NewNeighbours {
  std::vector<Point> fresh;
  Point inherited;
};
NewNeighbours new_neighbours(const Point& p, int m);

// Chain from (p_1 repeated) up to p, one entry per coordinate where the expansion
// changes symbol; consecutive entries are related at the deeper entry's depth.
std::vector<Point> connecting_chain(const Point& p);

}  // namespace shiftlap
