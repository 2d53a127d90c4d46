#include "shiftlap/shift_space.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace shiftlap {

Point::Point(Alphabet alphabet, Word prefix, Symbol tail)
    : alphabet_(alphabet), prefix_(std::move(prefix)), tail_(tail) {
  if (!alphabet_.contains(tail_)) throw std::invalid_argument("point tail outside alphabet");
  for (Symbol s : prefix_)
    if (!alphabet_.contains(s)) throw std::invalid_argument("point symbol outside alphabet");
  while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

Word Point::head(int k) const {
  Word w(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) w[static_cast<std::size_t>(i - 1)] = coord(i);
  return w;
}

std::string Point::str() const {
  const bool wide = alphabet_.n > 9;
  std::string out;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (wide && i > 0) out += '.';
    out += std::to_string(prefix_[i]);
  }
  out += '~';
  out += std::to_string(tail_);
  return out;
}

Point Point::parse(Alphabet alphabet, std::string_view text) {
  const auto sep = text.find('~');
  if (sep == std::string_view::npos)
    throw std::invalid_argument("point literal needs a '~' before the tail");
  const std::string_view head = text.substr(0, sep);
  const std::string_view tail_text = text.substr(sep + 1);

  const auto parse_int = [](std::string_view s) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
      throw std::invalid_argument("malformed symbol in point literal");
    return v;
  };

  Word prefix;
  if (!head.empty()) {
    if (alphabet.n > 9) {  // dot-separated symbols; single-digit packing is ambiguous
      std::size_t start = 0;
      while (start <= head.size()) {
        const auto dot = head.find('.', start);
        const auto end = dot == std::string_view::npos ? head.size() : dot;
        prefix.push_back(parse_int(head.substr(start, end - start)));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
      }
    } else {
      for (char c : head) {
        if (c < '1' || c > '9')
          throw std::invalid_argument("malformed symbol in point literal");
        prefix.push_back(c - '0');
      }
    }
  }
  return Point(alphabet, std::move(prefix), parse_int(tail_text));
}

std::size_t PointHash::operator()(const Point& p) const {
  std::size_t h = std::hash<int>()(p.alphabet().n * 131 + p.tail());
  for (Symbol s : p.prefix()) h = h * 1000003u + static_cast<std::size_t>(s);
  return h;
}

Point shift(const Point& p) {
  if (p.depth() == 0) return p;
  Word w(p.prefix().begin() + 1, p.prefix().end());
  return Point(p.alphabet(), std::move(w), p.tail());
}

Point inverse_branch(Symbol l, const Point& p) {
  if (!p.alphabet().contains(l))
    throw std::invalid_argument("inverse branch symbol outside alphabet");
  Word w;
  w.reserve(p.prefix().size() + 1);
  w.push_back(l);
  w.insert(w.end(), p.prefix().begin(), p.prefix().end());
  return Point(p.alphabet(), std::move(w), p.tail());
}

RhoValue rho(const Point& x, const Point& y) {
  if (!(x.alphabet() == y.alphabet()))
    throw std::invalid_argument("rho across different alphabets");
  if (x == y) return {true, 0};
  const int scan = std::max(x.depth(), y.depth()) + 1;
  for (int i = 1; i <= scan; ++i)
    if (x.coord(i) != y.coord(i)) return {false, i};
  // Distinct points agree beyond both depths only if the tails differ.
  return {false, scan};
}

Rational distance(const Point& x, const Point& y) {
  const RhoValue r = rho(x, y);
  if (r.is_infinite) return Rational(0);
  return Rational(1) / Rational::int_pow(2, static_cast<unsigned>(r.value));
}

Point cell_point(Alphabet alphabet, const Word& word) {
  if (word.empty()) throw std::invalid_argument("cell word must be nonempty");
  Word prefix(word.begin(), word.end() - 1);
  return Point(alphabet, std::move(prefix), word.back());
}

LevelSet LevelSet::enumerate(Alphabet alphabet, int m, std::size_t cap) {
  if (m < 0) throw std::invalid_argument("negative level");
  std::size_t want = 1;
  for (int i = 0; i <= m; ++i) {
    want *= static_cast<std::size_t>(alphabet.n);
    if (want > cap) throw ResourceLimitError("level set exceeds configured point cap");
  }

  LevelSet vs(alphabet, m);
  vs.points_.reserve(want);
  for (Symbol l = 1; l <= alphabet.n; ++l) vs.points_.push_back(Point::fixed(alphabet, l));
  std::size_t prev_begin = 0;
  for (int level = 1; level <= m; ++level) {
    const std::size_t prev_end = vs.points_.size();
    for (std::size_t i = prev_begin; i < prev_end; ++i) {
      // Copy: push_back below may reallocate the vector.
      const Point parent = vs.points_[i];
      for (Symbol s = 1; s <= alphabet.n; ++s) {
        Point q = inverse_branch(s, parent);
        if (q.depth() == level) vs.points_.push_back(std::move(q));
      }
    }
    prev_begin = 0;  // every point of V_{level-1} was scanned; only depth filter prunes
  }
  vs.index_.reserve(vs.points_.size());
  for (std::size_t i = 0; i < vs.points_.size(); ++i) vs.index_.emplace(vs.points_[i], i);
  return vs;
}

std::optional<std::size_t> LevelSet::find(const Point& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LevelSet::index_of(const Point& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) throw std::out_of_range("point not in level set: " + p.str());
  return it->second;
}

std::vector<Point> neighbours(const Point& p, int m) {
  if (p.depth() > m)
    throw std::invalid_argument("point is deeper than the requested level");
  Word head = p.head(m);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(p.alphabet().n - 1));
  for (Symbol l = 1; l <= p.alphabet().n; ++l) {
    Point q(p.alphabet(), head, l);
    if (!(q == p)) out.push_back(std::move(q));
  }
  return out;
}

NewNeighbours new_neighbours(const Point& p, int m) {
  if (p.depth() != m || m < 1)
    throw std::invalid_argument("point is not new at the requested level");
  const Symbol last = p.prefix().back();
  Word head = p.head(m);
  std::vector<Point> fresh;
  fresh.reserve(static_cast<std::size_t>(p.alphabet().n - 2));
  for (Symbol l = 1; l <= p.alphabet().n; ++l) {
    if (l == last || l == p.tail()) continue;
    fresh.emplace_back(p.alphabet(), head, l);
  }
  return NewNeighbours{std::move(fresh), Point(p.alphabet(), head, last)};
}

std::vector<Point> connecting_chain(const Point& p) {
  std::vector<Point> chain;
  chain.push_back(Point::fixed(p.alphabet(), p.coord(1)));
  for (int i = 1; i <= p.depth(); ++i) {
    if (p.coord(i) != p.coord(i + 1)) chain.push_back(Point(p.alphabet(), p.head(i), p.coord(i + 1)));
  }
  return chain;
}

}  // namespace shiftlap
