#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftlap/matrix.hpp"
#include "shiftlap/measure_functions.hpp"
#include "shiftlap/rng.hpp"
#include "shiftlap/shift_space.hpp"

namespace shiftlap {

// The level-m difference operator. Rows/columns follow the V_m order; the action
// at p accumulates neighbour exchanges over every level from depth(p) up to m.
// Applications stay matrix-free; dense() materializes the matrix on demand.
class DifferenceOperator {
 public:
  DifferenceOperator(Alphabet alphabet, int m, std::size_t cap = kDefaultPointCap);

  const Alphabet& alphabet() const { return alphabet_; }
  int level() const { return level_; }
  const LevelSet& level_set() const { return vm_; }

  LevelVector apply(const LevelVector& u) const;
  std::vector<Rational> apply_raw(const std::vector<Rational>& u) const;

  RationalMatrix dense() const;
  std::vector<long long> dense_int() const;  // row-major, entries are small integers

  // -<u, H v>, the level form.
  Rational form(const LevelVector& u, const LevelVector& v) const;

  // Same value through the summed squared-differences route.
  Rational form_pairwise(const LevelVector& u, const LevelVector& v) const;

  // One class per level: the N member indices sharing their first i coordinates.
  const std::vector<std::vector<std::uint32_t>>& classes_at(int i) const {
    return classes_[static_cast<std::size_t>(i)];
  }

 private:
  Alphabet alphabet_;
  int level_;
  LevelSet vm_;
  std::vector<std::vector<std::vector<std::uint32_t>>> classes_;
};

RationalMatrix build_dense_H(Alphabet alphabet, int m, std::size_t cap = kDefaultPointCap);

// H_m split along V_{m-1} | V_m \ V_{m-1}: H = [[T, J^t], [J, X]].
struct BlockDecomposition {
  RationalMatrix T;
  RationalMatrix J;
  RationalMatrix X;
};
BlockDecomposition blocks(const DifferenceOperator& op);  // requires level >= 1

// G_m over V_m \ V_{m-1}: 2/N on the diagonal, 1/N where X_m carries a 1.
RationalMatrix green_matrix(const DifferenceOperator& op);  // requires level >= 1

Rational dirichlet_form(const DifferenceOperator& op, const LevelVector& u,
                        const LevelVector& v);

// Clamp values into [0, 1] pointwise.
LevelVector unit_clamp(const LevelVector& u);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct StructuralReport {
  int alphabet;
  int level;
  std::size_t size;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Symmetry, zero row sums, {0,1} off-diagonal entries, rank N^{m+1}-1 with the
// constants spanning the kernel, nonnegativity of the form on seeded vectors, the
// Schur relation of the blocks, and X * (-G) = identity.
StructuralReport structural_check(Alphabet alphabet, int m,
                                  std::uint64_t seed = kDefaultSeed,
                                  std::size_t cap = kDefaultPointCap);

}  // namespace shiftlap
