#pragma once

// Exact linear programming over the rationals:
//
//   maximize    c.x
//   subject to  A x = b,  x >= 0
//
// solved with a two-phase dense tableau simplex using Bland's rule, so every
// verdict is exact and the method always terminates.

#include <contextlab/rational.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace contextlab {

struct EqualityConstraint {
  std::vector<Rational> coefficients;
  Rational rhs;
};

struct LinearProgram {
  std::size_t variable_count = 0;
  std::vector<EqualityConstraint> equalities;
  /// Maximized when present; otherwise solve() only decides feasibility.
  std::optional<std::vector<Rational>> objective;

  /// Appends a row given as sparse (column, coefficient) pairs.
  void add_equality(const std::vector<std::pair<std::size_t, Rational>>& terms, Rational rhs);
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  /// Basic feasible solution; set for Feasible (and for Unbounded, where it is
  /// the last vertex visited).
  std::vector<Rational> witness;
  /// Set when an objective was supplied and the maximum is attained.
  std::optional<Rational> optimum;
};

/// Throws Error{DimensionMismatch} when a row or the objective does not have
/// variable_count entries.
LpResult solve(const LinearProgram& lp);

/// True when `x` is non-negative and satisfies every equality exactly.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x);

}  // namespace contextlab
