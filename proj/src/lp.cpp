#include <contextlab/error.hpp>
#include <contextlab/lp.hpp>

#include <limits>

namespace contextlab {

void LinearProgram::add_equality(const std::vector<std::pair<std::size_t, Rational>>& terms, Rational rhs) {
  EqualityConstraint row{std::vector<Rational>(variable_count, Rational(0)), std::move(rhs)};
  for (const auto& [column, coefficient] : terms) {
    if (column >= variable_count)
      throw Error(ErrorKind::DimensionMismatch, "column " + std::to_string(column) + " out of range");
    row.coefficients[column] += coefficient;
  }
  row.rhs.canonicalize();
  equalities.push_back(std::move(row));
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Feasible: return "feasible";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau in canonical form with respect to `basis`. Columns
// [0, n) are the structural variables, [n, n + m) the phase-1 artificials.
class Tableau {
 public:
  Tableau(const LinearProgram& lp) : n_(lp.variable_count), m_(lp.equalities.size()) {
    rows_.resize(m_);
    rhs_.resize(m_);
    basis_.resize(m_);
    active_.assign(m_, true);
    for (std::size_t i = 0; i < m_; ++i) {
      const auto& eq = lp.equalities[i];
      const bool flip = sgn(eq.rhs) < 0;
      rows_[i].assign(n_ + m_, Rational(0));
      for (std::size_t j = 0; j < n_; ++j) {
        rows_[i][j] = flip ? Rational(-eq.coefficients[j]) : eq.coefficients[j];
        rows_[i][j].canonicalize();
      }
      rows_[i][n_ + i] = 1;
      rhs_[i] = flip ? Rational(-eq.rhs) : eq.rhs;
      rhs_[i].canonicalize();
      basis_[i] = n_ + i;
    }
    allowed_.assign(n_ + m_, true);
  }

  // Phase 1: maximize -(sum of artificials). Returns false when the original
  // system has no non-negative solution.
  bool find_feasible_basis() {
    reduced_.assign(n_ + m_, Rational(0));
    value_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) reduced_[j] += rows_[i][j];
      value_ -= rhs_[i];
    }
    // Bounded below by 0, never unbounded.
    run(/*drop_leaving_artificials=*/true);
    if (sgn(value_) != 0) return false;

    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < n_) continue;
      std::size_t column = kNone;
      for (std::size_t j = 0; j < n_ && column == kNone; ++j)
        if (sgn(rows_[i][j]) != 0) column = j;
      if (column == kNone) {
        // Linearly dependent on the other rows.
        active_[i] = false;
        allowed_[basis_[i]] = false;
      } else {
        pivot(i, column, /*drop_leaving_artificials=*/true);
      }
    }
    for (std::size_t j = n_; j < n_ + m_; ++j) allowed_[j] = false;
    return true;
  }

  // Phase 2. Returns false if the objective is unbounded above.
  bool maximize(const std::vector<Rational>& objective) {
    reduced_.assign(n_ + m_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) reduced_[j] = objective[j];
    value_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const Rational& cb = objective[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(rows_[i][j]) != 0) reduced_[j] -= cb * rows_[i][j];
      value_ += cb * rhs_[i];
    }
    return run(/*drop_leaving_artificials=*/false);
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i] && basis_[i] < n_) x[basis_[i]] = rhs_[i];
    return x;
  }

  const Rational& value() const { return value_; }

 private:
  // Bland's rule: lowest-index improving column enters; among tied ratios the
  // row whose basic variable has the lowest index leaves.
  bool run(bool drop_leaving_artificials) {
    for (;;) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (allowed_[j] && sgn(reduced_[j]) > 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNone) return true;

      std::size_t leaving = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || sgn(rows_[i][entering]) <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][entering];
        if (leaving == kNone || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == kNone) return false;
      pivot(leaving, entering, drop_leaving_artificials);
    }
  }

  void pivot(std::size_t row, std::size_t column, bool drop_leaving_artificials) {
    auto& pr = rows_[row];
    if (pr[column] != 1) {
      const Rational inv = 1 / pr[column];
      for (auto& a : pr)
        if (sgn(a) != 0) a *= inv;
      rhs_[row] *= inv;
    }
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < pr.size(); ++j)
      if (sgn(pr[j]) != 0) nonzero.push_back(j);

    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || !active_[i] || sgn(rows_[i][column]) == 0) continue;
      const Rational factor = rows_[i][column];
      for (std::size_t j : nonzero) rows_[i][j] -= factor * pr[j];
      rhs_[i] -= factor * rhs_[row];
    }
    if (sgn(reduced_[column]) != 0) {
      const Rational factor = reduced_[column];
      for (std::size_t j : nonzero) reduced_[j] -= factor * pr[j];
      value_ += factor * rhs_[row];
    }

    if (drop_leaving_artificials && basis_[row] >= n_) allowed_[basis_[row]] = false;
    basis_[row] = column;
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
  std::vector<bool> allowed_;
  std::vector<Rational> reduced_;
  Rational value_;
};

void check_dimensions(const LinearProgram& lp) {
  for (std::size_t i = 0; i < lp.equalities.size(); ++i)
    if (lp.equalities[i].coefficients.size() != lp.variable_count)
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                                    std::to_string(lp.equalities[i].coefficients.size()) +
                                                    " coefficients, expected " + std::to_string(lp.variable_count));
  if (lp.objective && lp.objective->size() != lp.variable_count)
    throw Error(ErrorKind::DimensionMismatch, "objective has " + std::to_string(lp.objective->size()) +
                                                  " coefficients, expected " + std::to_string(lp.variable_count));
}

}  // namespace

LpResult solve(const LinearProgram& lp) {
  check_dimensions(lp);
  Tableau tableau(lp);
  LpResult result;
  if (!tableau.find_feasible_basis()) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  result.status = LpStatus::Feasible;
  if (lp.objective) {
    auto objective = *lp.objective;
    for (auto& c : objective) c.canonicalize();
    if (!tableau.maximize(objective)) {
      result.status = LpStatus::Unbounded;
    } else {
      result.optimum = tableau.value();
    }
  }
  result.witness = tableau.solution();
  return result;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.variable_count) return false;
  for (const auto& v : x)
    if (sgn(v) < 0) return false;
  for (const auto& eq : lp.equalities) {
    if (eq.coefficients.size() != lp.variable_count) return false;
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (sgn(eq.coefficients[j]) != 0 && sgn(x[j]) != 0) lhs += eq.coefficients[j] * x[j];
    if (lhs != eq.rhs) return false;
  }
  return true;
}

}  // namespace contextlab
