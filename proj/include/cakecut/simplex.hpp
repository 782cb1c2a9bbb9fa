/*
 * Copyright 2026 The cakecut authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef CAKECUT_SIMPLEX_HPP
#define CAKECUT_SIMPLEX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cakecut {

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class LpRelation { LessEq, GreaterEq, Equal };

/// maximize objective . x  subject to the rows and x >= 0.
/// Scalar must be an exact field type (this library uses Rational); the
/// solver performs no rounding and reports exact optima.
template <class Scalar>
struct LpProblem {
  struct Row {
    std::vector<Scalar> coeffs;
    LpRelation rel;
    Scalar rhs;
  };

  std::size_t var_count = 0;
  std::vector<Scalar> objective;
  std::vector<Row> rows;

  /// Returns the new variable's column index.
  std::size_t add_variable(Scalar objective_coeff) {
    objective.push_back(std::move(objective_coeff));
    return var_count++;
  }

  /// coeffs may be shorter than var_count; missing entries are zero.
  void add_row(std::vector<Scalar> coeffs, LpRelation rel, Scalar rhs) {
    coeffs.resize(var_count, Scalar(0));
    rows.push_back(Row{std::move(coeffs), rel, std::move(rhs)});
  }
};

template <class Scalar>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Scalar objective = Scalar(0);
  std::vector<Scalar> values;  // primal values of the original variables
};

/// Dense two-phase primal simplex with Bland's rule (smallest-index entering
/// column, smallest-index leaving basis variable on ratio ties), which makes
/// the solver deterministic and cycle-free on degenerate problems.
template <class Scalar>
class SimplexSolver {
 public:
  explicit SimplexSolver(const LpProblem<Scalar>& problem) : problem_(problem) {}

  LpSolution<Scalar> solve() {
    build_tableau();
    // Phase 1: drive the artificial variables to zero.
    if (artificial_start_ < total_cols_) {
      set_phase1_objective();
      run_pivots();
      if (objective_value() != 0) {
        return LpSolution<Scalar>{LpStatus::Infeasible, Scalar(0), {}};
      }
      expel_basic_artificials();
    }
    // Phase 2: the real objective over the feasible basis found above.
    set_phase2_objective();
    if (!run_pivots()) {
      return LpSolution<Scalar>{LpStatus::Unbounded, Scalar(0), {}};
    }
    LpSolution<Scalar> out;
    out.status = LpStatus::Optimal;
    out.objective = objective_value();
    out.values.assign(problem_.var_count, Scalar(0));
    for (std::size_t r = 0; r < row_count_; ++r) {
      if (basis_[r] < problem_.var_count) {
        out.values[basis_[r]] = rhs(r);
      }
    }
    return out;
  }

 private:
  // Tableau layout: columns [0, var_count) are the problem variables,
  // then one slack/surplus column per inequality row, then artificials.
  // Row 0 is the objective row (reduced costs, rhs = current objective).
  void build_tableau() {
    const std::size_t n = problem_.var_count;
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (const auto& row : problem_.rows) {
      if (row.rel != LpRelation::Equal) ++slack_count;
      const bool rhs_negative = row.rhs < 0;
      const LpRelation effective =
          !rhs_negative ? row.rel
                        : (row.rel == LpRelation::LessEq
                               ? LpRelation::GreaterEq
                               : (row.rel == LpRelation::GreaterEq ? LpRelation::LessEq
                                                                   : LpRelation::Equal));
      if (effective != LpRelation::LessEq) ++artificial_count;
    }
    row_count_ = problem_.rows.size();
    slack_start_ = n;
    artificial_start_ = n + slack_count;
    total_cols_ = artificial_start_ + artificial_count;

    tab_.assign(row_count_ + 1, std::vector<Scalar>(total_cols_ + 1, Scalar(0)));
    basis_.assign(row_count_, 0);

    std::size_t next_slack = slack_start_;
    std::size_t next_artificial = artificial_start_;
    for (std::size_t r = 0; r < row_count_; ++r) {
      const auto& row = problem_.rows[r];
      const bool flip = row.rhs < 0;
      LpRelation rel = row.rel;
      for (std::size_t j = 0; j < n; ++j) {
        tab_[r + 1][j] = flip ? -row.coeffs[j] : row.coeffs[j];
      }
      tab_[r + 1][total_cols_] = flip ? -row.rhs : row.rhs;
      if (flip && rel != LpRelation::Equal) {
        rel = rel == LpRelation::LessEq ? LpRelation::GreaterEq : LpRelation::LessEq;
      }
      if (rel == LpRelation::LessEq) {
        tab_[r + 1][next_slack] = Scalar(1);
        basis_[r] = next_slack++;
      } else if (rel == LpRelation::GreaterEq) {
        tab_[r + 1][next_slack++] = Scalar(-1);
        tab_[r + 1][next_artificial] = Scalar(1);
        basis_[r] = next_artificial++;
      } else {
        tab_[r + 1][next_artificial] = Scalar(1);
        basis_[r] = next_artificial++;
      }
    }
  }

  // Objective row convention: tab_[0][j] holds the reduced cost z_j - c_j for
  // maximization, so a negative entry means the column improves the objective.
  void set_phase1_objective() {
    // maximize -(sum of artificials)
    auto& obj = tab_[0];
    for (auto& cell : obj) cell = Scalar(0);
    for (std::size_t j = artificial_start_; j < total_cols_; ++j) obj[j] = Scalar(1);
    price_out_basis();
    phase1_ = true;
  }

  void set_phase2_objective() {
    auto& obj = tab_[0];
    for (auto& cell : obj) cell = Scalar(0);
    for (std::size_t j = 0; j < problem_.var_count; ++j) obj[j] = -problem_.objective[j];
    price_out_basis();
    phase1_ = false;
  }

  void price_out_basis() {
    for (std::size_t r = 0; r < row_count_; ++r) {
      const Scalar factor = tab_[0][basis_[r]];
      if (factor != 0) {
        for (std::size_t j = 0; j <= total_cols_; ++j) {
          tab_[0][j] -= factor * tab_[r + 1][j];
        }
      }
    }
  }

  // Returns false on unboundedness.
  bool run_pivots() {
    for (;;) {
      std::size_t entering = total_cols_;
      for (std::size_t j = 0; j < total_cols_; ++j) {
        if (phase1_ == false && j >= artificial_start_) break;  // artificials are retired
        if (tab_[0][j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == total_cols_) return true;  // optimal

      std::size_t leaving = row_count_;
      for (std::size_t r = 0; r < row_count_; ++r) {
        const Scalar& a = tab_[r + 1][entering];
        if (a > 0) {
          if (leaving == row_count_) {
            leaving = r;
          } else {
            const Scalar lhs = rhs(r) * tab_[leaving + 1][entering];
            const Scalar rhs_v = rhs(leaving) * a;
            if (lhs < rhs_v || (lhs == rhs_v && basis_[r] < basis_[leaving])) {
              leaving = r;
            }
          }
        }
      }
      if (leaving == row_count_) return false;  // unbounded direction
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    auto& pivot_row = tab_[row + 1];
    const Scalar inv = Scalar(1) / pivot_row[col];
    for (auto& cell : pivot_row) cell *= inv;
    for (std::size_t r = 0; r <= row_count_; ++r) {
      if (r == row + 1) continue;
      const Scalar factor = tab_[r][col];
      if (factor != 0) {
        for (std::size_t j = 0; j <= total_cols_; ++j) {
          tab_[r][j] -= factor * pivot_row[j];
        }
      }
    }
    basis_[row] = col;
  }

  // After phase 1, any artificial still in the basis sits at value zero;
  // pivot it out on a nonartificial column, or drop the redundant row.
  void expel_basic_artificials() {
    for (std::size_t r = 0; r < row_count_; ++r) {
      if (basis_[r] < artificial_start_) continue;
      std::size_t col = artificial_start_;
      for (std::size_t j = 0; j < artificial_start_; ++j) {
        if (tab_[r + 1][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < artificial_start_) {
        pivot(r, col);
      } else {
        for (std::size_t j = 0; j <= total_cols_; ++j) tab_[r + 1][j] = Scalar(0);
        // Keep the all-zero row in place (basis entry points at the dead
        // artificial, whose column no pivot will select again).
      }
    }
  }

  Scalar objective_value() const { return tab_[0][total_cols_]; }
  const Scalar& rhs(std::size_t r) const { return tab_[r + 1][total_cols_]; }

  const LpProblem<Scalar>& problem_;
  std::vector<std::vector<Scalar>> tab_;
  std::vector<std::size_t> basis_;
  std::size_t row_count_ = 0;
  std::size_t slack_start_ = 0;
  std::size_t artificial_start_ = 0;
  std::size_t total_cols_ = 0;
  bool phase1_ = true;
};

template <class Scalar>
LpSolution<Scalar> maximize(const LpProblem<Scalar>& problem) {
  return SimplexSolver<Scalar>(problem).solve();
}

}  // namespace cakecut

#endif  // CAKECUT_SIMPLEX_HPP
