// Copyright 2026 The covertime Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// A small revised simplex method with an explicit basis inverse, generic over
// the number type. With mpq_class every pivot is exact; with double the
// inverse is refactored periodically.
//
// The solver is built for column generation: columns may be added after a
// solve and the next Solve() continues from the current basis.

#ifndef COVERTIME_SIMPLEX_H_
#define COVERTIME_SIMPLEX_H_

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <type_traits>
#include <utility>
#include <vector>

#include "covertime/errors.h"
#include "covertime/rational.h"

namespace covertime {

template <typename T>
struct SimplexTraits;

template <>
struct SimplexTraits<Rational> {
  static bool Positive(const Rational& x) { return sgn(x) > 0; }
  static bool Negative(const Rational& x) { return sgn(x) < 0; }
  static bool PivotCandidate(const Rational& x) { return sgn(x) > 0; }
  static Rational Abs(const Rational& x) { return abs(x); }
  static bool NonZero(const Rational& x) { return sgn(x) != 0; }
  static constexpr int kRefactorPeriod = 0;
};

template <>
struct SimplexTraits<double> {
  static constexpr double kTolerance = 1e-9;
  static bool Positive(double x) { return x > kTolerance; }
  static bool Negative(double x) { return x < -kTolerance; }
  // Pivots smaller than this are refused to keep the basis well conditioned.
  static bool PivotCandidate(double x) { return x > 1e-7; }
  static double Abs(double x) { return std::abs(x); }
  static bool NonZero(double x) { return std::abs(x) > kTolerance; }
  static constexpr int kRefactorPeriod = 64;
};

enum class SimplexStatus { kOptimal, kInfeasible, kUnbounded };

// Minimizes c^T x subject to A x = b, x >= 0.
template <typename T>
class DenseSimplex {
 public:
  using SparseColumn = std::vector<std::pair<int, T>>;
  using Traits = SimplexTraits<T>;

  explicit DenseSimplex(std::vector<T> rhs) : rhs_(std::move(rhs)) {
    const int m = num_rows();
    sign_.assign(m, 1);
    for (int i = 0; i < m; ++i) {
      if (Traits::Negative(rhs_[i])) sign_[i] = -1;
    }
    binv_.assign(m, std::vector<T>(m, T(0)));
    beta_.resize(m);
    basis_.resize(m);
    for (int i = 0; i < m; ++i) {
      binv_[i][i] = T(1);
      beta_[i] = rhs_[i] * T(sign_[i]);
      basis_[i] = ArtificialIndex(i);
    }
  }

  int num_rows() const { return static_cast<int>(rhs_.size()); }
  int num_columns() const { return static_cast<int>(columns_.size()); }

  int AddColumn(SparseColumn column, T cost) {
    for (const auto& [row, value] : column) {
      if (row < 0 || row >= num_rows()) {
        throw Error(ErrorCode::kInternal, "simplex column row out of range");
      }
    }
    columns_.push_back(std::move(column));
    costs_.push_back(std::move(cost));
    is_basic_.push_back(false);
    return num_columns() - 1;
  }

  // Starts the column basic in `row`. The column must be the unit vector of
  // that row and the row's right-hand side nonnegative. Call before Solve().
  void MarkInitialBasic(int column, int row) {
    const SparseColumn& col = columns_.at(column);
    if (col.size() != 1 || col[0].first != row || col[0].second != T(1) ||
        sign_[row] != 1 || basis_[row] >= 0) {
      throw Error(ErrorCode::kInternal, "invalid crash basis column");
    }
    basis_[row] = column;
    is_basic_[column] = true;
  }

  SimplexStatus Solve() {
    if (!phase_one_done_) {
      bool any_artificial = false;
      for (int b : basis_) any_artificial = any_artificial || b < 0;
      if (any_artificial) {
        const SimplexStatus status = Iterate(/*phase_one=*/true);
        if (status != SimplexStatus::kOptimal) {
          throw Error(ErrorCode::kInternal, "phase one cannot be unbounded");
        }
        T infeasibility(0);
        for (int i = 0; i < num_rows(); ++i) {
          if (basis_[i] < 0) infeasibility += beta_[i];
        }
        if (Traits::Positive(infeasibility)) return SimplexStatus::kInfeasible;
      }
      phase_one_done_ = true;
    }
    return Iterate(/*phase_one=*/false);
  }

  T Objective() const {
    T total(0);
    for (int i = 0; i < num_rows(); ++i) {
      if (basis_[i] >= 0) total += costs_[basis_[i]] * beta_[i];
    }
    return total;
  }

  std::vector<T> Primal() const {
    std::vector<T> x(num_columns(), T(0));
    for (int i = 0; i < num_rows(); ++i) {
      if (basis_[i] >= 0) x[basis_[i]] = beta_[i];
    }
    return x;
  }

  T Value(int column) const {
    for (int i = 0; i < num_rows(); ++i) {
      if (basis_[i] == column) return beta_[i];
    }
    return T(0);
  }

  // Row duals of the current (phase two) basis in the original row
  // orientation: reduced cost of column j is c_j - duals . A_j.
  std::vector<T> Duals() const { return ComputeDuals(false); }

  T ReducedCost(const SparseColumn& column, const T& cost,
                const std::vector<T>& duals) const {
    T d = cost;
    for (const auto& [row, value] : column) d -= duals[row] * value;
    return d;
  }

  int64_t pivots() const { return pivots_; }

 private:
  static int ArtificialIndex(int row) { return -1 - row; }

  T BasicCost(int i, bool phase_one) const {
    const int b = basis_[i];
    if (b < 0) return phase_one ? T(1) : T(0);
    return phase_one ? T(0) : costs_[b];
  }

  std::vector<T> ComputeDuals(bool phase_one) const {
    const int m = num_rows();
    std::vector<T> y(m, T(0));
    for (int i = 0; i < m; ++i) {
      const T cb = BasicCost(i, phase_one);
      if (!Traits::NonZero(cb)) continue;
      for (int k = 0; k < m; ++k) y[k] += cb * binv_[i][k];
    }
    for (int k = 0; k < m; ++k) {
      if (sign_[k] < 0) y[k] = -y[k];
    }
    return y;
  }

  std::vector<T> EnteringColumn(int j) const {
    const int m = num_rows();
    std::vector<T> alpha(m, T(0));
    for (const auto& [row, value] : columns_[j]) {
      const T v = sign_[row] < 0 ? T(-value) : value;
      for (int i = 0; i < m; ++i) {
        if (Traits::NonZero(binv_[i][row])) alpha[i] += binv_[i][row] * v;
      }
    }
    return alpha;
  }

  void Pivot(int p, int j, const std::vector<T>& alpha) {
    const int m = num_rows();
    const T inv = T(1) / alpha[p];
    for (int k = 0; k < m; ++k) binv_[p][k] *= inv;
    beta_[p] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == p || !Traits::NonZero(alpha[i])) continue;
      const T factor = alpha[i];
      for (int k = 0; k < m; ++k) {
        if (Traits::NonZero(binv_[p][k])) binv_[i][k] -= factor * binv_[p][k];
      }
      beta_[i] -= factor * beta_[p];
    }
    if (basis_[p] >= 0) is_basic_[basis_[p]] = false;
    basis_[p] = j;
    is_basic_[j] = true;
    ++pivots_;
    if (Traits::kRefactorPeriod > 0 && pivots_ % Traits::kRefactorPeriod == 0) {
      Refactor();
    }
  }

  // Rebuilds the inverse from the basis columns by Gauss-Jordan elimination
  // with partial pivoting. Only used for floating point.
  void Refactor() {
    const int m = num_rows();
    std::vector<std::vector<T>> b(m, std::vector<T>(m, T(0)));
    for (int i = 0; i < m; ++i) {
      if (basis_[i] < 0) {
        b[-1 - basis_[i]][i] = T(1);
      } else {
        for (const auto& [row, value] : columns_[basis_[i]]) {
          b[row][i] = sign_[row] < 0 ? T(-value) : value;
        }
      }
    }
    std::vector<std::vector<T>> inv(m, std::vector<T>(m, T(0)));
    for (int i = 0; i < m; ++i) inv[i][i] = T(1);
    for (int c = 0; c < m; ++c) {
      int best = c;
      for (int r = c + 1; r < m; ++r) {
        if (std::abs(ToDoubleValue(b[r][c])) > std::abs(ToDoubleValue(b[best][c]))) best = r;
      }
      if (!Traits::NonZero(b[best][c])) {
        throw Error(ErrorCode::kInternal, "singular simplex basis");
      }
      std::swap(b[c], b[best]);
      std::swap(inv[c], inv[best]);
      const T piv = b[c][c];
      for (int k = 0; k < m; ++k) {
        b[c][k] /= piv;
        inv[c][k] /= piv;
      }
      for (int r = 0; r < m; ++r) {
        if (r == c || b[r][c] == T(0)) continue;
        const T f = b[r][c];
        for (int k = 0; k < m; ++k) {
          b[r][k] -= f * b[c][k];
          inv[r][k] -= f * inv[c][k];
        }
      }
    }
    binv_ = std::move(inv);
    for (int i = 0; i < m; ++i) {
      T v(0);
      for (int k = 0; k < m; ++k) v += binv_[i][k] * rhs_[k] * T(sign_[k]);
      beta_[i] = v;
    }
  }

  static double ToDoubleValue(const T& x) {
    if constexpr (std::is_same_v<T, double>) {
      return x;
    } else {
      return x.get_d();
    }
  }

  SimplexStatus Iterate(bool phase_one) {
    constexpr int kDegenerateStreakForBland = 50;
    constexpr int64_t kMaxPivots = 2'000'000;
    int degenerate_streak = 0;
    while (true) {
      if (pivots_ > kMaxPivots) {
        throw Error(ErrorCode::kNontermination, "simplex pivot limit reached");
      }
      const std::vector<T> y = ComputeDuals(phase_one);
      const bool bland = degenerate_streak >= kDegenerateStreakForBland;
      int entering = -1;
      T best_d(0);
      for (int j = 0; j < num_columns(); ++j) {
        if (is_basic_[j]) continue;
        T d = phase_one ? T(0) : costs_[j];
        for (const auto& [row, value] : columns_[j]) d -= y[row] * value;
        if (!Traits::Negative(d)) continue;
        if (bland) {
          entering = j;
          break;
        }
        if (entering < 0 || d < best_d) {
          entering = j;
          best_d = d;
        }
      }
      if (entering < 0) return SimplexStatus::kOptimal;

      const std::vector<T> alpha = EnteringColumn(entering);
      const int leave = LeavingRow(alpha, phase_one);
      if (leave < 0) return SimplexStatus::kUnbounded;
      if (Traits::Positive(beta_[leave] / alpha[leave])) {
        degenerate_streak = 0;
      } else {
        ++degenerate_streak;
      }
      Pivot(leave, entering, alpha);
    }
  }

  // Ratio test. Returns -1 when the entering column is unbounded.
  int LeavingRow(const std::vector<T>& alpha, bool phase_one) const {
    const int m = num_rows();
    // A basic artificial sitting at zero must leave before the entering
    // column can move it off zero.
    if (!phase_one) {
      int artificial = -1;
      for (int i = 0; i < m; ++i) {
        if (basis_[i] >= 0 || !Traits::PivotCandidate(Traits::Abs(alpha[i]))) continue;
        if (artificial < 0 || Traits::Abs(alpha[i]) > Traits::Abs(alpha[artificial])) artificial = i;
      }
      if (artificial >= 0) return artificial;
    }
    if constexpr (std::is_same_v<T, double>) {
      // Harris: bound the step with slightly relaxed rows, then take the
      // largest pivot among the rows that block within that bound.
      double bound = 0;
      bool any = false;
      for (int i = 0; i < m; ++i) {
        if (!Traits::PivotCandidate(alpha[i])) continue;
        const double ratio = (std::max(beta_[i], 0.0) + Traits::kTolerance) / alpha[i];
        if (!any || ratio < bound) bound = ratio;
        any = true;
      }
      int leave = -1;
      for (int i = 0; i < m; ++i) {
        if (!Traits::PivotCandidate(alpha[i])) continue;
        if (std::max(beta_[i], 0.0) / alpha[i] > bound) continue;
        if (leave < 0 || alpha[i] > alpha[leave] ||
            (alpha[i] == alpha[leave] && BasisKey(i) < BasisKey(leave))) {
          leave = i;
        }
      }
      return leave;
    } else {
      int leave = -1;
      T best_ratio(0);
      for (int i = 0; i < m; ++i) {
        if (!Traits::PivotCandidate(alpha[i])) continue;
        T ratio = beta_[i] / alpha[i];
        if (Traits::Negative(ratio)) ratio = T(0);
        if (leave < 0 || ratio < best_ratio ||
            (!(best_ratio < ratio) && BasisKey(i) < BasisKey(leave))) {
          leave = i;
          best_ratio = ratio;
        }
      }
      return leave;
    }
  }

  // Artificials sort before structurals, so they are preferred to leave.
  int BasisKey(int i) const { return basis_[i]; }

  std::vector<T> rhs_;
  std::vector<int> sign_;
  std::vector<SparseColumn> columns_;
  std::vector<T> costs_;
  std::vector<bool> is_basic_;
  std::vector<std::vector<T>> binv_;
  std::vector<T> beta_;
  std::vector<int> basis_;
  bool phase_one_done_ = false;
  int64_t pivots_ = 0;
};

}  // namespace covertime

#endif  // COVERTIME_SIMPLEX_H_
