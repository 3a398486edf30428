#include "tverberg/intersect.hpp"

#include <algorithm>

#include "tverberg/errors.hpp"

namespace tverberg {

namespace {

// Dense simplex tableau: rows 0..m-1 are constraints, column `rhs_col` holds
// the right-hand side. `cost` is the reduced-cost row with the negated
// objective value in its last entry.
class Tableau {
 public:
  Tableau(const Matrix<Rational>& A, const std::vector<Rational>& b)
      : m_(A.rows()), n_(A.cols()), artificials_(A.rows()), t_(A.rows(), A.cols() + A.rows() + 1),
        basis_(A.rows()) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = sgn(b[i]) < 0;
      for (std::size_t j = 0; j < n_; ++j) t_(i, j) = flip ? Rational(-A(i, j)) : A(i, j);
      t_(i, n_ + i) = 1;
      t_(i, rhs_col()) = flip ? Rational(-b[i]) : b[i];
      basis_[i] = n_ + i;
    }
    active_.assign(n_ + artificials_, true);
  }

  std::size_t rhs_col() const { return n_ + artificials_; }

  // Phase 1 objective: sum of artificials.
  void set_phase_one_cost() {
    cost_.assign(rhs_col() + 1, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) cost_[j] -= t_(i, j);
      cost_[rhs_col()] -= t_(i, rhs_col());
    }
  }

  void set_cost(const std::vector<Rational>& objective) {
    cost_.assign(rhs_col() + 1, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = objective[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t bv = basis_[i];
      if (bv >= n_ || sgn(cost_[bv]) == 0) continue;
      const Rational c = cost_[bv];
      for (std::size_t j = 0; j <= rhs_col(); ++j) {
        if (sgn(t_(i, j)) != 0) cost_[j] -= c * t_(i, j);
      }
    }
  }

  Rational objective_value() const { return -cost_[rhs_col()]; }

  // Runs Bland's rule to optimality. `stop_at_zero` ends early once the
  // objective reaches zero (phase 1 only needs a feasible basis).
  void optimize(bool stop_at_zero) {
    while (true) {
      if (stop_at_zero && sgn(cost_[rhs_col()]) == 0) return;
      std::size_t entering = rhs_col();
      for (std::size_t j = 0; j < rhs_col(); ++j) {
        if (active_[j] && sgn(cost_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == rhs_col()) return;
      std::size_t leaving = m_;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_(i, entering)) <= 0) continue;
        Rational ratio = t_(i, rhs_col()) / t_(i, entering);
        if (leaving == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == m_) throw InvalidParameter("linear program is unbounded");
      pivot(leaving, entering);
    }
  }

  // After phase 1: pivot zero-level artificials out of the basis where
  // possible, drop redundant rows, and bar artificials from re-entering.
  void retire_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < n_ && sgn(t_(i, j)) == 0) ++j;
      if (j < n_) {
        pivot(i, j);
        ++i;
      } else {
        remove_row(i);
      }
    }
    for (std::size_t j = n_; j < rhs_col(); ++j) active_[j] = false;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = t_(i, rhs_col());
    }
    return x;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const std::size_t width = rhs_col() + 1;
    const Rational inv = 1 / t_(row, col);
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(t_(row, j)) != 0) t_(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || sgn(t_(i, col)) == 0) continue;
      const Rational factor = t_(i, col);
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(t_(row, j)) != 0) t_(i, j) -= factor * t_(row, j);
      }
    }
    if (sgn(cost_[col]) != 0) {
      const Rational factor = cost_[col];
      for (std::size_t j = 0; j < width; ++j) {
        if (sgn(t_(row, j)) != 0) cost_[j] -= factor * t_(row, j);
      }
    }
    basis_[row] = col;
  }

  void remove_row(std::size_t row) {
    Matrix<Rational> smaller(m_ - 1, t_.cols());
    for (std::size_t i = 0, k = 0; i < m_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0; j < t_.cols(); ++j) smaller(k, j) = t_(i, j);
      ++k;
    }
    t_ = std::move(smaller);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    --m_;
  }

  std::size_t m_;
  std::size_t n_;
  // Artificial column count; fixed even as redundant rows are dropped.
  std::size_t artificials_;
  Matrix<Rational> t_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::vector<bool> active_;
};

}  // namespace

std::optional<std::vector<Rational>> solve_lp(const Matrix<Rational>& A, const std::vector<Rational>& b,
                                              const std::vector<Rational>& objective) {
  if (b.size() != A.rows()) throw InvalidParameter("solve_lp: rhs size mismatch");
  if (!objective.empty() && objective.size() != A.cols()) {
    throw InvalidParameter("solve_lp: objective size mismatch");
  }
  Tableau tableau(A, b);
  tableau.set_phase_one_cost();
  tableau.optimize(objective.empty());
  if (sgn(tableau.objective_value()) != 0) return std::nullopt;
  if (!objective.empty()) {
    tableau.retire_artificials();
    tableau.set_cost(objective);
    tableau.optimize(false);
  }
  return tableau.solution();
}

FeasibilitySystem build_system(const PointConfig& config, const OrderedPartition& p) {
  const int n = config.params.num_points();
  if (p.num_points() != n) throw InvalidParameter("partition does not match the configuration size");
  FeasibilitySystem sys;
  sys.num_parts = p.num_parts();
  sys.dim = config.params.d + 1;
  for (int j = 0; j < sys.num_parts; ++j) {
    for (int a : p.parts()[j]) {
      sys.variables.push_back({j, a});
      sys.coords.push_back(config.points[a]);
    }
  }
  const std::size_t rows = sys.num_parts + (sys.num_parts - 1) * sys.dim;
  sys.equalities = Matrix<Rational>(rows, sys.variables.size());
  sys.rhs.assign(rows, Rational(0));
  for (std::size_t v = 0; v < sys.variables.size(); ++v) {
    const int j = sys.variables[v].part;
    sys.equalities(j, v) = 1;
    for (int k = 0; k < sys.dim; ++k) {
      const Rational& x = sys.coords[v][k];
      if (j == 0) {
        for (int other = 1; other < sys.num_parts; ++other) {
          sys.equalities(sys.num_parts + (other - 1) * sys.dim + k, v) = -x;
        }
      } else {
        sys.equalities(sys.num_parts + (j - 1) * sys.dim + k, v) = x;
      }
    }
  }
  for (int j = 0; j < sys.num_parts; ++j) sys.rhs[j] = 1;
  return sys;
}

namespace {

void check_system(const FeasibilitySystem& sys) {
  const std::size_t rows = sys.num_parts + (sys.num_parts - 1) * sys.dim;
  if (sys.num_parts < 1 || sys.dim < 1 || sys.equalities.rows() != rows ||
      sys.equalities.cols() != sys.variables.size() || sys.rhs.size() != rows ||
      sys.coords.size() != sys.variables.size()) {
    throw InvalidParameter("malformed feasibility system");
  }
  for (const auto& v : sys.variables) {
    if (v.part < 0 || v.part >= sys.num_parts) throw InvalidParameter("variable part out of range");
  }
  for (const auto& c : sys.coords) {
    if (c.size() != static_cast<std::size_t>(sys.dim)) throw InvalidParameter("variable coordinates malformed");
  }
}

Witness make_witness(const FeasibilitySystem& sys, const std::vector<Rational>& x) {
  Witness w;
  w.point.assign(sys.dim, Rational(0));
  for (std::size_t v = 0; v < sys.variables.size(); ++v) {
    w.weights.push_back({sys.variables[v], x[v]});
    if (sys.variables[v].part != 0 || sgn(x[v]) == 0) continue;
    for (int k = 0; k < sys.dim; ++k) w.point[k] += x[v] * sys.coords[v][k];
  }
  return w;
}

// Every hull's coordinate range must meet the others'.
bool ranges_overlap(const PointConfig& config, const std::vector<IndexSet>& parts) {
  const int dim = config.params.d + 1;
  for (int k = 0; k < dim; ++k) {
    const Rational* lo = nullptr;
    const Rational* hi = nullptr;
    for (const auto& part : parts) {
      const Rational* part_lo = &config.points[part[0]][k];
      const Rational* part_hi = part_lo;
      for (int a : part) {
        const Rational& x = config.points[a][k];
        if (x < *part_lo) part_lo = &x;
        if (x > *part_hi) part_hi = &x;
      }
      if (!lo || *part_lo > *lo) lo = part_lo;
      if (!hi || *part_hi < *hi) hi = part_hi;
      if (*lo > *hi) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Witness> lp_feasible(const FeasibilitySystem& system) {
  check_system(system);
  auto x = solve_lp(system.equalities, system.rhs);
  if (!x) return std::nullopt;
  return make_witness(system, *x);
}

std::optional<Witness> lp_optimize(const FeasibilitySystem& system, const std::vector<Rational>& objective) {
  check_system(system);
  if (objective.size() != system.variables.size()) throw InvalidParameter("objective size mismatch");
  auto x = solve_lp(system.equalities, system.rhs, objective);
  if (!x) return std::nullopt;
  return make_witness(system, *x);
}

std::optional<Witness> is_tverberg(const PointConfig& config, const OrderedPartition& p, bool prefilter) {
  if (p.num_points() != config.params.num_points()) {
    throw InvalidParameter("partition index range does not match the configuration");
  }
  if (prefilter && !ranges_overlap(config, p.parts())) return std::nullopt;
  return lp_feasible(build_system(config, p));
}

std::optional<Witness> is_tverberg(const PointConfig& config, const UnorderedPartition& p, bool prefilter) {
  return is_tverberg(config, canonical_order(p), prefilter);
}

UnorderedPartition radon_oracle(const PointConfig& config) {
  if (config.params.q != 2) throw InvalidParameter("radon_oracle requires q = 2");
  const int rows = config.params.d + 1;
  const int cols = config.params.num_points();  // d + 2
  Matrix<Rational> m(rows, cols);
  for (int a = 0; a < cols; ++a) {
    for (int k = 0; k < rows; ++k) m(k, a) = config.points[a][k];
  }
  // Reduced row echelon form.
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (int j = 0; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (int j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (cols - r != 1) {
    throw NonGenericError("affine dependence space has dimension " + std::to_string(cols - r) + ", expected 1");
  }
  int free_col = 0;
  for (int c = 0; c < cols; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_col = c;
  }
  std::vector<Rational> kernel(cols, Rational(0));
  kernel[free_col] = 1;
  for (int i = 0; i < r; ++i) kernel[pivot_col[i]] = -m(i, free_col);
  IndexSet positive, negative;
  for (int a = 0; a < cols; ++a) {
    const int s = sgn(kernel[a]);
    if (s == 0) throw NonGenericError("point " + std::to_string(a + 1) + " has zero dependence coefficient");
    (s > 0 ? positive : negative).push_back(a);
  }
  return UnorderedPartition({positive, negative}, cols);
}

}  // namespace tverberg
