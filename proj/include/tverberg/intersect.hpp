#pragma once

#include <optional>
#include <vector>

#include "tverberg/geometry.hpp"
#include "tverberg/matrix.hpp"
#include "tverberg/partitions.hpp"
#include "tverberg/rational.hpp"

namespace tverberg {

/// Minimizes `objective . x` (or just finds a point if `objective` is empty)
/// subject to A x = b, x >= 0, with an exact two-phase simplex using Bland's
/// rule. Returns nullopt if infeasible. Throws InvalidParameter on shape
/// mismatch or an unbounded objective.
std::optional<std::vector<Rational>> solve_lp(const Matrix<Rational>& A, const std::vector<Rational>& b,
                                              const std::vector<Rational>& objective = {});

/// Weight variable lambda_{part, point}.
struct Variable {
  int part = 0;
  int point = 0;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Equalities for conv(part 0) ∩ ... ∩ conv(part q-1) != ∅ over one weight per
/// (part, point): q rows "weights of part j sum to 1", then (q - 1)(d + 1)
/// rows "coordinate k of part j's combination equals part 0's", j >= 1.
struct FeasibilitySystem {
  int num_parts = 0;
  int dim = 0;  // d + 1 homogeneous coordinates
  std::vector<Variable> variables;
  /// Coordinates of each variable's point, used to recover the common point.
  std::vector<Point> coords;
  Matrix<Rational> equalities;
  std::vector<Rational> rhs;
};

FeasibilitySystem build_system(const PointConfig& config, const OrderedPartition& p);

struct Witness {
  struct Weight {
    Variable variable;
    Rational value;
  };
  std::vector<Weight> weights;
  /// Common point of the hulls; d + 1 coordinates summing to 1.
  Point point;
};

/// Throws InvalidParameter if the system's dimensions are inconsistent.
std::optional<Witness> lp_feasible(const FeasibilitySystem& system);

/// Same, at a vertex minimizing `objective` (one entry per variable).
std::optional<Witness> lp_optimize(const FeasibilitySystem& system, const std::vector<Rational>& objective);

/// Closed-hull Tverberg test. With `prefilter`, partitions whose parts have
/// disjoint coordinate ranges are rejected before the LP (an exact necessary
/// condition, so the answer is the same).
std::optional<Witness> is_tverberg(const PointConfig& config, const UnorderedPartition& p,
                                   bool prefilter = true);
std::optional<Witness> is_tverberg(const PointConfig& config, const OrderedPartition& p,
                                   bool prefilter = true);

/// Radon partition of d + 2 points from the sign pattern of their unique
/// affine dependence. Requires q = 2; throws NonGenericError if the
/// dependence is not unique or has a zero coefficient.
UnorderedPartition radon_oracle(const PointConfig& config);

}  // namespace tverberg
