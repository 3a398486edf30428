#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tverberg/cyclotomic.hpp"
#include "tverberg/geometry.hpp"
#include "tverberg/intersect.hpp"
#include "tverberg/partitions.hpp"

namespace tverberg {

/// Rows (k, l), k = 0..d outer, l = 1..q-1 inner; entry at ((k, l), a) is
/// w^(g_a * l) * s_{k,a} for each a in `columns`.
Matrix<Cyclotomic> entry_matrix(const PointConfig& config, const Labeling& lab,
                                const std::vector<int>& columns);

/// N x N determinant over the first N points.
Cyclotomic det_D(const PointConfig& config, const Labeling& lab);

/// det_D with column m (0-based, m < N) replaced by the last point's column.
/// m = N gives det_D itself.
Cyclotomic det_D_m(const PointConfig& config, const Labeling& lab, int m);

/// (N + 1) x (N + 1) determinant: a top row of ones over the entry matrix of
/// all N + 1 points.
Cyclotomic det_bordered(const PointConfig& config, const Labeling& lab);

struct SignEvaluation {
  /// Absent when some exponent in [0, q) labels no point.
  std::optional<OrderedPartition> partition;
  Labeling labeling;
  Cyclotomic det_D{2};
  Cyclotomic det_bordered{2};
  /// (-1)^N * det_bordered * conj(det_D); always real.
  Cyclotomic product{2};
  int sign = 0;
};

/// Characteristic cocycle of an ordered partition. A zero sign is returned,
/// not thrown. Throws InternalConsistencyError if the product is not real.
SignEvaluation cocycle_sign(const PointConfig& config, const OrderedPartition& p);
SignEvaluation cocycle_sign(const PointConfig& config, const Labeling& lab);

struct TverbergEntry {
  UnorderedPartition partition;
  Witness witness;
  int sign = 0;
};

struct IndexReport {
  PointConfig config;
  std::vector<TverbergEntry> entries;
  std::int64_t candidates = 0;
  std::int64_t count = 0;
  std::int64_t signed_sum = 0;
  BigInt bound;
  /// count >= bound
  bool theorem1_pass = false;
  /// signed_sum == bound
  bool theorem2_pass = false;
  /// A Tverberg partition had sign 0, or its witness showed the config is not
  /// in general position (zero weight, or a part larger than d + 1).
  bool degenerate = false;
  std::vector<std::string> failures;
};

struct VerifyOptions {
  /// Skip partitions with a part larger than d + 1. Only valid for
  /// configurations in general position.
  bool prune = false;
  int jobs = 1;
};

/// Enumerates every partition into q parts, keeps the Tverberg ones, and signs
/// each on its canonical order. The report does not depend on `jobs`.
IndexReport verify_config(const PointConfig& config, const VerifyOptions& options = {});

/// Signs of every ordering of the partition's parts, in lexicographic order of
/// the permutation applied to the canonical order.
std::vector<int> ordering_signs(const PointConfig& config, const UnorderedPartition& p);

/// Local degree of the section at the Tverberg zero given by `witness`,
/// from the 2N x 2N real jacobian in (t, theta) coordinates, evaluated in
/// long double. A numeric diagnostic only.
int jacobian_sign(const PointConfig& config, const OrderedPartition& p, const Witness& witness);

}  // namespace tverberg
