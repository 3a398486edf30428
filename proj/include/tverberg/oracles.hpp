#pragma once

#include <cstdint>
#include <vector>

#include "tverberg/cyclotomic.hpp"
#include "tverberg/geometry.hpp"
#include "tverberg/partitions.hpp"

namespace tverberg {

/// Top Chern number of the split bundle: the x^N coefficient of the total
/// Chern class prod_{k=0}^{q-1} (1 + k x)^(d+1) in Z[x] / (x^(N+1)), cross-checked
/// against ((q-1)!)^(d+1). Throws InternalConsistencyError on mismatch.
BigInt euler_number(int q, int d);

/// g_1 ... g_k * prod_{i>j} (g_i - g_j). Requires at least one root.
Cyclotomic vandermonde_product(const std::vector<Cyclotomic>& roots);

/// det |g_i^l| (rows l = 1..k, columns i) evaluated both by elimination and
/// by the product formula. Throws InternalConsistencyError if they differ.
Cyclotomic vandermonde_delta(const std::vector<Cyclotomic>& roots);

/// Checks conj(Delta) == (-1)^C(k,2) * (g_1 ... g_k)^(-q) * Delta for the
/// roots w^e, e in `exponents`.
bool vandermonde_conjugation_holds(int q, const std::vector<int>& exponents);

/// det_D by block Laplace expansion over the row groups {(k, 1..q-1)}: a sum
/// over ordered splittings of the N columns into d + 1 sorted blocks of size
/// q - 1, each term a product of Vandermonde products and coordinates.
/// Throws SizeError when N > 9.
Cyclotomic laplace_oracle(const PointConfig& config, const Labeling& lab);

struct CrossRatioResult {
  int checked = 0;
  int skipped = 0;
  bool all_real = true;
};

/// Ratios of Laplace-term Delta products for random column splittings against
/// the consecutive-block splitting of the first (q-1)(d+1) labels; each must
/// be real. Trials with a vanishing reference are skipped.
CrossRatioResult cross_ratio_check(const Labeling& lab, int d, int trials, std::uint64_t seed);

}  // namespace tverberg
