#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tverberg/rational.hpp"

namespace tverberg {

/// Desk-scale cap on the number of points (N + 1).
inline constexpr int kDefaultMaxPoints = 24;

/// Problem size: q parts in affine d-space.
struct Parameters {
  int q = 0;
  int d = 0;
  /// (q - 1)(d + 1); there are N + 1 points.
  int N = 0;
  /// ((q - 1)!)^d, the Tverberg partition lower bound.
  BigInt bound;
  /// ((q - 1)!)^(d + 1), the top Chern number of the bundle.
  BigInt euler;

  int num_points() const noexcept { return N + 1; }
  friend bool operator==(const Parameters&, const Parameters&) = default;
};

/// Throws InvalidParameter unless q >= 2 and d >= 1, and (without
/// `allow_large`) N + 1 <= kDefaultMaxPoints.
Parameters make_params(int q, int d, bool allow_large = false);

using Point = std::vector<Rational>;

/// N + 1 points of the hyperplane {x in R^(d+1) : sum x_k = 1}.
struct PointConfig {
  Parameters params;
  std::vector<Point> points;
  std::string label;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;
};

/// Throws SchemaError naming the first violated invariant (point count,
/// coordinate count, or coordinate sum).
void validate_config(const PointConfig& config);

/// Uniform integer in [0, span) by rejection sampling; unlike
/// std::uniform_int_distribution the sequence is the same on every standard
/// library, so seeded configurations are portable.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t span);

inline constexpr long kDefaultResolution = 1L << 10;

/// Random rational configuration: each point's first d coordinates are
/// numerators drawn uniformly from [-resolution, 2 * resolution] over
/// `resolution`; the last coordinate completes the sum to 1.
PointConfig random_config(const Parameters& params, std::uint64_t seed,
                          long resolution = kDefaultResolution);

/// Sierksma's configuration: q - 1 copies of each standard basis vector plus
/// the barycenter. With eps > 0 the copies are displaced inside the
/// hyperplane by offsets of max-norm <= eps, chosen deterministically from
/// (variant, cluster, copy).
PointConfig sierksma_config(const Parameters& params, const Rational& eps,
                            std::uint64_t variant = 0);

struct GenericityVerdict {
  bool generic = true;
  std::vector<std::string> failures;

  void add_failure(std::string witness) {
    generic = false;
    failures.push_back(std::move(witness));
  }
};

/// General-position screen: every (d + 1)-subset of points must be affinely
/// independent, i.e. its (d + 1) x (d + 1) coordinate determinant is nonzero.
GenericityVerdict screen_genericity(const PointConfig& config);

}  // namespace tverberg
