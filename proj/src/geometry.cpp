#include "tverberg/geometry.hpp"

#include <random>
#include <sstream>

#include "tverberg/cyclotomic.hpp"
#include "tverberg/errors.hpp"

namespace tverberg {

namespace {

BigInt factorial(int n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt power(const BigInt& base, int exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string index_set(const std::vector<int>& indices) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < indices.size(); ++i) out << (i ? "," : "") << indices[i] + 1;
  out << "}";
  return out.str();
}

}  // namespace

Parameters make_params(int q, int d, bool allow_large) {
  if (q < 2) throw InvalidParameter("q must be >= 2");
  if (d < 1) throw InvalidParameter("d must be >= 1");
  if (q > kMaxCyclotomicOrder) throw InvalidParameter("q too large");
  Parameters p;
  p.q = q;
  p.d = d;
  p.N = (q - 1) * (d + 1);
  if (!allow_large && p.N + 1 > kDefaultMaxPoints) {
    throw InvalidParameter("N + 1 = " + std::to_string(p.N + 1) + " points exceeds the desk-scale cap of " +
                           std::to_string(kDefaultMaxPoints));
  }
  const BigInt f = factorial(q - 1);
  p.bound = power(f, d);
  p.euler = power(f, d + 1);
  return p;
}

void validate_config(const PointConfig& config) {
  const auto& p = config.params;
  const auto expected = static_cast<std::size_t>(p.num_points());
  if (config.points.size() != expected) {
    throw SchemaError("expected " + std::to_string(expected) + " points, got " +
                      std::to_string(config.points.size()));
  }
  for (std::size_t a = 0; a < config.points.size(); ++a) {
    const auto& pt = config.points[a];
    if (pt.size() != static_cast<std::size_t>(p.d + 1)) {
      throw SchemaError("point " + std::to_string(a + 1) + ": expected " + std::to_string(p.d + 1) +
                        " coordinates, got " + std::to_string(pt.size()));
    }
    Rational sum(0);
    for (const auto& x : pt) sum += x;
    if (sum != 1) {
      throw SchemaError("point " + std::to_string(a + 1) + ": coordinates sum to " +
                        format_rational(sum) + ", expected 1");
    }
  }
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t span) {
  if (span == 0) throw InvalidParameter("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % span;
}

PointConfig random_config(const Parameters& params, std::uint64_t seed, long resolution) {
  if (resolution < (1L << 10)) throw InvalidParameter("resolution must be >= 2^10");
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(3 * resolution + 1);
  PointConfig config;
  config.params = params;
  config.seed = seed;
  config.label = "random q=" + std::to_string(params.q) + " d=" + std::to_string(params.d) +
                 " seed=" + std::to_string(seed) + " resolution=" + std::to_string(resolution);
  config.points.reserve(params.num_points());
  for (int a = 0; a < params.num_points(); ++a) {
    Point pt;
    Rational sum(0);
    for (int k = 0; k < params.d; ++k) {
      const long num = static_cast<long>(uniform_below(rng, span)) - resolution;
      Rational x(num, resolution);
      x.canonicalize();
      sum += x;
      pt.push_back(x);
    }
    pt.push_back(1 - sum);
    config.points.push_back(std::move(pt));
  }
  return config;
}

PointConfig sierksma_config(const Parameters& params, const Rational& eps, std::uint64_t variant) {
  if (sgn(eps) < 0) throw InvalidParameter("eps must be >= 0");
  const int d = params.d;
  PointConfig config;
  config.params = params;
  std::ostringstream label;
  label << "sierksma q=" << params.q << " d=" << d << " eps=" << format_rational(eps);
  if (sgn(eps) > 0) label << " variant=" << variant;
  config.label = label.str();

  constexpr long kOffsetDenominator = 1L << 16;
  for (int cluster = 0; cluster <= d; ++cluster) {
    std::vector<Point> copies;
    for (int copy = 0; copy < params.q - 1; ++copy) {
      Point pt(d + 1, Rational(0));
      pt[cluster] = 1;
      if (sgn(eps) > 0) {
        for (std::uint64_t salt = 0;; ++salt) {
          std::vector<Rational> raw(d + 1);
          Rational mean(0);
          for (int k = 0; k <= d; ++k) {
            std::uint64_t h = splitmix64(variant);
            h = splitmix64(h ^ static_cast<std::uint64_t>(cluster));
            h = splitmix64(h ^ static_cast<std::uint64_t>(copy));
            h = splitmix64(h ^ static_cast<std::uint64_t>(k));
            h = splitmix64(h ^ salt);
            const long num = static_cast<long>(h % (kOffsetDenominator + 1)) - kOffsetDenominator / 2;
            raw[k] = Rational(num, kOffsetDenominator);
            raw[k].canonicalize();
            mean += raw[k];
          }
          mean /= d + 1;
          Point moved(d + 1);
          for (int k = 0; k <= d; ++k) moved[k] = pt[k] + eps * (raw[k] - mean);
          bool fresh = moved != pt;
          for (const auto& other : copies) fresh = fresh && other != moved;
          if (fresh) {
            pt = std::move(moved);
            break;
          }
        }
      }
      copies.push_back(pt);
      config.points.push_back(std::move(pt));
    }
  }
  config.points.emplace_back(d + 1, Rational(1, d + 1));
  return config;
}

GenericityVerdict screen_genericity(const PointConfig& config) {
  constexpr std::size_t kMaxReported = 32;
  GenericityVerdict verdict;
  const int n = config.params.num_points();
  const int k = config.params.d + 1;
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  std::size_t dependent = 0;
  while (true) {
    Matrix<Rational> m(k, k);
    for (int c = 0; c < k; ++c) {
      for (int r = 0; r < k; ++r) m(r, c) = config.points[subset[c]][r];
    }
    if (sgn(det_rational(m)) == 0) {
      if (++dependent <= kMaxReported) {
        verdict.add_failure("points " + index_set(subset) + " affinely dependent");
      } else {
        verdict.generic = false;
      }
    }
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  if (dependent > kMaxReported) {
    verdict.failures.push_back("... " + std::to_string(dependent - kMaxReported) +
                               " more dependent subsets");
  }
  return verdict;
}

}  // namespace tverberg
