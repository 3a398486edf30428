#include "tverberg/oracles.hpp"

#include <random>

#include "tverberg/errors.hpp"

namespace tverberg {

BigInt euler_number(int q, int d) {
  if (q < 2 || d < 1) throw InvalidParameter("euler_number requires q >= 2, d >= 1");
  const int N = (q - 1) * (d + 1);
  // Truncated polynomial arithmetic in Z[x] / (x^(N+1)).
  std::vector<BigInt> total(N + 1, 0);
  total[0] = 1;
  for (int k = 0; k < q; ++k) {
    for (int copy = 0; copy <= d; ++copy) {
      // total *= (1 + k x)
      for (int i = N; i >= 1; --i) total[i] += k * total[i - 1];
    }
  }
  BigInt closed;
  mpz_fac_ui(closed.get_mpz_t(), static_cast<unsigned long>(q - 1));
  mpz_pow_ui(closed.get_mpz_t(), closed.get_mpz_t(), static_cast<unsigned long>(d + 1));
  if (total[N] != closed) {
    throw InternalConsistencyError("euler_number: Chern polynomial gives " + total[N].get_str() +
                                   ", closed form " + closed.get_str());
  }
  return total[N];
}

Cyclotomic vandermonde_product(const std::vector<Cyclotomic>& roots) {
  if (roots.empty()) throw InvalidParameter("vandermonde_product needs at least one root");
  Cyclotomic out(roots[0].order(), Rational(1));
  for (const auto& g : roots) out *= g;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) out *= roots[i] - roots[j];
  }
  return out;
}

Cyclotomic vandermonde_delta(const std::vector<Cyclotomic>& roots) {
  if (roots.empty()) throw InvalidParameter("vandermonde_delta needs at least one root");
  const int q = roots[0].order();
  const std::size_t k = roots.size();
  Matrix<Cyclotomic> m(k, k, Cyclotomic(q));
  for (std::size_t i = 0; i < k; ++i) {
    Cyclotomic power = roots[i];
    for (std::size_t l = 0; l < k; ++l) {
      m(l, i) = power;
      power *= roots[i];
    }
  }
  const Cyclotomic det = det_cyclotomic(m, q);
  const Cyclotomic product = vandermonde_product(roots);
  if (!(det == product)) {
    throw InternalConsistencyError("Vandermonde determinant " + det.to_string() + " != product " +
                                   product.to_string());
  }
  return det;
}

bool vandermonde_conjugation_holds(int q, const std::vector<int>& exponents) {
  std::vector<Cyclotomic> roots;
  long exponent_sum = 0;
  for (int e : exponents) {
    roots.push_back(cyclo_root(q, e));
    exponent_sum += e;
  }
  const Cyclotomic delta = vandermonde_delta(roots);
  const long k = static_cast<long>(exponents.size());
  Cyclotomic rhs = cyclo_root(q, -static_cast<long>(q) * exponent_sum) * delta;
  if ((k * (k - 1) / 2) % 2 == 1) rhs = -rhs;
  return cyclo_conj(delta) == rhs;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  }
  return inversions % 2 ? -1 : 1;
}

// Visits every ordered splitting of `remaining` into consecutive blocks of
// size `block`, each block listed in increasing order.
template <typename Visit>
void for_each_block_split(std::vector<int>& order, std::vector<int>& remaining, int block, Visit&& visit) {
  if (remaining.empty()) {
    visit(order);
    return;
  }
  const int n = static_cast<int>(remaining.size());
  std::vector<int> pick(block);
  for (int i = 0; i < block; ++i) pick[i] = i;
  while (true) {
    std::vector<int> rest;
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
      if (p < pick.size() && pick[p] == i) {
        order.push_back(remaining[i]);
        ++p;
      } else {
        rest.push_back(remaining[i]);
      }
    }
    for_each_block_split(order, rest, block, visit);
    order.resize(order.size() - block);
    int i = block - 1;
    while (i >= 0 && pick[i] == n - block + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < block; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

Cyclotomic laplace_oracle(const PointConfig& config, const Labeling& lab) {
  const auto& params = config.params;
  const int q = params.q;
  const int N = params.N;
  if (N > 9) throw SizeError("laplace_oracle is limited to N <= 9");
  if (lab.order != q || lab.exponents.size() < static_cast<std::size_t>(N)) {
    throw InvalidParameter("laplace_oracle: labeling does not match the configuration");
  }
  std::vector<Cyclotomic> roots;
  for (int e = 0; e < q; ++e) roots.push_back(cyclo_root(q, e));

  Cyclotomic total(q);
  std::vector<int> order;
  std::vector<int> columns(N);
  for (int a = 0; a < N; ++a) columns[a] = a;
  for_each_block_split(order, columns, q - 1, [&](const std::vector<int>& perm) {
    Cyclotomic term(q, Rational(permutation_sign(perm)));
    for (int k = 0; k <= params.d; ++k) {
      std::vector<Cyclotomic> block;
      Rational coords(1);
      for (int i = 0; i < q - 1; ++i) {
        const int a = perm[k * (q - 1) + i];
        block.push_back(roots[lab.exponents[a]]);
        coords *= config.points[a][k];
      }
      if (sgn(coords) == 0) return;
      term *= vandermonde_product(block);
      term *= coords;
      if (term.is_zero()) return;
    }
    total += term;
  });
  return total;
}

CrossRatioResult cross_ratio_check(const Labeling& lab, int d, int trials, std::uint64_t seed) {
  const int q = lab.order;
  const int N = (q - 1) * (d + 1);
  if (q < 2 || d < 1 || lab.exponents.size() < static_cast<std::size_t>(N)) {
    throw InvalidParameter("cross_ratio_check: labeling too short");
  }
  std::vector<Cyclotomic> roots;
  for (int e = 0; e < q; ++e) roots.push_back(cyclo_root(q, e));
  auto block_product = [&](const std::vector<int>& perm) {
    Cyclotomic out(q, Rational(1));
    for (int k = 0; k <= d; ++k) {
      std::vector<Cyclotomic> block;
      for (int i = 0; i < q - 1; ++i) block.push_back(roots[lab.exponents[perm[k * (q - 1) + i]]]);
      out *= vandermonde_product(block);
    }
    return out;
  };

  std::vector<int> identity(N);
  for (int a = 0; a < N; ++a) identity[a] = a;
  const Cyclotomic reference = block_product(identity);
  CrossRatioResult result;
  if (reference.is_zero()) {
    result.skipped = trials;
    return result;
  }
  const Cyclotomic reference_inv = reference.inverse();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<int> perm = identity;
    for (int i = N - 1; i > 0; --i) std::swap(perm[i], perm[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    const Cyclotomic ratio = block_product(perm) * reference_inv;
    ++result.checked;
    if (!cyclo_is_real(ratio)) result.all_real = false;
  }
  return result;
}

}  // namespace tverberg
