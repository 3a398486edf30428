#include "tverberg/index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "tverberg/errors.hpp"

namespace tverberg {

namespace {

void check_labeling(const PointConfig& config, const Labeling& lab) {
  if (lab.order != config.params.q) throw InvalidParameter("labeling order does not match q");
  if (lab.exponents.size() != static_cast<std::size_t>(config.params.num_points())) {
    throw InvalidParameter("labeling size does not match the configuration");
  }
  for (int g : lab.exponents) {
    if (g < 0 || g >= lab.order) throw InvalidParameter("labeling exponent out of range");
  }
}

std::vector<Cyclotomic> roots_of_unity(int q) {
  std::vector<Cyclotomic> roots;
  roots.reserve(q);
  for (int e = 0; e < q; ++e) roots.push_back(cyclo_root(q, e));
  return roots;
}

std::vector<int> iota_columns(int n) {
  std::vector<int> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  return cols;
}

std::optional<OrderedPartition> partition_of(const Labeling& lab) {
  std::vector<IndexSet> parts(lab.order);
  for (std::size_t a = 0; a < lab.exponents.size(); ++a) parts[lab.exponents[a]].push_back(static_cast<int>(a));
  for (const auto& part : parts) {
    if (part.empty()) return std::nullopt;
  }
  return OrderedPartition(std::move(parts), static_cast<int>(lab.exponents.size()));
}

}  // namespace

Matrix<Cyclotomic> entry_matrix(const PointConfig& config, const Labeling& lab, const std::vector<int>& columns) {
  check_labeling(config, lab);
  const int q = config.params.q;
  const int dim = config.params.d + 1;
  const auto roots = roots_of_unity(q);
  Matrix<Cyclotomic> m(static_cast<std::size_t>(dim * (q - 1)), columns.size(), Cyclotomic(q));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const int a = columns[c];
    if (a < 0 || a >= config.params.num_points()) throw InvalidParameter("entry_matrix: column out of range");
    for (int k = 0; k < dim; ++k) {
      for (int l = 1; l < q; ++l) {
        m(static_cast<std::size_t>(k * (q - 1) + l - 1), c) =
            roots[(lab.exponents[a] * l) % q] * config.points[a][k];
      }
    }
  }
  return m;
}

Cyclotomic det_D(const PointConfig& config, const Labeling& lab) {
  return det_cyclotomic(entry_matrix(config, lab, iota_columns(config.params.N)), config.params.q);
}

Cyclotomic det_D_m(const PointConfig& config, const Labeling& lab, int m) {
  const int N = config.params.N;
  if (m < 0 || m > N) throw InvalidParameter("det_D_m: column index out of range");
  auto cols = iota_columns(N);
  if (m < N) cols[m] = N;
  return det_cyclotomic(entry_matrix(config, lab, cols), config.params.q);
}

Cyclotomic det_bordered(const PointConfig& config, const Labeling& lab) {
  const int n = config.params.num_points();
  const int q = config.params.q;
  const auto inner = entry_matrix(config, lab, iota_columns(n));
  Matrix<Cyclotomic> m(n, n, Cyclotomic(q));
  for (int c = 0; c < n; ++c) {
    m(0, c) = Cyclotomic(q, Rational(1));
    for (std::size_t r = 0; r < inner.rows(); ++r) m(r + 1, c) = inner(r, c);
  }
  return det_cyclotomic(m, q);
}

SignEvaluation cocycle_sign(const PointConfig& config, const Labeling& lab) {
  check_labeling(config, lab);
  const int q = config.params.q;
  const int N = config.params.N;
  const auto inner = entry_matrix(config, lab, iota_columns(N + 1));

  Matrix<Cyclotomic> small(N, N, Cyclotomic(q));
  Matrix<Cyclotomic> bordered(N + 1, N + 1, Cyclotomic(q));
  for (int c = 0; c <= N; ++c) {
    bordered(0, c) = Cyclotomic(q, Rational(1));
    for (int r = 0; r < N; ++r) {
      bordered(r + 1, c) = inner(r, c);
      if (c < N) small(r, c) = inner(r, c);
    }
  }

  SignEvaluation ev;
  ev.labeling = lab;
  ev.partition = partition_of(lab);
  ev.det_D = det_cyclotomic(small, q);
  ev.det_bordered = det_cyclotomic(bordered, q);
  ev.product = ev.det_bordered * cyclo_conj(ev.det_D);
  if (N % 2 == 1) ev.product = -ev.product;
  if (!cyclo_is_real(ev.product)) {
    throw InternalConsistencyError("cocycle product is not real: " + ev.product.to_string());
  }
  ev.sign = cyclo_real_sign(ev.product);
  return ev;
}

SignEvaluation cocycle_sign(const PointConfig& config, const OrderedPartition& p) {
  if (p.num_points() != config.params.num_points()) {
    throw InvalidParameter("partition does not match the configuration size");
  }
  return cocycle_sign(config, labeling_of(p, config.params.q));
}

namespace {

struct Found {
  std::int64_t ordinal;
  TverbergEntry entry;
};

struct WorkerResult {
  std::int64_t candidates = 0;
  std::vector<Found> found;
};

WorkerResult scan(const PointConfig& config, const VerifyOptions& options, int worker, int jobs) {
  const auto& params = config.params;
  std::optional<int> max_part;
  if (options.prune) max_part = params.d + 1;
  PartitionStream stream(params.num_points(), params.q, max_part);
  WorkerResult out;
  for (std::int64_t ordinal = 0; stream.next(); ++ordinal) {
    if (ordinal % jobs != worker) continue;
    ++out.candidates;
    const auto partition = stream.partition();
    auto witness = is_tverberg(config, partition);
    if (!witness) continue;
    const int sign = cocycle_sign(config, Labeling{params.q, stream.growth_string()}).sign;
    out.found.push_back({ordinal, TverbergEntry{partition, std::move(*witness), sign}});
  }
  return out;
}

}  // namespace

IndexReport verify_config(const PointConfig& config, const VerifyOptions& options) {
  validate_config(config);
  const int jobs = std::max(1, options.jobs);
  std::vector<WorkerResult> results(jobs);
  if (jobs == 1) {
    results[0] = scan(config, options, 0, 1);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (int w = 0; w < jobs; ++w) {
      threads.emplace_back([&, w] {
        try {
          results[w] = scan(config, options, w, jobs);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<Found> found;
  IndexReport report;
  for (auto& r : results) {
    report.candidates += r.candidates;
    for (auto& f : r.found) found.push_back(std::move(f));
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.ordinal < b.ordinal; });

  const auto& params = config.params;
  report.config = config;
  report.bound = params.bound;
  for (auto& f : found) {
    auto& e = f.entry;
    const std::string name = format_partition(e.partition);
    if (e.sign == 0) {
      report.degenerate = true;
      report.failures.push_back("determinant vanished at partition " + name);
    }
    for (const auto& part : e.partition.parts()) {
      if (static_cast<int>(part.size()) > params.d + 1) {
        report.degenerate = true;
        report.failures.push_back("part of size " + std::to_string(part.size()) + " > d+1 at partition " + name);
        break;
      }
    }
    for (const auto& w : e.witness.weights) {
      if (sgn(w.value) == 0) {
        report.degenerate = true;
        report.failures.push_back("zero weight on point " + std::to_string(w.variable.point + 1) +
                                  " at partition " + name);
        break;
      }
    }
    ++report.count;
    report.signed_sum += e.sign;
    report.entries.push_back(std::move(e));
  }
  report.theorem1_pass = BigInt(report.count) >= report.bound;
  report.theorem2_pass = BigInt(report.signed_sum) == report.bound;
  return report;
}

std::vector<int> ordering_signs(const PointConfig& config, const UnorderedPartition& p) {
  const int q = config.params.q;
  const auto base = labeling_of(canonical_order(p), q);
  std::vector<int> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> signs;
  do {
    Labeling lab{q, base.exponents};
    for (auto& g : lab.exponents) g = perm[g];
    signs.push_back(cocycle_sign(config, lab).sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return signs;
}

int jacobian_sign(const PointConfig& config, const OrderedPartition& p, const Witness& witness) {
  using Real = long double;
  const auto& params = config.params;
  const int q = params.q;
  const int N = params.N;
  const auto lab = labeling_of(p, q);
  // Normalize so the last point carries the root 1.
  const auto g = lab.rotated(-lab.exponents[N]).exponents;
  std::vector<Real> t(N + 1, 0), theta(N + 1, 0);
  for (const auto& w : witness.weights) t[w.variable.point] = static_cast<Real>(w.value.get_d()) / q;
  const Real pi = std::acos(Real(-1));
  for (int a = 0; a <= N; ++a) theta[a] = 2 * pi * g[a] / q;
  auto s = [&](int k, int a) { return static_cast<Real>(config.points[a][k].get_d()); };

  const int size = 2 * N;
  std::vector<Real> j(static_cast<std::size_t>(size) * size, 0);
  auto at = [&](int r, int c) -> Real& { return j[static_cast<std::size_t>(r) * size + c]; };
  int row = 0;
  for (int k = 0; k <= params.d; ++k) {
    for (int l = 1; l < q; ++l, ++row) {
      for (int a = 0; a < N; ++a) {
        const Real c = std::cos(l * theta[a]);
        const Real sn = std::sin(l * theta[a]);
        at(2 * row, 2 * a) = c * s(k, a) - s(k, N);
        at(2 * row, 2 * a + 1) = -l * t[a] * sn * s(k, a);
        at(2 * row + 1, 2 * a) = sn * s(k, a);
        at(2 * row + 1, 2 * a + 1) = l * t[a] * c * s(k, a);
      }
    }
  }
  // Partial-pivot LU; only the sign of the product of pivots matters.
  int sign = 1;
  for (int c = 0; c < size; ++c) {
    int pivot = c;
    for (int r = c + 1; r < size; ++r) {
      if (std::fabs(at(r, c)) > std::fabs(at(pivot, c))) pivot = r;
    }
    if (at(pivot, c) == 0) return 0;
    if (pivot != c) {
      for (int x = 0; x < size; ++x) std::swap(at(c, x), at(pivot, x));
      sign = -sign;
    }
    if (at(c, c) < 0) sign = -sign;
    for (int r = c + 1; r < size; ++r) {
      const Real f = at(r, c) / at(c, c);
      for (int x = c; x < size; ++x) at(r, x) -= f * at(c, x);
    }
  }
  return sign;
}

}  // namespace tverberg
