#include "tverberg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "tverberg/config_io.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/geometry.hpp"
#include "tverberg/index.hpp"
#include "tverberg/oracles.hpp"
#include "tverberg/report_io.hpp"

namespace tverberg {

namespace {

using nlohmann::json;

constexpr long kCandidateGuardrail = 10'000'000;
constexpr int kMaxListedEntries = 40;

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file << text;
  if (!file.flush()) throw std::runtime_error("failed writing " + path.string());
}

std::string signed_int(int sign) { return sign > 0 ? "+1" : sign < 0 ? "-1" : "0"; }

std::string format_point(const Point& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ", ";
    out += format_rational(p[k]);
  }
  return out + ")";
}

std::string format_coeffs(const Cyclotomic& x) {
  std::string out = "[";
  for (std::size_t m = 0; m < x.coeffs().size(); ++m) {
    if (m) out += ", ";
    out += format_rational(x.coeffs()[m]);
  }
  return out + "]";
}

void print_verdict(std::ostream& out, const GenericityVerdict& verdict) {
  out << "generic: " << (verdict.generic ? "yes" : "no") << "\n";
  for (const auto& f : verdict.failures) out << "  " << f << "\n";
}

// Stamps wall-clock progress on stderr when --verbose is given.
class Timer {
 public:
  Timer(bool enabled, std::ostream& err) : enabled_(enabled), err_(err), start_(std::chrono::steady_clock::now()) {
    if (!enabled_) return;
    const std::time_t now = std::time(nullptr);
    err_ << "started " << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ") << "\n";
  }
  void report(const std::string& what) const {
    if (!enabled_) return;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    err_ << what << " after " << std::fixed << std::setprecision(3) << elapsed.count() << " s\n";
  }

 private:
  bool enabled_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_;
};

void enforce_guardrail(const Parameters& params, bool force) {
  const BigInt candidates = stirling_count(params.num_points(), params.q);
  if (!force && candidates > kCandidateGuardrail) {
    throw SizeError("S(" + std::to_string(params.num_points()) + ", " + std::to_string(params.q) +
                    ") = " + candidates.get_str() + " candidate partitions exceeds " +
                    std::to_string(kCandidateGuardrail) + "; pass --force to run anyway");
  }
}

// ---- gen -------------------------------------------------------------------

struct GenOptions {
  int q = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::string kind = "random";
  std::string eps = "0";
  std::uint64_t variant = 0;
  long resolution = kDefaultResolution;
  std::string out;
  bool allow_large = false;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const auto params = make_params(o.q, o.d, o.allow_large);
  const PointConfig config = o.kind == "random" ? random_config(params, o.seed, o.resolution)
                                                : sierksma_config(params, parse_rational(o.eps), o.variant);
  if (o.out.empty()) {
    out << config_to_json(config).dump(2) << "\n";
  } else {
    save_config(config, o.out);
    out << "wrote " << o.out << ": " << config.label << "\n";
  }
  print_verdict(out, screen_genericity(config));
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyCliOptions {
  std::string config;
  bool prune = false;
  int jobs = 1;
  std::string out;
  bool force = false;
  bool allow_large = false;
};

void print_report(std::ostream& out, const IndexReport& r) {
  const auto& p = r.config.params;
  out << "config: " << r.config.label << "\n"
      << "q=" << p.q << " d=" << p.d << " N=" << p.N << " points=" << p.num_points() << "\n"
      << "candidates: " << r.candidates << "\n"
      << "tverberg partitions: " << r.count << "\n"
      << "signed sum: " << r.signed_sum << "\n"
      << "bound ((q-1)!)^d: " << r.bound.get_str() << "\n"
      << "theorem 1 (count >= bound): " << (r.theorem1_pass ? "pass" : "FAIL") << "\n"
      << "theorem 2 (signed sum == bound): " << (r.theorem2_pass ? "pass" : "FAIL") << "\n"
      << "degenerate: " << (r.degenerate ? "yes" : "no") << "\n";
  for (const auto& f : r.failures) out << "  " << f << "\n";
  int listed = 0;
  for (const auto& e : r.entries) {
    if (listed++ == kMaxListedEntries) {
      out << "  ... " << (r.entries.size() - kMaxListedEntries) << " more\n";
      break;
    }
    out << "  " << format_partition(e.partition) << "  sign " << signed_int(e.sign) << "  point "
        << format_point(e.witness.point) << "\n";
  }
}

int verify_exit_code(const IndexReport& r) {
  if (r.degenerate) return kExitDegenerate;
  return r.theorem1_pass && r.theorem2_pass ? kExitOk : kExitFailure;
}

int cmd_verify(const VerifyCliOptions& o, const Timer& timer, std::ostream& out) {
  const auto config = load_config(o.config, o.allow_large);
  enforce_guardrail(config.params, o.force);
  const auto report = verify_config(config, {o.prune, o.jobs});
  timer.report("verified");
  if (!o.out.empty()) write_text(o.out, report_to_json(report).dump(2) + "\n");
  print_report(out, report);
  return verify_exit_code(report);
}

// ---- sign ------------------------------------------------------------------

struct SignOptions {
  std::string config;
  std::string partition;
  bool jacobian = false;
  bool allow_large = false;
};

int cmd_sign(const SignOptions& o, std::ostream& out) {
  const auto config = load_config(o.config, o.allow_large);
  const auto partition = parse_partition(o.partition, config.params.num_points());
  if (partition.num_parts() != config.params.q) {
    throw InvalidParameter("partition has " + std::to_string(partition.num_parts()) + " parts, expected q = " +
                           std::to_string(config.params.q));
  }
  const auto ev = cocycle_sign(config, partition);
  const auto witness = is_tverberg(config, partition);
  out << "partition: " << format_partition(partition) << "\n";
  out << "labeling:";
  for (int g : ev.labeling.exponents) out << " " << g;
  out << "\n";
  out << "tverberg: " << (witness ? "yes" : "no");
  if (witness) out << ", common point " << format_point(witness->point);
  out << "\n";
  out << "det_D: " << format_coeffs(ev.det_D) << "\n";
  out << "det_bordered: " << format_coeffs(ev.det_bordered) << "\n";
  out << "product: " << format_coeffs(ev.product) << "\n";
  out << "sign: " << signed_int(ev.sign) << "\n";
  if (o.jacobian) {
    if (witness) {
      out << "jacobian sign (long double diagnostic): " << signed_int(jacobian_sign(config, partition, *witness))
          << "\n";
    } else {
      out << "jacobian sign: n/a (not a Tverberg partition)\n";
    }
  }
  return kExitOk;
}

// ---- experiment --------------------------------------------------------------

struct ExperimentCliOptions {
  ExperimentSpec spec;
  std::string kind = "random";
  std::string eps = "1/65536";
  std::string out;
  std::string summary;
  std::string summarize;
  bool keep_going = false;
  bool force = false;
};

void print_summary(std::ostream& out, const json& s) {
  out << "trials: " << s.at("trials").get<long>() << "\n"
      << "resamples: " << s.at("resamples").get<long>() << "\n";
  if (s.at("trials").get<long>() > 0) {
    out << "count min/max/mean: " << s.at("count_min").get<long>() << " / " << s.at("count_max").get<long>()
        << " / " << s.at("count_mean").get<std::string>() << "\n";
    out << "count histogram:";
    for (const auto& [count, n] : s.at("count_histogram").items()) out << " " << count << ":" << n.get<long>();
    out << "\n";
  }
  out << "theorem 1 failures: " << s.at("theorem1_failures").get<long>() << "\n"
      << "theorem 2 failures: " << s.at("theorem2_failures").get<long>() << "\n"
      << "degenerate trials: " << s.at("degenerate_trials").get<long>() << "\n";
}

int finish_experiment(const ExperimentCliOptions& o, const std::vector<json>& records, std::ostream& out) {
  const json summary = summarize_trials(records);
  if (!o.summary.empty()) write_text(o.summary, summary.dump(2) + "\n");
  print_summary(out, summary);
  if (summary.at("theorem2_failures").get<long>() > 0 || summary.at("theorem1_failures").get<long>() > 0) {
    return kExitFailure;
  }
  return summary.at("degenerate_trials").get<long>() > 0 ? kExitDegenerate : kExitOk;
}

ExperimentKind parse_kind(const std::string& kind) {
  if (kind == "random") return ExperimentKind::Random;
  if (kind == "sierksma-exact") return ExperimentKind::SierksmaExact;
  if (kind == "sierksma-perturbed") return ExperimentKind::SierksmaPerturbed;
  throw InvalidParameter("unknown experiment kind " + kind);
}

std::vector<json> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<json> records;
  std::string line;
  for (long number = 1; std::getline(in, line); ++number) {
    if (line.empty()) continue;
    try {
      records.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw SchemaError(path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return records;
}

int cmd_experiment(ExperimentCliOptions o, const Timer& timer, std::ostream& out) {
  if (!o.summarize.empty()) return finish_experiment(o, read_records(o.summarize), out);
  if (o.out.empty()) throw InvalidParameter("--out is required unless --summarize is given");
  o.spec.kind = parse_kind(o.kind);
  o.spec.eps = parse_rational(o.eps);
  if (o.spec.prune && o.spec.kind == ExperimentKind::SierksmaExact) {
    throw InvalidParameter("--prune is only valid for configurations in general position");
  }
  enforce_guardrail(make_params(o.spec.q, o.spec.d, o.spec.allow_large), o.force);

  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + o.out + " for writing");
  std::vector<json> records;
  bool aborted = false;
  run_experiment(o.spec, [&](const json& record) {
    file << record.dump() << "\n";
    records.push_back(record);
    timer.report("trial " + std::to_string(record.at("trial").get<int>()));
    const auto& report = record.at("report");
    if (!report.at("degenerate").get<bool>() && !report.at("theorem2_pass").get<bool>() && !o.keep_going) {
      aborted = true;
      return false;
    }
    return true;
  });
  if (!file.flush()) throw std::runtime_error("failed writing " + o.out);
  if (aborted) {
    out << "ABORT: trial " << records.back().at("trial").get<int>()
        << " is non-degenerate and its signed sum differs from the bound\n";
  }
  return finish_experiment(o, records, out);
}

// ---- oracle ------------------------------------------------------------------

struct OracleOptions {
  std::string which;
  std::optional<int> q;
  std::optional<int> d;
  int qmax = 6;
  int dmax = 4;
  int trials = 200;
  std::uint64_t seed = 0;
};

struct Tally {
  long checked = 0;
  long failed = 0;
};

void tally_line(std::ostream& out, const std::string& what, const Tally& t) {
  out << what << ": " << t.checked << " checked, " << t.failed << " failed\n";
}

std::vector<int> q_range(const OracleOptions& o, int lo) {
  std::vector<int> qs;
  if (o.q) {
    qs.push_back(*o.q);
  } else {
    for (int q = lo; q <= o.qmax; ++q) qs.push_back(q);
  }
  return qs;
}

Tally oracle_euler(const OracleOptions& o, std::ostream& out) {
  Tally total;
  for (int q : q_range(o, 2)) {
    for (int d = 1; d <= o.dmax; ++d) {
      ++total.checked;
      BigInt closed = 1;
      for (int i = 2; i < q; ++i) closed *= i;
      BigInt expected = 1;
      for (int i = 0; i <= d; ++i) expected *= closed;
      try {
        const BigInt value = euler_number(q, d);
        const bool ok = value == expected;
        total.failed += !ok;
        out << "q=" << q << " d=" << d << " euler=" << value.get_str() << (ok ? "" : " MISMATCH") << "\n";
      } catch (const InternalConsistencyError& e) {
        ++total.failed;
        out << "q=" << q << " d=" << d << " " << e.what() << "\n";
      }
    }
  }
  tally_line(out, "euler", total);
  return total;
}

Tally oracle_vandermonde(const OracleOptions& o, std::ostream& out) {
  Tally total;
  for (int q : q_range(o, 2)) {
    std::mt19937_64 rng(trial_seed(o.seed, q, 0));
    Tally t;
    for (int trial = 0; trial < o.trials; ++trial) {
      std::vector<int> exponents(q - 1);
      for (auto& e : exponents) e = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(q)));
      ++t.checked;
      try {
        if (!vandermonde_conjugation_holds(q, exponents)) ++t.failed;
      } catch (const InternalConsistencyError&) {
        ++t.failed;
      }
    }
    tally_line(out, "vandermonde q=" + std::to_string(q), t);
    total.checked += t.checked;
    total.failed += t.failed;
  }
  return total;
}

Tally oracle_laplace(const OracleOptions& o, std::ostream& out) {
  const int q = o.q.value_or(3);
  const int d = o.d.value_or(1);
  const auto params = make_params(q, d);
  if (params.N > 9) throw SizeError("the Laplace oracle is limited to N <= 9");
  Tally t;
  for (int trial = 0; trial < o.trials; ++trial) {
    const auto config = random_config(params, trial_seed(o.seed, trial, 0));
    Labeling lab{q, std::vector<int>(params.num_points(), 0)};
    while (true) {
      ++t.checked;
      if (!(laplace_oracle(config, lab) == det_D(config, lab))) ++t.failed;
      std::size_t i = 0;
      while (i < lab.exponents.size() && ++lab.exponents[i] == q) lab.exponents[i++] = 0;
      if (i == lab.exponents.size()) break;
    }
  }
  tally_line(out, "laplace q=" + std::to_string(q) + " d=" + std::to_string(d) + " (" +
                      std::to_string(o.trials) + " configs, all labelings)",
             t);
  return t;
}

Tally oracle_crossratio(const OracleOptions& o, std::ostream& out) {
  const int d = o.d.value_or(1);
  Tally total;
  std::vector<int> qs = o.q ? std::vector<int>{*o.q} : std::vector<int>{3, 4, 5};
  for (int q : qs) {
    std::mt19937_64 rng(trial_seed(o.seed, q, 1));
    Tally t;
    long skipped = 0;
    for (int trial = 0; trial < o.trials; ++trial) {
      Labeling lab{q, {}};
      for (int k = 0; k <= d; ++k) {
        std::vector<int> values(q);
        for (int e = 0; e < q; ++e) values[e] = e;
        for (int i = q - 1; i > 0; --i) std::swap(values[i], values[uniform_below(rng, i + 1)]);
        lab.exponents.insert(lab.exponents.end(), values.begin(), values.begin() + (q - 1));
      }
      const auto result = cross_ratio_check(lab, d, 10, trial_seed(o.seed, trial, q));
      t.checked += result.checked;
      skipped += result.skipped;
      if (!result.all_real) ++t.failed;
    }
    tally_line(out, "crossratio q=" + std::to_string(q) + " d=" + std::to_string(d) + " (" + std::to_string(skipped) +
                        " skipped)",
               t);
    total.checked += t.checked;
    total.failed += t.failed;
  }
  return total;
}

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  Tally t;
  if (o.which == "euler") t = oracle_euler(o, out);
  if (o.which == "vandermonde") t = oracle_vandermonde(o, out);
  if (o.which == "laplace") t = oracle_laplace(o, out);
  if (o.which == "crossratio") t = oracle_crossratio(o, out);
  out << (t.failed == 0 ? "all identities hold" : "IDENTITY FAILURES: " + std::to_string(t.failed)) << "\n";
  return t.failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Random:
      return "random";
    case ExperimentKind::SierksmaExact:
      return "sierksma-exact";
    case ExperimentKind::SierksmaPerturbed:
      return "sierksma-perturbed";
  }
  return "unknown";
}

std::uint64_t trial_seed(std::uint64_t base, int trial, int attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(attempt)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

void run_experiment(const ExperimentSpec& spec, const std::function<bool(const json&)>& on_trial) {
  if (spec.trials < 1) throw InvalidParameter("trials must be >= 1");
  if (spec.jobs < 1) throw InvalidParameter("jobs must be >= 1");
  if (spec.max_attempts < 1) throw InvalidParameter("max_attempts must be >= 1");
  const auto params = make_params(spec.q, spec.d, spec.allow_large);
  for (int trial = 0; trial < spec.trials; ++trial) {
    json record;
    int resamples = 0;
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
      const std::uint64_t seed = trial_seed(spec.seed, trial, attempt);
      PointConfig config;
      switch (spec.kind) {
        case ExperimentKind::Random:
          config = random_config(params, seed, spec.resolution);
          break;
        case ExperimentKind::SierksmaExact:
          config = sierksma_config(params, 0);
          break;
        case ExperimentKind::SierksmaPerturbed:
          config = sierksma_config(params, spec.eps, seed);
          break;
      }
      const bool screened = spec.kind != ExperimentKind::SierksmaExact;
      if (screened && !screen_genericity(config).generic) {
        ++resamples;
        continue;
      }
      const auto report = verify_config(config, {spec.prune, spec.jobs});
      record = json{{"trial", trial},
                    {"attempts", attempt + 1},
                    {"resamples", resamples},
                    {"kind", to_string(spec.kind)},
                    {"seed", spec.kind == ExperimentKind::Random ? json(seed) : json(nullptr)},
                    {"variant", spec.kind == ExperimentKind::SierksmaPerturbed ? json(seed) : json(nullptr)},
                    {"report", report_to_json(report)}};
      // The exact configuration is fixed, so there is nothing to resample.
      if (!report.degenerate || !screened) break;
      ++resamples;
    }
    if (record.is_null()) {
      throw NonGenericError("trial " + std::to_string(trial) + ": no generic configuration in " +
                            std::to_string(spec.max_attempts) + " attempts");
    }
    record["resamples"] = resamples;
    if (!on_trial(record)) return;
  }
}

json summarize_trials(const std::vector<json>& records) {
  long resamples = 0, t1_failures = 0, t2_failures = 0, degenerate = 0;
  std::optional<long> lo, hi;
  Rational sum(0);
  std::map<long, long> histogram;
  for (const auto& r : records) {
    resamples += r.at("resamples").get<long>();
    const auto& report = r.at("report");
    const long count = report.at("count").get<long>();
    sum += count;
    lo = std::min(lo.value_or(count), count);
    hi = std::max(hi.value_or(count), count);
    ++histogram[count];
    if (report.at("degenerate").get<bool>()) {
      ++degenerate;
      continue;
    }
    t1_failures += !report.at("theorem1_pass").get<bool>();
    t2_failures += !report.at("theorem2_pass").get<bool>();
  }
  json hist = json::object();
  for (const auto& [count, n] : histogram) hist[std::to_string(count)] = n;
  json out{{"trials", records.size()},          {"resamples", resamples},
           {"theorem1_failures", t1_failures},  {"theorem2_failures", t2_failures},
           {"degenerate_trials", degenerate},   {"count_histogram", hist}};
  if (!records.empty()) {
    const Rational mean = sum / static_cast<long>(records.size());
    std::ostringstream mean_text;
    mean_text << std::fixed << std::setprecision(4) << mean.get_d();
    out["count_min"] = *lo;
    out["count_max"] = *hi;
    out["count_mean"] = mean_text.str();
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Tverberg partition counts and their signed index sum", "tverberg"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "Report timestamps and elapsed time on stderr");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a point configuration as JSON");
  gen_cmd->add_option("--q", gen.q, "Number of parts")->required()->check(CLI::Range(2, kMaxCyclotomicOrder));
  gen_cmd->add_option("--d", gen.d, "Affine dimension")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--kind", gen.kind, "random or sierksma")
      ->check(CLI::IsMember({"random", "sierksma"}))
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed for random configurations")->capture_default_str();
  gen_cmd->add_option("--eps", gen.eps, "Perturbation size for sierksma, as num/den")->capture_default_str();
  gen_cmd->add_option("--variant", gen.variant, "Perturbation variant for sierksma")->capture_default_str();
  gen_cmd->add_option("--resolution", gen.resolution, "Denominator of random coordinates (>= 1024)")
      ->check(CLI::Range(1L << 10, 1L << 40))
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (stdout if omitted)");
  gen_cmd->add_flag("--allow-large", gen.allow_large, "Permit more than 24 points");

  VerifyCliOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Enumerate Tverberg partitions and sum their signs");
  verify_cmd->add_option("--config", verify.config, "Config JSON")->required();
  verify_cmd->add_flag("--prune", verify.prune, "Skip partitions with a part larger than d+1");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::Range(1, 1024))->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "Write the report JSON here");
  verify_cmd->add_flag("--force", verify.force, "Run even above the candidate guardrail");
  verify_cmd->add_flag("--allow-large", verify.allow_large, "Permit more than 24 points");

  SignOptions sign;
  auto* sign_cmd = app.add_subcommand("sign", "Evaluate the sign of one ordered partition");
  sign_cmd->add_option("--config", sign.config, "Config JSON")->required();
  sign_cmd->add_option("--partition", sign.partition, "Parts, e.g. 1,3,5|2,4,6|7")->required();
  sign_cmd->add_flag("--jacobian", sign.jacobian, "Also print the numeric jacobian diagnostic");
  sign_cmd->add_flag("--allow-large", sign.allow_large, "Permit more than 24 points");

  ExperimentCliOptions exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Verify many configurations, one JSON line per trial");
  exp_cmd->add_option("--q", exp.spec.q, "Number of parts")
      ->check(CLI::Range(2, kMaxCyclotomicOrder))
      ->capture_default_str();
  exp_cmd->add_option("--d", exp.spec.d, "Affine dimension")->check(CLI::PositiveNumber)->capture_default_str();
  exp_cmd->add_option("--trials", exp.spec.trials, "Number of trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  exp_cmd->add_option("--seed", exp.spec.seed, "Base seed")->capture_default_str();
  exp_cmd->add_option("--kind", exp.kind, "random, sierksma-exact or sierksma-perturbed")
      ->check(CLI::IsMember({"random", "sierksma-exact", "sierksma-perturbed"}))
      ->capture_default_str();
  exp_cmd->add_option("--eps", exp.eps, "Perturbation size, as num/den")->capture_default_str();
  exp_cmd->add_option("--resolution", exp.spec.resolution, "Denominator of random coordinates")
      ->check(CLI::Range(1L << 10, 1L << 40))
      ->capture_default_str();
  exp_cmd->add_flag("--prune", exp.spec.prune, "Skip partitions with a part larger than d+1");
  exp_cmd->add_option("--jobs", exp.spec.jobs, "Worker threads per trial")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  exp_cmd->add_option("--max-attempts", exp.spec.max_attempts, "Configurations tried per trial")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  exp_cmd->add_option("--out", exp.out, "JSON-lines output file");
  exp_cmd->add_option("--summary", exp.summary, "Write the summary JSON here");
  exp_cmd->add_option("--summarize", exp.summarize, "Recompute the summary of an existing JSON-lines file");
  exp_cmd->add_flag("--keep-going", exp.keep_going, "Finish all trials even after a signed-sum failure");
  exp_cmd->add_flag("--force", exp.force, "Run even above the candidate guardrail");
  exp_cmd->add_flag("--allow-large", exp.spec.allow_large, "Permit more than 24 points");

  OracleOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run an exact identity suite");
  oracle_cmd->add_option("--which", oracle.which, "vandermonde, laplace, crossratio or euler")
      ->required()
      ->check(CLI::IsMember({"vandermonde", "laplace", "crossratio", "euler"}));
  oracle_cmd->add_option("--q", oracle.q, "Number of parts (default: a range)")
      ->check(CLI::Range(2, kMaxCyclotomicOrder));
  oracle_cmd->add_option("--d", oracle.d, "Affine dimension")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--qmax", oracle.qmax, "Largest q when --q is omitted")
      ->check(CLI::Range(2, kMaxCyclotomicOrder))
      ->capture_default_str();
  oracle_cmd->add_option("--dmax", oracle.dmax, "Largest d for euler")->check(CLI::PositiveNumber)->capture_default_str();
  oracle_cmd->add_option("--trials", oracle.trials, "Random instances")->check(CLI::PositiveNumber)->capture_default_str();
  oracle_cmd->add_option("--seed", oracle.seed, "Base seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Timer timer(verbose, err);
  CLI::App* active = app.get_subcommands().front();
  try {
    int code = kExitOk;
    if (active == gen_cmd) code = cmd_gen(gen, out);
    if (active == verify_cmd) code = cmd_verify(verify, timer, out);
    if (active == sign_cmd) code = cmd_sign(sign, out);
    if (active == exp_cmd) code = cmd_experiment(exp, timer, out);
    if (active == oracle_cmd) code = cmd_oracle(oracle, out);
    timer.report("done");
    return code;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n" << active->help("", CLI::AppFormatMode::Normal);
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NonGenericError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace tverberg
