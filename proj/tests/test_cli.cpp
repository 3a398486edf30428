#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tverberg/cli.hpp"
#include "tverberg/config_io.hpp"

using namespace tverberg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<nlohmann::json> read_lines(const fs::path& path) {
  std::vector<nlohmann::json> lines;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) lines.push_back(nlohmann::json::parse(line));
  return lines;
}

// Fresh scratch directory per test case.
struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) : dir(fs::temp_directory_path() / ("tverberg_cli_" + name)) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& file) const { return (dir / file).string(); }
};

}  // namespace

TEST_CASE("gen writes the exact Sierksma configuration") {
  Scratch tmp("gen_s0");
  const auto r = run({"gen", "--q", "3", "--d", "2", "--kind", "sierksma", "--eps", "0", "--out", tmp / "s0.json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("generic: no") != std::string::npos);
  const auto config = load_config(tmp / "s0.json");
  CHECK(config == sierksma_config(make_params(3, 2), 0));
  const auto doc = nlohmann::json::parse(slurp(tmp / "s0.json"));
  CHECK(doc.at("points")[0] == nlohmann::json({"1/1", "0/1", "0/1"}));
  CHECK(doc.at("points")[6] == nlohmann::json({"1/3", "1/3", "1/3"}));
}

TEST_CASE("gen is deterministic and validates flags") {
  Scratch tmp("gen_random");
  CHECK(run({"gen", "--q", "3", "--d", "2", "--kind", "random", "--seed", "7", "--out", tmp / "a.json"}).code == 0);
  CHECK(run({"gen", "--q", "3", "--d", "2", "--kind", "random", "--seed", "7", "--out", tmp / "b.json"}).code == 0);
  CHECK(slurp(tmp / "a.json") == slurp(tmp / "b.json"));

  const auto bad_q = run({"gen", "--q", "1", "--d", "2"});
  CHECK(bad_q.code == kExitUsage);
  CHECK(bad_q.err.find("--q") != std::string::npos);
  CHECK(run({"gen", "--q", "3"}).code == kExitUsage);
  CHECK(run({"gen", "--q", "3", "--d", "2", "--kind", "spiral"}).code == kExitUsage);
  CHECK(run({"gen", "--q", "3", "--d", "2", "--kind", "sierksma", "--eps", "-1/2"}).code == kExitUsage);
  CHECK(run({"gen", "--q", "3", "--d", "2", "--kind", "sierksma", "--eps", "x"}).code == kExitUsage);
  CHECK(run({"gen", "--q", "6", "--d", "4"}).code == kExitUsage);
  CHECK(run({"gen", "--q", "3", "--d", "2", "--out", tmp / "missing/dir/c.json"}).code == kExitIo);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("verify") {
  Scratch tmp("verify");
  run({"gen", "--q", "3", "--d", "2", "--kind", "sierksma", "--out", tmp / "s0.json"});
  const auto s0 = run({"verify", "--config", tmp / "s0.json", "--out", tmp / "r1.json"});
  CHECK(s0.code == kExitOk);
  CHECK(s0.out.find("tverberg partitions: 4\n") != std::string::npos);
  CHECK(s0.out.find("signed sum: 4\n") != std::string::npos);
  CHECK(s0.err.empty());
  const auto report = nlohmann::json::parse(slurp(tmp / "r1.json"));
  CHECK(report.at("count") == 4);
  CHECK(report.at("signed_sum") == 4);
  CHECK(report.at("bound") == 4);
  CHECK(report.at("entries")[0].at("partition") == "1,3,5|2,4,6|7");
  CHECK(report.at("entries")[0].at("witness_point") == nlohmann::json({"1/3", "1/3", "1/3"}));

  CHECK(run({"verify", "--config", tmp / "s0.json", "--jobs", "8", "--out", tmp / "r8.json"}).code == kExitOk);
  CHECK(slurp(tmp / "r1.json") == slurp(tmp / "r8.json"));

  run({"gen", "--q", "3", "--d", "1", "--seed", "11", "--out", tmp / "line.json"});
  const auto line = run({"verify", "--config", tmp / "line.json"});
  CHECK(line.code == kExitOk);
  CHECK(line.out.find("signed sum: 2\n") != std::string::npos);
}

TEST_CASE("verify error paths") {
  Scratch tmp("verify_errors");
  CHECK(run({"verify", "--config", tmp / "nope.json"}).code == kExitIo);
  std::ofstream(tmp / "garbage.json") << "[1, 2";
  CHECK(run({"verify", "--config", tmp / "garbage.json"}).code == kExitIo);

  auto doc = config_to_json(random_config(make_params(3, 2), 1));
  doc["points"].erase(0);
  std::ofstream(tmp / "short.json") << doc.dump();
  const auto short_run = run({"verify", "--config", tmp / "short.json"});
  CHECK(short_run.code == kExitIo);
  CHECK(short_run.err.find("expected 7 points") != std::string::npos);

  // Collinear points on the line with a repeated point: zero weights in witnesses.
  std::ofstream(tmp / "degenerate.json")
      << R"({"q": 2, "d": 1, "label": "repeat", "seed": null, "points": [["0/1", "1/1"], ["1/1", "0/1"], ["1/1", "0/1"]]})";
  CHECK(run({"verify", "--config", tmp / "degenerate.json"}).code == kExitDegenerate);

  run({"gen", "--q", "5", "--d", "4", "--out", tmp / "big.json"});
  const auto big = run({"verify", "--config", tmp / "big.json"});
  CHECK(big.code == kExitUsage);
  CHECK(big.err.find("--force") != std::string::npos);
}

TEST_CASE("sign") {
  Scratch tmp("sign");
  run({"gen", "--q", "3", "--d", "2", "--kind", "sierksma", "--out", tmp / "s0.json"});
  const auto yes = run({"sign", "--config", tmp / "s0.json", "--partition", "1,3,5|2,4,6|7", "--jacobian"});
  CHECK(yes.code == kExitOk);
  CHECK(yes.out.find("tverberg: yes") != std::string::npos);
  CHECK(yes.out.find("sign: +1\n") != std::string::npos);
  CHECK(yes.out.find("det_D: [3/1, 6/1, 0/1]") != std::string::npos);
  CHECK(yes.out.find("jacobian sign (long double diagnostic): +1") != std::string::npos);

  const auto no = run({"sign", "--config", tmp / "s0.json", "--partition", "1,2,7|3,4|5,6"});
  CHECK(no.code == kExitOk);
  CHECK(no.out.find("tverberg: no") != std::string::npos);
  CHECK(no.out.find("sign: ") != std::string::npos);

  const auto overlap = run({"sign", "--config", tmp / "s0.json", "--partition", "1,2|2,3|4,5,6,7"});
  CHECK(overlap.code == kExitUsage);
  CHECK(overlap.err.find("position 4") != std::string::npos);
  CHECK(run({"sign", "--config", tmp / "s0.json", "--partition", "1,2,3|4,5,6,7"}).code == kExitUsage);
  CHECK(run({"sign", "--config", tmp / "s0.json", "--partition", "1,2|3,4|5,6,8"}).code == kExitUsage);
}

TEST_CASE("experiment: q=2 trials are Radon partitions, and reruns are identical") {
  Scratch tmp("experiment_radon");
  const auto first = run({"experiment", "--q", "2", "--d", "3", "--trials", "100", "--seed", "2", "--out",
                          tmp / "a.jsonl", "--summary", tmp / "a.summary.json"});
  CHECK(first.code == kExitOk);
  const auto lines = read_lines(tmp / "a.jsonl");
  REQUIRE(lines.size() == 100);
  for (std::size_t t = 0; t < lines.size(); ++t) {
    CHECK(lines[t].at("trial") == t);
    CHECK(lines[t].at("report").at("count") == 1);
    CHECK(lines[t].at("report").at("signed_sum") == 1);
  }
  run({"experiment", "--q", "2", "--d", "3", "--trials", "100", "--seed", "2", "--out", tmp / "b.jsonl", "--summary",
       tmp / "b.summary.json"});
  CHECK(slurp(tmp / "a.jsonl") == slurp(tmp / "b.jsonl"));
  CHECK(slurp(tmp / "a.summary.json") == slurp(tmp / "b.summary.json"));

  const auto summary = nlohmann::json::parse(slurp(tmp / "a.summary.json"));
  CHECK(summary.at("trials") == 100);
  CHECK(summary.at("count_min") == 1);
  CHECK(summary.at("count_max") == 1);
  CHECK(summary.at("theorem2_failures") == 0);

  const auto again = run({"experiment", "--summarize", tmp / "a.jsonl", "--summary", tmp / "c.summary.json"});
  CHECK(again.code == kExitOk);
  CHECK(slurp(tmp / "c.summary.json") == slurp(tmp / "a.summary.json"));
}

TEST_CASE("experiment: a signed-sum failure stops the run with exit 4") {
  Scratch tmp("experiment_abort");
  const auto r = run({"experiment", "--q", "3", "--d", "2", "--trials", "50", "--seed", "1", "--out", tmp / "x.jsonl"});
  const auto lines = read_lines(tmp / "x.jsonl");
  REQUIRE_FALSE(lines.empty());
  long failures = 0;
  for (const auto& line : lines) {
    const auto& report = line.at("report");
    failures += !report.at("degenerate").get<bool>() && !report.at("theorem2_pass").get<bool>();
  }
  if (failures > 0) {
    CHECK(r.code == kExitFailure);
    CHECK(failures == 1);
    CHECK_FALSE(lines.back().at("report").at("theorem2_pass").get<bool>());
  } else {
    CHECK(r.code == kExitOk);
    CHECK(lines.size() == 50);
  }

  const auto all = run({"experiment", "--q", "3", "--d", "2", "--trials", "50", "--seed", "1", "--keep-going",
                        "--out", tmp / "y.jsonl"});
  CHECK(read_lines(tmp / "y.jsonl").size() == 50);
  CHECK((all.code == kExitOk || all.code == kExitFailure));
}

TEST_CASE("experiment: Sierksma kinds and flag validation") {
  Scratch tmp("experiment_sierksma");
  CHECK(run({"experiment", "--q", "3", "--d", "2", "--trials", "2", "--kind", "sierksma-exact", "--out",
             tmp / "e.jsonl"})
            .code == kExitOk);
  for (const auto& line : read_lines(tmp / "e.jsonl")) CHECK(line.at("report").at("count") == 4);

  CHECK(run({"experiment", "--q", "3", "--d", "2", "--trials", "3", "--kind", "sierksma-perturbed", "--out",
             tmp / "p.jsonl"})
            .code == kExitOk);
  const auto perturbed = read_lines(tmp / "p.jsonl");
  REQUIRE(perturbed.size() == 3);
  CHECK(perturbed[0].at("variant") != perturbed[1].at("variant"));

  CHECK(run({"experiment", "--q", "3", "--d", "2", "--kind", "sierksma-exact", "--prune", "--out", tmp / "z.jsonl"})
            .code == kExitUsage);
  CHECK(run({"experiment", "--q", "3", "--d", "2", "--trials", "0", "--out", tmp / "z.jsonl"}).code == kExitUsage);
  CHECK(run({"experiment", "--q", "3", "--d", "2"}).code == kExitUsage);
  CHECK(run({"experiment", "--summarize", tmp / "missing.jsonl"}).code == kExitIo);
}

TEST_CASE("oracle suites") {
  const auto euler = run({"oracle", "--which", "euler", "--qmax", "6", "--dmax", "4"});
  CHECK(euler.code == kExitOk);
  CHECK(euler.out.find("euler: 20 checked, 0 failed") != std::string::npos);
  CHECK(euler.out.find("q=3 d=2 euler=8\n") != std::string::npos);

  const auto vandermonde = run({"oracle", "--which", "vandermonde", "--q", "5", "--trials", "200"});
  CHECK(vandermonde.code == kExitOk);
  CHECK(vandermonde.out.find("vandermonde q=5: 200 checked, 0 failed") != std::string::npos);

  const auto laplace = run({"oracle", "--which", "laplace", "--q", "3", "--d", "1", "--trials", "50"});
  CHECK(laplace.code == kExitOk);
  CHECK(laplace.out.find("12150 checked, 0 failed") != std::string::npos);  // 50 configs x 3^5 labelings

  CHECK(run({"oracle", "--which", "crossratio", "--trials", "20"}).code == kExitOk);
  CHECK(run({"oracle", "--which", "laplace", "--q", "4", "--d", "3"}).code == kExitUsage);
  CHECK(run({"oracle", "--which", "fourier"}).code == kExitUsage);
}

TEST_CASE("output is free of timestamps unless --verbose") {
  Scratch tmp("verbose");
  const auto quiet = run({"gen", "--q", "2", "--d", "1", "--out", tmp / "c.json"});
  CHECK(quiet.err.empty());
  const auto loud = run({"--verbose", "verify", "--config", tmp / "c.json"});
  CHECK(loud.err.find("started ") != std::string::npos);
  const auto plain = run({"verify", "--config", tmp / "c.json"});
  CHECK(plain.out == loud.out);
  CHECK(plain.err.empty());
}
