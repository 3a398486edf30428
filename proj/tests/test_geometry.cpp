#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "tverberg/config_io.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/geometry.hpp"

using namespace tverberg;

namespace {

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Point pt(std::initializer_list<Rational> coords) { return Point(coords); }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tverberg_test_" + name);
}

}  // namespace

TEST_CASE("make_params") {
  const auto p = make_params(3, 2);
  CHECK(p.N == 6);
  CHECK(p.bound == 4);
  CHECK(p.euler == 8);
  CHECK(p.num_points() == 7);

  const auto trivial = make_params(2, 7);
  CHECK(trivial.N == 8);
  CHECK(trivial.bound == 1);
  CHECK(trivial.euler == 1);

  const auto line = make_params(4, 1);
  CHECK(line.N == 6);
  CHECK(line.bound == factorial(3));
  CHECK(line.euler == factorial(3) * factorial(3));

  CHECK_THROWS_AS(make_params(1, 2), InvalidParameter);
  CHECK_THROWS_AS(make_params(3, 0), InvalidParameter);
  CHECK_THROWS_AS(make_params(5, 5), InvalidParameter);  // 25 points
  CHECK(make_params(5, 5, true).N == 24);
}

TEST_CASE("make_params: bound * (q-1)! == euler across a grid") {
  for (int q = 2; q <= 6; ++q) {
    for (int d = 1; d <= 4; ++d) {
      const auto p = make_params(q, d, true);
      CHECK(p.N == (q - 1) * (d + 1));
      CHECK(p.bound * factorial(q - 1) == p.euler);
    }
  }
}

TEST_CASE("random_config shape and determinism") {
  const auto params = make_params(3, 2);
  const auto a = random_config(params, 42);
  const auto b = random_config(params, 42);
  CHECK(a == b);
  CHECK(a.seed == std::uint64_t{42});
  REQUIRE(a.points.size() == 7);
  for (const auto& point : a.points) {
    REQUIRE(point.size() == 3);
    CHECK(point[0] + point[1] + point[2] == 1);
    for (int k = 0; k < 2; ++k) {
      CHECK(point[k] * 1024 >= -1024);
      CHECK(point[k] * 1024 <= 2048);
      CHECK(Rational(point[k] * 1024).get_den() == 1);
    }
  }
  const auto line = random_config(make_params(2, 1), 1);
  CHECK(line.points.size() == 3);
  for (const auto& point : line.points) CHECK(point[0] + point[1] == 1);
  CHECK_THROWS_AS(random_config(params, 1, 512), InvalidParameter);
}

TEST_CASE("random_config: distinct seeds give distinct configurations") {
  const auto params = make_params(3, 2);
  std::set<std::vector<Point>> seen;
  int collisions = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    if (!seen.insert(random_config(params, seed).points).second) ++collisions;
  }
  CHECK(collisions < 2);
}

TEST_CASE("random_config is usually generic") {
  const auto verdict = screen_genericity(random_config(make_params(3, 2), 42));
  CHECK(verdict.generic);
  CHECK(verdict.failures.empty());
}

TEST_CASE("sierksma_config exact") {
  const auto c = sierksma_config(make_params(3, 2), 0);
  const Rational third(1, 3);
  const std::vector<Point> expected{pt({1, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 1, 0}),
                                    pt({0, 0, 1}), pt({0, 0, 1}), pt({third, third, third})};
  CHECK(c.points == expected);

  const auto line = sierksma_config(make_params(2, 1), 0);
  const std::vector<Point> expected_line{pt({1, 0}), pt({0, 1}), pt({Rational(1, 2), Rational(1, 2)})};
  CHECK(line.points == expected_line);

  CHECK_THROWS_AS(sierksma_config(make_params(3, 2), Rational(-1, 8)), InvalidParameter);
}

TEST_CASE("sierksma_config perturbed") {
  const Rational eps(1, 1 << 16);
  for (int q = 2; q <= 4; ++q) {
    for (int d = 1; d <= 3; ++d) {
      if ((q - 1) * (d + 1) + 1 > kDefaultMaxPoints) continue;
      const auto params = make_params(q, d);
      const auto exact = sierksma_config(params, 0);
      const auto c = sierksma_config(params, eps);
      CHECK_NOTHROW(validate_config(c));
      CHECK(c == sierksma_config(params, eps));
      std::set<Point> distinct(c.points.begin(), c.points.end());
      CHECK(distinct.size() == c.points.size());
      for (std::size_t a = 0; a < c.points.size(); ++a) {
        for (int k = 0; k <= d; ++k) {
          const Rational offset = c.points[a][k] - exact.points[a][k];
          CHECK(abs(offset) <= eps);
        }
      }
    }
  }
  CHECK_FALSE(sierksma_config(make_params(3, 2), eps, 0) == sierksma_config(make_params(3, 2), eps, 1));
}

TEST_CASE("screen_genericity") {
  const auto exact = screen_genericity(sierksma_config(make_params(3, 2), 0));
  CHECK_FALSE(exact.generic);
  CHECK_FALSE(exact.failures.empty());

  // Four collinear points in the plane (plus filler to reach N + 1 = 4 for q = 2, d = 2).
  PointConfig collinear{make_params(2, 2),
                        {pt({0, 0, 1}), pt({1, 0, 0}), pt({2, -1, 0}), pt({3, -2, 0})},
                        "collinear",
                        std::nullopt};
  // Points 2, 3, 4 lie on x + y = 1, z = 0.
  const auto verdict = screen_genericity(collinear);
  CHECK_FALSE(verdict.generic);
  REQUIRE(!verdict.failures.empty());
  CHECK(verdict.failures.front() == "points {2,3,4} affinely dependent");

  PointConfig all_on_line = collinear;
  all_on_line.points[0] = pt({-1, 2, 0});
  CHECK_FALSE(screen_genericity(all_on_line).generic);

  PointConfig triangle{make_params(2, 2),
                       {pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}),
                        pt({Rational(1, 3), Rational(1, 3), Rational(1, 3)})},
                       "",
                       std::nullopt};
  CHECK(screen_genericity(triangle).generic);
}

TEST_CASE("validate_config messages") {
  auto c = random_config(make_params(3, 2), 3);
  c.points.pop_back();
  CHECK_THROWS_WITH_AS(validate_config(c), doctest::Contains("expected 7 points"), SchemaError);

  auto bad = random_config(make_params(3, 2), 3);
  bad.points[2][0] -= Rational(1, 1000);
  CHECK_THROWS_WITH_AS(validate_config(bad), doctest::Contains("point 3"), SchemaError);
}

TEST_CASE("config JSON round trip") {
  const auto path = temp_file("roundtrip.json");
  for (const auto& config : {random_config(make_params(3, 2), 9), sierksma_config(make_params(4, 1), Rational(1, 7))}) {
    save_config(config, path);
    CHECK(load_config(path) == config);
  }
  const auto doc = config_to_json(random_config(make_params(2, 1), 5));
  CHECK(doc.at("q") == 2);
  CHECK(doc.at("seed") == 5);
  CHECK(doc.at("points").size() == 3);
  CHECK(doc.at("points")[0][0].is_string());
  CHECK(config_to_json(sierksma_config(make_params(2, 1), 0)).at("seed").is_null());
  std::filesystem::remove(path);
}

TEST_CASE("config JSON errors") {
  auto doc = config_to_json(random_config(make_params(3, 2), 9));
  auto short_doc = doc;
  short_doc["points"].erase(short_doc["points"].size() - 1);
  CHECK_THROWS_WITH_AS(config_from_json(short_doc), doctest::Contains("expected 7 points"), SchemaError);

  auto off_sum = doc;
  off_sum["points"][4] = {"999/1000", "0/1", "0/1"};
  CHECK_THROWS_WITH_AS(config_from_json(off_sum), doctest::Contains("point 5"), SchemaError);

  auto garbage = doc;
  garbage["points"][1][2] = "abc";
  CHECK_THROWS_WITH_AS(config_from_json(garbage), doctest::Contains("points[1][2]"), SchemaError);

  auto missing = doc;
  missing.erase("q");
  CHECK_THROWS_AS(config_from_json(missing), SchemaError);

  const auto path = temp_file("broken.json");
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(load_config(path), SchemaError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_config(temp_file("does_not_exist.json")), std::runtime_error);
}
