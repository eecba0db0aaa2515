#include <cmath>
#include <vector>

#include "doctest.h"
#include "examtt/error.hpp"
#include "examtt/stats.hpp"

using namespace examtt;

TEST_CASE("relative percentage deviation is a plain ratio") {
  CHECK(rpd(110.0, 100.0) == doctest::Approx(10.0));
  CHECK(rpd(95.0, 100.0) == doctest::Approx(-5.0));
  CHECK(rpd(157.05, 157.05) == doctest::Approx(0.0));
  CHECK(rpd(0.0, 100.0) == doctest::Approx(-100.0));
  CHECK(rpd(3.0, 100.0) >= -100.0);
  CHECK_THROWS_AS(rpd(1.0, 0.0), Error);
  CHECK_THROWS_AS(rpd(1.0, -2.0), Error);
}

TEST_CASE("identical samples give a maximal p-value") {
  std::vector<double> xs = {5.0, 5.0, 5.0, 5.0};
  MannWhitney mw = mann_whitney_u(xs, xs);
  CHECK(mw.u == doctest::Approx(8.0));
  CHECK(mw.z == doctest::Approx(0.0));
  CHECK(mw.p == doctest::Approx(1.0));
}

TEST_CASE("fully separated small samples match the hand-computed statistic") {
  std::vector<double> xs = {1.0, 2.0, 3.0};
  std::vector<double> ys = {4.0, 5.0, 6.0};
  MannWhitney mw = mann_whitney_u(xs, ys);
  CHECK(mw.u == doctest::Approx(0.0));
  CHECK(mw.z == doctest::Approx((0.0 - 4.5 + 0.5) / std::sqrt(5.25)));
  CHECK(mw.p == doctest::Approx(std::erfc(std::abs(mw.z) / std::sqrt(2.0))));
  CHECK(mw.p < 0.1);
  CHECK(mw.p > 0.05);
  MannWhitney flipped = mann_whitney_u(ys, xs);
  CHECK(flipped.u == doctest::Approx(9.0));
  CHECK(flipped.p == doctest::Approx(mw.p));
}

TEST_CASE("normal approximation stays near the exact interleaved-sample p") {
  std::vector<double> xs = {1.0, 3.0, 5.0, 7.0};
  std::vector<double> ys = {2.0, 4.0, 6.0, 8.0};
  MannWhitney mw = mann_whitney_u(xs, ys);
  CHECK(mw.u == doctest::Approx(6.0));

  int total = 0;
  int at_least_as_extreme = 0;
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    ++total;
    int rank_sum = 0;
    for (int bit = 0; bit < 8; ++bit)
      if (mask & (1 << bit)) rank_sum += bit + 1;
    double u = rank_sum - 4.0 * 5.0 / 2.0;
    if (std::abs(u - 8.0) >= std::abs(6.0 - 8.0)) ++at_least_as_extreme;
  }
  CHECK(total == 70);
  double exact = double(at_least_as_extreme) / double(total);
  CHECK(std::abs(mw.p - exact) <= 0.05);
}

TEST_CASE("midranks handle ties the textbook way") {
  std::vector<double> xs = {1.0, 1.0, 2.0};
  std::vector<double> ys = {1.0, 2.0, 2.0};
  MannWhitney a = mann_whitney_u(xs, ys);
  MannWhitney b = mann_whitney_u(ys, xs);
  CHECK(a.u == doctest::Approx(3.0));
  CHECK(b.u == doctest::Approx(6.0));
  CHECK(a.u + b.u == doctest::Approx(9.0));
  CHECK(a.p == doctest::Approx(b.p));
  CHECK(a.p > 0.05);
}

TEST_CASE("clearly separated samples are significant at 95 percent") {
  std::vector<double> xs, ys;
  for (int i = 1; i <= 10; ++i) {
    xs.push_back(i);
    ys.push_back(i + 10);
  }
  MannWhitney mw = mann_whitney_u(xs, ys);
  CHECK(mw.u == doctest::Approx(0.0));
  CHECK(mw.p < 0.001);
}

TEST_CASE("tiny samples are rejected") {
  std::vector<double> two = {1.0, 2.0};
  std::vector<double> three = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(mann_whitney_u(two, three), Error);
  CHECK_THROWS_AS(mann_whitney_u(three, two), Error);
}
