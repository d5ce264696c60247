#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pat/math.hpp"
#include "pat/rng.hpp"

using namespace pat;

namespace {

// Independent high-precision oracle: Taylor series for erf, good to ~1e-15
// for |x| <= 4.
double erf_series(double x) {
  double term = x, sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= -x * x / n;
    double add = term / (2 * n + 1);
    sum += add;
    if (std::abs(add) < 1e-18 * std::abs(sum)) break;
  }
  return sum * 2.0 / std::sqrt(M_PI);
}

double cdf_oracle(double x) { return 0.5 * (1.0 + erf_series(x * M_SQRT1_2)); }

}  // namespace

TEST_CASE("std_normal_cdf matches the series oracle") {
  CHECK(std_normal_cdf(0.0) == Catch::Approx(0.5).margin(1e-15));
  CHECK(std_normal_cdf(1.96) == Catch::Approx(cdf_oracle(1.96)).margin(1e-12));
  CHECK(std_normal_cdf(1.96) == Catch::Approx(0.9750021048517796).margin(1e-12));
  for (double x : {-3.5, -1.0, -0.25, 0.7, 2.2, 3.9})
    CHECK(std_normal_cdf(x) == Catch::Approx(cdf_oracle(x)).margin(1e-12));
  CHECK(std_normal_cdf(-0.7) ==
        Catch::Approx(1.0 - std_normal_cdf(0.7)).margin(1e-14));
  CHECK_THROWS_AS(std_normal_cdf(std::nan("")), std::domain_error);
}

TEST_CASE("std_normal_cdf is monotone") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    double x = 12.0 * rng.uniform() - 6.0;
    double y = x + 1e-6 + 3.0 * rng.uniform();
    CHECK(std_normal_cdf(x) < std_normal_cdf(y));
  }
}

TEST_CASE("std_normal_quantile inverts the CDF") {
  CHECK(std_normal_quantile(0.5) == Catch::Approx(0.0).margin(1e-12));
  // Oracle: bisection on the series CDF.
  double lo = 0.0, hi = 3.0;
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    (cdf_oracle(mid) < 0.84 ? lo : hi) = mid;
  }
  CHECK(std_normal_quantile(0.84) == Catch::Approx(lo).margin(1e-10));
  CHECK(std_normal_quantile(0.84) == Catch::Approx(0.9944578832).margin(1e-9));
  CHECK(std_normal_quantile(std_normal_cdf(1.3)) ==
        Catch::Approx(1.3).margin(1e-9));
  CHECK_THROWS_AS(std_normal_quantile(0.0), std::domain_error);
  CHECK_THROWS_AS(std_normal_quantile(1.0), std::domain_error);

  for (double x = -6.0; x <= 6.0; x += 0.37)
    CHECK(std_normal_quantile(std_normal_cdf(x)) == Catch::Approx(x).margin(1e-8));
}

TEST_CASE("truncnorm_expect") {
  SECTION("normalization") {
    CHECK(truncnorm_expect([](double) { return 1.0; }, 3.0, 2.0, Interval(1.0, 7.0)) ==
          Catch::Approx(1.0).margin(1e-12));
  }
  SECTION("symmetric truncation about the mean") {
    CHECK(truncnorm_expect([](double x) { return x; }, 50.0, 25.0,
                           Interval(20.0, 80.0)) == Catch::Approx(50.0).margin(1e-9));
  }
  SECTION("second moment against a dense Riemann-sum oracle") {
    // 10^7 midpoint cells over [-1, 1].
    const long n = 10000000;
    long double num = 0.0L, den = 0.0L;
    for (long i = 0; i < n; ++i) {
      long double x = -1.0L + 2.0L * (i + 0.5L) / n;
      long double w = std::exp(-0.5L * x * x);
      num += x * x * w;
      den += w;
    }
    double oracle = static_cast<double>(num / den);
    double got = truncnorm_expect([](double x) { return x * x; }, 0.0, 1.0,
                                  Interval(-1.0, 1.0));
    CHECK(got == Catch::Approx(oracle).margin(1e-7));
    CHECK(got == Catch::Approx(0.2911250948).margin(1e-9));
  }
  SECTION("asymmetric truncation matches the closed-form mean") {
    // E[X] = mu + sigma (phi(a) - phi(b)) / (Phi(b) - Phi(a)).
    double mu = 3.0, sigma = 2.0, a = 2.0, b = 9.0;
    double za = (a - mu) / sigma, zb = (b - mu) / sigma;
    double expect = mu + sigma * (std_normal_pdf(za) - std_normal_pdf(zb)) /
                             (std_normal_cdf(zb) - std_normal_cdf(za));
    CHECK(truncnorm_expect([](double x) { return x; }, mu, sigma, Interval(a, b)) ==
          Catch::Approx(expect).margin(1e-9));
  }
  SECTION("degenerate mass") {
    CHECK_THROWS_AS(truncnorm_expect([](double) { return 1.0; }, 0.0, 1.0,
                                     Interval(60.0, 70.0)),
                    std::domain_error);
  }
  SECTION("sigma must be positive") {
    CHECK_THROWS_AS(truncnorm_expect([](double) { return 1.0; }, 0.0, 0.0,
                                     Interval(-1.0, 1.0)),
                    std::domain_error);
  }
}

TEST_CASE("find_root") {
  CHECK(find_root([](double x) { return x - 0.3; }, Interval(0.0, 1.0), 1e-12) ==
        Catch::Approx(0.3).margin(1e-11));
  CHECK(find_root([](double x) { return std_normal_cdf(x) - 0.84; },
                  Interval(0.0, 3.0)) ==
        Catch::Approx(std_normal_quantile(0.84)).margin(1e-9));
  CHECK(find_root([](double x) { return x * x - 2.0; }, Interval(0.0, 2.0)) ==
        Catch::Approx(std::sqrt(2.0)).margin(1e-9));
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, Interval(0.0, 1.0)),
                  std::invalid_argument);

  SECTION("invariant to bracket refinement") {
    auto f = [](double x) { return std::cos(x) - x; };
    double wide = find_root(f, Interval(0.0, 1.5), 1e-10);
    double tight = find_root(f, Interval(0.7, 0.8), 1e-10);
    CHECK(std::abs(wide - tight) <= 1e-10);
  }
}

TEST_CASE("Interval rejects bad endpoints") {
  CHECK_THROWS_AS(Interval(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Interval(2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()),
                  std::domain_error);
}
