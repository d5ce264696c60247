// Numerical primitives: standard-normal CDF/quantile, Gauss-Legendre
// quadrature for truncated-normal expectations, and bisection root finding.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace pat {

struct Interval {
  double lo;
  double hi;

  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
      throw std::domain_error("Interval: requires finite lo < hi");
  }

  double width() const { return hi - lo; }
};

// Phi(x), absolute error well below 1e-12.
inline double std_normal_cdf(double x) {
  if (!std::isfinite(x)) throw std::domain_error("std_normal_cdf: non-finite input");
  return 0.5 * std::erfc(-x * M_SQRT1_2);
}

inline double std_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

namespace detail {

// Acklam's rational approximation to the normal quantile, |rel err| < 1.15e-9.
inline double acklam_quantile(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  double q = p - 0.5;
  double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace detail

// Phi^{-1}(p): rational initial guess refined by Newton steps on std_normal_cdf.
inline double std_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("std_normal_quantile: p must lie in (0,1)");
  double x = detail::acklam_quantile(p);
  for (int i = 0; i < 2; ++i) {
    double err = std_normal_cdf(x) - p;
    double pdf = std_normal_pdf(x);
    if (pdf <= 0.0) break;
    x -= err / pdf;
  }
  return x;
}

namespace detail {

// Gauss-Legendre nodes/weights on [-1,1], computed by Newton iteration on the
// Legendre polynomial. Cached per order.
inline const std::pair<std::vector<double>, std::vector<double>>&
gauss_legendre(int n) {
  static std::vector<std::pair<int, std::pair<std::vector<double>, std::vector<double>>>> cache;
  for (const auto& e : cache)
    if (e.first == n) return e.second;

  std::vector<double> x(n), w(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
  cache.emplace_back(n, std::make_pair(std::move(x), std::move(w)));
  return cache.back().second;
}

inline double gl_integrate(const std::function<double(double)>& f, double a,
                           double b, int n) {
  const auto& [x, w] = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += w[i] * f(mid + half * x[i]);
  return s * half;
}

}  // namespace detail

// E[f(X)] for X ~ TruncNormal(mu, sigma, [support.lo, support.hi]).
// Fixed-order Gauss-Legendre, doubling from 128 nodes until two successive
// estimates agree to 1e-10 relative.
inline double truncnorm_expect(const std::function<double(double)>& f, double mu,
                               double sigma, const Interval& support) {
  if (!(sigma > 0.0)) throw std::domain_error("truncnorm_expect: sigma must be > 0");
  const double za = (support.lo - mu) / sigma;
  const double zb = (support.hi - mu) / sigma;
  const double mass = std_normal_cdf(zb) - std_normal_cdf(za);
  if (mass < 1e-300)
    throw std::domain_error("truncnorm_expect: degenerate truncation mass");

  auto integrand = [&](double x) {
    return f(x) * std_normal_pdf((x - mu) / sigma) / sigma;
  };
  double prev = detail::gl_integrate(integrand, support.lo, support.hi, 128);
  for (int n = 256; n <= 2048; n *= 2) {
    double cur = detail::gl_integrate(integrand, support.lo, support.hi, n);
    if (std::abs(cur - prev) <= 1e-10 * std::max(1.0, std::abs(cur)))
      return cur / mass;
    prev = cur;
  }
  return prev / mass;
}

// Bisection on [bracket.lo, bracket.hi]; requires a sign change.
inline double find_root(const std::function<double(double)>& f,
                        const Interval& bracket, double tol = 1e-10) {
  if (!(tol > 0.0)) throw std::domain_error("find_root: tol must be > 0");
  double lo = bracket.lo, hi = bracket.hi;
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw std::invalid_argument("find_root: no sign change over bracket");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket at floating-point resolution
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace pat
