#pragma once

#include <vector>

#include "common.hpp"

namespace polyfourier {

// J1 by power series for |x| <= 12, Miller backward recurrence up to |x| = 50.
inline double bessel_j1(double x) {
  double ax = std::abs(x);
  if (ax > 50.0) throw RangeExceeded("bessel_j1 supports |x| <= 50");
  double sign = (x < 0.0) ? -1.0 : 1.0;
  if (ax <= 12.0) {
    double term = ax / 2.0;
    double sum = term;
    for (int m = 0; m < 200; ++m) {
      term *= -(ax * ax / 4.0) / ((m + 1.0) * (m + 2.0));
      sum += term;
      if (std::abs(term) < 1e-20 * std::max(1.0, std::abs(sum)) && m > 4) break;
    }
    return sign * sum;
  }
  int N = static_cast<int>(1.5 * ax) + 42;
  if (N % 2) ++N;
  std::vector<double> f(N + 2, 0.0);
  f[N] = 1e-300;
  for (int n = N; n >= 1; --n) {
    f[n - 1] = (2.0 * n / ax) * f[n] - f[n + 1];
    if (std::abs(f[n - 1]) > 1e250)
      for (int k = n - 1; k <= N + 1; ++k) f[k] *= 1e-250;
  }
  double norm = f[0];
  for (int k = 2; k <= N; k += 2) norm += 2.0 * f[k];
  return sign * f[1] / norm;
}

// First positive zero, bisected on [3, 4.5].
inline double bessel_j1_first_zero() {
  double lo = 3.0, hi = 4.5;
  double flo = bessel_j1(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = bessel_j1(mid);
    if ((flo > 0.0) == (fm > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Radial profile of the unit-disk transform at real frequency radius rho_s.
inline double disk_transform_profile(double rho_s) {
  if (!(rho_s > 0.0)) throw DegenerateInput("disk profile needs rho_s > 0");
  return bessel_j1(two_pi * rho_s) / rho_s;
}

}  // namespace polyfourier
