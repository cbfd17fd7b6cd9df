#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace polyfourier {

using Complex = std::complex<double>;
using RVector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline const Complex i_unit{0.0, 1.0};

// Bilinear pairing x.y = sum x_k y_k, no conjugation anywhere.
inline Complex bilinear(const CVector& a, const CVector& b) {
  return a.cwiseProduct(b).sum();
}
inline Complex bilinear(const RVector& a, const CVector& b) {
  return a.cast<Complex>().cwiseProduct(b).sum();
}
inline Complex bilinear(const CVector& a, const RVector& b) {
  return bilinear(b, a);
}
inline double bilinear(const RVector& a, const RVector& b) {
  return a.dot(b);
}

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& msg) : Error(msg) {}
};

struct NotPointed : Error {
  explicit NotPointed(const std::string& msg) : Error(msg) {}
};

struct NearSingular : Error {
  int vertex_index;
  int cone_index;
  int generator_index;
  double factor;
  NearSingular(int v, int c, int g, double f)
      : Error("near-singular denominator |w.z| = " + std::to_string(f) +
              " at vertex " + std::to_string(v) + ", cone " + std::to_string(c) +
              ", generator " + std::to_string(g)),
        vertex_index(v), cone_index(c), generator_index(g), factor(f) {}
};

struct ToleranceNotReached : Error {
  double achieved;
  explicit ToleranceNotReached(double got)
      : Error("quadrature refinement budget exhausted, estimated error " +
              std::to_string(got)),
        achieved(got) {}
};

struct PoleAtParameter : Error {
  Complex t;
  explicit PoleAtParameter(Complex where)
      : Error("parameter t = (" + std::to_string(where.real()) + ", " +
              std::to_string(where.imag()) + ") hits a pole"),
        t(where) {}
};

struct InsufficientSamples : Error {
  explicit InsufficientSamples(const std::string& msg) : Error(msg) {}
};

struct WrongCurveKind : Error {
  explicit WrongCurveKind(const std::string& msg) : Error(msg) {}
};

struct NoUniqueDominant : Error {
  explicit NoUniqueDominant(const std::string& msg) : Error(msg) {}
};

struct OverflowGuard : Error {
  explicit OverflowGuard(const std::string& msg) : Error(msg) {}
};

struct AllPoles : Error {
  explicit AllPoles(const std::string& msg) : Error(msg) {}
};

struct IdenticallyZeroOnGrid : Error {
  explicit IdenticallyZeroOnGrid(const std::string& msg) : Error(msg) {}
};

struct UnsupportedCurveKind : Error {
  explicit UnsupportedCurveKind(const std::string& msg) : Error(msg) {}
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& msg) : Error(msg) {}
};

struct DirectionParallelToEdge : Error {
  explicit DirectionParallelToEdge(const std::string& msg) : Error(msg) {}
};

struct RangeExceeded : Error {
  explicit RangeExceeded(const std::string& msg) : Error(msg) {}
};

// Global relative tolerance; POLYFOURIER_TOL overrides the 1e-9 default.
inline double global_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("POLYFOURIER_TOL")) {
      char* end = nullptr;
      double v = std::strtod(env, &end);
      if (end != env && v > 0.0) return v;
    }
    return 1e-9;
  }();
  return tol;
}

// Difference a-b wrapped into (-pi, pi]; use for phase comparisons mod 2pi.
inline double angle_difference(double a, double b) {
  double d = std::fmod(a - b, two_pi);
  if (d <= -pi) d += two_pi;
  if (d > pi) d -= two_pi;
  return d;
}

// 17-significant-digit float rendering shared by CSV and reports.
inline std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace polyfourier
