#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace polyfourier {

struct ComplexCircle {
  CVector center;       // a, complex coordinates
  Complex radius;       // R != 0
  int axis1 = 0;        // plane directions e_{axis1}, e_{axis2}
  int axis2 = 1;
  int dim() const { return static_cast<int>(center.size()); }
};

inline ComplexCircle make_circle(CVector center, Complex radius, int axis1 = 0, int axis2 = 1) {
  const int d = static_cast<int>(center.size());
  if (d < 2) throw DegenerateInput("circle needs d >= 2");
  if (radius == Complex{0.0, 0.0}) throw DegenerateInput("circle radius must be nonzero");
  if (axis1 == axis2 || axis1 < 0 || axis2 < 0 || axis1 >= d || axis2 >= d)
    throw DegenerateInput("bad circle plane axes");
  return ComplexCircle{std::move(center), radius, axis1, axis2};
}

inline CVector circle_point_trig(const ComplexCircle& C, Complex t) {
  CVector z = C.center;
  z[C.axis1] += C.radius * std::cos(t);
  z[C.axis2] += C.radius * std::sin(t);
  return z;
}

inline CVector circle_point_rational(const ComplexCircle& C, Complex t) {
  Complex den = 1.0 + t * t;
  if (std::abs(den) < 1e-12) throw PoleAtParameter(t);
  CVector z = C.center;
  z[C.axis1] += C.radius * (1.0 - t * t) / den;
  z[C.axis2] += C.radius * (2.0 * t) / den;
  return z;
}

inline Complex sphere_membership(const CVector& center, Complex radius, const CVector& z) {
  if (z.size() != center.size()) throw DegenerateInput("dimension mismatch");
  CVector diff = z - center;
  return bilinear(diff, diff) - radius * radius;
}

enum class CurveKind { TrigCircle, RationalCircle, Rational, Analytic };

inline std::string curve_kind_name(CurveKind k) {
  switch (k) {
    case CurveKind::TrigCircle: return "trig_circle";
    case CurveKind::RationalCircle: return "rational_circle";
    case CurveKind::Rational: return "rational";
    case CurveKind::Analytic: return "builtin";
  }
  return "?";
}

struct RationalComponent {
  std::vector<Complex> num;  // ascending coefficients
  std::vector<Complex> den;  // empty means constant 1
};

struct ParametricCurve {
  CurveKind kind = CurveKind::Rational;
  int dim = 0;
  ComplexCircle circle;                      // TrigCircle / RationalCircle
  std::vector<RationalComponent> components; // Rational
  std::string name;                          // Analytic
  double rho = 0.0;
};

namespace detail {

inline Complex poly_eval(const std::vector<Complex>& c, Complex t) {
  Complex v{0.0, 0.0};
  for (size_t k = c.size(); k-- > 0;) v = v * t + c[k];
  return v;
}

inline std::vector<Complex> poly_mul(const std::vector<Complex>& a,
                                     const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> out(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline void poly_add_scaled(std::vector<Complex>& acc, const std::vector<Complex>& p, Complex s) {
  if (acc.size() < p.size()) acc.resize(p.size(), Complex{0.0, 0.0});
  for (size_t i = 0; i < p.size(); ++i) acc[i] += s * p[i];
}

inline int poly_degree(const std::vector<Complex>& p, double tol) {
  double scale = 0.0;
  for (const auto& c : p) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) return -1;
  for (size_t k = p.size(); k-- > 0;)
    if (std::abs(p[k]) > tol * scale) return static_cast<int>(k);
  return -1;
}

// Long division a = q*b + r; b must have a usable leading coefficient.
inline void poly_divmod(std::vector<Complex> a, const std::vector<Complex>& b,
                        std::vector<Complex>& q, std::vector<Complex>& r) {
  int db = poly_degree(b, 1e-14);
  if (db < 0) throw DegenerateInput("division by zero polynomial");
  int da = poly_degree(a, 0.0);
  q.assign(std::max(0, da - db + 1), Complex{0.0, 0.0});
  while (true) {
    int cur = poly_degree(a, 0.0);
    if (cur < db) break;
    Complex f = a[cur] / b[db];
    q[cur - db] = f;
    for (int k = 0; k <= db; ++k) a[cur - db + k] -= f * b[k];
    a[cur] = Complex{0.0, 0.0};  // kill roundoff in the eliminated coefficient
  }
  r = std::move(a);
}

}  // namespace detail

inline ParametricCurve trig_circle_curve(ComplexCircle C) {
  ParametricCurve g;
  g.kind = CurveKind::TrigCircle;
  g.dim = C.dim();
  g.circle = std::move(C);
  g.rho = 1.0;
  return g;
}

inline ParametricCurve rational_circle_curve(ComplexCircle C) {
  ParametricCurve g;
  g.kind = CurveKind::RationalCircle;
  g.dim = C.dim();
  g.circle = std::move(C);
  g.rho = 0.0;
  return g;
}

inline ParametricCurve rational_curve(std::vector<RationalComponent> comps, double rho = 0.0) {
  if (comps.empty()) throw DegenerateInput("rational curve needs components");
  ParametricCurve g;
  g.kind = CurveKind::Rational;
  g.dim = static_cast<int>(comps.size());
  g.components = std::move(comps);
  g.rho = rho;
  return g;
}

inline ParametricCurve builtin_curve(const std::string& name) {
  if (name != "t2_sin") throw UnknownName("unknown builtin curve: " + name);
  ParametricCurve g;
  g.kind = CurveKind::Analytic;
  g.dim = 2;
  g.name = name;
  g.rho = 1.0;
  return g;
}

inline CVector curve_point(const ParametricCurve& g, Complex t) {
  switch (g.kind) {
    case CurveKind::TrigCircle:
      return circle_point_trig(g.circle, t);
    case CurveKind::RationalCircle:
      return circle_point_rational(g.circle, t);
    case CurveKind::Rational: {
      CVector z(g.dim);
      for (int k = 0; k < g.dim; ++k) {
        const auto& c = g.components[k];
        Complex den = c.den.empty() ? Complex{1.0, 0.0} : detail::poly_eval(c.den, t);
        if (std::abs(den) < 1e-12) throw PoleAtParameter(t);
        z[k] = detail::poly_eval(c.num, t) / den;
      }
      return z;
    }
    case CurveKind::Analytic: {
      CVector z(2);
      z[0] = t * t;
      z[1] = std::sin(t);
      return z;
    }
  }
  throw Error("unreachable");
}

// Natural real parameter range used by scans and coefficient screening.
inline double curve_param_span(const ParametricCurve& g) {
  return g.kind == CurveKind::TrigCircle ? two_pi : 1.0;
}

struct ContainmentVerdict {
  bool contained = false;
  CVector normal;           // meaningful when contained
  double sigma_min = 0.0;   // smallest singular value of the difference matrix
  double sigma_max = 0.0;
};

// Numerical affine-hull test over Chebyshev samples of [0,1].
inline ContainmentVerdict affine_hull_containment(const ParametricCurve& g, int n_samples) {
  const int d = g.dim;
  if (n_samples < 4 * d) throw InsufficientSamples("need at least 4d samples");
  std::vector<CVector> pts;
  for (int i = 0; i < n_samples; ++i) {
    double t = 0.5 + 0.5 * std::cos(pi * (2.0 * i + 1.0) / (2.0 * n_samples));
    try {
      pts.push_back(curve_point(g, Complex(t, 0.0)));
    } catch (const PoleAtParameter&) {
    }
  }
  if (static_cast<int>(pts.size()) < d + 1)
    throw InsufficientSamples("fewer than d+1 non-pole samples");
  CMatrix M(static_cast<int>(pts.size()) - 1, d);
  for (size_t i = 1; i < pts.size(); ++i) M.row(static_cast<int>(i) - 1) = (pts[i] - pts[0]).transpose();
  Eigen::JacobiSVD<CMatrix> svd(M, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  ContainmentVerdict v;
  v.sigma_max = s[0];
  v.sigma_min = s[d - 1];
  v.contained = v.sigma_min <= 1e-9 * v.sigma_max;
  if (v.contained) v.normal = svd.matrixV().col(d - 1);
  return v;
}

// Smallest singular value of the column-normalized monomial sample matrix.
inline double vanishing_polynomial_rank(const ParametricCurve& g, int max_degree, int n_samples) {
  if (g.dim != 2) throw DegenerateInput("vanishing rank is a two-variable test");
  if (max_degree < 1) throw DegenerateInput("max_degree must be positive");
  const int n_monomials = (max_degree + 1) * (max_degree + 2) / 2;
  if (n_samples < 2 * n_monomials)
    throw InsufficientSamples("need n_samples >= 2 x number of monomials");
  std::vector<CVector> pts;
  for (int i = 0; i < n_samples; ++i) {
    double t = (n_samples == 1) ? 0.0 : static_cast<double>(i) / (n_samples - 1);
    try {
      pts.push_back(curve_point(g, Complex(t, 0.0)));
    } catch (const PoleAtParameter&) {
    }
  }
  if (static_cast<int>(pts.size()) < 2 * n_monomials)
    throw InsufficientSamples("too many poles among the samples");
  CMatrix M(static_cast<int>(pts.size()), n_monomials);
  int col = 0;
  for (int total = 0; total <= max_degree; ++total)
    for (int a = 0; a <= total; ++a, ++col)
      for (size_t i = 0; i < pts.size(); ++i)
        M(static_cast<int>(i), col) =
            std::pow(pts[i][0], a) * std::pow(pts[i][1], total - a);
  for (int c = 0; c < n_monomials; ++c) {
    double nn = M.col(c).norm();
    if (nn > 0.0) M.col(c) /= nn;
  }
  Eigen::JacobiSVD<CMatrix> svd(M);
  return svd.singularValues()[n_monomials - 1];
}

// Per-coordinate rational data; defined for Rational and RationalCircle kinds.
inline std::vector<RationalComponent> rational_components(const ParametricCurve& g) {
  if (g.kind == CurveKind::Rational) return g.components;
  if (g.kind == CurveKind::RationalCircle) {
    std::vector<RationalComponent> out(g.dim);
    const Complex R = g.circle.radius;
    for (int k = 0; k < g.dim; ++k) {
      const Complex a = g.circle.center[k];
      if (k == g.circle.axis1)
        out[k] = {{a + R, Complex{0.0, 0.0}, a - R}, {Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}}};
      else if (k == g.circle.axis2)
        out[k] = {{a, 2.0 * R, a}, {Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}}};
      else
        out[k] = {{a}, {Complex{1.0, 0.0}}};
    }
    return out;
  }
  throw WrongCurveKind("rational components need a rational curve kind");
}

}  // namespace polyfourier
