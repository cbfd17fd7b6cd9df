#pragma once

#include <limits>
#include <string>
#include <vector>

#include "curves.hpp"
#include "transform.hpp"

namespace polyfourier {

// Coefficient is either a constant or the cone-sum closure from the restriction.
struct ExpTerm {
  RVector frequency;
  Complex const_coeff{1.0, 0.0};
  std::vector<SimplicialCone> cones;  // empty -> constant coefficient
};

struct ExponentialSum {
  ParametricCurve curve;
  std::vector<ExpTerm> terms;
  std::vector<std::string> notices;
};

inline Complex term_coefficient(const ExpTerm& term, const CVector& z, Complex t_for_error) {
  if (term.cones.empty()) return term.const_coeff;
  const int d = static_cast<int>(z.size());
  Complex twopii_d{1.0, 0.0};
  for (int k = 0; k < d; ++k) twopii_d *= Complex(0.0, two_pi);
  const double tol = singular_tolerance(z);
  Complex acc{0.0, 0.0};
  for (const SimplicialCone& cone : term.cones) {
    Complex den = twopii_d;
    for (const RVector& w : cone.generators) {
      Complex f = bilinear(w, z);
      if (std::abs(f) < tol) throw PoleAtParameter(t_for_error);
      den *= f;
    }
    acc += cone.abs_det / den;
  }
  return acc;
}

inline std::vector<Complex> term_values(const ExponentialSum& S, Complex t) {
  CVector z = curve_point(S.curve, t);
  std::vector<Complex> out;
  out.reserve(S.terms.size());
  for (const ExpTerm& term : S.terms) {
    Complex c = term_coefficient(term, z, t);
    Complex expo = Complex(0.0, -two_pi) * bilinear(term.frequency, z);
    if (std::abs(expo.real()) > 700.0)
      throw OverflowGuard("term exponent magnitude exceeds double range");
    out.push_back(c * std::exp(expo));
  }
  return out;
}

inline Complex evaluate(const ExponentialSum& S, Complex t) {
  Complex acc{0.0, 0.0};
  for (const Complex& v : term_values(S, t)) acc += v;
  return acc;
}

// One term per merged vertex; terms that vanish on a screening grid are dropped.
inline ExponentialSum restrict_bb_to_curve(const PolytopalRegion& R, const ParametricCurve& g) {
  if (g.dim != R.dim()) throw DegenerateInput("curve/region dimension mismatch");
  VertexConeDecomposition D = decompose(R);
  ExponentialSum S;
  S.curve = g;
  for (size_t i = 0; i < D.vertices.size(); ++i) {
    ExpTerm term;
    term.frequency = D.vertices[i];
    term.cones = D.cones[i];
    S.terms.push_back(std::move(term));
  }
  const int n_screen = 256;
  const double span = curve_param_span(g);
  std::vector<double> maxmod(S.terms.size(), 0.0);
  for (int k = 0; k < n_screen; ++k) {
    Complex t{span * k / n_screen, 0.0};
    CVector z;
    try {
      z = curve_point(g, t);
    } catch (const PoleAtParameter&) {
      continue;
    }
    for (size_t j = 0; j < S.terms.size(); ++j) {
      try {
        maxmod[j] = std::max(maxmod[j], std::abs(term_coefficient(S.terms[j], z, t)));
      } catch (const PoleAtParameter&) {
      }
    }
  }
  double scale = 0.0;
  for (double m : maxmod) scale = std::max(scale, m);
  ExponentialSum out;
  out.curve = S.curve;
  for (size_t j = 0; j < S.terms.size(); ++j) {
    if (maxmod[j] < 1e-12 * scale) {
      std::string v = "(";
      for (int k = 0; k < S.terms[j].frequency.size(); ++k)
        v += (k ? "," : "") + format_g17(S.terms[j].frequency[k]);
      out.notices.push_back("dropped zero-coefficient term at vertex " + v + ")");
      continue;
    }
    out.terms.push_back(std::move(S.terms[j]));
  }
  return out;
}

struct CosineModel {
  double modulus_model = 0.0;
  double phase_model = 0.0;
};

// |cos(x+iy)| ~ e^y/2 and Arg cos(x+iy) ~ -x for y > 0.
inline CosineModel cosine_asymptotics(Complex t) {
  if (!(t.imag() > 0.0)) throw DegenerateInput("cosine asymptotics need Im t > 0");
  return CosineModel{0.5 * std::exp(t.imag()), -t.real()};
}

// Same models for A sin z + B cos z: modulus |B+iA| e^y / 2, phase -x + Arg(B+iA).
inline CosineModel trig_combo_asymptotics(Complex A, Complex B, Complex t) {
  if (!(t.imag() > 0.0)) throw DegenerateInput("cosine asymptotics need Im t > 0");
  Complex bia = B + i_unit * A;
  CosineModel m;
  m.modulus_model = 0.5 * std::abs(bia) * std::exp(t.imag());
  m.phase_model = -t.real() + std::arg(bia);
  return m;
}

inline std::vector<double> growth_rates(const ExponentialSum& S) {
  if (S.curve.kind != CurveKind::TrigCircle)
    throw WrongCurveKind("growth rates are defined over a trig circle");
  const ComplexCircle& C = S.curve.circle;
  std::vector<double> rates;
  rates.reserve(S.terms.size());
  for (const ExpTerm& term : S.terms) {
    Complex proj{term.frequency[C.axis1], term.frequency[C.axis2]};
    rates.push_back(pi * std::abs(C.radius) * std::abs(proj));
  }
  return rates;
}

struct DominantTerm {
  int index = -1;
  double x_star = 0.0;   // aligning real part, principal value in (-pi, pi]
  double epsilon = 0.0;  // 1 - second/max rate gap
};

inline DominantTerm dominant_term(const ExponentialSum& S) {
  std::vector<double> rates = growth_rates(S);
  if (rates.empty()) throw NoUniqueDominant("empty sum");
  int best = 0;
  for (int j = 1; j < static_cast<int>(rates.size()); ++j)
    if (rates[j] > rates[best]) best = j;
  if (rates[best] <= 0.0) throw NoUniqueDominant("all growth rates vanish");
  double second = 0.0;
  for (int j = 0; j < static_cast<int>(rates.size()); ++j)
    if (j != best) second = std::max(second, rates[j]);
  double eps = 1.0 - second / rates[best];
  if (eps <= 1e-9)
    throw NoUniqueDominant("no unique maximal growth rate; rotate the region and retry");
  const ComplexCircle& C = S.curve.circle;
  const RVector& v = S.terms[best].frequency;
  Complex w = Complex(0.0, -two_pi) *
              (C.radius * (Complex{v[C.axis1], 0.0} + i_unit * Complex{v[C.axis2], 0.0}));
  return DominantTerm{best, std::arg(w), eps};
}

struct DominanceReport {
  std::vector<double> rates;
  int dominant_index = -1;
  double margin = 0.0;
  double x_star = 0.0;
  std::vector<std::pair<double, double>> ratio_trace;  // (y, |dom| / sum others)
  double y0 = std::numeric_limits<double>::quiet_NaN();  // first y with ratio > 2
  double min_modulus_top = 0.0;  // |phi| at the largest y
  bool ratio_exceeds_10 = false;
  bool increasing_top_half = true;
};

inline DominanceReport verify_dominance(const ExponentialSum& S, const std::vector<double>& y_grid) {
  if (y_grid.empty()) throw DegenerateInput("empty y grid");
  for (size_t i = 1; i < y_grid.size(); ++i)
    if (y_grid[i] <= y_grid[i - 1]) throw DegenerateInput("y grid must increase");
  DominantTerm dom = dominant_term(S);
  DominanceReport rep;
  rep.rates = growth_rates(S);
  rep.dominant_index = dom.index;
  rep.margin = dom.epsilon;
  rep.x_star = dom.x_star;
  for (double y : y_grid) {
    Complex t{dom.x_star, y};
    std::vector<Complex> vals = term_values(S, t);
    double dmod = std::abs(vals[dom.index]);
    double rest = 0.0;
    for (int j = 0; j < static_cast<int>(vals.size()); ++j)
      if (j != dom.index) rest += std::abs(vals[j]);
    double ratio = rest == 0.0 ? std::numeric_limits<double>::infinity() : dmod / rest;
    rep.ratio_trace.emplace_back(y, ratio);
    if (std::isnan(rep.y0) && ratio > 2.0) rep.y0 = y;
    if (y == y_grid.back()) {
      Complex phi{0.0, 0.0};
      for (const Complex& v : vals) phi += v;
      rep.min_modulus_top = std::abs(phi);
    }
  }
  rep.ratio_exceeds_10 = rep.ratio_trace.back().second >= 10.0;
  size_t half = rep.ratio_trace.size() / 2;
  for (size_t i = half; i + 1 < rep.ratio_trace.size(); ++i)
    if (!(rep.ratio_trace[i + 1].second > rep.ratio_trace[i].second))
      rep.increasing_top_half = false;
  return rep;
}

struct ScanPoint {
  Complex t;
  double modulus = 0.0;
  std::vector<double> term_moduli;
};

struct ScanResult {
  Complex t_min{0.0, 0.0};
  double min_modulus = std::numeric_limits<double>::infinity();
  std::vector<ScanPoint> trace;
  std::vector<Complex> skipped;
  std::vector<std::string> notices;
};

inline ScanResult min_modulus_scan(const ExponentialSum& S, const std::vector<Complex>& t_grid) {
  ScanResult res;
  for (const Complex& t : t_grid) {
    std::vector<Complex> vals;
    try {
      vals = term_values(S, t);
    } catch (const PoleAtParameter&) {
      res.skipped.push_back(t);
      res.notices.push_back("skipped pole at t = (" + format_g17(t.real()) + ", " +
                            format_g17(t.imag()) + ")");
      continue;
    }
    ScanPoint p;
    p.t = t;
    Complex phi{0.0, 0.0};
    for (const Complex& v : vals) {
      phi += v;
      p.term_moduli.push_back(std::abs(v));
    }
    p.modulus = std::abs(phi);
    if (p.modulus < res.min_modulus) {
      res.min_modulus = p.modulus;
      res.t_min = t;
    }
    res.trace.push_back(std::move(p));
  }
  if (res.trace.empty()) throw AllPoles("every grid point was a pole");
  return res;
}

// Grid-max witness for the exponential-decay lower bound of S(b + t a).
inline double decay_lower_bound_check(const std::vector<Complex>& coefficients,
                                      const std::vector<Complex>& exponents,
                                      Complex a, Complex b,
                                      const std::vector<double>& t_grid) {
  if (coefficients.size() != exponents.size() || coefficients.empty())
    throw DegenerateInput("coefficient/exponent length mismatch");
  if (t_grid.empty()) throw DegenerateInput("empty grid");
  const size_t n = coefficients.size();
  std::vector<Complex> ctil(n);
  std::vector<Complex> lam(n);
  double cc = -std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < n; ++j) {
    ctil[j] = coefficients[j] * std::exp(exponents[j] * b);
    lam[j] = exponents[j] * a;
    cc = std::max(cc, lam[j].real());
  }
  cc = -cc;
  double t_max = *std::max_element(t_grid.begin(), t_grid.end());
  double all_max = 0.0, witness = 0.0;
  for (double t : t_grid) {
    Complex s{0.0, 0.0};
    for (size_t j = 0; j < n; ++j) s += ctil[j] * std::exp((lam[j] + cc) * t);
    double m = std::abs(s);
    all_max = std::max(all_max, m);
    if (t >= t_max / 10.0) witness = std::max(witness, m);
  }
  double cscale = 0.0;
  for (const Complex& c : ctil) cscale = std::max(cscale, std::abs(c));
  if (all_max <= 1e-15 * cscale)
    throw IdenticallyZeroOnGrid("sum vanishes on the whole grid");
  return witness;
}

struct BrownawellPair {
  int k = 0;
  int l = 0;
  std::vector<Complex> polynomial;  // ascending coefficients of the pair difference
};

// Pair (k,l) is flagged when -2pi i (v_k - v_l) . gamma(t) is a polynomial of degree <= rho.
inline std::vector<BrownawellPair> brownawell_pair_check(const ParametricCurve& g,
                                                         const std::vector<RVector>& frequencies,
                                                         double rho) {
  for (const RVector& v : frequencies)
    if (v.size() != g.dim) throw DegenerateInput("frequency dimension mismatch");
  std::vector<BrownawellPair> out;
  const int m = static_cast<int>(frequencies.size());
  auto freq_scale = [&](int k, int l) {
    return std::max(1.0, std::max(frequencies[k].norm(), frequencies[l].norm()));
  };

  if (g.kind == CurveKind::TrigCircle) {
    const ComplexCircle& C = g.circle;
    for (int k = 0; k < m; ++k)
      for (int l = k + 1; l < m; ++l) {
        RVector d = frequencies[k] - frequencies[l];
        double tol = 1e-12 * freq_scale(k, l);
        if (std::abs(d[C.axis1]) <= tol && std::abs(d[C.axis2]) <= tol) {
          Complex c0 = Complex(0.0, -two_pi) * bilinear(d, C.center);
          out.push_back({k, l, {c0}});
        }
      }
    return out;
  }
  if (g.kind == CurveKind::Analytic) {
    if (g.name != "t2_sin") throw UnsupportedCurveKind("unknown analytic curve " + g.name);
    // 1, t, t^2 and sin t are linearly independent: only the zero difference qualifies
    for (int k = 0; k < m; ++k)
      for (int l = k + 1; l < m; ++l)
        if ((frequencies[k] - frequencies[l]).norm() <= 1e-12 * freq_scale(k, l))
          out.push_back({k, l, {Complex{0.0, 0.0}}});
    return out;
  }
  if (g.kind != CurveKind::Rational && g.kind != CurveKind::RationalCircle)
    throw UnsupportedCurveKind("pair check needs a rational, trig-circle, or builtin curve");

  std::vector<RationalComponent> comps = rational_components(g);
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) {
      RVector d = frequencies[k] - frequencies[l];
      // common-denominator form of -2pi i d . gamma(t)
      std::vector<Complex> den{Complex{1.0, 0.0}};
      for (const auto& c : comps)
        den = c.den.empty() ? den : detail::poly_mul(den, c.den);
      std::vector<Complex> num;
      for (int j = 0; j < g.dim; ++j) {
        std::vector<Complex> part = comps[j].num;
        for (int j2 = 0; j2 < g.dim; ++j2) {
          if (j2 == j || comps[j2].den.empty()) continue;
          part = detail::poly_mul(part, comps[j2].den);
        }
        detail::poly_add_scaled(num, part, Complex(0.0, -two_pi) * d[j]);
      }
      std::vector<Complex> q, r;
      detail::poly_divmod(num, den, q, r);
      double nscale = 0.0;
      for (const auto& c : num) nscale = std::max(nscale, std::abs(c));
      double rmax = 0.0;
      for (const auto& c : r) rmax = std::max(rmax, std::abs(c));
      if (rmax > 1e-10 * std::max(1.0, nscale)) continue;
      if (detail::poly_degree(q, 1e-10) > static_cast<int>(std::floor(rho))) continue;
      if (q.empty()) q.push_back(Complex{0.0, 0.0});
      out.push_back({k, l, q});
    }
  return out;
}

}  // namespace polyfourier
