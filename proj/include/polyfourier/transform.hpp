#pragma once

#include <deque>
#include <vector>

#include "geometry.hpp"

namespace polyfourier {

struct EvaluationResult {
  Complex value{0.0, 0.0};
  double min_denominator_factor = std::numeric_limits<double>::infinity();
  bool singular_flag = false;
};

inline double singular_tolerance(const CVector& z) {
  return 1e-10 * std::max(1.0, z.norm());
}

// Vertex-cone evaluation; value is NaN when flagged singular.
inline EvaluationResult try_bb_transform(const VertexConeDecomposition& D, const CVector& z) {
  if (z.size() != D.dim) throw DegenerateInput("frequency dimension mismatch");
  const double tol = singular_tolerance(z);
  Complex twopii_d{1.0, 0.0};
  for (int k = 0; k < D.dim; ++k) twopii_d *= Complex(0.0, two_pi);

  EvaluationResult res;
  Complex total{0.0, 0.0};
  for (size_t vi = 0; vi < D.vertices.size(); ++vi) {
    const RVector& v = D.vertices[vi];
    Complex expo = Complex(0.0, -two_pi) * bilinear(v, z);
    if (std::abs(expo.real()) > 700.0)
      throw OverflowGuard("vertex exponent magnitude exceeds double range");
    Complex evz = std::exp(expo);
    for (const SimplicialCone& cone : D.cones[vi]) {
      Complex den = twopii_d;
      for (const RVector& w : cone.generators) {
        Complex f = bilinear(w, z);
        res.min_denominator_factor = std::min(res.min_denominator_factor, std::abs(f));
        den *= f;
      }
      total += cone.abs_det * evz / den;
    }
  }
  res.singular_flag = res.min_denominator_factor < tol;
  res.value = res.singular_flag
                  ? Complex(std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN())
                  : total;
  return res;
}

inline EvaluationResult bb_transform(const VertexConeDecomposition& D, const CVector& z) {
  if (z.size() != D.dim) throw DegenerateInput("frequency dimension mismatch");
  const double tol = singular_tolerance(z);
  // locate the offending factor first so the error can report it
  for (size_t vi = 0; vi < D.vertices.size(); ++vi)
    for (size_t ci = 0; ci < D.cones[vi].size(); ++ci) {
      const SimplicialCone& cone = D.cones[vi][ci];
      for (size_t gi = 0; gi < cone.generators.size(); ++gi) {
        double af = std::abs(bilinear(cone.generators[gi], z));
        if (af < tol)
          throw NearSingular(static_cast<int>(vi), static_cast<int>(ci),
                             static_cast<int>(gi), af);
      }
    }
  EvaluationResult res = try_bb_transform(D, z);
  return res;
}

inline EvaluationResult bb_transform(const PolytopalRegion& R, const CVector& z) {
  return bb_transform(decompose(R), z);
}

namespace detail {

struct GaussRule {
  std::vector<double> x;  // nodes on [0,1]
  std::vector<double> w;
};

// Newton-on-Legendre construction of an n-point rule, mapped to [0,1].
inline GaussRule gauss_legendre_01(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.x[i] = 0.5 * (1.0 - x);
    r.x[n - 1 - i] = 0.5 * (1.0 + x);
    r.w[i] = 0.5 * w;
    r.w[n - 1 - i] = 0.5 * w;
  }
  return r;
}

struct Simplex {
  std::vector<RVector> v;  // d+1 vertices
};

inline Complex integrate_simplex(const Simplex& s, const CVector& z, const GaussRule& rule) {
  const int d = static_cast<int>(s.v.size()) - 1;
  RMatrix M(d, d);
  for (int k = 0; k < d; ++k) M.col(k) = s.v[k + 1] - s.v[0];
  const double adet = std::abs(M.determinant());
  if (adet == 0.0) return Complex{0.0, 0.0};
  const int n = static_cast<int>(rule.x.size());
  std::vector<int> ctr(d, 0);
  Complex acc{0.0, 0.0};
  RVector lam(d), x(d);
  while (true) {
    double wt = 1.0, jac = 1.0, rem = 1.0;
    for (int k = 0; k < d; ++k) {
      double u = rule.x[ctr[k]];
      wt *= rule.w[ctr[k]];
      lam[k] = u * rem;
      if (k < d - 1) {
        for (int e = 0; e < d - 1 - k; ++e) jac *= (1.0 - u);
        rem *= (1.0 - u);
      }
    }
    x = s.v[0] + M * lam;
    Complex expo = Complex(0.0, -two_pi) * bilinear(x, z);
    acc += wt * jac * std::exp(expo);
    int k = 0;
    for (; k < d; ++k) {
      if (++ctr[k] < n) break;
      ctr[k] = 0;
    }
    if (k == d) break;
  }
  return adet * acc;
}

inline std::vector<Simplex> split_simplex(const Simplex& s) {
  const int d = static_cast<int>(s.v.size()) - 1;
  auto mid = [&](int a, int b) { return ((s.v[a] + s.v[b]) / 2.0).eval(); };
  if (d == 1) {
    RVector m = mid(0, 1);
    return {{{s.v[0], m}}, {{m, s.v[1]}}};
  }
  if (d == 2) {
    RVector m01 = mid(0, 1), m12 = mid(1, 2), m02 = mid(0, 2);
    return {{{s.v[0], m01, m02}},
            {{m01, s.v[1], m12}},
            {{m02, m12, s.v[2]}},
            {{m01, m12, m02}}};
  }
  if (d == 3) {
    RVector m01 = mid(0, 1), m02 = mid(0, 2), m03 = mid(0, 3);
    RVector m12 = mid(1, 2), m13 = mid(1, 3), m23 = mid(2, 3);
    return {{{s.v[0], m01, m02, m03}}, {{m01, s.v[1], m12, m13}},
            {{m02, m12, s.v[2], m23}}, {{m03, m13, m23, s.v[3]}},
            {{m01, m02, m03, m13}},    {{m01, m02, m12, m13}},
            {{m02, m03, m13, m23}},    {{m02, m12, m13, m23}}};
  }
  throw DegenerateInput("simplex subdivision beyond d = 3");
}

inline std::vector<Simplex> simplicial_decomposition(const Polytope& P) {
  const int d = P.dim;
  std::vector<Simplex> out;
  if (d == 2) {
    std::vector<int> cyc = polygon_cycle(P);
    for (size_t k = 1; k + 1 < cyc.size(); ++k)
      out.push_back({{P.vertices[cyc[0]], P.vertices[cyc[k]], P.vertices[cyc[k + 1]]}});
    return out;
  }
  if (d == 3) {
    Hull3 h = hull_3d(P.vertices);
    for (const auto& t : h.facets) {
      if (t[0] == 0 || t[1] == 0 || t[2] == 0) continue;
      out.push_back({{P.vertices[0], P.vertices[t[0]], P.vertices[t[1]], P.vertices[t[2]]}});
    }
    return out;
  }
  if (static_cast<int>(P.vertices.size()) == d + 1) {
    out.push_back({P.vertices});
    return out;
  }
  throw DegenerateInput("quadrature beyond d = 3 handles only simplices");
}

}  // namespace detail

inline Complex quadrature_transform(const PolytopalRegion& R, const CVector& z,
                                    double tol = 1e-10) {
  if (z.size() != R.dim()) throw DegenerateInput("frequency dimension mismatch");
  RVector zim(z.size());
  for (int k = 0; k < z.size(); ++k) zim[k] = z[k].imag();
  if (zim.norm() > 8.0)
    throw OverflowGuard("quadrature guard: |Im z| must stay within 8");

  static const detail::GaussRule g8 = detail::gauss_legendre_01(8);
  static const detail::GaussRule g16 = detail::gauss_legendre_01(16);

  struct Cell {
    detail::Simplex s;
    Complex val;
    double err;
  };
  std::vector<Cell> cells;
  for (const auto& part : R.parts)
    for (auto& s : detail::simplicial_decomposition(part)) {
      Complex hi = detail::integrate_simplex(s, z, g16);
      Complex lo = detail::integrate_simplex(s, z, g8);
      cells.push_back({std::move(s), hi, std::abs(hi - lo)});
    }

  const int max_cells = 20000;
  while (true) {
    Complex total{0.0, 0.0};
    double err = 0.0;
    int worst = -1;
    double worst_err = -1.0;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
      total += cells[i].val;
      err += cells[i].err;
      if (cells[i].err > worst_err) { worst_err = cells[i].err; worst = i; }
    }
    if (err <= tol * (1.0 + std::abs(total))) return total;
    if (static_cast<int>(cells.size()) + 8 > max_cells) throw ToleranceNotReached(err);
    Cell bad = cells[worst];
    cells.erase(cells.begin() + worst);
    for (auto& ch : detail::split_simplex(bad.s)) {
      Complex hi = detail::integrate_simplex(ch, z, g16);
      Complex lo = detail::integrate_simplex(ch, z, g8);
      cells.push_back({std::move(ch), hi, std::abs(hi - lo)});
    }
  }
}

inline double transform_additivity_check(const PolytopalRegion& R, const CVector& z) {
  Complex whole = bb_transform(R, z).value;
  Complex sum{0.0, 0.0};
  for (const auto& part : R.parts)
    sum += bb_transform(make_region({part}, false), z).value;
  return std::abs(whole - sum);
}

// Richardson/Neville extrapolation of bb_transform(eps * z0) to eps = 0;
// recovers the volume along a generic direction.
inline Complex transform_limit_at_zero(const PolytopalRegion& R, const CVector& z0,
                                       double eps0 = 0.05, int n_points = 5) {
  VertexConeDecomposition D = decompose(R);
  std::vector<double> eps(n_points);
  std::vector<Complex> val(n_points);
  for (int k = 0; k < n_points; ++k) {
    eps[k] = eps0 * std::pow(2.0, -k);
    val[k] = bb_transform(D, (eps[k] * z0).eval()).value;
  }
  for (int level = 1; level < n_points; ++level)
    for (int k = 0; k < n_points - level; ++k)
      val[k] = (val[k + 1] * eps[k] - val[k] * eps[k + level]) / (eps[k] - eps[k + level]);
  return val[0];
}

}  // namespace polyfourier
