#pragma once

#include <string>
#include <vector>

#include "curves.hpp"
#include "transform.hpp"

namespace polyfourier {

struct Segment {
  RVector a;  // endpoints, canonicalized a < b lexicographically
  RVector b;
  Complex c;  // nonzero coefficient on arc length
};

struct SegmentMeasure {
  std::vector<Segment> segments;
  std::vector<RVector> direction_set;  // distinct unit directions, antipodes identified
};

enum class ParallelEdgePolicy { Raise, Drop };

// Distributional derivative of the region indicator along u, as a segment measure.
inline SegmentMeasure polygon_directional_derivative(const PolytopalRegion& R, RVector u,
                                                     ParallelEdgePolicy policy = ParallelEdgePolicy::Drop) {
  if (R.dim() != 2) throw DegenerateInput("directional derivative needs a 2-D region");
  if (u.size() != 2) throw DegenerateInput("direction must be a 2-vector");
  double un = u.norm();
  if (un == 0.0) throw DegenerateInput("zero direction");
  u /= un;
  SegmentMeasure out;
  for (const Polytope& part : R.parts) {
    std::vector<int> cyc = polygon_cycle(part);
    const int n = static_cast<int>(cyc.size());
    for (int i = 0; i < n; ++i) {
      RVector a = part.vertices[cyc[i]];
      RVector b = part.vertices[cyc[(i + 1) % n]];
      RVector dir = (b - a).normalized();
      double cross = u[0] * dir[1] - u[1] * dir[0];
      if (std::abs(cross) < 1e-9) {
        if (policy == ParallelEdgePolicy::Raise)
          throw DirectionParallelToEdge("direction is parallel to a boundary edge");
        continue;
      }
      RVector nrm(2);
      nrm << dir[1], -dir[0];  // outward for a CCW cycle
      double coeff = -u.dot(nrm);
      if (std::abs(coeff) < 1e-12) continue;
      if (detail::lex_less(b, a)) std::swap(a, b);  // arc length is orientation-free
      out.segments.push_back({std::move(a), std::move(b), Complex{coeff, 0.0}});
    }
  }
  for (const Segment& s : out.segments) {
    RVector dir = (s.b - s.a).normalized();  // first nonzero coordinate positive
    bool seen = false;
    for (const RVector& d : out.direction_set)
      if ((d - dir).norm() < 1e-12) { seen = true; break; }
    if (!seen) out.direction_set.push_back(dir);
  }
  std::sort(out.direction_set.begin(), out.direction_set.end(), detail::lex_less);
  return out;
}

namespace detail {

// E(s) = (e^{-2pi i s} - 1) / (-2pi i s), E(0) = 1; Taylor branch near 0.
inline Complex segment_kernel(Complex s) {
  Complex w = Complex(0.0, -two_pi) * s;
  if (std::abs(w) < 1e-4)
    return 1.0 + w / 2.0 + w * w / 6.0 + w * w * w / 24.0;
  return (std::exp(w) - 1.0) / w;
}

}  // namespace detail

inline Complex segment_measure_transform(const SegmentMeasure& mu, const CVector& x) {
  if (x.size() != 2) throw DegenerateInput("frequency must be a 2-vector");
  Complex acc{0.0, 0.0};
  for (const Segment& s : mu.segments) {
    RVector ba = s.b - s.a;
    Complex phase = std::exp(Complex(0.0, -two_pi) * bilinear(s.a, x));
    acc += s.c * ba.norm() * phase * detail::segment_kernel(bilinear(ba, x));
  }
  return acc;
}

inline Complex segment_measure_transform(const SegmentMeasure& mu, const RVector& x) {
  return segment_measure_transform(mu, CVector(x.cast<Complex>()));
}

// | (d_u 1_R)^(x) - 2pi i (u.x) 1_R^(x) |, the Fourier-side derivative identity.
inline double derivative_transform_identity_residual(const PolytopalRegion& R, const RVector& u,
                                                     const RVector& x) {
  SegmentMeasure mu = polygon_directional_derivative(R, u);
  Complex lhs = segment_measure_transform(mu, x);
  CVector xc = x.cast<Complex>();
  Complex rhs = Complex(0.0, two_pi) * bilinear(u.normalized(), xc) * bb_transform(R, xc).value;
  return std::abs(lhs - rhs);
}

struct VertexPolynomialSum {
  int degree = 0;                            // each polynomial is homogeneous of this degree
  std::vector<RVector> vertices;             // lexicographic order
  std::vector<std::vector<Complex>> polys;   // coefficients of x1^{deg-m} x2^m, m = 0..deg
};

inline Complex evaluate_homogeneous(const std::vector<Complex>& p, const CVector& x) {
  const int deg = static_cast<int>(p.size()) - 1;
  Complex acc{0.0, 0.0};
  for (int m = 0; m <= deg; ++m)
    acc += p[m] * std::pow(x[0], deg - m) * std::pow(x[1], m);
  return acc;
}

// Applies D = d_{u_1} ... d_{u_K} symbolically; each endpoint collects a
// homogeneous degree-(K-1) polynomial (2pi i)^{K-1} prod_{k != j} (u_k . x).
inline VertexPolynomialSum vertex_polynomial_sum(const SegmentMeasure& mu) {
  const int K = static_cast<int>(mu.direction_set.size());
  if (K < 1) throw DegenerateInput("empty segment measure");
  std::vector<RVector> pts;
  for (const Segment& s : mu.segments) {
    pts.push_back(s.a);
    pts.push_back(s.b);
  }
  const double scale = std::max(1.0, detail::cloud_diameter(pts));
  const double merge_tol = 1e-9 * scale;

  std::vector<RVector> verts;
  std::vector<std::vector<Complex>> polys;
  auto slot_of = [&](const RVector& v) {
    for (size_t i = 0; i < verts.size(); ++i)
      if ((verts[i] - v).norm() < merge_tol) return static_cast<int>(i);
    verts.push_back(v);
    polys.emplace_back(K, Complex{0.0, 0.0});
    return static_cast<int>(verts.size()) - 1;
  };

  for (const Segment& s : mu.segments) {
    RVector dir = (s.b - s.a).normalized();
    int own = -1;
    for (int k = 0; k < K; ++k)
      if ((mu.direction_set[k] - dir).norm() < 1e-12) { own = k; break; }
    if (own < 0) throw DegenerateInput("segment direction missing from direction set");
    std::vector<Complex> poly{Complex{1.0, 0.0}};  // grows to degree K-1
    for (int k = 0; k < K; ++k) {
      if (k == own) continue;
      Complex alpha = Complex(0.0, two_pi) * mu.direction_set[k][0];
      Complex beta = Complex(0.0, two_pi) * mu.direction_set[k][1];
      std::vector<Complex> next(poly.size() + 1, Complex{0.0, 0.0});
      for (size_t m = 0; m < poly.size(); ++m) {
        next[m] += alpha * poly[m];
        next[m + 1] += beta * poly[m];
      }
      poly = std::move(next);
    }
    int ia = slot_of(s.a), ib = slot_of(s.b);
    for (int m = 0; m < K; ++m) {
      polys[ia][m] += s.c * poly[m];
      polys[ib][m] -= s.c * poly[m];
    }
  }

  double cmax = 0.0;
  for (const auto& p : polys)
    for (const auto& c : p) cmax = std::max(cmax, std::abs(c));
  VertexPolynomialSum out;
  out.degree = K - 1;
  std::vector<int> order(verts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return detail::lex_less(verts[a], verts[b]); });
  for (int i : order) {
    double pmax = 0.0;
    for (const auto& c : polys[i]) pmax = std::max(pmax, std::abs(c));
    if (pmax <= 1e-12 * std::max(1.0, cmax)) continue;  // omit vanished vertices
    out.vertices.push_back(verts[i]);
    out.polys.push_back(polys[i]);
  }
  return out;
}

inline Complex evaluate_vertex_polynomial_sum(const VertexPolynomialSum& V, const CVector& x) {
  Complex acc{0.0, 0.0};
  for (size_t i = 0; i < V.vertices.size(); ++i) {
    Complex phase = std::exp(Complex(0.0, -two_pi) * bilinear(V.vertices[i], x));
    acc += evaluate_homogeneous(V.polys[i], x) * phase;
  }
  return acc;
}

// Max |p(gamma(t))| over 256 real samples of the trig circle.
inline double homogeneous_circle_vanishing_check(const std::vector<Complex>& p,
                                                 const ComplexCircle& C) {
  double pmax = 0.0;
  for (const auto& c : p) pmax = std::max(pmax, std::abs(c));
  if (p.empty() || pmax == 0.0) throw DegenerateInput("zero polynomial");
  double best = 0.0;
  for (int k = 0; k < 256; ++k) {
    CVector z = circle_point_trig(C, Complex(two_pi * k / 256.0, 0.0));
    CVector x(2);
    x << z[C.axis1], z[C.axis2];
    best = std::max(best, std::abs(evaluate_homogeneous(p, x)));
  }
  return best;
}

}  // namespace polyfourier
