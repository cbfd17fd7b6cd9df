#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bessel.hpp"
#include "expsum.hpp"
#include "io.hpp"
#include "planar.hpp"

namespace polyfourier {

struct RunOutput {
  Json report;
  std::vector<std::string> csv_header;
  std::vector<std::vector<double>> csv_rows;
  bool passed = true;  // all asserted thresholds hold
};

inline Polytope unit_square_part() {
  std::vector<RVector> v(4, RVector(2));
  v[0] << 0, 0;
  v[1] << 1, 0;
  v[2] << 1, 1;
  v[3] << 0, 1;
  return convex_hull(v);
}

inline PolytopalRegion unit_square_region() { return make_region({unit_square_part()}, false); }

namespace harness {

inline Json scan_result_json(const ScanResult& res) {
  Json j;
  j["min_modulus"] = res.min_modulus;
  j["t_min"] = io::json_complex(res.t_min);
  j["points_evaluated"] = res.trace.size();
  j["points_skipped"] = res.skipped.size();
  j["notices"] = res.notices;
  return j;
}

inline void scan_trace_rows(const ScanResult& res, RunOutput& out) {
  size_t nterms = res.trace.empty() ? 0 : res.trace.front().term_moduli.size();
  out.csv_header = {"t_re", "t_im", "abs_phi"};
  for (size_t k = 0; k < nterms; ++k) out.csv_header.push_back("term_" + std::to_string(k));
  for (const ScanPoint& p : res.trace) {
    std::vector<double> row{p.t.real(), p.t.imag(), p.modulus};
    row.insert(row.end(), p.term_moduli.begin(), p.term_moduli.end());
    out.csv_rows.push_back(std::move(row));
  }
}

inline Json region_summary(const PolytopalRegion& R) {
  Json j;
  j["dim"] = R.dim();
  j["parts"] = R.parts.size();
  j["merged_vertices"] = merged_region_vertices(R).size();
  j["volume"] = volume(R);
  return j;
}

inline std::vector<Complex> real_grid(double span, int n) {
  std::vector<Complex> g;
  g.reserve(n);
  for (int k = 0; k < n; ++k) g.emplace_back(span * k / n, 0.0);
  return g;
}

inline RunOutput transform_eval(const PolytopalRegion& R, const CVector& z, bool oracle) {
  RunOutput out;
  EvaluationResult res = bb_transform(R, z);
  Json j;
  Json zj = Json::array();
  for (int k = 0; k < z.size(); ++k) zj.push_back(io::json_complex(z[k]));
  j["z"] = zj;
  j["value"] = io::json_complex(res.value);
  j["min_denominator_factor"] = res.min_denominator_factor;
  j["singular"] = res.singular_flag;
  if (oracle) {
    Complex q = quadrature_transform(R, z, 1e-10);
    j["oracle"] = io::json_complex(q);
    j["residual"] = std::abs(res.value - q);
  }
  out.report = std::move(j);
  return out;
}

inline RunOutput circle_scan(const PolytopalRegion& R, const ParametricCurve& curve, int grid) {
  if (grid < 2) throw DegenerateInput("grid must have at least 2 points");
  ExponentialSum S = restrict_bb_to_curve(R, curve);
  ScanResult res = min_modulus_scan(S, real_grid(curve_param_span(curve), grid));
  RunOutput out;
  out.report["command"] = "scan";
  out.report["region"] = region_summary(R);
  out.report["curve_kind"] = curve_kind_name(curve.kind);
  out.report["grid"] = grid;
  out.report["terms"] = S.terms.size();
  out.report["restriction_notices"] = S.notices;
  out.report["scan"] = scan_result_json(res);
  scan_trace_rows(res, out);
  return out;
}

inline RunOutput dominance_run(const PolytopalRegion& R, const ComplexCircle& C, double ymax) {
  if (!(ymax > 0.5)) throw DegenerateInput("ymax must exceed 0.5");
  ExponentialSum S = restrict_bb_to_curve(R, trig_circle_curve(C));
  std::vector<double> ys;
  for (double y = 0.5; y <= ymax + 1e-12; y += 0.25) ys.push_back(y);
  DominanceReport rep = verify_dominance(S, ys);
  RunOutput out;
  out.report["command"] = "dominance";
  out.report["region"] = region_summary(R);
  out.report["radius"] = io::json_complex(C.radius);
  Json rates = Json::array();
  for (double r : rep.rates) rates.push_back(r);
  out.report["rates"] = rates;
  out.report["dominant_index"] = rep.dominant_index;
  Json freq = Json::array();
  for (int k = 0; k < S.terms[rep.dominant_index].frequency.size(); ++k)
    freq.push_back(S.terms[rep.dominant_index].frequency[k]);
  out.report["dominant_frequency"] = freq;
  out.report["margin"] = rep.margin;
  out.report["x_star"] = rep.x_star;
  out.report["y0"] = rep.y0;
  out.report["final_ratio"] = rep.ratio_trace.back().second;
  out.report["min_modulus_top"] = rep.min_modulus_top;
  out.report["ratio_exceeds_10"] = rep.ratio_exceeds_10;
  out.report["increasing_top_half"] = rep.increasing_top_half;
  out.passed = rep.ratio_exceeds_10 && rep.increasing_top_half && rep.min_modulus_top > 0.0;
  out.report["passed"] = out.passed;
  out.csv_header = {"y", "ratio"};
  for (const auto& [y, ratio] : rep.ratio_trace) out.csv_rows.push_back({y, ratio});
  return out;
}

inline RunOutput planar_reduce(const PolytopalRegion& R, const RVector& u) {
  SegmentMeasure mu = polygon_directional_derivative(R, u);
  VertexPolynomialSum V = vertex_polynomial_sum(mu);
  RunOutput out;
  out.report["command"] = "planar_reduce";
  out.report["region"] = region_summary(R);
  out.report["direction"] = io::json_rvector(u.normalized());
  Json segs = Json::array();
  for (const Segment& s : mu.segments) {
    Json sj;
    sj["a"] = io::json_rvector(s.a);
    sj["b"] = io::json_rvector(s.b);
    sj["coefficient"] = io::json_complex(s.c);
    segs.push_back(std::move(sj));
  }
  out.report["segments"] = segs;
  Json dirs = Json::array();
  for (const RVector& d : mu.direction_set) dirs.push_back(io::json_rvector(d));
  out.report["direction_set"] = dirs;
  out.report["polynomial_degree"] = V.degree;
  Json entries = Json::array();
  for (size_t i = 0; i < V.vertices.size(); ++i) {
    Json e;
    e["vertex"] = io::json_rvector(V.vertices[i]);
    Json cs = Json::array();
    for (const Complex& c : V.polys[i]) cs.push_back(io::json_complex(c));
    e["coefficients"] = cs;
    entries.push_back(std::move(e));
  }
  out.report["vertex_polynomials"] = entries;
  return out;
}

inline RunOutput curve_check(const PolytopalRegion& R, const ParametricCurve& curve, int grid) {
  RunOutput out;
  out.report["command"] = "curve_check";
  out.report["region"] = region_summary(R);
  out.report["curve_kind"] = curve_kind_name(curve.kind);
  out.report["declared_rho"] = curve.rho;  // trusted as supplied, not verified
  ContainmentVerdict v = affine_hull_containment(curve, std::max(4 * curve.dim, 64));
  Json cj;
  cj["contained"] = v.contained;
  cj["sigma_min"] = v.sigma_min;
  cj["sigma_max"] = v.sigma_max;
  if (v.contained) {
    Json nj = Json::array();
    for (int k = 0; k < v.normal.size(); ++k) nj.push_back(io::json_complex(v.normal[k]));
    cj["normal"] = nj;
  }
  out.report["affine_hull"] = cj;
  out.report["hypothesis_violated"] = v.contained;

  std::vector<RVector> verts = merged_region_vertices(R);
  std::vector<BrownawellPair> pairs = brownawell_pair_check(curve, verts, curve.rho);
  Json pj = Json::array();
  for (const BrownawellPair& p : pairs) {
    Json e;
    e["k"] = p.k;
    e["l"] = p.l;
    Json cs = Json::array();
    for (const Complex& c : p.polynomial) cs.push_back(io::json_complex(c));
    e["polynomial"] = cs;
    pj.push_back(std::move(e));
  }
  out.report["brownawell_pairs"] = pj;

  if (curve.kind == CurveKind::Analytic)
    out.report["vanishing_rank_degree5"] = vanishing_polynomial_rank(curve, 5, 42);

  ExponentialSum S = restrict_bb_to_curve(R, curve);
  ScanResult res = min_modulus_scan(S, real_grid(curve_param_span(curve), grid));
  out.report["scan"] = scan_result_json(res);
  scan_trace_rows(res, out);
  return out;
}

inline RunOutput pompeiu_demo(const PolytopalRegion& R, uint64_t seed, int grid_real,
                              int grid_complex, bool do_assert) {
  RunOutput out;
  const double j11 = bessel_j1_first_zero();
  const double rho_star = j11 / two_pi;
  const double disk_value = disk_transform_profile(rho_star);
  out.report["command"] = "pompeiu_demo";
  out.report["seed"] = seed;
  out.report["region"] = region_summary(R);
  out.report["bessel_first_zero"] = j11;
  out.report["rho_star"] = rho_star;
  out.report["disk_profile_at_rho_star"] = disk_value;

  auto scan_circle = [&](Complex radius, int n) {
    ComplexCircle C = make_circle(CVector::Zero(2), radius);
    ExponentialSum S = restrict_bb_to_curve(R, trig_circle_curve(C));
    return min_modulus_scan(S, real_grid(two_pi, n));
  };

  Json scans = Json::array();
  double worst_min = std::numeric_limits<double>::infinity();
  ScanResult real_scan = scan_circle(Complex{rho_star, 0.0}, grid_real);
  worst_min = std::min(worst_min, real_scan.min_modulus);
  {
    Json s = scan_result_json(real_scan);
    s["label"] = "real_sphere_slice";
    s["radius"] = io::json_complex(Complex{rho_star, 0.0});
    scans.push_back(std::move(s));
  }
  detail::Rng rng(seed);
  for (int r = 0; r < 8; ++r) {
    double theta = rng.uniform(0.0, two_pi);
    Complex radius = rho_star * std::exp(i_unit * theta);
    ScanResult sc = scan_circle(radius, grid_complex);
    worst_min = std::min(worst_min, sc.min_modulus);
    Json s = scan_result_json(sc);
    s["label"] = "complex_circle_" + std::to_string(r);
    s["radius"] = io::json_complex(radius);
    scans.push_back(std::move(s));
  }
  out.report["scans"] = scans;
  out.report["region_min_modulus"] = worst_min;

  bool disk_ok = std::abs(disk_value) <= 1e-10;
  bool region_ok = worst_min >= 1e-4;
  out.report["asserted"] = do_assert;
  out.report["disk_vanishes"] = disk_ok;
  out.report["region_min_above_1e-4"] = region_ok;
  out.passed = !do_assert || (disk_ok && region_ok);
  out.report["passed"] = out.passed;
  scan_trace_rows(real_scan, out);
  return out;
}

}  // namespace harness
}  // namespace polyfourier
