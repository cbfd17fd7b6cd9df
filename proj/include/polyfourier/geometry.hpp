#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "common.hpp"

namespace polyfourier {

struct Polytope {
  int dim = 0;
  std::vector<RVector> vertices;
  std::vector<std::pair<int, int>> edges;  // normalized i < j
};

struct PolytopalRegion {
  std::vector<Polytope> parts;
  int dim() const { return parts.empty() ? 0 : parts.front().dim; }
};

struct SimplicialCone {
  RVector apex;
  std::vector<RVector> generators;  // unit length, d of them
  double abs_det = 0.0;
};

struct VertexConeDecomposition {
  int dim = 0;
  std::vector<RVector> vertices;                  // merged, lexicographic order
  std::vector<std::vector<SimplicialCone>> cones; // cones[i] belongs to vertices[i]
};

namespace detail {

inline double cloud_diameter(const std::vector<RVector>& pts) {
  double d2 = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      d2 = std::max(d2, (pts[i] - pts[j]).squaredNorm());
  return std::sqrt(d2);
}

inline bool lex_less(const RVector& a, const RVector& b) {
  for (int k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return true;
    if (a[k] > b[k]) return false;
  }
  return false;
}

inline int affine_rank(const std::vector<RVector>& pts, double rel_tol = 1e-9) {
  if (pts.size() < 2) return 0;
  const int d = static_cast<int>(pts.front().size());
  RMatrix M(static_cast<int>(pts.size()) - 1, d);
  for (size_t i = 1; i < pts.size(); ++i) M.row(static_cast<int>(i) - 1) = (pts[i] - pts[0]).transpose();
  Eigen::JacobiSVD<RMatrix> svd(M);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  int r = 0;
  for (int k = 0; k < s.size(); ++k)
    if (s[k] > rel_tol * s[0]) ++r;
  return r;
}

// Monotone chain; returns indices of the strictly convex hull in CCW order.
inline std::vector<int> hull_indices_2d(const std::vector<RVector>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
    return pts[a][1] < pts[b][1];
  });
  const double diam = cloud_diameter(pts);
  const double eps = 1e-12 * std::max(1.0, diam * diam);
  auto cross = [&](int o, int a, int b) {
    return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
           (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
  };
  std::vector<int> h(2 * n);
  int k = 0;
  for (int ii = 0; ii < n; ++ii) {
    int p = idx[ii];
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= eps) --k;
    h[k++] = p;
  }
  for (int ii = n - 2, lower = k + 1; ii >= 0; --ii) {
    int p = idx[ii];
    while (k >= lower && cross(h[k - 2], h[k - 1], p) <= eps) --k;
    h[k++] = p;
  }
  h.resize(k - 1);
  return h;
}

struct Hull3 {
  std::vector<std::array<int, 3>> facets;  // indices into the input point list
  std::vector<RVector> normals;            // outward unit normals
  std::vector<double> offsets;             // plane: n.x = offset
};

inline Hull3 hull_3d(const std::vector<RVector>& pts) {
  const int n = static_cast<int>(pts.size());
  const double diam = cloud_diameter(pts);
  if (n < 4 || diam == 0.0) throw DegenerateInput("hull needs 4 non-coplanar points");
  const double tol = 1e-9 * std::max(1.0, diam);

  auto as3 = [&](int i) { return Eigen::Vector3d(pts[i][0], pts[i][1], pts[i][2]); };

  // deterministic initial simplex: extremal choices, first index wins ties
  int p0 = 0;
  for (int i = 1; i < n; ++i)
    if (lex_less(pts[i], pts[p0])) p0 = i;
  int p1 = -1;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    double v = (as3(i) - as3(p0)).norm();
    if (v > best + tol * 1e-3) { best = v; p1 = i; }
  }
  if (best < tol) throw DegenerateInput("all points coincide");
  Eigen::Vector3d dir = (as3(p1) - as3(p0)).normalized();
  int p2 = -1;
  best = -1.0;
  for (int i = 0; i < n; ++i) {
    Eigen::Vector3d r = as3(i) - as3(p0);
    double v = (r - r.dot(dir) * dir).norm();
    if (v > best + tol * 1e-3) { best = v; p2 = i; }
  }
  if (best < tol) throw DegenerateInput("points are collinear");
  Eigen::Vector3d nrm0 = (as3(p1) - as3(p0)).cross(as3(p2) - as3(p0));
  int p3 = -1;
  best = -1.0;
  for (int i = 0; i < n; ++i) {
    double v = std::abs(nrm0.dot(as3(i) - as3(p0)));
    if (v > best + tol * 1e-3 * nrm0.norm()) { best = v; p3 = i; }
  }
  if (p3 < 0 || best < tol * nrm0.norm()) throw DegenerateInput("points are coplanar");

  Eigen::Vector3d interior = (as3(p0) + as3(p1) + as3(p2) + as3(p3)) / 4.0;

  struct Facet {
    std::array<int, 3> v;
    Eigen::Vector3d n;
    double off;
    bool alive = true;
  };
  std::vector<Facet> fs;
  auto add_facet = [&](int a, int b, int c) {
    Eigen::Vector3d nn = (as3(b) - as3(a)).cross(as3(c) - as3(a));
    double ln = nn.norm();
    if (ln < tol * tol) throw DegenerateInput("degenerate hull facet");
    nn /= ln;
    double off = nn.dot(as3(a));
    if (nn.dot(interior) > off) { nn = -nn; off = -off; std::swap(b, c); }
    fs.push_back({{a, b, c}, nn, off, true});
  };
  add_facet(p0, p1, p2);
  add_facet(p0, p1, p3);
  add_facet(p0, p2, p3);
  add_facet(p1, p2, p3);

  for (int i = 0; i < n; ++i) {
    if (i == p0 || i == p1 || i == p2 || i == p3) continue;
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(fs.size()); ++f)
      if (fs[f].alive && fs[f].n.dot(as3(i)) - fs[f].off > tol) visible.push_back(f);
    if (visible.empty()) continue;
    std::map<std::pair<int, int>, int> owner;  // directed edge -> alive facet
    for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
      if (!fs[f].alive) continue;
      const auto& t = fs[f].v;
      owner[{t[0], t[1]}] = f;
      owner[{t[1], t[2]}] = f;
      owner[{t[2], t[0]}] = f;
    }
    std::vector<std::pair<int, int>> horizon;
    std::vector<char> vis(fs.size(), 0);
    for (int f : visible) vis[f] = 1;
    for (int f : visible) {
      const auto& t = fs[f].v;
      const std::pair<int, int> es[3] = {{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}};
      for (const auto& e : es) {
        auto it = owner.find({e.second, e.first});
        if (it == owner.end() || !vis[it->second]) horizon.push_back(e);
      }
    }
    for (int f : visible) fs[f].alive = false;
    for (const auto& e : horizon) add_facet(e.first, e.second, i);
  }

  Hull3 out;
  for (const auto& f : fs) {
    if (!f.alive) continue;
    out.facets.push_back(f.v);
    RVector nv(3);
    nv << f.n[0], f.n[1], f.n[2];
    out.normals.push_back(nv);
    out.offsets.push_back(f.off);
  }
  return out;
}

// Real hull edges: triangle edges whose two incident facets are not coplanar.
inline std::vector<std::pair<int, int>> hull_edges_3d(const Hull3& h) {
  std::map<std::pair<int, int>, std::vector<int>> inc;
  for (int f = 0; f < static_cast<int>(h.facets.size()); ++f) {
    const auto& t = h.facets[f];
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      inc[{std::min(a, b), std::max(a, b)}].push_back(f);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [e, fl] : inc) {
    bool bent = false;
    for (size_t i = 0; i < fl.size() && !bent; ++i)
      for (size_t j = i + 1; j < fl.size() && !bent; ++j)
        if (h.normals[fl[i]].dot(h.normals[fl[j]]) < 1.0 - 1e-9) bent = true;
    if (bent) edges.push_back(e);
  }
  return edges;
}

inline std::vector<int> hull_vertex_indices_3d(const Hull3& h) {
  std::vector<int> v;
  for (const auto& t : h.facets) v.insert(v.end(), t.begin(), t.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

inline Polytope convex_hull(const std::vector<RVector>& points);

// Validating constructor; edge extraction is delegated to convex_hull in d <= 3.
inline Polytope make_polytope(int dim, std::vector<RVector> vertices,
                              std::vector<std::pair<int, int>> edges) {
  if (dim < 1) throw DegenerateInput("dimension must be positive");
  if (vertices.empty()) throw DegenerateInput("polytope needs vertices");
  for (const auto& v : vertices) {
    if (v.size() != dim) throw DegenerateInput("vertex dimension mismatch");
    if (!v.allFinite()) throw DegenerateInput("non-finite vertex");
  }
  if (detail::affine_rank(vertices) < dim)
    throw DegenerateInput("polytope is not full-dimensional");
  const int n = static_cast<int>(vertices.size());
  std::vector<std::pair<int, int>> norm;
  for (auto [a, b] : edges) {
    if (a == b || a < 0 || b < 0 || a >= n || b >= n)
      throw DegenerateInput("invalid edge index");
    norm.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  std::vector<int> degree(n, 0);
  for (auto [a, b] : norm) { ++degree[a]; ++degree[b]; }
  for (int i = 0; i < n; ++i)
    if (degree[i] < dim)
      throw DegenerateInput("vertex " + std::to_string(i) + " has fewer than d incident edges");
  if (dim <= 3) {
    Polytope hull = convex_hull(vertices);
    if (hull.vertices.size() != vertices.size())
      throw DegenerateInput("vertex list contains non-extreme points");
  }
  return Polytope{dim, std::move(vertices), std::move(norm)};
}

inline Polytope convex_hull(const std::vector<RVector>& points) {
  if (points.empty()) throw DegenerateInput("no points");
  const int d = static_cast<int>(points.front().size());
  for (const auto& p : points)
    if (p.size() != d || !p.allFinite()) throw DegenerateInput("bad point");
  if (d != 2 && d != 3)
    throw DegenerateInput("hull construction supports d in {2,3}; supply edges explicitly otherwise");
  if (detail::affine_rank(points) < d)
    throw DegenerateInput("points are not full-dimensional");
  Polytope P;
  P.dim = d;
  if (d == 2) {
    std::vector<int> h = detail::hull_indices_2d(points);
    const int m = static_cast<int>(h.size());
    if (m < 3) throw DegenerateInput("degenerate 2-D hull");
    for (int i : h) P.vertices.push_back(points[i]);
    for (int i = 0; i < m; ++i) {
      int a = i, b = (i + 1) % m;
      P.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  } else {
    detail::Hull3 h = detail::hull_3d(points);
    std::vector<int> vids = detail::hull_vertex_indices_3d(h);
    std::map<int, int> remap;
    for (int i = 0; i < static_cast<int>(vids.size()); ++i) remap[vids[i]] = i;
    for (int i : vids) P.vertices.push_back(points[i]);
    for (auto [a, b] : detail::hull_edges_3d(h)) {
      int ra = remap[a], rb = remap[b];
      P.edges.emplace_back(std::min(ra, rb), std::max(ra, rb));
    }
  }
  std::sort(P.edges.begin(), P.edges.end());
  return P;
}

// Vertex indices of a convex polygon in CCW boundary order, derived from edges.
inline std::vector<int> polygon_cycle(const Polytope& P) {
  if (P.dim != 2) throw DegenerateInput("polygon_cycle needs d = 2");
  const int n = static_cast<int>(P.vertices.size());
  std::vector<std::vector<int>> nbr(n);
  for (auto [a, b] : P.edges) { nbr[a].push_back(b); nbr[b].push_back(a); }
  for (int i = 0; i < n; ++i) {
    if (nbr[i].size() != 2) throw DegenerateInput("polygon vertex degree must be 2");
    std::sort(nbr[i].begin(), nbr[i].end());
  }
  std::vector<int> cyc{0, nbr[0][0]};
  while (static_cast<int>(cyc.size()) < n) {
    int cur = cyc.back(), prev = cyc[cyc.size() - 2];
    int nxt = (nbr[cur][0] == prev) ? nbr[cur][1] : nbr[cur][0];
    cyc.push_back(nxt);
  }
  double area2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const RVector& a = P.vertices[cyc[i]];
    const RVector& b = P.vertices[cyc[(i + 1) % n]];
    area2 += a[0] * b[1] - b[0] * a[1];
  }
  if (area2 < 0) std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

inline std::vector<RVector> tangent_cone(const Polytope& P, int v) {
  if (v < 0 || v >= static_cast<int>(P.vertices.size()))
    throw DegenerateInput("vertex index out of range");
  std::vector<int> nbrs;
  for (auto [a, b] : P.edges) {
    if (a == v) nbrs.push_back(b);
    if (b == v) nbrs.push_back(a);
  }
  std::sort(nbrs.begin(), nbrs.end());
  std::vector<RVector> gens;
  for (int j : nbrs) {
    RVector w = P.vertices[j] - P.vertices[v];
    double ln = w.norm();
    if (ln == 0.0) throw DegenerateInput("zero-length edge");
    gens.push_back(w / ln);
  }
  return gens;
}

inline std::vector<SimplicialCone> triangulate_cone(const RVector& apex,
                                                    const std::vector<RVector>& generators) {
  const int d = static_cast<int>(apex.size());
  const int m = static_cast<int>(generators.size());
  if (m < d) throw DegenerateInput("cone generators do not span");
  std::vector<RVector> unit;
  for (const auto& g : generators) {
    double ln = g.norm();
    if (ln == 0.0) throw DegenerateInput("zero generator");
    unit.push_back(g / ln);
  }
  auto make_cone = [&](const std::vector<int>& pick) {
    RMatrix G(d, d);
    std::vector<RVector> gs;
    for (int k = 0; k < d; ++k) {
      G.col(k) = unit[pick[k]];
      gs.push_back(unit[pick[k]]);
    }
    double det = std::abs(G.determinant());
    if (det < 1e-12) throw DegenerateInput("simplicial cone generators are dependent");
    return SimplicialCone{apex, std::move(gs), det};
  };
  if (m == d) {
    if (d == 2) {
      double cross = unit[0][0] * unit[1][1] - unit[0][1] * unit[1][0];
      double dot = unit[0].dot(unit[1]);
      if (std::abs(cross) < 1e-12 && dot < 0) throw NotPointed("generators are opposite");
    }
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    return {make_cone(all)};
  }
  if (d == 2) throw DegenerateInput("a 2-D polytope vertex cone has exactly two generators");
  if (d != 3) throw DegenerateInput("cone triangulation beyond d = 3 needs simplicial input");

  RVector mu = RVector::Zero(3);
  for (const auto& g : unit) mu += g;
  double mln = mu.norm();
  if (mln < 1e-12) throw NotPointed("generator mean vanishes");
  mu /= mln;
  std::vector<double> h(m);
  for (int i = 0; i < m; ++i) {
    h[i] = unit[i].dot(mu);
    if (h[i] < 1e-12) throw NotPointed("cone is not pointed along its mean direction");
  }
  // cross-section polygon at offset 1 along mu; fan from the lowest-index generator
  RVector b1 = RVector::Zero(3);
  int least = 0;
  for (int k = 1; k < 3; ++k)
    if (std::abs(mu[k]) < std::abs(mu[least])) least = k;
  b1[least] = 1.0;
  b1 -= b1.dot(mu) * mu;
  b1.normalize();
  Eigen::Vector3d m3(mu[0], mu[1], mu[2]), b13(b1[0], b1[1], b1[2]);
  Eigen::Vector3d b23 = m3.cross(b13);
  std::vector<RVector> sect(m);
  RVector cen = RVector::Zero(3);
  for (int i = 0; i < m; ++i) {
    sect[i] = unit[i] / h[i];
    cen += sect[i];
  }
  cen /= m;
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> ang(m);
  for (int i = 0; i < m; ++i) {
    Eigen::Vector3d r(sect[i][0] - cen[0], sect[i][1] - cen[1], sect[i][2] - cen[2]);
    ang[i] = std::atan2(r.dot(b23), r.dot(b13));
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ang[a] < ang[b]; });
  int pos = 0;
  while (order[pos] != 0) ++pos;  // generator 0 has the lowest input index
  std::rotate(order.begin(), order.begin() + pos, order.end());
  std::vector<SimplicialCone> out;
  for (int k = 1; k + 1 < m; ++k) out.push_back(make_cone({order[0], order[k], order[k + 1]}));
  return out;
}

inline double volume_of_part(const Polytope& P) {
  const int d = P.dim;
  const int n = static_cast<int>(P.vertices.size());
  if (d == 2) {
    std::vector<int> cyc = polygon_cycle(P);
    double area2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const RVector& a = P.vertices[cyc[i]];
      const RVector& b = P.vertices[cyc[(i + 1) % n]];
      area2 += a[0] * b[1] - b[0] * a[1];
    }
    return 0.5 * std::abs(area2);
  }
  if (d == 3) {
    detail::Hull3 h = detail::hull_3d(P.vertices);
    const RVector& o = P.vertices[0];
    double vol = 0.0;
    for (const auto& t : h.facets) {
      if (t[0] == 0 || t[1] == 0 || t[2] == 0) continue;
      RMatrix M(3, 3);
      M.col(0) = P.vertices[t[0]] - o;
      M.col(1) = P.vertices[t[1]] - o;
      M.col(2) = P.vertices[t[2]] - o;
      vol += std::abs(M.determinant()) / 6.0;
    }
    return vol;
  }
  if (n == d + 1) {
    RMatrix M(d, d);
    for (int k = 0; k < d; ++k) M.col(k) = P.vertices[k + 1] - P.vertices[0];
    double fact = 1.0;
    for (int k = 2; k <= d; ++k) fact *= k;
    return std::abs(M.determinant()) / fact;
  }
  throw DegenerateInput("volume beyond d = 3 handles only simplices");
}

// Candidate-vertex estimate of vol(P ∩ Q); exact for convex parts at desk scale.
inline double intersection_volume(const Polytope& P, const Polytope& Q) {
  const int d = P.dim;
  if (d != Q.dim) throw DegenerateInput("dimension mismatch");
  if (d != 2 && d != 3) throw DegenerateInput("intersection volume needs d in {2,3}");
  std::vector<RVector> all;
  all.insert(all.end(), P.vertices.begin(), P.vertices.end());
  all.insert(all.end(), Q.vertices.begin(), Q.vertices.end());
  const double scale = std::max(1.0, detail::cloud_diameter(all));
  const double tol = 1e-9 * scale;

  std::vector<RVector> cand;
  if (d == 2) {
    auto halfplanes = [&](const Polytope& A) {
      std::vector<int> cyc = polygon_cycle(A);
      std::vector<std::pair<RVector, double>> hs;  // outward n, offset
      const int n = static_cast<int>(cyc.size());
      for (int i = 0; i < n; ++i) {
        const RVector& a = A.vertices[cyc[i]];
        const RVector& b = A.vertices[cyc[(i + 1) % n]];
        RVector nrm(2);
        nrm << (b[1] - a[1]), -(b[0] - a[0]);  // right of CCW direction = outward
        nrm.normalize();
        hs.emplace_back(nrm, nrm.dot(a));
      }
      return hs;
    };
    auto inside = [&](const std::vector<std::pair<RVector, double>>& hs, const RVector& p) {
      for (const auto& [nrm, off] : hs)
        if (nrm.dot(p) > off + tol) return false;
      return true;
    };
    auto hsP = halfplanes(P), hsQ = halfplanes(Q);
    for (const auto& v : P.vertices)
      if (inside(hsQ, v)) cand.push_back(v);
    for (const auto& v : Q.vertices)
      if (inside(hsP, v)) cand.push_back(v);
    for (auto [a1, b1] : P.edges)
      for (auto [a2, b2] : Q.edges) {
        RVector p = P.vertices[a1], r = P.vertices[b1] - p;
        RVector q = Q.vertices[a2], s = Q.vertices[b2] - q;
        double den = r[0] * s[1] - r[1] * s[0];
        if (std::abs(den) < 1e-14 * scale * scale) continue;
        RVector pq = q - p;
        double t1 = (pq[0] * s[1] - pq[1] * s[0]) / den;
        double t2 = (pq[0] * r[1] - pq[1] * r[0]) / den;
        double lo = -1e-9, hi = 1.0 + 1e-9;
        if (t1 > lo && t1 < hi && t2 > lo && t2 < hi) cand.push_back(p + t1 * r);
      }
  } else {
    detail::Hull3 hP = detail::hull_3d(P.vertices);
    detail::Hull3 hQ = detail::hull_3d(Q.vertices);
    auto inside = [&](const detail::Hull3& h, const std::vector<RVector>& vs, const RVector& p) {
      for (size_t f = 0; f < h.facets.size(); ++f)
        if (h.normals[f].dot(p) > h.offsets[f] + tol) return false;
      (void)vs;
      return true;
    };
    for (const auto& v : P.vertices)
      if (inside(hQ, Q.vertices, v)) cand.push_back(v);
    for (const auto& v : Q.vertices)
      if (inside(hP, P.vertices, v)) cand.push_back(v);
    auto edge_facet_hits = [&](const Polytope& A, const detail::Hull3& hB, const Polytope& B) {
      for (auto [ia, ib] : A.edges) {
        const RVector a = A.vertices[ia];
        const RVector dir = A.vertices[ib] - a;
        for (size_t f = 0; f < hB.facets.size(); ++f) {
          double dn = hB.normals[f].dot(dir);
          if (std::abs(dn) < 1e-14 * scale) continue;
          double t = (hB.offsets[f] - hB.normals[f].dot(a)) / dn;
          if (t < -1e-9 || t > 1.0 + 1e-9) continue;
          RVector x = a + t * dir;
          bool in = true;
          for (size_t g = 0; g < hB.facets.size(); ++g)
            if (hB.normals[g].dot(x) > hB.offsets[g] + tol) { in = false; break; }
          (void)B;
          if (in) cand.push_back(x);
        }
      }
    };
    edge_facet_hits(P, hQ, Q);
    edge_facet_hits(Q, hP, P);
  }

  std::sort(cand.begin(), cand.end(), detail::lex_less);
  std::vector<RVector> uniq;
  for (const auto& p : cand) {
    bool dup = false;
    for (const auto& u : uniq)
      if ((p - u).norm() < 1e-9 * scale) { dup = true; break; }
    if (!dup) uniq.push_back(p);
  }
  if (static_cast<int>(uniq.size()) < d + 1) return 0.0;
  if (detail::affine_rank(uniq, 1e-9) < d) return 0.0;
  try {
    return volume_of_part(convex_hull(uniq));
  } catch (const DegenerateInput&) {
    return 0.0;
  }
}

inline PolytopalRegion make_region(std::vector<Polytope> parts, bool check_disjoint = true) {
  if (parts.empty()) throw DegenerateInput("region needs at least one part");
  const int d = parts.front().dim;
  for (const auto& p : parts)
    if (p.dim != d) throw DegenerateInput("parts must share one dimension");
  if (check_disjoint && d <= 3 && parts.size() > 1) {
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = i + 1; j < parts.size(); ++j)
        if (intersection_volume(parts[i], parts[j]) >= 1e-12)
          throw DegenerateInput("parts " + std::to_string(i) + " and " + std::to_string(j) +
                                " have overlapping interiors");
  }
  return PolytopalRegion{std::move(parts)};
}

inline std::vector<RVector> merged_region_vertices(const PolytopalRegion& R) {
  std::vector<RVector> all;
  for (const auto& p : R.parts) all.insert(all.end(), p.vertices.begin(), p.vertices.end());
  const double diam = detail::cloud_diameter(all);
  const double tol = global_tolerance() * std::max(diam, 1e-300);
  std::sort(all.begin(), all.end(), detail::lex_less);
  std::vector<RVector> merged;
  for (const auto& p : all) {
    bool dup = false;
    for (const auto& m : merged)
      if ((p - m).norm() < tol) { dup = true; break; }
    if (!dup) merged.push_back(p);
  }
  return merged;
}

inline double region_diameter(const PolytopalRegion& R) {
  std::vector<RVector> all;
  for (const auto& p : R.parts) all.insert(all.end(), p.vertices.begin(), p.vertices.end());
  return detail::cloud_diameter(all);
}

inline VertexConeDecomposition decompose(const PolytopalRegion& R) {
  VertexConeDecomposition D;
  D.dim = R.dim();
  D.vertices = merged_region_vertices(R);
  D.cones.assign(D.vertices.size(), {});
  const double diam = region_diameter(R);
  const double tol = global_tolerance() * std::max(diam, 1e-300);
  for (const auto& part : R.parts) {
    for (int v = 0; v < static_cast<int>(part.vertices.size()); ++v) {
      int slot = -1;
      for (int m = 0; m < static_cast<int>(D.vertices.size()); ++m)
        if ((part.vertices[v] - D.vertices[m]).norm() < tol) { slot = m; break; }
      if (slot < 0) throw DegenerateInput("vertex merge failed");
      auto cones = triangulate_cone(D.vertices[slot], tangent_cone(part, v));
      for (auto& c : cones) D.cones[slot].push_back(std::move(c));
    }
  }
  return D;
}

inline double volume(const PolytopalRegion& R) {
  double v = 0.0;
  for (const auto& p : R.parts) v += volume_of_part(p);
  return v;
}

namespace detail {

// Deterministic uniforms/normals; std::normal_distribution varies by libstdc++.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  double uniform() { return ((eng() >> 11) + 1) * 0x1.0p-53; }  // (0, 1]
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double normal() {
    double u1 = uniform(), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }
};

}  // namespace detail

inline RMatrix random_rotation(uint64_t seed, int d) {
  if (d < 2) throw DegenerateInput("rotation needs d >= 2");
  detail::Rng rng(seed);
  RMatrix G(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G(i, j) = rng.normal();
  Eigen::HouseholderQR<RMatrix> qr(G);
  RMatrix Q = qr.householderQ();
  RMatrix Rm = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k)
    if (Rm(k, k) < 0) Q.col(k) = -Q.col(k);
  if (Q.determinant() < 0) Q.col(d - 1) = -Q.col(d - 1);
  return Q;
}

inline PolytopalRegion apply_rotation(const PolytopalRegion& R, const RMatrix& Q) {
  if (Q.rows() != R.dim() || Q.cols() != R.dim()) throw DegenerateInput("rotation size mismatch");
  std::vector<Polytope> parts;
  for (const auto& p : R.parts) {
    Polytope q = p;
    for (auto& v : q.vertices) v = Q * v;
    parts.push_back(std::move(q));
  }
  return make_region(std::move(parts), false);
}

struct ProjectionCheckResult {
  bool ok = false;
  double min_separation = 0.0;
  std::vector<std::pair<int, int>> colliding_pairs;
};

// Distinctness of (coordinate-1, coordinate-2) projections of a point set.
inline ProjectionCheckResult generic_projection_check(const std::vector<RVector>& points,
                                                      double tol_factor = global_tolerance()) {
  ProjectionCheckResult res;
  if (points.size() < 2) {
    res.ok = true;
    res.min_separation = std::numeric_limits<double>::infinity();
    return res;
  }
  const double diam = detail::cloud_diameter(points);
  const double thresh = tol_factor * diam;
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      double dx = points[i][0] - points[j][0];
      double dy = points[i][1] - points[j][1];
      double sep = std::hypot(dx, dy);
      best = std::min(best, sep);
      if (sep < thresh)
        res.colliding_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  res.min_separation = best;
  res.ok = res.colliding_pairs.empty();
  return res;
}

inline ProjectionCheckResult generic_projection_check(const PolytopalRegion& R,
                                                      double tol_factor = global_tolerance()) {
  return generic_projection_check(merged_region_vertices(R), tol_factor);
}

}  // namespace polyfourier
