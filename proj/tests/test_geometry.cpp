#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace polyfourier;
using namespace testutil;

TEST_CASE("2-D hull drops interior and collinear points") {
  auto P = convex_hull({vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1), vec2(0.5, 0.5)});
  REQUIRE(P.vertices.size() == 4);
  REQUIRE(P.edges.size() == 4);
  REQUIRE(P.vertices[0] == vec2(0, 0));

  auto Q = convex_hull({vec2(0, 0), vec2(2, 0), vec2(1, 0), vec2(2, 2), vec2(0, 2)});
  REQUIRE(Q.vertices.size() == 4);

  REQUIRE_THROWS_AS(convex_hull({vec2(0, 0), vec2(1, 1), vec2(2, 2)}), DegenerateInput);
}

TEST_CASE("3-D hull of the cube keeps 8 vertices and 12 edges") {
  std::vector<RVector> pts;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c) pts.push_back(vec3(a, b, c));
  auto P = convex_hull(pts);
  REQUIRE(P.vertices.size() == 8);
  REQUIRE(P.edges.size() == 12);

  // face centers and the body center are not extreme
  pts.push_back(vec3(0.5, 0.5, 0.5));
  pts.push_back(vec3(0.5, 0.5, 0));
  pts.push_back(vec3(0.5, 0, 0.5));
  auto Q = convex_hull(pts);
  REQUIRE(Q.vertices.size() == 8);
  REQUIRE(Q.edges.size() == 12);

  REQUIRE_THROWS_AS(convex_hull({vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0), vec3(1, 1, 0)}),
                    DegenerateInput);
}

TEST_CASE("make_polytope validates extremeness, degrees and indices") {
  std::vector<RVector> sq{vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)};
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  auto P = make_polytope(2, sq, edges);
  REQUIRE(P.edges.size() == 4);
  REQUIRE(P.edges[0] == std::make_pair(0, 1));

  auto bad = sq;
  bad.push_back(vec2(0.5, 0.5));
  auto bad_edges = edges;
  bad_edges.emplace_back(4, 0);
  bad_edges.emplace_back(4, 1);
  REQUIRE_THROWS_AS(make_polytope(2, bad, bad_edges), DegenerateInput);

  REQUIRE_THROWS_AS(make_polytope(2, sq, {{0, 1}, {1, 2}, {2, 3}}), DegenerateInput);
  REQUIRE_THROWS_AS(make_polytope(2, sq, {{0, 1}, {1, 2}, {2, 3}, {3, 7}}), DegenerateInput);
}

TEST_CASE("polygon cycle is a CCW traversal of the edge graph") {
  auto P = convex_hull({vec2(0, 0), vec2(2, 0), vec2(3, 1), vec2(1, 3), vec2(-1, 1)});
  auto cyc = polygon_cycle(P);
  REQUIRE(cyc.size() == P.vertices.size());
  std::vector<int> seen(cyc.size(), 0);
  for (int i : cyc) ++seen[i];
  for (int s : seen) REQUIRE(s == 1);
  double area2 = 0;
  const int n = static_cast<int>(cyc.size());
  for (int i = 0; i < n; ++i) {
    const auto& a = P.vertices[cyc[i]];
    const auto& b = P.vertices[cyc[(i + 1) % n]];
    area2 += a[0] * b[1] - b[0] * a[1];
  }
  REQUIRE(area2 > 0);
}

TEST_CASE("tangent cones hold unit edge directions") {
  auto P = convex_hull({vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)});
  auto gens = tangent_cone(P, 0);
  REQUIRE(gens.size() == 2);
  REQUIRE((gens[0] - vec2(1, 0)).norm() < 1e-14);
  REQUIRE((gens[1] - vec2(0, 1)).norm() < 1e-14);

  auto T = convex_hull({vec2(0, 0), vec2(1, 0), vec2(0, 1)});
  // vertex (1,0) sees (0,0) and (0,1)
  int vi = -1;
  for (int i = 0; i < 3; ++i)
    if ((T.vertices[i] - vec2(1, 0)).norm() < 1e-14) vi = i;
  auto g = tangent_cone(T, vi);
  REQUIRE(g.size() == 2);
  for (const auto& d : g) REQUIRE(std::abs(d.norm() - 1.0) < 1e-14);
  bool has_back = false, has_diag = false;
  for (const auto& d : g) {
    if ((d - vec2(-1, 0)).norm() < 1e-12) has_back = true;
    if ((d - vec2(-1 / std::sqrt(2.0), 1 / std::sqrt(2.0))).norm() < 1e-12) has_diag = true;
  }
  REQUIRE(has_back);
  REQUIRE(has_diag);

  auto C = unit_cube().parts[0];
  int ci = -1;
  for (int i = 0; i < 8; ++i)
    if (C.vertices[i].norm() < 1e-14) ci = i;
  auto cg = tangent_cone(C, ci);
  REQUIRE(cg.size() == 3);
  for (const auto& d : cg) {
    REQUIRE(std::abs(d.norm() - 1.0) < 1e-14);
    REQUIRE(d.minCoeff() >= 0.0);
  }
}

TEST_CASE("cone triangulation: simplicial passthrough and 4-generator split") {
  RVector apex = vec3(0, 0, 1);
  std::vector<RVector> gens;
  for (auto& e : {vec3(1, 0, -1), vec3(-1, 0, -1), vec3(0, 1, -1), vec3(0, -1, -1)})
    gens.push_back(e / e.norm());
  auto cones = triangulate_cone(apex, gens);
  REQUIRE(cones.size() == 2);
  double total = 0;
  for (const auto& c : cones) {
    REQUIRE(c.generators.size() == 3);
    REQUIRE(c.abs_det > 1e-12);
    total += c.abs_det;
  }

  // tiling: a strictly interior ray lies strictly inside exactly one piece
  detail::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    RVector r = RVector::Zero(3);
    for (const auto& g : gens) r += rng.uniform() * g;
    int strictly_inside = 0;
    for (const auto& c : cones) {
      RMatrix G(3, 3);
      for (int k = 0; k < 3; ++k) G.col(k) = c.generators[k];
      RVector lam = G.partialPivLu().solve(r);
      if (lam.minCoeff() > 1e-9) ++strictly_inside;
    }
    REQUIRE(strictly_inside == 1);
  }

  auto single = triangulate_cone(vec2(0, 0), {vec2(1, 0), vec2(0, 1)});
  REQUIRE(single.size() == 1);
  REQUIRE(std::abs(single[0].abs_det - 1.0) < 1e-14);
}

TEST_CASE("non-pointed cones are rejected") {
  REQUIRE_THROWS_AS(triangulate_cone(vec2(0, 0), {vec2(1, 0), vec2(-1, 0)}), NotPointed);
  REQUIRE_THROWS_AS(
      triangulate_cone(vec3(0, 0, 0), {vec3(1, 0, 0), vec3(-1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)}),
      NotPointed);
  REQUIRE_THROWS_AS(triangulate_cone(vec2(0, 0), {vec2(1, 0)}), DegenerateInput);
}

TEST_CASE("volumes: box, simplex, union") {
  REQUIRE(std::abs(volume(unit_square()) - 1.0) < 1e-12);
  REQUIRE(std::abs(volume(unit_triangle()) - 0.5) < 1e-12);
  REQUIRE(std::abs(volume(unit_cube()) - 1.0) < 1e-12);
  REQUIRE(std::abs(volume(unit_tetrahedron()) - 1.0 / 6.0) < 1e-12);
  REQUIRE(std::abs(volume(lshape()) - 3.0) < 1e-12);

  auto a = convex_hull({vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)});
  auto b = convex_hull({vec2(1, 0), vec2(2, 0), vec2(2, 1), vec2(1, 1)});
  REQUIRE(std::abs(volume(make_region({a, b})) - 2.0) < 1e-12);
}

TEST_CASE("intersection volume and region disjointness") {
  auto a = convex_hull({vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)});
  auto b = convex_hull({vec2(0.5, 0), vec2(1.5, 0), vec2(1.5, 1), vec2(0.5, 1)});
  REQUIRE(std::abs(intersection_volume(a, b) - 0.5) < 1e-9);
  auto c = convex_hull({vec2(3, 3), vec2(4, 3), vec2(4, 4), vec2(3, 4)});
  REQUIRE(intersection_volume(a, c) == 0.0);
  REQUIRE_THROWS_AS(make_region({a, b}), DegenerateInput);

  auto ca = unit_cube().parts[0];
  std::vector<RVector> shifted;
  for (const auto& v : ca.vertices) shifted.push_back(v + vec3(0.5, 0, 0));
  auto cb = convex_hull(shifted);
  REQUIRE(std::abs(intersection_volume(ca, cb) - 0.5) < 1e-9);

  // edge-sharing and vertex-sharing unions are fine
  REQUIRE_NOTHROW(lshape());
  auto s1 = convex_hull({vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)});
  auto s2 = convex_hull({vec2(1, 1), vec2(2, 1), vec2(2, 2), vec2(1, 2)});
  auto touching = make_region({s1, s2});
  REQUIRE(merged_region_vertices(touching).size() == 7);
}

TEST_CASE("vertex-cone decomposition counts") {
  auto D = decompose(unit_square());
  REQUIRE(D.vertices.size() == 4);
  for (const auto& cs : D.cones) REQUIRE(cs.size() == 1);

  std::vector<RVector> oct{vec3(1, 0, 0),  vec3(-1, 0, 0), vec3(0, 1, 0),
                           vec3(0, -1, 0), vec3(0, 0, 1),  vec3(0, 0, -1)};
  auto O = hull_region(oct);
  auto DO = decompose(O);
  REQUIRE(DO.vertices.size() == 6);
  size_t total = 0;
  for (const auto& cs : DO.cones) {
    REQUIRE(cs.size() == 2);
    total += cs.size();
  }
  REQUIRE(total == 12);

  auto DL = decompose(lshape());
  REQUIRE(DL.vertices.size() == 7);
  size_t ncones = 0;
  for (const auto& cs : DL.cones) ncones += cs.size();
  REQUIRE(ncones == 8);  // one cone per part-vertex incidence
}

TEST_CASE("rotations are special orthogonal, deterministic, volume preserving") {
  for (int d : {2, 3}) {
    RMatrix Q = random_rotation(42, d);
    REQUIRE((Q * Q.transpose() - RMatrix::Identity(d, d)).norm() < 1e-12);
    REQUIRE(std::abs(Q.determinant() - 1.0) < 1e-12);
    RMatrix Q2 = random_rotation(42, d);
    REQUIRE((Q - Q2).norm() == 0.0);
    RMatrix Q3 = random_rotation(43, d);
    REQUIRE((Q - Q3).norm() > 1e-6);
  }
  auto R = apply_rotation(unit_cube(), random_rotation(7, 3));
  REQUIRE(std::abs(volume(R) - 1.0) < 1e-10);
}

TEST_CASE("plane projection distinctness check") {
  REQUIRE(generic_projection_check(unit_square()).ok);

  auto cube = unit_cube();
  auto bad = generic_projection_check(cube);
  REQUIRE_FALSE(bad.ok);
  REQUIRE(bad.colliding_pairs.size() == 4);
  REQUIRE(bad.min_separation < 1e-15);

  int ok_count = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed)
    if (generic_projection_check(apply_rotation(cube, random_rotation(seed, 3))).ok) ++ok_count;
  REQUIRE(ok_count >= 99);
}

TEST_CASE("random shapes satisfy basic invariants") {
  detail::Rng rng(2024);
  for (int k = 0; k < 10; ++k) {
    auto T = random_triangle(rng);
    REQUIRE(T.parts[0].vertices.size() == 3);
    REQUIRE(volume(T) >= 0.05);
    auto Q = random_quad(rng);
    REQUIRE(Q.parts[0].vertices.size() == 4);
    auto S = random_tetrahedron(rng);
    REQUIRE(S.parts[0].vertices.size() == 4);
    REQUIRE(volume(S) > 0.05 / 6.0);
  }
}
