#include <catch2/catch_amalgamated.hpp>

#include "afx/polytope.hpp"

using namespace afx;

namespace {
Vec v2(int a, int b) { return {Rat(a), Rat(b)}; }
Vec v3(int a, int b, int c) { return {Rat(a), Rat(b), Rat(c)}; }
}  // namespace

TEST_CASE("convex hull drops interior and collinear points") {
  auto tri = VPolytope::hull(2, {v2(0, 0), v2(1, 0), v2(0, 1), {Rat(1, 4), Rat(1, 4)}});
  CHECK(tri.vertex_count() == 3);

  auto cube = VPolytope::unit_cube(3);
  CHECK(cube.vertex_count() == 8);
  CHECK(VPolytope::hull(3, cube.vertices()) == cube);

  auto seg = VPolytope::hull(2, {v2(0, 0), v2(1, 1), {Rat(1, 2), Rat(1, 2)}});
  CHECK(seg.vertex_count() == 2);
  CHECK(seg.vertices()[0] == v2(0, 0));
  CHECK(seg.vertices()[1] == v2(1, 1));

  CHECK_THROWS_AS(VPolytope::hull(2, {}), invalid_input);
}

TEST_CASE("hull is idempotent on a messy point cloud") {
  std::vector<Vec> pts;
  for (int x = -2; x <= 2; ++x)
    for (int y = -2; y <= 2; ++y) pts.push_back(v2(x, y));
  auto p = VPolytope::hull(2, pts);
  CHECK(p.vertex_count() == 4);
  CHECK(VPolytope::hull(2, p.vertices()) == p);
}

TEST_CASE("minkowski sums") {
  auto sx = VPolytope::segment(v2(0, 0), v2(1, 0));
  auto sy = VPolytope::segment(v2(0, 0), v2(0, 1));
  auto square = minkowski_sum(sx, sy);
  CHECK(square == VPolytope::unit_cube(2));

  auto cube = VPolytope::unit_cube(3);
  auto moved = minkowski_sum(cube, VPolytope::point(v3(1, 2, 3)));
  CHECK(moved == cube.translate(v3(1, 2, 3)));

  auto ssum = minkowski_sum(sx, sx);
  CHECK(ssum == VPolytope::segment(v2(0, 0), v2(2, 0)));

  CHECK_THROWS_AS(minkowski_sum(sx, VPolytope::unit_cube(3)), invalid_input);
}

TEST_CASE("minkowski sum is commutative and associative") {
  auto a = VPolytope::hull(2, {v2(0, 0), v2(2, 1), v2(1, 3)});
  auto b = VPolytope::segment(v2(0, 0), v2(1, -1));
  auto c = VPolytope::unit_cube(2);
  CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
  CHECK(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));
}

TEST_CASE("support values") {
  auto cube = VPolytope::unit_cube(3);
  CHECK(cube.support_value(v3(1, 1, 1)) == 3);
  CHECK(cube.support_value(v3(-1, 0, 0)) == 0);

  // square spanned by e1,e2 inside R^4
  auto sq4 = minkowski_sum(VPolytope::segment(zero_vec(4), unit_vec(4, 0)),
                           VPolytope::segment(zero_vec(4), unit_vec(4, 1)));
  CHECK(sq4.support_value(unit_vec(4, 2)) == 0);
  CHECK(sq4.dim() == 2);

  // support is additive under Minkowski sum
  auto a = VPolytope::hull(2, {v2(0, 0), v2(2, 1), v2(1, 3)});
  auto b = VPolytope::hull(2, {v2(0, 0), v2(1, -1), v2(-1, 0)});
  auto s = minkowski_sum(a, b);
  for (const Vec& u : {v2(1, 0), v2(3, -2), v2(-1, 7), v2(0, -1)})
    CHECK(s.support_value(u) == a.support_value(u) + b.support_value(u));
}

TEST_CASE("faces") {
  auto cube = VPolytope::unit_cube(3);
  auto top = cube.face(v3(1, 0, 0));
  CHECK(top.vertex_count() == 4);
  CHECK(top.dim() == 2);

  auto edge = cube.face(v3(1, 1, 0));
  REQUIRE(edge.vertex_count() == 2);
  CHECK(edge.vertices()[0] == v3(1, 1, 0));
  CHECK(edge.vertices()[1] == v3(1, 1, 1));

  auto seg = VPolytope::segment(zero_vec(2), unit_vec(2, 0));
  CHECK(seg.face(v2(0, 1)) == seg);

  CHECK_THROWS_AS(cube.face(zero_vec(3)), invalid_input);

  // F(A+B,u) = F(A,u) + F(B,u)
  auto a = VPolytope::hull(2, {v2(0, 0), v2(2, 1), v2(1, 3), v2(-1, -1)});
  auto b = VPolytope::unit_cube(2);
  auto sum = minkowski_sum(a, b);
  for (const Vec& u : {v2(1, 0), v2(1, 1), v2(-2, 5)})
    CHECK(sum.face(u) == minkowski_sum(a.face(u), b.face(u)));
}

TEST_CASE("facet normals") {
  auto square = VPolytope::unit_cube(2);
  auto fs = square.facet_normals();
  REQUIRE(fs.size() == 4);

  auto cube = VPolytope::unit_cube(3);
  CHECK(cube.facet_normals().size() == 6);

  auto tri = VPolytope::hull(2, {v2(0, 0), v2(1, 0), v2(0, 1)});
  auto tn = tri.facet_normals();
  REQUIRE(tn.size() == 3);
  std::vector<Vec> expect = {v2(-1, 0), v2(0, -1), v2(1, 1)};
  std::sort(expect.begin(), expect.end(), lex_less);
  CHECK(tn == expect);

  CHECK_THROWS_AS(VPolytope::point(v2(1, 1)).facet_normals(), invalid_input);

  // lower-dimensional body: normals live in the direction space
  auto seg = VPolytope::segment(v3(0, 0, 0), v3(1, 1, 0));
  auto sn = seg.facet_normals();
  REQUIRE(sn.size() == 2);
  for (const auto& nrm : sn) CHECK(seg.direction_space().contains(nrm));
}

TEST_CASE("volumes") {
  CHECK(VPolytope::unit_cube(3).volume() == 1);

  auto simplex = VPolytope::hull(3, {v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)});
  CHECK(simplex.volume() == Rat(1, 6));

  auto seg = VPolytope::segment(v2(0, 0), v2(1, 1));
  CHECK(seg.volume() == 0);
  CHECK(seg.intrinsic_volume() == ScaledRational::sqrt_of(Rat(2)));

  CHECK(VPolytope::point(v3(1, 2, 3)).intrinsic_volume() == ScaledRational(Rat(1)));
  CHECK(VPolytope::point(v3(1, 2, 3)).volume() == 0);

  // volume scales like the n-th power
  auto p = VPolytope::hull(3, {v3(0, 0, 0), v3(2, 0, 0), v3(0, 3, 0), v3(0, 0, 1), v3(2, 3, 1)});
  Rat vol = p.volume();
  CHECK(p.scale(Rat(3, 2)).volume() == vol * Rat(27, 8));

  // 24-cell style check in R^4: cross polytope volume 2/4! * 2^4 = 2/3
  std::vector<Vec> cross;
  for (int i = 0; i < 4; ++i) {
    cross.push_back(unit_vec(4, i));
    cross.push_back(vscale(Rat(-1), unit_vec(4, i)));
  }
  CHECK(VPolytope::hull(4, cross).volume() == Rat(2, 3));
}

TEST_CASE("dims") {
  CHECK(VPolytope::point(v2(1, 1)).dim() == 0);
  auto sq4 = minkowski_sum(VPolytope::segment(zero_vec(4), unit_vec(4, 0)),
                           VPolytope::segment(zero_vec(4), unit_vec(4, 1)));
  CHECK(sq4.dim() == 2);
  CHECK(VPolytope::unit_cube(4).dim() == 4);
}

TEST_CASE("face of face composition is stable on an edge arc") {
  // for u strictly between adjacent facet normals, F(C,u) is the shared edge
  auto cube = VPolytope::unit_cube(3);
  auto e1 = cube.face(v3(2, 1, 0));
  auto e2 = cube.face(v3(1, 2, 0));
  CHECK(e1 == e2);
  CHECK(e1 == cube.face(v3(1, 1, 0)));
}
