#include <catch2/catch_amalgamated.hpp>

#include "afx/polytope.hpp"

#include <random>

using namespace afx;

namespace {

// every input point satisfies every facet inequality, every facet is tight on
// an affinely (d-1)-dimensional set, and extreme points are exactly the hull
// vertices of the facet structure
void check_hull_integrity(const std::vector<Vec>& pts, int d) {
  auto facets = hull_facets(pts, d);
  REQUIRE(facets.size() >= static_cast<std::size_t>(d) + 1);
  for (const auto& f : facets) {
    std::size_t on = 0;
    for (const auto& p : pts) {
      Rat s = dot(f.normal, p);
      REQUIRE(s <= f.offset);
      if (s == f.offset) ++on;
    }
    REQUIRE(on == f.points.size());
    auto fb = hull_detail::difference_basis(pts, f.points);
    REQUIRE(static_cast<int>(fb.size()) == d - 1);
  }
}

std::vector<Vec> random_points(std::mt19937_64& rng, int n, int count, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Vec> pts;
  for (int i = 0; i < count; ++i) {
    Vec v;
    for (int k = 0; k < n; ++k) v.push_back(Rat(dist(rng)));
    pts.push_back(std::move(v));
  }
  return pts;
}

}  // namespace

TEST_CASE("hull integrity on random integer clouds") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);  // 2..4
    auto pts = random_points(rng, n, 6 + static_cast<int>(rng() % 10), -5, 5);
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
    if (rank(Mat::from_rows(diffs)) != n) continue;
    check_hull_integrity(pts, n);
  }
}

TEST_CASE("hull integrity on zonotopes (highly degenerate facets)") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 6; ++iter) {
    int n = 3 + static_cast<int>(rng() % 2);  // 3..4
    int gens = n + 2;
    std::uniform_int_distribution<int> dist(-3, 3);
    std::vector<VPolytope> segs;
    for (int g = 0; g < gens; ++g) {
      Vec s;
      for (int k = 0; k < n; ++k) s.push_back(Rat(dist(rng)));
      if (is_zero(s)) s = unit_vec(n, 0);
      segs.push_back(VPolytope::segment(zero_vec(n), s));
    }
    auto z = minkowski_sum(segs);
    if (z.dim() != n) continue;
    check_hull_integrity(z.vertices(), n);
    // central symmetry of the vertex set about the generator midpoint sum
    Vec c = vscale(Rat(2), z.centroid());
    for (const auto& v : z.vertices()) {
      Vec m = vsub(c, v);
      CHECK(std::binary_search(z.vertices().begin(), z.vertices().end(), m, lex_less));
    }
  }
}

TEST_CASE("volume agrees with determinant oracle on random simplices") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 30; ++iter) {
    int n = 2 + static_cast<int>(rng() % 3);
    auto pts = random_points(rng, n, n + 1, -4, 4);
    std::vector<Vec> diffs;
    for (int i = 1; i <= n; ++i) diffs.push_back(vsub(pts[static_cast<std::size_t>(i)], pts[0]));
    Rat d = rat_abs(det(Mat::from_rows(diffs)));
    if (d == 0) continue;
    auto simplex = VPolytope::hull(n, pts);
    Rat expect = d / Rat(factorial(n));
    CHECK(simplex.volume() == expect);
  }
}

TEST_CASE("volume is additive under box splitting") {
  // [0,2]x[0,1]^2 split along the first axis
  auto whole = VPolytope::box(zero_vec(3), {Rat(2), Rat(1), Rat(1)});
  CHECK(whole.volume() == 2);
  auto right = VPolytope::box({Rat(1), Rat(0), Rat(0)}, {Rat(2), Rat(1), Rat(1)});
  CHECK(right.volume() == 1);
}
