#pragma once

#include "afx/hull.hpp"
#include "afx/linalg.hpp"
#include "afx/scaled.hpp"
#include "afx/subspace.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace afx {

struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rational polytope given by its extreme points in canonical (lexicographic)
// order. Lower-dimensional polytopes are first-class values.
class VPolytope {
 public:
  VPolytope() = default;

  // Convex hull of a nonempty point set; interior and duplicate points are
  // dropped.
  static VPolytope hull(int ambient_dim, const std::vector<Vec>& points) {
    if (points.empty()) throw invalid_input("VPolytope::hull: empty point set");
    for (const auto& p : points) {
      if (static_cast<int>(p.size()) != ambient_dim)
        throw invalid_input("VPolytope::hull: point of wrong dimension");
    }
    std::vector<Vec> verts;
    for (int idx : extreme_point_indices(points)) verts.push_back(points[static_cast<std::size_t>(idx)]);
    std::sort(verts.begin(), verts.end(), lex_less);
    VPolytope p;
    p.ambient_ = ambient_dim;
    p.verts_ = std::move(verts);
    return p;
  }

  static VPolytope point(const Vec& v) { return hull(static_cast<int>(v.size()), {v}); }

  static VPolytope segment(const Vec& a, const Vec& b) {
    return hull(static_cast<int>(a.size()), {a, b});
  }

  // Axis-aligned box [lo, hi].
  static VPolytope box(const Vec& lo, const Vec& hi) {
    int n = static_cast<int>(lo.size());
    std::vector<Vec> pts;
    for (int mask = 0; mask < (1 << n); ++mask) {
      Vec v(lo);
      for (int k = 0; k < n; ++k)
        if (mask & (1 << k)) v[static_cast<std::size_t>(k)] = hi[static_cast<std::size_t>(k)];
      pts.push_back(std::move(v));
    }
    return hull(n, pts);
  }

  static VPolytope unit_cube(int n) {
    return box(zero_vec(n), Vec(static_cast<std::size_t>(n), Rat(1)));
  }

  int ambient_dim() const { return ambient_; }
  const std::vector<Vec>& vertices() const { return verts_; }
  int vertex_count() const { return static_cast<int>(verts_.size()); }

  bool operator==(const VPolytope& o) const {
    return ambient_ == o.ambient_ && verts_ == o.verts_;
  }
  bool operator!=(const VPolytope& o) const { return !(*this == o); }

  // Affine dimension.
  int dim() const {
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < verts_.size(); ++i) diffs.push_back(vsub(verts_[i], verts_[0]));
    return diffs.empty() ? 0 : rank(Mat::from_rows(diffs));
  }

  // Direction space of the affine hull.
  Subspace direction_space() const {
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < verts_.size(); ++i) diffs.push_back(vsub(verts_[i], verts_[0]));
    return Subspace::span_of(ambient_, diffs);
  }

  Rat support_value(const Vec& u) const {
    Rat best = dot(u, verts_[0]);
    for (std::size_t i = 1; i < verts_.size(); ++i) best = std::max(best, dot(u, verts_[i]));
    return best;
  }

  // F(C,u): the face with outer normal u. u = 0 is rejected.
  VPolytope face(const Vec& u) const {
    if (is_zero(u)) throw invalid_input("VPolytope::face: zero normal");
    Rat best = support_value(u);
    std::vector<Vec> pts;
    for (const auto& v : verts_)
      if (dot(u, v) == best) pts.push_back(v);
    VPolytope f;
    f.ambient_ = ambient_;
    f.verts_ = std::move(pts);  // already sorted, faces of extreme points are extreme
    return f;
  }

  VPolytope translate(const Vec& t) const {
    VPolytope p;
    p.ambient_ = ambient_;
    p.verts_.reserve(verts_.size());
    for (const auto& v : verts_) p.verts_.push_back(vadd(v, t));
    std::sort(p.verts_.begin(), p.verts_.end(), lex_less);
    return p;
  }

  VPolytope scale(const Rat& c) const {
    if (c == 0) return point(zero_vec(ambient_));
    VPolytope p;
    p.ambient_ = ambient_;
    p.verts_.reserve(verts_.size());
    for (const auto& v : verts_) p.verts_.push_back(vscale(c, v));
    std::sort(p.verts_.begin(), p.verts_.end(), lex_less);
    return p;
  }

  // The vertex centroid; lies in the relative interior.
  Vec centroid() const {
    Vec c = zero_vec(ambient_);
    for (const auto& v : verts_) c = vadd(c, v);
    return vscale(Rat(1, static_cast<int>(verts_.size())), c);
  }

  // One primitive representative per facet direction, facets taken inside
  // aff(C) viewed as a linear subspace. Complete and duplicate-free.
  std::vector<Vec> facet_normals() const {
    int k = dim();
    if (k == 0) throw invalid_input("facet_normals: zero-dimensional polytope");
    std::vector<Vec> out;
    if (k == ambient_) {
      for (const auto& f : hull_facets(verts_, k)) out.push_back(f.normal);
      return out;
    }
    Subspace dir = direction_space();
    std::vector<Vec> chart;
    chart.reserve(verts_.size());
    for (const auto& v : verts_) chart.push_back(dir.to_chart(vsub(v, verts_[0])));
    for (const auto& f : hull_facets(chart, k)) out.push_back(primitive(dir.normal_from_chart(f.normal)));
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

  // Facets as (normal, vertex set) pairs; requires dim() == ambient_dim().
  std::vector<HullFacet> facets() const {
    if (dim() != ambient_) throw invalid_input("facets: polytope not full-dimensional");
    return hull_facets(verts_, ambient_);
  }

  // Lebesgue volume in the ambient space; zero for lower-dimensional bodies.
  Rat volume() const {
    if (dim() < ambient_) return Rat(0);
    std::vector<Vec> chart = verts_;
    return chart_volume(chart, ambient_);
  }

  // Volume inside aff(C), exactly normalized; a point has intrinsic volume 1.
  ScaledRational intrinsic_volume() const {
    int k = dim();
    if (k == 0) return ScaledRational(Rat(1));
    Subspace dir = direction_space();
    std::vector<Vec> chart;
    chart.reserve(verts_.size());
    for (const auto& v : verts_) chart.push_back(dir.to_chart(vsub(v, verts_[0])));
    return ScaledRational(chart_volume(chart, k)) * dir.chart_scale();
  }

  // Chart volume of a full-dimensional point set: cone decomposition over the
  // facets. The per-facet factor Vol_{d-1}(F)/|u_F| is rational
  // (|det [B_F | u_F]| / <u_F,u_F> times the chart volume of F).
  static Rat chart_volume(const std::vector<Vec>& pts, int d) {
    if (d == 0) return Rat(1);
    if (d == 1) {
      Rat lo = pts[0][0], hi = pts[0][0];
      for (const auto& p : pts) { lo = std::min(lo, p[0]); hi = std::max(hi, p[0]); }
      return hi - lo;
    }
    Rat total = 0;
    const Vec& apex = pts[0];
    for (const auto& f : hull_facets(pts, d)) {
      Rat height = f.offset - dot(f.normal, apex);
      if (height == 0) continue;
      std::vector<int> sub = f.points;
      std::vector<Vec> fb = hull_detail::difference_basis(pts, sub);
      Subspace fs(d, fb);
      const Vec& p0 = pts[static_cast<std::size_t>(sub[0])];
      std::vector<Vec> chart;
      chart.reserve(sub.size());
      for (int idx : sub) chart.push_back(fs.to_chart(vsub(pts[static_cast<std::size_t>(idx)], p0)));
      Rat fvol = chart_volume(chart, d - 1);
      if (fvol == 0) continue;
      std::vector<Vec> cols = fb;
      cols.push_back(f.normal);
      Rat dd = rat_abs(det(Mat::from_rows(cols)));
      total += height * fvol * dd / dot(f.normal, f.normal);
    }
    return total / d;
  }

 private:
  int ambient_ = 0;
  std::vector<Vec> verts_;
};

// Minkowski sum, reduced to extreme points.
inline VPolytope minkowski_sum(const VPolytope& a, const VPolytope& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw invalid_input("minkowski_sum: ambient dimension mismatch");
  std::vector<Vec> pts;
  pts.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& va : a.vertices())
    for (const auto& vb : b.vertices()) pts.push_back(vadd(va, vb));
  return VPolytope::hull(a.ambient_dim(), pts);
}

inline VPolytope minkowski_sum(const std::vector<VPolytope>& bodies) {
  if (bodies.empty()) throw invalid_input("minkowski_sum: empty collection");
  VPolytope s = bodies[0];
  for (std::size_t i = 1; i < bodies.size(); ++i) s = minkowski_sum(s, bodies[i]);
  return s;
}

}  // namespace afx
