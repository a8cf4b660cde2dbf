#pragma once

#include "afx/linalg.hpp"
#include "afx/subspace.hpp"

#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace afx {

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Facet of a convex hull: outward primitive integer normal, its support value,
// and the indices of all input points lying on the supporting hyperplane.
struct HullFacet {
  Vec normal;
  Rat offset;
  std::vector<int> points;
};

namespace hull_detail {

inline std::vector<int> argmax_face(const std::vector<Vec>& pts, const Vec& u, Rat& best) {
  std::vector<int> face;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rat v = dot(u, pts[i]);
    if (face.empty() || v > best) {
      best = v;
      face.assign(1, static_cast<int>(i));
    } else if (v == best) {
      face.push_back(static_cast<int>(i));
    }
  }
  return face;
}

// Greedy affinely independent difference basis of a point subset.
inline std::vector<Vec> difference_basis(const std::vector<Vec>& pts, const std::vector<int>& sub) {
  std::vector<Vec> basis;
  if (sub.empty()) return basis;
  const Vec& p0 = pts[static_cast<std::size_t>(sub[0])];
  for (std::size_t k = 1; k < sub.size(); ++k) {
    Vec d = vsub(pts[static_cast<std::size_t>(sub[k])], p0);
    std::vector<Vec> trial = basis;
    trial.push_back(d);
    if (rank(Mat::from_rows(trial)) == static_cast<int>(trial.size())) basis.push_back(std::move(d));
  }
  return basis;
}

// Supporting-hyperplane rotation around an affine set A contained in the
// current contact set of u. The pencil of normals through A is
// {s*u + w : s real} (up to scale); the first new contact is attained at
// s* = max b_p / (-a_p) over points below the hyperplane, where
// a_p = <u, p-p0> and b_p = <w, p-p0>. Returns primitive(b*.u + (-a*).w).
inline Vec pivot_direction(const std::vector<Vec>& pts, const Vec& u, const Vec& w, const Vec& p0) {
  bool have = false;
  Rat ba, bb;  // running max of b_p/(-a_p), stored as (a, b) of the argmax
  for (const auto& p : pts) {
    Vec dp = vsub(p, p0);
    Rat a = dot(u, dp);
    if (a >= 0) continue;  // a == 0: point on the hyperplane, never binding
    Rat b = dot(w, dp);
    if (!have || b * (-ba) > bb * (-a)) { ba = a; bb = b; have = true; }
  }
  if (!have) throw internal_error("pivot_direction: no point below the supporting hyperplane");
  return primitive(vadd(vscale(bb, u), vscale(-ba, w)));
}

// Rotates a supporting direction u around the affine hull of its contact face
// until the face becomes a facet ((d-1)-dimensional). Points must affinely
// span R^d and <u,.> must be non-constant on them.
inline void rotate_to_facet(const std::vector<Vec>& pts, int d, Vec& u, std::vector<int>& face) {
  Rat best;
  face = argmax_face(pts, u, best);
  for (;;) {
    std::vector<Vec> fb = difference_basis(pts, face);
    if (static_cast<int>(fb.size()) == d - 1) return;
    if (static_cast<int>(fb.size()) > d - 1)
      throw internal_error("rotate_to_facet: support direction has full-dimensional contact set");
    const Vec& p0 = pts[static_cast<std::size_t>(face[0])];
    std::vector<Vec> rows = fb;
    rows.push_back(u);
    std::vector<Vec> ker = kernel_basis(Mat::from_rows(rows));
    if (ker.empty()) throw internal_error("rotate_to_facet: no rotation direction");
    u = pivot_direction(pts, u, ker[0], p0);
    face = argmax_face(pts, u, best);
  }
}

}  // namespace hull_detail

// Facet enumeration by exact gift wrapping (ridge pivoting). `pts` must
// affinely span R^d; d >= 1. Points may include duplicates and interior
// points. Facets are returned sorted by normal.
inline std::vector<HullFacet> hull_facets(const std::vector<Vec>& pts, int d) {
  using namespace hull_detail;
  if (d < 1) throw std::invalid_argument("hull_facets: dimension must be >= 1");
  if (d == 1) {
    Rat hi, lo;
    Vec up = {Rat(1)}, dn = {Rat(-1)};
    std::vector<int> top = argmax_face(pts, up, hi);
    std::vector<int> bot = argmax_face(pts, dn, lo);
    return {HullFacet{dn, lo, bot}, HullFacet{up, hi, top}};
  }

  // initial support direction with non-constant values
  Vec u;
  for (int c = 0; c < d; ++c) {
    Vec cand = unit_vec(d, c);
    Rat v0 = pts[0][static_cast<std::size_t>(c)];
    for (const auto& p : pts) {
      if (p[static_cast<std::size_t>(c)] != v0) { u = cand; break; }
    }
    if (!u.empty()) break;
  }
  if (u.empty()) throw internal_error("hull_facets: points not full-dimensional");

  std::vector<int> face;
  rotate_to_facet(pts, d, u, face);

  std::map<Vec, HullFacet, bool (*)(const Vec&, const Vec&)> seen(lex_less);
  std::queue<Vec> todo;
  {
    Rat off = dot(u, pts[static_cast<std::size_t>(face[0])]);
    seen.emplace(u, HullFacet{u, off, face});
    todo.push(u);
  }

  while (!todo.empty()) {
    HullFacet f = seen.at(todo.front());
    todo.pop();

    // ridge enumeration: recurse on the facet inside a chart of its hyperplane
    std::vector<Vec> fb = difference_basis(pts, f.points);
    Subspace fs(d, fb);
    const Vec& p0 = pts[static_cast<std::size_t>(f.points[0])];
    std::vector<Vec> chart_pts;
    chart_pts.reserve(f.points.size());
    for (int idx : f.points) chart_pts.push_back(fs.to_chart(vsub(pts[static_cast<std::size_t>(idx)], p0)));
    std::vector<HullFacet> ridges = hull_facets(chart_pts, d - 1);

    for (const auto& ridge : ridges) {
      Vec w = fs.normal_from_chart(ridge.normal);  // outward conormal within the facet
      const Vec& r0 = pts[static_cast<std::size_t>(f.points[static_cast<std::size_t>(ridge.points[0])])];
      Vec nu = pivot_direction(pts, f.normal, w, r0);
      if (seen.count(nu)) continue;
      Rat best;
      std::vector<int> nf = argmax_face(pts, nu, best);
      seen.emplace(nu, HullFacet{nu, best, nf});
      todo.push(nu);
    }
  }

  std::vector<HullFacet> out;
  out.reserve(seen.size());
  for (auto& kv : seen) out.push_back(std::move(kv.second));
  return out;
}

namespace hull_detail {

inline void extreme_rec(const std::vector<Vec>& pts, const std::vector<int>& sub, int k,
                        std::set<int>& out) {
  if (k <= 0) {
    out.insert(sub[0]);
    return;
  }
  std::vector<Vec> local;
  local.reserve(sub.size());
  std::vector<Vec> fb = difference_basis(pts, sub);
  const Vec& p0 = pts[static_cast<std::size_t>(sub[0])];
  if (static_cast<int>(fb.size()) != k) throw internal_error("extreme_rec: rank mismatch");
  Subspace fs(static_cast<int>(p0.size()), fb);
  for (int idx : sub) local.push_back(fs.to_chart(vsub(pts[static_cast<std::size_t>(idx)], p0)));
  if (k == 1) {
    Rat hi, lo;
    Vec up = {Rat(1)}, dn = {Rat(-1)};
    for (int idx : argmax_face(local, up, hi)) { out.insert(sub[static_cast<std::size_t>(idx)]); break; }
    for (int idx : argmax_face(local, dn, lo)) { out.insert(sub[static_cast<std::size_t>(idx)]); break; }
    return;
  }
  for (const auto& f : hull_facets(local, k)) {
    std::vector<int> fsub;
    fsub.reserve(f.points.size());
    for (int idx : f.points) fsub.push_back(sub[static_cast<std::size_t>(idx)]);
    extreme_rec(pts, fsub, k - 1, out);
  }
}

}  // namespace hull_detail

// Indices of the extreme points of conv(pts). Duplicates: only the first
// occurrence is reported.
inline std::vector<int> extreme_point_indices(const std::vector<Vec>& pts) {
  if (pts.empty()) throw std::invalid_argument("extreme_point_indices: empty input");
  std::vector<int> sub;
  std::map<Vec, int, bool (*)(const Vec&, const Vec&)> first(lex_less);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (first.emplace(pts[i], static_cast<int>(i)).second) sub.push_back(static_cast<int>(i));
  }
  std::vector<Vec> diffs;
  for (int idx : sub) diffs.push_back(vsub(pts[static_cast<std::size_t>(idx)], pts[static_cast<std::size_t>(sub[0])]));
  int k = rank(Mat::from_rows(diffs));
  std::set<int> out;
  hull_detail::extreme_rec(pts, sub, k, out);
  return std::vector<int>(out.begin(), out.end());
}

}  // namespace afx
