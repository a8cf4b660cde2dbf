#pragma once

#include "afx/polytope.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace afx {

// Ordered list of bodies in a common ambient space. Length is
// context-dependent: n for V_n, n-1 for area measures, n-2 for reference
// collections.
struct BodyCollection {
  int ambient_dim = 0;
  std::vector<VPolytope> bodies;

  BodyCollection() = default;
  BodyCollection(int n, std::vector<VPolytope> bs) : ambient_dim(n), bodies(std::move(bs)) {
    for (const auto& b : bodies) {
      if (b.ambient_dim() != ambient_dim)
        throw invalid_input("BodyCollection: ambient dimension mismatch");
    }
  }

  int size() const { return static_cast<int>(bodies.size()); }
  const VPolytope& operator[](int i) const { return bodies[static_cast<std::size_t>(i)]; }

  BodyCollection subset(const std::vector<int>& idx) const {
    std::vector<VPolytope> bs;
    for (int i : idx) bs.push_back(bodies[static_cast<std::size_t>(i)]);
    return BodyCollection(ambient_dim, std::move(bs));
  }

  BodyCollection without(int r) const {
    std::vector<VPolytope> bs;
    for (int i = 0; i < size(); ++i)
      if (i != r) bs.push_back(bodies[static_cast<std::size_t>(i)]);
    return BodyCollection(ambient_dim, std::move(bs));
  }
};

// dim of the Minkowski sum of a subset, computed from difference spans (no
// hulls needed).
inline int sum_dim(const BodyCollection& c, const std::vector<int>& idx) {
  std::vector<Vec> diffs;
  for (int i : idx) {
    const auto& vs = c[i].vertices();
    for (std::size_t k = 1; k < vs.size(); ++k) diffs.push_back(vsub(vs[k], vs[0]));
  }
  if (diffs.empty()) return 0;
  return rank(Mat::from_rows(diffs));
}

// Lemma-dim style positivity: V_n(C_1,...,C_n) > 0 iff every k-subset sum has
// dimension >= k.
inline bool positivity(const BodyCollection& c) {
  if (c.size() != c.ambient_dim)
    throw invalid_input("positivity: need exactly n bodies in R^n");
  int m = c.size();
  for (int mask = 1; mask < (1 << m); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) idx.push_back(i);
    if (sum_dim(c, idx) < static_cast<int>(idx.size())) return false;
  }
  return true;
}

namespace mv_detail {

// Cache of subset Minkowski sums keyed by bitmask; sums are built
// incrementally from the lowest set bit.
class SubsetSums {
 public:
  explicit SubsetSums(const BodyCollection& c) : c_(c) {}

  const VPolytope& get(unsigned mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    unsigned low = mask & ~(mask - 1);
    int i = 0;
    while (!((mask >> i) & 1u)) ++i;
    VPolytope s = (mask == low) ? c_[i] : minkowski_sum(get(mask & (mask - 1)), c_[i]);
    return cache_.emplace(mask, std::move(s)).first->second;
  }

 private:
  const BodyCollection& c_;
  std::map<unsigned, VPolytope> cache_;
};

}  // namespace mv_detail

// V_n(C_1,...,C_n) by polarization:
// (1/n!) sum_{S nonempty} (-1)^{n-|S|} Vol(sum_{i in S} C_i).
inline Rat mixed_volume(const BodyCollection& c) {
  int n = c.ambient_dim;
  if (c.size() != n) throw invalid_input("mixed_volume: need exactly n bodies in R^n");
  mv_detail::SubsetSums sums(c);
  Rat acc = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int bits = __builtin_popcount(mask);
    Rat vol = sums.get(mask).volume();
    if ((n - bits) % 2 == 0)
      acc += vol;
    else
      acc -= vol;
  }
  return acc / Rat(factorial(n));
}

// Mixed volume of m = dim(E) bodies lying in translates of the subspace E,
// exactly normalized to the Euclidean structure of E.
inline ScaledRational mixed_volume_in_subspace(const Subspace& e, const BodyCollection& c) {
  int m = e.dim();
  if (c.size() != m) throw invalid_input("mixed_volume_in_subspace: need dim(E) bodies");
  if (m == 0) return ScaledRational(Rat(1));
  std::vector<VPolytope> chart_bodies;
  for (int i = 0; i < c.size(); ++i) {
    const Vec base = c[i].vertices()[0];
    std::vector<Vec> chart;
    for (const auto& v : c[i].vertices()) {
      Vec d = vsub(v, base);
      if (!e.contains(d))
        throw invalid_input("mixed_volume_in_subspace: body not in a translate of E");
      chart.push_back(e.to_chart(d));
    }
    chart_bodies.push_back(VPolytope::hull(m, chart));
  }
  Rat chart_mv = mixed_volume(BodyCollection(m, std::move(chart_bodies)));
  return ScaledRational(chart_mv) * e.chart_scale();
}

// Atomic measure on rational normal directions: primitive normals with exact
// weights. Weights of genuine bodies are >= 0; signed variants arise from
// differences of support functions.
struct MixedAreaMeasure {
  struct Atom {
    Vec normal;  // primitive integer
    ScaledRational weight;
  };
  std::vector<Atom> atoms;

  const ScaledRational* find(const Vec& primitive_normal) const {
    for (const auto& a : atoms)
      if (a.normal == primitive_normal) return &a.weight;
    return nullptr;
  }
  ScaledRational weight_at(const Vec& primitive_normal) const {
    const ScaledRational* w = find(primitive_normal);
    return w ? *w : ScaledRational(Rat(0));
  }
  bool is_zero() const { return atoms.empty(); }

  void add(const Vec& normal, const ScaledRational& w) {
    if (w.is_zero()) return;
    for (auto& a : atoms) {
      if (a.normal == normal) {
        a.weight += w;
        return;
      }
    }
    atoms.push_back({normal, w});
  }
  void compact() {
    std::vector<Atom> keep;
    for (auto& a : atoms)
      if (!a.weight.is_zero()) keep.push_back(std::move(a));
    atoms = std::move(keep);
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& x, const Atom& y) { return lex_less(x.normal, y.normal); });
  }
};

// S_{C_1,...,C_{n-1}}: atoms at the facet normals u of the Minkowski sum with
// weights V_{n-1}(F(C_1,u),...,F(C_{n-1},u)) taken in u^perp.
inline MixedAreaMeasure mixed_area_measure(const BodyCollection& c) {
  int n = c.ambient_dim;
  if (c.size() != n - 1) throw invalid_input("mixed_area_measure: need n-1 bodies in R^n");
  MixedAreaMeasure meas;
  VPolytope sum = minkowski_sum(c.bodies);
  int d = sum.dim();
  if (d < n - 1) return meas;

  std::vector<Vec> candidates;
  if (d == n) {
    candidates = sum.facet_normals();
  } else {
    // the sum spans a hyperplane; both unit normals of that hyperplane carry
    // the full weight
    Subspace dir = sum.direction_space();
    Vec w = primitive(dir.orthogonal_complement().basis()[0]);
    candidates.push_back(w);
    candidates.push_back(vscale(Rat(-1), w));
  }
  for (const auto& u : candidates) {
    Subspace uperp = normal_hyperplane(u);
    std::vector<VPolytope> faces;
    for (int i = 0; i < c.size(); ++i) {
      VPolytope f = c[i].face(u);
      faces.push_back(f.translate(vscale(Rat(-1), f.vertices()[0])));
    }
    ScaledRational w = mixed_volume_in_subspace(uperp, BodyCollection(n, std::move(faces)));
    meas.add(primitive(u), w);
  }
  meas.compact();
  return meas;
}

// Mixed area measure of dim(E)-1 bodies lying in translates of E, as a
// measure on directions inside E. Atom normals are primitive vectors in E;
// weights are intrinsic (computed in E-and-normal-orthogonal charts).
inline MixedAreaMeasure mixed_area_measure_in_subspace(const Subspace& e, const BodyCollection& c) {
  int m = e.dim();
  if (c.size() != m - 1) throw invalid_input("mixed_area_measure_in_subspace: need dim(E)-1 bodies");
  int n = e.ambient_dim();
  // translate bodies into E
  std::vector<VPolytope> in_e;
  for (int i = 0; i < c.size(); ++i) {
    VPolytope b = c[i].translate(vscale(Rat(-1), c[i].vertices()[0]));
    for (const auto& v : b.vertices()) {
      if (!e.contains(v))
        throw invalid_input("mixed_area_measure_in_subspace: body not in a translate of E");
    }
    in_e.push_back(std::move(b));
  }
  // chart bodies determine the candidate directions combinatorially
  std::vector<VPolytope> chart_bodies;
  for (const auto& b : in_e) {
    std::vector<Vec> chart;
    for (const auto& v : b.vertices()) chart.push_back(e.to_chart(v));
    chart_bodies.push_back(VPolytope::hull(m, chart));
  }
  VPolytope chart_sum = minkowski_sum(chart_bodies);
  int d = chart_sum.dim();
  MixedAreaMeasure meas;
  if (d < m - 1) return meas;
  std::vector<Vec> chart_normals;
  if (d == m) {
    chart_normals = chart_sum.facet_normals();
  } else {
    Subspace dir = chart_sum.direction_space();
    Vec w = primitive(dir.orthogonal_complement().basis()[0]);
    chart_normals.push_back(w);
    chart_normals.push_back(vscale(Rat(-1), w));
  }
  for (const auto& nc : chart_normals) {
    Vec u = primitive(e.normal_from_chart(nc));  // direction in E
    // E cap u^perp as an ambient subspace
    std::vector<Vec> rows = e.orthogonal_complement().basis();
    rows.push_back(u);
    Subspace cut(n, kernel_basis(Mat::from_rows(rows)));
    std::vector<VPolytope> faces;
    for (const auto& b : in_e) {
      VPolytope f = b.face(u);
      faces.push_back(f.translate(vscale(Rat(-1), f.vertices()[0])));
    }
    ScaledRational w = mixed_volume_in_subspace(cut, BodyCollection(n, std::move(faces)));
    meas.add(u, w);
  }
  meas.compact();
  return meas;
}

// f = h_plus - scale*h_minus, a formal difference of support functions.
struct SupportDifference {
  VPolytope plus;
  VPolytope minus;
  Rat scale = 1;

  Rat operator()(const Vec& u) const {
    return plus.support_value(u) - scale * minus.support_value(u);
  }
};

// S_{f,C_1,...,C_{n-2}} by multilinearity: a signed atom list.
inline MixedAreaMeasure signed_area_measure(const SupportDifference& f, const BodyCollection& c) {
  int n = c.ambient_dim;
  if (c.size() != n - 2) throw invalid_input("signed_area_measure: need n-2 bodies in R^n");
  std::vector<VPolytope> with_plus = c.bodies;
  with_plus.push_back(f.plus);
  std::vector<VPolytope> with_minus = c.bodies;
  with_minus.push_back(f.minus);
  MixedAreaMeasure mp = mixed_area_measure(BodyCollection(n, std::move(with_plus)));
  MixedAreaMeasure mm = mixed_area_measure(BodyCollection(n, std::move(with_minus)));
  MixedAreaMeasure out = mp;
  for (const auto& a : mm.atoms) out.add(a.normal, ScaledRational(-f.scale) * a.weight);
  out.compact();
  return out;
}

// S_{f,f,C_1,...,C_{n-3}}-style quadratic signed measure, expanded by
// multilinearity into three polytope measures.
inline MixedAreaMeasure signed_area_measure_quadratic(const SupportDifference& f,
                                                      const BodyCollection& c) {
  int n = c.ambient_dim;
  if (c.size() != n - 3) throw invalid_input("signed_area_measure_quadratic: need n-3 bodies");
  auto with = [&](const VPolytope& a, const VPolytope& b) {
    std::vector<VPolytope> bs = c.bodies;
    bs.push_back(a);
    bs.push_back(b);
    return mixed_area_measure(BodyCollection(n, std::move(bs)));
  };
  MixedAreaMeasure qq = with(f.plus, f.plus);
  MixedAreaMeasure qp = with(f.plus, f.minus);
  MixedAreaMeasure pp = with(f.minus, f.minus);
  MixedAreaMeasure out = qq;
  for (const auto& a : qp.atoms) out.add(a.normal, ScaledRational(Rat(-2) * f.scale) * a.weight);
  for (const auto& a : pp.atoms) out.add(a.normal, ScaledRational(f.scale * f.scale) * a.weight);
  out.compact();
  return out;
}

// Exact check of the segment projection formula:
// n V_n([0,u],C_1,...,C_{n-1}) = V_{u^perp}(P_{u^perp} C_1,...) / |u| scaling
// folded in rationally. Always true; serves as a cross-module self test.
inline bool projection_check(const Vec& u, const BodyCollection& c) {
  int n = c.ambient_dim;
  if (c.size() != n - 1) throw invalid_input("projection_check: need n-1 bodies in R^n");
  if (is_zero(u)) throw invalid_input("projection_check: zero direction");
  std::vector<VPolytope> with_seg = c.bodies;
  with_seg.push_back(VPolytope::segment(zero_vec(n), u));
  Rat lhs = Rat(n) * mixed_volume(BodyCollection(n, std::move(with_seg)));

  Subspace uperp = normal_hyperplane(u);
  std::vector<VPolytope> proj;
  for (int i = 0; i < c.size(); ++i) {
    std::vector<Vec> pts;
    for (const auto& v : c[i].vertices()) pts.push_back(uperp.project(v));
    proj.push_back(VPolytope::hull(n, pts));
  }
  ScaledRational rhs = mixed_volume_in_subspace(uperp, BodyCollection(n, std::move(proj)));
  // paper identity uses a unit segment: divide lhs by |u|, i.e. compare
  // lhs == sqrt(<u,u>) * rhs
  return ScaledRational(lhs) == ScaledRational::sqrt_of(dot(u, u)) * rhs;
}

// Exact check of the general projection formula
// binom(n,m) V_n(C_1,..,C_n) = V_E(C_1..C_m) V_{E^perp}(P C_{m+1},..,P C_n)
// for C_1..C_m contained in translates of E, dim E = m.
inline bool projection_formula_check(const Subspace& e, const BodyCollection& c) {
  int n = c.ambient_dim;
  int m = e.dim();
  if (c.size() != n) throw invalid_input("projection_formula_check: need n bodies");
  Rat lhs = Rat(binomial(n, m)) * mixed_volume(c);
  std::vector<int> first, rest;
  for (int i = 0; i < m; ++i) first.push_back(i);
  for (int i = m; i < n; ++i) rest.push_back(i);
  ScaledRational ve = mixed_volume_in_subspace(e, c.subset(first));
  Subspace ec = e.orthogonal_complement();
  std::vector<VPolytope> proj;
  for (int i : rest) {
    std::vector<Vec> pts;
    for (const auto& v : c[i].vertices()) pts.push_back(ec.project(v));
    proj.push_back(VPolytope::hull(n, pts));
  }
  ScaledRational vp = mixed_volume_in_subspace(ec, BodyCollection(n, std::move(proj)));
  return ScaledRational(lhs) == ve * vp;
}

// Coefficient-interpolation oracle for the mixed volume: evaluates
// Vol(sum lambda_i C_i) on nested integer grids and extracts the coefficient
// of lambda_1...lambda_n by repeated univariate interpolation. Independent of
// the polarization route.
inline Rat mixed_volume_oracle(const BodyCollection& c) {
  int n = c.ambient_dim;
  if (c.size() != n) throw invalid_input("mixed_volume_oracle: need exactly n bodies in R^n");

  // Lagrange weights for extracting the coefficient of x^1 from values at
  // nodes 0..deg: row 1 of the inverse Vandermonde.
  auto coeff1_weights = [](int deg) {
    Mat v(deg + 1, deg + 1);
    for (int i = 0; i <= deg; ++i) {
      Rat p = 1;
      for (int j = 0; j <= deg; ++j) {
        v(i, j) = p;  // row i holds powers of node i
        p *= i;
      }
    }
    Mat inv = inverse(v);
    return inv[1];
  };

  // recursively evaluate: value(k, fixed scales for bodies 0..k-1) with
  // remaining degree n-k
  std::vector<Rat> lambda(static_cast<std::size_t>(n));
  std::function<Rat(int)> eval = [&](int k) -> Rat {
    if (k == n) {
      VPolytope sum = VPolytope::point(zero_vec(n));
      for (int i = 0; i < n; ++i) {
        if (lambda[static_cast<std::size_t>(i)] == 0) continue;
        sum = minkowski_sum(sum, c[i].scale(lambda[static_cast<std::size_t>(i)]));
      }
      return sum.volume();
    }
    int deg = n - k;
    std::vector<Rat> w = coeff1_weights(deg);
    Rat acc = 0;
    for (int t = 0; t <= deg; ++t) {
      if (w[static_cast<std::size_t>(t)] == 0) continue;
      lambda[static_cast<std::size_t>(k)] = t;
      acc += w[static_cast<std::size_t>(t)] * eval(k + 1);
    }
    lambda[static_cast<std::size_t>(k)] = 0;
    return acc;
  };
  // coefficient of lambda_1...lambda_n equals n! V_n
  return eval(0) / Rat(factorial(n));
}

}  // namespace afx
