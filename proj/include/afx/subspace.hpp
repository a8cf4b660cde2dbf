#pragma once

#include "afx/linalg.hpp"
#include "afx/scaled.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace afx {

// sqrt(det(B^T B)) for linearly independent vectors B, as an exact scalar.
inline ScaledRational gram_sqrt(const std::vector<Vec>& basis) {
  if (basis.empty()) return ScaledRational(Rat(1));
  Rat d = det(gram(basis));
  if (d <= 0) throw std::invalid_argument("gram_sqrt: dependent basis");
  return ScaledRational::sqrt_of(d);
}

// Linear subspace of R^n with an exact rational basis.
class Subspace {
 public:
  Subspace(int ambient_dim, std::vector<Vec> basis)
      : ambient_(ambient_dim), basis_(std::move(basis)) {
    for (const auto& v : basis_) {
      if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("Subspace: basis vector of wrong dimension");
    }
    if (rank(Mat::from_rows(basis_)) != static_cast<int>(basis_.size()))
      throw std::invalid_argument("Subspace: dependent basis");
    init();
  }

  static Subspace full(int n) {
    std::vector<Vec> b;
    for (int i = 0; i < n; ++i) b.push_back(unit_vec(n, i));
    return Subspace(n, std::move(b));
  }

  static Subspace span_of(int n, const std::vector<Vec>& gens) {
    Mat m = Mat::from_rows(gens);
    if (m.rows == 0) return Subspace(n, {});
    std::vector<int> pivots = rref(m);
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(m[static_cast<int>(i)]);
    return Subspace(n, std::move(basis));
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& x) const {
    if (dim() == 0) return is_zero(x);
    std::vector<Vec> rws = basis_;
    rws.push_back(x);
    return rank(Mat::from_rows(rws)) == dim();
  }

  // P_E x = B (B^T B)^{-1} B^T x; exact and idempotent.
  Vec project(const Vec& x) const {
    if (static_cast<int>(x.size()) != ambient_)
      throw std::invalid_argument("Subspace::project: dimension mismatch");
    if (dim() == 0) return zero_vec(ambient_);
    Vec c = coords_functional(x);
    Vec r = zero_vec(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
      r = vadd(r, vscale(c[i], basis_[i]));
    return r;
  }

  // Chart coordinates of a point x in the subspace: x = sum_i y_i b_i.
  // Requires contains(x).
  Vec to_chart(const Vec& x) const {
    Vec y = coords_functional(x);
    return y;
  }

  Vec from_chart(const Vec& y) const {
    if (static_cast<int>(y.size()) != dim())
      throw std::invalid_argument("Subspace::from_chart: dimension mismatch");
    Vec r = zero_vec(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) r = vadd(r, vscale(y[i], basis_[i]));
    return r;
  }

  // Ambient vector w in E realizing a chart linear functional u:
  // <w, from_chart(y)> = <u, y> for all y. Used to map facet normals
  // computed in a chart back to the subspace.
  Vec normal_from_chart(const Vec& u) const {
    Vec c = mat_vec(gram_inv_, u);
    Vec r = zero_vec(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) r = vadd(r, vscale(c[i], basis_[i]));
    return r;
  }

  // sqrt Gram of the chart basis; converts chart volumes to true volumes.
  ScaledRational chart_scale() const { return gram_sqrt(basis_); }

  // Basis of the orthogonal complement (canonical RREF kernel basis).
  Subspace orthogonal_complement() const {
    if (dim() == 0) return full(ambient_);
    std::vector<Vec> b = kernel_basis(Mat::from_rows(basis_));
    return Subspace(ambient_, std::move(b));
  }

 private:
  void init() {
    if (dim() > 0) gram_inv_ = inverse(gram(basis_));
  }

  // (B^T B)^{-1} B^T x
  Vec coords_functional(const Vec& x) const {
    Vec bt = zero_vec(dim());
    for (std::size_t i = 0; i < basis_.size(); ++i) bt[i] = dot(basis_[i], x);
    return mat_vec(gram_inv_, bt);
  }

  int ambient_;
  std::vector<Vec> basis_;
  Mat gram_inv_;
};

// Canonical rational basis of u^perp (RREF kernel basis); the deterministic
// chart used for per-normal intrinsic computations.
inline Subspace normal_hyperplane(const Vec& u) {
  if (is_zero(u)) throw std::invalid_argument("normal_hyperplane: zero normal");
  return Subspace(static_cast<int>(u.size()),
                  kernel_basis(Mat::from_rows({u})));
}

}  // namespace afx
