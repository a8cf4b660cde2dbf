#pragma once

#include "afx/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace afx {

using Vec = std::vector<Rat>;
using IVec = std::vector<Int>;

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec vscale(const Rat& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

inline bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

inline Vec unit_vec(int n, int i) {
  Vec r = zero_vec(n);
  r[static_cast<std::size_t>(i)] = 1;
  return r;
}

// Clears denominators and divides by the content; result has coprime integer
// entries. Sign of the first nonzero entry is preserved.
inline Vec primitive(const Vec& a) {
  Int l = 1;
  for (const auto& x : a) l = int_lcm(l, den(x));
  Int g = 0;
  std::vector<Int> ints;
  ints.reserve(a.size());
  for (const auto& x : a) {
    Int v = num(x) * (l / den(x));
    g = int_gcd(g, v);
    ints.push_back(v);
  }
  if (g == 0) g = 1;
  Vec r;
  r.reserve(a.size());
  for (auto& v : ints) r.push_back(Rat(v / g));
  return r;
}

// Lexicographic order on rational vectors.
inline bool lex_less(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

// Dense rational matrix, row major.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Vec> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r), zero_vec(c)) {}
  static Mat from_rows(std::vector<Vec> rws) {
    Mat m;
    m.rows = static_cast<int>(rws.size());
    m.cols = rws.empty() ? 0 : static_cast<int>(rws[0].size());
    m.a = std::move(rws);
    return m;
  }

  Vec& operator[](int i) { return a[static_cast<std::size_t>(i)]; }
  const Vec& operator[](int i) const { return a[static_cast<std::size_t>(i)]; }
  Rat& operator()(int i, int j) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Rat& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  Mat transposed() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
};

inline Vec mat_vec(const Mat& m, const Vec& x) {
  Vec r = zero_vec(m.rows);
  for (int i = 0; i < m.rows; ++i) r[static_cast<std::size_t>(i)] = dot(m[i], x);
  return r;
}

inline Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

// In-place reduced row echelon form. Returns pivot column indices.
inline std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m(i, c) != 0) { sel = i; break; }
    }
    if (sel < 0) continue;
    std::swap(m.a[static_cast<std::size_t>(sel)], m.a[static_cast<std::size_t>(r)]);
    Rat inv = Rat(1) / m(r, c);
    for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(Mat m) { return static_cast<int>(rref(m).size()); }

// Basis of {x : Mx = 0}; canonical RREF form (identity pattern on free columns).
inline std::vector<Vec> kernel_basis(Mat m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    Vec v = zero_vec(m.cols);
    v[static_cast<std::size_t>(c)] = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
      v[static_cast<std::size_t>(pivots[pi])] = -m(static_cast<int>(pi), c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of Mx = b, or nullopt if inconsistent.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
  Mat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  Vec x = zero_vec(m.cols);
  for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
    x[static_cast<std::size_t>(pivots[pi])] = aug(static_cast<int>(pi), m.cols);
  }
  return x;
}

inline Rat det(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: square matrix required");
  Rat d = 1;
  for (int c = 0; c < m.cols; ++c) {
    int sel = -1;
    for (int i = c; i < m.rows; ++i) {
      if (m(i, c) != 0) { sel = i; break; }
    }
    if (sel < 0) return Rat(0);
    if (sel != c) {
      std::swap(m.a[static_cast<std::size_t>(sel)], m.a[static_cast<std::size_t>(c)]);
      d = -d;
    }
    d *= m(c, c);
    Rat inv = Rat(1) / m(c, c);
    for (int i = c + 1; i < m.rows; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) * inv;
      for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

inline Mat inverse(const Mat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: square matrix required");
  Mat aug(m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols + i) = 1;
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != m.rows || pivots.back() >= m.cols)
    throw std::invalid_argument("inverse: singular matrix");
  Mat inv(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv(i, j) = aug(i, m.cols + j);
  return inv;
}

// Gram matrix B^T B of the columns given as a list of vectors.
inline Mat gram(const std::vector<Vec>& basis) {
  Mat g(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      g(static_cast<int>(i), static_cast<int>(j)) = dot(basis[i], basis[j]);
  return g;
}

}  // namespace afx
