#pragma once

#include "afx/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace afx {

// Exact scalar of the form q * sqrt(g) with q rational and g a positive integer
// radicand. Values of this shape are closed under multiplication and show up as
// intrinsic volumes of rational polytopes in non-axis-parallel subspaces
// (sqrt of a Gram determinant times a rational chart volume).
//
// Radicands are reduced by exact perfect-square detection plus trial division
// up to a bound; an unreduced radicand is harmless because comparison works by
// cross-multiplied squares.
class ScaledRational {
 public:
  ScaledRational() : q_(0), g_(1) {}
  ScaledRational(Rat q) : q_(std::move(q)), g_(1) {}
  ScaledRational(int q) : q_(q), g_(1) {}

  // value = q * sqrt(g), g > 0 rational
  ScaledRational(Rat q, const Rat& g) : q_(std::move(q)) {
    if (g <= 0) throw std::domain_error("ScaledRational: radicand must be positive");
    // q*sqrt(a/b) = (q/b)*sqrt(a*b)
    q_ /= den(g);
    g_ = num(g) * den(g);
    reduce();
  }

  static ScaledRational sqrt_of(const Rat& g) { return ScaledRational(Rat(1), g); }

  const Rat& coeff() const { return q_; }
  const Int& radicand() const { return g_; }

  bool is_rational() const { return g_ == 1 || q_ == 0; }
  // Only valid when is_rational().
  Rat rational_value() const {
    if (!is_rational()) throw std::domain_error("ScaledRational: value is irrational");
    return q_;
  }

  int sign() const { return q_.sign(); }
  bool is_zero() const { return q_ == 0; }

  // q1^2 g1 == q2^2 g2 and matching signs decide equality regardless of
  // whether the radicands were fully reduced.
  friend bool operator==(const ScaledRational& a, const ScaledRational& b) {
    if (a.sign() != b.sign()) return false;
    return a.q_ * a.q_ * a.g_ == b.q_ * b.q_ * b.g_;
  }
  friend bool operator!=(const ScaledRational& a, const ScaledRational& b) { return !(a == b); }
  friend bool operator<(const ScaledRational& a, const ScaledRational& b) {
    if (a.sign() != b.sign()) return a.sign() < b.sign();
    Rat sa = a.q_ * a.q_ * a.g_, sb = b.q_ * b.q_ * b.g_;
    return a.sign() >= 0 ? sa < sb : sb < sa;
  }
  friend bool operator<=(const ScaledRational& a, const ScaledRational& b) { return a < b || a == b; }
  friend bool operator>(const ScaledRational& a, const ScaledRational& b) { return b < a; }
  friend bool operator>=(const ScaledRational& a, const ScaledRational& b) { return b <= a; }

  friend ScaledRational operator*(const ScaledRational& a, const ScaledRational& b) {
    ScaledRational r;
    r.q_ = a.q_ * b.q_;
    r.g_ = a.g_ * b.g_;
    r.reduce();
    return r;
  }
  friend ScaledRational operator*(const Rat& a, const ScaledRational& b) {
    return ScaledRational(a) * b;
  }
  ScaledRational& operator*=(const ScaledRational& b) { return *this = *this * b; }

  friend ScaledRational operator/(const ScaledRational& a, const ScaledRational& b) {
    if (b.is_zero()) throw std::domain_error("ScaledRational: division by zero");
    // a / (q sqrt(g)) = a * sqrt(g) / (q g)
    ScaledRational r;
    r.q_ = a.q_ / (b.q_ * b.g_);
    r.g_ = a.g_ * b.g_;
    r.reduce();
    return r;
  }

  friend ScaledRational operator-(const ScaledRational& a) {
    ScaledRational r = a;
    r.q_ = -r.q_;
    return r;
  }

  // Defined only when both terms live over the same radicand class.
  friend ScaledRational operator+(const ScaledRational& a, const ScaledRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.g_ == b.g_) {
      ScaledRational r;
      r.q_ = a.q_ + b.q_;
      r.g_ = a.g_;
      if (r.q_ == 0) r.g_ = 1;
      return r;
    }
    // Reduction may have stopped early; sqrt(g1/g2) rational still allows the sum.
    Rat ratio(a.g_, b.g_), root;
    if (rat_sqrt_exact(ratio, root)) {
      ScaledRational r;
      r.q_ = a.q_ * root + b.q_;
      r.g_ = b.g_;
      if (r.q_ == 0) r.g_ = 1;
      return r;
    }
    throw std::domain_error("ScaledRational: sum of incompatible radicands " + a.g_.str() +
                            " and " + b.g_.str());
  }
  friend ScaledRational operator-(const ScaledRational& a, const ScaledRational& b) { return a + (-b); }
  ScaledRational& operator+=(const ScaledRational& b) { return *this = *this + b; }
  ScaledRational& operator-=(const ScaledRational& b) { return *this = *this - b; }

  std::string str() const {
    if (is_rational()) return rat_str(q_);
    return rat_str(q_) + "*sqrt(" + g_.str() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const ScaledRational& s) { return os << s.str(); }

  double approx() const {
    return static_cast<double>(q_) * std::sqrt(static_cast<double>(g_));
  }

  static constexpr std::int64_t kTrialBound = 4096;

 private:
  void reduce() {
    if (q_ == 0) { g_ = 1; return; }
    if (g_ == 1) return;
    Int root;
    if (is_perfect_square(g_, root)) {
      q_ *= root;
      g_ = 1;
      return;
    }
    // pull out small square factors
    for (Int p = 2; p <= kTrialBound && p * p <= g_; ++p) {
      Int pp = p * p;
      while (g_ % pp == 0) { g_ /= pp; q_ *= p; }
    }
    if (is_perfect_square(g_, root)) {
      q_ *= root;
      g_ = 1;
    }
  }

  Rat q_;
  Int g_;  // positive integer radicand
};

}  // namespace afx
