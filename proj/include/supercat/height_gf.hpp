#pragma once

/**
 * Generating functions for height-restricted paths as quotients of integer
 * polynomials in x, with an optional half-step factor t = x^(1/2).
 *
 *   p_n         p_n = p_{n-1} - x p_{n-2}, p_0 = p_1 = 1, p_{-1} = 0
 *   G_k         p_k / p_{k+1}                    Dyck paths, height <= k
 *   G_k^(j)     x^(j/2) p_{k-j} / p_{k+1}        ballot paths ending at j
 *   G_k^(i,j)   x^((j-i)/2) p_i p_{k-j} / p_{k+1}  from level i to j, i <= j
 *   H_k^(j)     G_k^(j) - G_{k-1}^(j)            height exactly k
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "supercat/errors.hpp"
#include "supercat/numeric.hpp"
#include "supercat/series.hpp"

namespace supercat {

/// Dense integer polynomial in x; the zero polynomial has no coefficients.
class PolyX {
 public:
  PolyX() = default;
  PolyX(std::initializer_list<long long> cs) {
    for (long long c : cs) coeffs_.emplace_back(c);
    trim();
  }
  explicit PolyX(std::vector<BigInt> cs) : coeffs_(std::move(cs)) { trim(); }

  static PolyX constant(const BigInt& c) { return PolyX(std::vector<BigInt>{c}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt operator[](int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  /// Multiplies by x^k.
  PolyX shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<BigInt> out(static_cast<std::size_t>(k), BigInt(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return PolyX(std::move(out));
  }

  friend PolyX operator+(const PolyX& a, const PolyX& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
    return PolyX(std::move(out));
  }

  friend PolyX operator-(const PolyX& a, const PolyX& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
    return PolyX(std::move(out));
  }

  friend PolyX operator*(const PolyX& a, const PolyX& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyX(std::move(out));
  }

  friend PolyX operator*(const BigInt& c, const PolyX& a) { return PolyX::constant(c) * a; }

  friend bool operator==(const PolyX&, const PolyX&) = default;

  /// As a series in t (x^k at t^(2k)).
  template <class R = BigRat>
  Series<R> to_series(int t_order) const {
    std::vector<R> xs(coeffs_.begin(), coeffs_.end());
    return Series<R>::from_x_coefficients(xs, t_order);
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const BigInt& c = coeffs_[k];
      if (c == 0) continue;
      const bool neg = c < 0;
      const BigInt mag = neg ? BigInt(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (k == 0 || mag != 1) out += mag.str();
      if (k >= 1) out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// p_n by the three-term recurrence; p_{-1} = 0.
inline PolyX p_poly(int n) {
  if (n < -1) throw DomainError("p_poly: index must be >= -1, got " + std::to_string(n));
  if (n == -1) return {};
  PolyX prev{1}, cur{1};  // p_0, p_1
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    PolyX next = cur - prev.shifted(1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// p_n = sum_{0 <= k <= n/2} (-1)^k binom(n-k, k) x^k.
inline PolyX p_poly_explicit(int n) {
  if (n < -1) throw DomainError("p_poly_explicit: index must be >= -1, got " + std::to_string(n));
  if (n == -1) return {};
  std::vector<BigInt> cs;
  for (int k = 0; 2 * k <= n; ++k) cs.push_back((k % 2 == 0 ? 1 : -1) * binomial(n - k, k));
  return PolyX(std::move(cs));
}

/**
 * t^t_shift * num / den. An even shift is folded into num, so t_shift is 0 or
 * 1; the zero quotient is canonically 0/1 with no shift.
 */
class PolyQuotient {
 public:
  PolyQuotient() : den_{1} {}

  PolyQuotient(PolyX num, PolyX den, int t_shift = 0) : num_(std::move(num)), den_(std::move(den)), t_shift_(t_shift) {
    if (t_shift_ < 0) throw DomainError("PolyQuotient: negative t shift");
    if (den_[0] == 0) throw NotInvertibleError("PolyQuotient: denominator " + den_.str() + " has zero constant term");
    if (t_shift_ >= 2) {
      num_ = num_.shifted(t_shift_ / 2);
      t_shift_ %= 2;
    }
    if (num_.is_zero()) {
      den_ = PolyX{1};
      t_shift_ = 0;
    }
  }

  static PolyQuotient zero() { return {}; }

  const PolyX& num() const { return num_; }
  const PolyX& den() const { return den_; }
  int t_shift() const { return t_shift_; }
  bool is_zero() const { return num_.is_zero(); }

  friend PolyQuotient operator*(const PolyQuotient& a, const PolyQuotient& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return PolyQuotient(a.num_ * b.num_, a.den_ * b.den_, a.t_shift_ + b.t_shift_);
  }

  friend PolyQuotient operator+(const PolyQuotient& a, const PolyQuotient& b) { return combine(a, b, false); }
  friend PolyQuotient operator-(const PolyQuotient& a, const PolyQuotient& b) { return combine(a, b, true); }

  /// Equality as rational functions (cross-multiplied).
  friend bool operator==(const PolyQuotient& a, const PolyQuotient& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a.t_shift_ == b.t_shift_ && a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str() const {
    std::string out = t_shift_ == 1 ? "x^(1/2) * " : "";
    return out + "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  static PolyQuotient combine(const PolyQuotient& a, const PolyQuotient& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? PolyQuotient(PolyX{-1} * b.num_, b.den_, b.t_shift_) : b;
    if (a.t_shift_ != b.t_shift_) {
      throw DomainError("PolyQuotient: cannot add quotients with different half-step parity");
    }
    if (a.den_ == b.den_) return PolyQuotient(subtract ? a.num_ - b.num_ : a.num_ + b.num_, a.den_, a.t_shift_);
    const PolyX lhs = a.num_ * b.den_;
    const PolyX rhs = b.num_ * a.den_;
    return PolyQuotient(subtract ? lhs - rhs : lhs + rhs, a.den_ * b.den_, a.t_shift_);
  }

  PolyX num_;
  PolyX den_;
  int t_shift_ = 0;
};

/// Dyck paths of height at most k; zero for k = -1, -2.
inline PolyQuotient G(int k) {
  if (k < -2) throw DomainError("G: index must be >= -2, got " + std::to_string(k));
  if (k < 0) return PolyQuotient::zero();
  return PolyQuotient(p_poly(k), p_poly(k + 1));
}

/// Ballot paths of height at most k ending at level j.
inline PolyQuotient G_end(int k, int j) {
  if (j < 0) throw DomainError("G_end: end level must be >= 0");
  if (k < 0) throw DomainError("G_end: height bound must be >= 0");
  if (j > k + 1) return PolyQuotient::zero();
  return PolyQuotient(p_poly(k - j), p_poly(k + 1), j);
}

/// Paths of height at most k from level i to level j that never go below 0.
inline PolyQuotient G_between(int k, int i, int j) {
  if (k < 0) throw DomainError("G_between: height bound must be >= 0");
  if (i < 0 || j < 0 || i > k + 1 || j > k + 1) {
    throw DomainError("G_between: levels must lie in [0, k+1]");
  }
  if (i > j) std::swap(i, j);
  return PolyQuotient(p_poly(i) * p_poly(k - j), p_poly(k + 1), j - i);
}

/// Ballot paths of height exactly k ending at level j, over the denominator p_k p_{k+1}.
inline PolyQuotient H_end(int k, int j) {
  if (k < 1) throw DomainError("H_end: height must be >= 1");
  if (j < 0) throw DomainError("H_end: end level must be >= 0");
  if (j > k) return PolyQuotient::zero();
  const PolyX upper = p_poly(k - j) * p_poly(k);
  const PolyX lower = k - 1 - j >= 0 ? p_poly(k - 1 - j) * p_poly(k + 1) : PolyX{};
  return PolyQuotient(upper - lower, p_poly(k) * p_poly(k + 1), j);
}

/// num / den * t^t_shift as a series through t^t_order.
template <class R = BigRat>
Series<R> expand(const PolyQuotient& q, int t_order) {
  if (t_order < 0) throw DomainError("expand: negative order");
  if (q.is_zero() || t_order < q.t_shift()) return Series<R>(t_order);
  const int base = t_order - q.t_shift();
  const Series<R> num = q.num().template to_series<R>(base);
  const Series<R> den = q.den().template to_series<R>(base);
  return (num * invert(den)).shifted_up(q.t_shift());
}

}  // namespace supercat
