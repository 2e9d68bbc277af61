#pragma once

/**
 * Truncated power series in the half-step variable t, with x = t^2.
 *
 * A Series<R> of order N holds the coefficients of t^0..t^N and is exact
 * modulo t^(N+1). Binary operations truncate to the smaller operand order;
 * shifting by t^k moves the order by k. R is BigRat (the default TruncSeries)
 * or BigInt for series known to be integral; BigInt series can only be
 * inverted when the constant term is +1 or -1.
 *
 * Functions taking an x-order N return t-order 2N+1, i.e. every coefficient
 * of x^0..x^N plus the (zero) odd coefficient just above.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "supercat/counting.hpp"
#include "supercat/errors.hpp"
#include "supercat/numeric.hpp"

namespace supercat {

/// t-order that covers x^0..x^n.
constexpr int t_order_for_x(int x_order) { return 2 * x_order + 1; }

template <class R>
class Series {
 public:
  using coefficient_type = R;

  explicit Series(int order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, R(0));
  }

  Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
  }

  static Series constant(const R& c, int order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// c * t^power, truncated to order (zero if power > order).
  static Series monomial(int power, int order, const R& c = R(1)) {
    Series s(order);
    if (power < 0) throw DomainError("monomial with negative power");
    if (power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
    return s;
  }

  /// Places xs[n] at t^(2n).
  static Series from_x_coefficients(const std::vector<R>& xs, int order) {
    Series s(order);
    for (std::size_t n = 0; n < xs.size() && 2 * n <= static_cast<std::size_t>(order); ++n) s.coeffs_[2 * n] = xs[n];
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<R>& coefficients() const { return coeffs_; }

  /// Coefficient of t^k; throws if k is beyond the known order.
  const R& operator[](int k) const {
    if (k < 0 || k > order()) {
      throw DomainError("coefficient t^" + std::to_string(k) + " beyond order " + std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const R& x_coefficient(int n) const { return (*this)[2 * n]; }

  /// Lowest power with a nonzero coefficient, or nullopt for the zero series.
  std::optional<int> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  bool is_zero() const { return !valuation(); }

  Series truncated(int order) const {
    if (order > this->order()) {
      throw DomainError("cannot raise series order from " + std::to_string(this->order()) + " to " +
                        std::to_string(order));
    }
    return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  /// Multiplies by t^k; the order grows by k.
  Series shifted_up(int k) const {
    if (k < 0) throw DomainError("negative shift");
    std::vector<R> out(static_cast<std::size_t>(k), R(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Series(std::move(out));
  }

  /// Divides by t^k; the k lowest coefficients must vanish and the order drops by k.
  Series shifted_down(int k) const {
    if (k < 0) throw DomainError("negative shift");
    if (k > order()) throw DomainError("shift exceeds series order");
    for (int i = 0; i < k; ++i) {
      if (coeffs_[static_cast<std::size_t>(i)] != 0) {
        throw DomainError("cannot divide by t^" + std::to_string(k) + ": coefficient of t^" + std::to_string(i) +
                          " is nonzero");
      }
    }
    return Series(std::vector<R>(coeffs_.begin() + k, coeffs_.end()));
  }

  Series operator-() const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
  }

  friend Series operator-(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
  }

  friend Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series out(n);
    const auto va = a.valuation();
    const auto vb = b.valuation();
    if (!va || !vb) return out;
    for (int i = *va; i <= n; ++i) {
      const R& ai = a.coeffs_[static_cast<std::size_t>(i)];
      if (ai == 0) continue;
      for (int j = *vb; i + j <= n; ++j) {
        out.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    return out;
  }

  friend Series operator*(const R& c, const Series& a) {
    Series out = a;
    for (auto& v : out.coeffs_) v *= c;
    return out;
  }

  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator-=(const Series& b) { return *this = *this - b; }
  Series& operator*=(const Series& b) { return *this = *this * b; }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<R> coeffs_;
};

using TruncSeries = Series<BigRat>;
using IntSeries = Series<BigInt>;

template <class To, class From>
Series<To> series_cast(const Series<From>& s) {
  std::vector<To> out;
  out.reserve(s.coefficients().size());
  for (const auto& c : s.coefficients()) out.push_back(To(c));
  return Series<To>(std::move(out));
}

/// b with a * b = 1 through a's order.
template <class R>
Series<R> invert(const Series<R>& a) {
  const R& a0 = a[0];
  if (a0 == 0) throw NotInvertibleError("series with zero constant term is not invertible");
  R inv0;
  if constexpr (std::is_same_v<R, BigInt>) {
    if (a0 != 1 && a0 != -1) {
      throw NotInvertibleError("integer series with constant term " + a0.str() + " is not invertible over Z");
    }
    inv0 = a0;
  } else {
    inv0 = R(1) / a0;
  }
  const int n = a.order();
  std::vector<R> b(static_cast<std::size_t>(n) + 1, R(0));
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    R acc = 0;
    for (int i = 1; i <= k; ++i) {
      const R& ai = a[i];
      if (ai != 0) acc += ai * b[static_cast<std::size_t>(k - i)];
    }
    b[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return Series<R>(std::move(b));
}

template <class R>
Series<R> pow(const Series<R>& a, unsigned e) {
  Series<R> result = Series<R>::constant(R(1), a.order());
  Series<R> base = a;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return result;
}

/// Lowest power where a and b differ, compared through the smaller order.
template <class R>
std::optional<int> first_mismatch(const Series<R>& a, const Series<R>& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k) {
    if (a[k] != b[k]) return k;
  }
  return std::nullopt;
}

/// True when every nonzero coefficient sits at a power congruent to parity mod 2.
template <class R>
bool has_parity(const Series<R>& s, int parity) {
  for (int k = 0; k <= s.order(); ++k) {
    if (s[k] != 0 && (k - parity) % 2 != 0) return false;
  }
  return true;
}

/// (1 + u x)^alpha through x^x_order, coefficient of x^k being binom(alpha, k) u^k.
inline TruncSeries binomial_pow(const BigRat& alpha, int u, int x_order) {
  if (x_order < 0) throw DomainError("binomial_pow: negative order");
  std::vector<BigRat> xs;
  xs.reserve(static_cast<std::size_t>(x_order) + 1);
  BigRat coeff = 1;  // binom(alpha, k) u^k, updated incrementally
  for (int k = 0; k <= x_order; ++k) {
    xs.push_back(coeff);
    coeff *= (alpha - k) * u;
    coeff /= k + 1;
  }
  return TruncSeries::from_x_coefficients(xs, t_order_for_x(x_order));
}

/// c(x) = sum C_n x^n through x^x_order, from the Catalan formula.
template <class R = BigRat>
Series<R> catalan_series(int x_order) {
  if (x_order < 0) throw DomainError("catalan_series: negative order");
  std::vector<R> xs;
  for (int n = 0; n <= x_order; ++n) xs.push_back(R(catalan(n)));
  return Series<R>::from_x_coefficients(xs, t_order_for_x(x_order));
}

/// C = x c(x)^2 = c(x) - 1.
template <class R = BigRat>
Series<R> C_series(int x_order) {
  Series<R> c = catalan_series<R>(x_order);
  return c - Series<R>::constant(R(1), c.order());
}

/// sqrt(C) = t c(x), through t^t_order.
template <class R = BigRat>
Series<R> sqrt_C_series(int t_order) {
  if (t_order < 1) throw DomainError("sqrt_C_series: order must be >= 1");
  return catalan_series<R>((t_order - 1) / 2).truncated(t_order - 1).shifted_up(1);
}

}  // namespace supercat
