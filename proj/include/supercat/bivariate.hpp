#pragma once

// Bivariate power series in x and y truncated at a total degree.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "supercat/errors.hpp"
#include "supercat/numeric.hpp"

namespace supercat {

template <class R>
class BiSeries {
 public:
  using coefficient_type = R;

  explicit BiSeries(int degree) : degree_(degree) {
    if (degree < 0) throw DomainError("bivariate degree must be >= 0");
    rows_.resize(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) rows_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(degree - i) + 1, R(0));
  }

  int degree() const { return degree_; }

  /// Coefficient of x^i y^j, i + j <= degree().
  const R& at(int i, int j) const {
    const auto [r, c] = idx(i, j);
    return rows_[r][c];
  }
  R& at(int i, int j) {
    const auto [r, c] = idx(i, j);
    return rows_[r][c];
  }

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) { return combine(a, b, 1); }
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) { return combine(a, b, -1); }

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries out(std::min(a.degree_, b.degree_));
    const int d = out.degree_;
    for (int i1 = 0; i1 <= d; ++i1) {
      for (int j1 = 0; i1 + j1 <= d; ++j1) {
        const R& av = a.at(i1, j1);
        if (av == 0) continue;
        for (int i2 = 0; i1 + j1 + i2 <= d; ++i2) {
          for (int j2 = 0; i1 + j1 + i2 + j2 <= d; ++j2) out.at(i1 + i2, j1 + j2) += av * b.at(i2, j2);
        }
      }
    }
    return out;
  }

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

 private:
  std::pair<std::size_t, std::size_t> idx(int i, int j) const {
    if (i < 0 || j < 0 || i + j > degree_) throw DomainError("bivariate index beyond total degree");
    return {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
  }

  static BiSeries combine(const BiSeries& a, const BiSeries& b, int sign) {
    BiSeries out(std::min(a.degree_, b.degree_));
    for (int i = 0; i <= out.degree_; ++i) {
      for (int j = 0; i + j <= out.degree_; ++j) out.at(i, j) = sign > 0 ? a.at(i, j) + b.at(i, j) : a.at(i, j) - b.at(i, j);
    }
    return out;
  }

  int degree_;
  std::vector<std::vector<R>> rows_;
};

using BiTrunc = BiSeries<BigRat>;

template <class R>
BiSeries<R> bi_mul(const BiSeries<R>& a, const BiSeries<R>& b) {
  return a * b;
}

template <class R>
BiSeries<R> bi_invert(const BiSeries<R>& a) {
  const R& a0 = a.at(0, 0);
  if (a0 == 0) throw NotInvertibleError("bivariate series with zero constant term is not invertible");
  R inv0;
  if constexpr (std::is_same_v<R, BigInt>) {
    if (a0 != 1 && a0 != -1) throw NotInvertibleError("integer bivariate series needs a unit constant term");
    inv0 = a0;
  } else {
    inv0 = R(1) / a0;
  }
  const int d = a.degree();
  BiSeries<R> b(d);
  b.at(0, 0) = inv0;
  for (int total = 1; total <= d; ++total) {
    for (int i = 0; i <= total; ++i) {
      const int j = total - i;
      R acc = 0;
      for (int k = 0; k <= i; ++k) {
        for (int l = 0; l <= j; ++l) {
          if (k == 0 && l == 0) continue;
          const R& ak = a.at(k, l);
          if (ak != 0) acc += ak * b.at(i - k, j - l);
        }
      }
      b.at(i, j) = -acc * inv0;
    }
  }
  return b;
}

/// First (i, j) in order of total degree, then i, where a and b differ.
template <class R>
std::optional<std::pair<int, int>> first_mismatch(const BiSeries<R>& a, const BiSeries<R>& b) {
  const int d = std::min(a.degree(), b.degree());
  for (int total = 0; total <= d; ++total) {
    for (int i = 0; i <= total; ++i) {
      if (a.at(i, total - i) != b.at(i, total - i)) return std::pair{i, total - i};
    }
  }
  return std::nullopt;
}

}  // namespace supercat
