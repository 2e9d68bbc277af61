#pragma once

// Exact counts: Catalan and super Catalan numbers by formula, height-bounded
// path counts by dynamic programming over (step, level), and brute-force
// counts of the pair sets used in the T(2,n) interpretation.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "supercat/errors.hpp"
#include "supercat/lattice_paths.hpp"
#include "supercat/numeric.hpp"

namespace supercat {

/// C_n = (2n)! / (n! (n+1)!).
inline BigInt catalan(int n) {
  if (n < 0) throw DomainError("catalan: negative index " + std::to_string(n));
  return factorial(2 * n) / (factorial(n) * factorial(n + 1));
}

/// binom(2n, n), which is 2 T(0, n).
inline BigInt central_binomial(int n) {
  if (n < 0) throw DomainError("central_binomial: negative index " + std::to_string(n));
  return binomial(2 * n, n);
}

/// T(m,n) = (1/2) (2m)! (2n)! / (m! n! (m+n)!). Throws NonIntegralError at (0,0).
inline BigInt super_catalan(int m, int n) {
  if (m < 0 || n < 0) {
    throw DomainError("super_catalan: negative argument (" + std::to_string(m) + ", " + std::to_string(n) + ")");
  }
  if (m == 0 && n == 0) throw NonIntegralError("super_catalan(0, 0) = 1/2 is not an integer");
  const BigInt twice = factorial(2 * m) * factorial(2 * n) / (factorial(m) * factorial(n) * factorial(m + n));
  return twice / 2;
}

/**
 * Counts of nonnegative paths that start at `start` and never exceed
 * `max_height`: at(s, j) is the number of s-step paths ending at level j.
 */
class CountTable {
 public:
  CountTable(int max_height, int steps, int start = 0)
      : max_height_(max_height), steps_(steps), start_(start) {
    if (steps < 0) throw DomainError("CountTable: negative step count");
    if (start < 0) throw DomainError("CountTable: negative start level");
    const int width = max_height < 0 ? 0 : max_height + 1;
    rows_.assign(static_cast<std::size_t>(steps) + 1, std::vector<BigInt>(static_cast<std::size_t>(width)));
    if (start > max_height) return;
    rows_[0][static_cast<std::size_t>(start)] = 1;
    for (int s = 1; s <= steps; ++s) {
      auto& cur = rows_[static_cast<std::size_t>(s)];
      const auto& prev = rows_[static_cast<std::size_t>(s - 1)];
      for (int j = 0; j < width; ++j) {
        if (j > 0) cur[static_cast<std::size_t>(j)] += prev[static_cast<std::size_t>(j - 1)];
        if (j + 1 < width) cur[static_cast<std::size_t>(j)] += prev[static_cast<std::size_t>(j + 1)];
      }
    }
  }

  BigInt at(int step, int level) const {
    if (step < 0 || step > steps_ || level < 0 || level > max_height_) return 0;
    return rows_[static_cast<std::size_t>(step)][static_cast<std::size_t>(level)];
  }

  int max_height() const { return max_height_; }
  int steps() const { return steps_; }
  int start() const { return start_; }

 private:
  int max_height_;
  int steps_;
  int start_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Paths from `start` to `end` in `steps` steps, staying within [0, max_height].
inline BigInt count_paths_dp(int start, int end, int max_height, int steps) {
  if (max_height < 0 || end < 0) return 0;
  return CountTable(max_height, steps, start).at(steps, end);
}

/// Size of a path class at a given step count, without enumeration.
inline BigInt count_ballot_dp(const PathClass& cls, int steps) {
  if (steps < 0) throw DomainError("count_ballot_dp: negative step count");
  const int end = cls.end_level();
  if (cls.max_height()) return count_paths_dp(0, end, *cls.max_height(), steps);
  if (cls.exact_height()) {
    const int h = *cls.exact_height();
    return count_paths_dp(0, end, h, steps) - count_paths_dp(0, end, h - 1, steps);
  }
  return count_paths_dp(0, end, steps, steps);
}

namespace detail {

// heights[a] lists h(P) for every Dyck path P of semilength a.
inline std::vector<std::vector<int>> dyck_heights_upto(int n) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) {
    for (const Path& p : enumerate_dyck(a)) out[static_cast<std::size_t>(a)].push_back(p.height());
  }
  return out;
}

template <class Pred>
BigInt count_dyck_pairs(int n, bool allow_empty_first, Pred pred) {
  const auto heights = dyck_heights_upto(n);
  BigInt total = 0;
  for (int a = allow_empty_first ? 0 : 1; a <= n; ++a) {
    for (int hp : heights[static_cast<std::size_t>(a)]) {
      for (int hq : heights[static_cast<std::size_t>(n - a)]) {
        if (pred(hp, hq)) ++total;
      }
    }
  }
  return total;
}

}  // namespace detail

/// Ordered pairs (P, Q) of Dyck paths, total semilength n, with |h(P) - h(Q)| <= d.
inline BigInt count_pairs_height_diff(int n, int d) {
  if (n < 0 || d < 0) throw DomainError("count_pairs_height_diff: arguments must be >= 0");
  return detail::count_dyck_pairs(n, true, [d](int hp, int hq) { return hp - hq <= d && hq - hp <= d; });
}

/// |E_n|: pairs with P nonempty and h(P) <= h(Q) + 1.
inline BigInt count_E_set(int n) {
  if (n < 0) throw DomainError("count_E_set: negative semilength");
  return detail::count_dyck_pairs(n, false, [](int hp, int hq) { return hp <= hq + 1; });
}

/// Pairs with h(P) <= h(Q) + 1, P possibly empty.
inline BigInt count_F_set(int n) {
  if (n < 0) throw DomainError("count_F_set: negative semilength");
  return detail::count_dyck_pairs(n, true, [](int hp, int hq) { return hp <= hq + 1; });
}

/// |B_n|: all pairs of Dyck paths of total semilength n.
inline BigInt count_all_pairs(int n) {
  if (n < 0) throw DomainError("count_all_pairs: negative semilength");
  return detail::count_dyck_pairs(n, true, [](int, int) { return true; });
}

}  // namespace supercat
