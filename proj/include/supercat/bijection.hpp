#pragma once

/**
 * Bijection between E_n, the pairs (P, Q) of Dyck paths of total semilength n
 * with P nonempty and h(P) <= h(Q) + 1, and D_n, the Dyck paths of
 * semilength n.
 *
 * Forward: turn P's final down step u->v into an up step u->v' (giving F1),
 * raise Q by two levels (giving F2), and in F = F1 F2 flip the up step x->y
 * into the leftmost highest point y into a down step x->y'. Every step after
 * y is unchanged, so the tail of F2 is lowered by two levels. The point v'
 * belongs to F2, even when F2 has no steps.
 *
 * Inverse: x is the rightmost highest point of D; flipping the step after it
 * recovers F. The rightmost level-1 point of F is u.
 */

#include <cstddef>
#include <string>
#include <utility>

#include "supercat/errors.hpp"
#include "supercat/lattice_paths.hpp"

namespace supercat {

class RestrictedPair {
 public:
  RestrictedPair(Path p, Path q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_.empty()) throw DomainError("restricted pair: P must be nonempty");
    if (!is_dyck(p_)) throw DomainError("restricted pair: P = \"" + p_.str() + "\" is not a Dyck path");
    if (!is_dyck(q_)) throw DomainError("restricted pair: Q = \"" + q_.str() + "\" is not a Dyck path");
    if (p_.height() > q_.height() + 1) {
      throw DomainError("restricted pair: h(P) <= h(Q)+1 violated (h(P) = " + std::to_string(p_.height()) +
                        ", h(Q) = " + std::to_string(q_.height()) + ")");
    }
  }

  const Path& p() const { return p_; }
  const Path& q() const { return q_; }
  int total_semilength() const { return semilength(p_) + semilength(q_); }

  friend bool operator==(const RestrictedPair&, const RestrictedPair&) = default;

 private:
  Path p_;
  Path q_;
};

/// F = F1 F2 together with the index of v', the first point of F2.
struct IntermediatePath {
  Path f;
  std::size_t boundary = 0;
};

/// Point index into a host path, with its level.
struct MarkedPoint {
  std::size_t index = 0;
  int level = 0;

  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/// Everything drawn in the two surgery diagrams. u, v', x, y index into F;
/// v indexes into P; y' indexes into the output path (x has the same index there).
struct BijectionTrace {
  Path p;
  Path q;
  IntermediatePath intermediate;
  MarkedPoint u, v, v_prime, x, y, y_prime;
  Path output;
};

namespace detail {

inline std::size_t leftmost_highest(const std::vector<int>& levels) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i] > levels[best]) best = i;
  }
  return best;
}

inline std::size_t rightmost_highest(const std::vector<int>& levels) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i] >= levels[best]) best = i;
  }
  return best;
}

inline void check(bool ok, const char* what) {
  if (!ok) throw DomainError(std::string("bijection invariant failed: ") + what);
}

}  // namespace detail

inline IntermediatePath build_intermediate(const RestrictedPair& pair) {
  std::vector<Step> steps = pair.p().steps();
  steps.back() = Step::Up;  // u->v becomes u->v'
  const std::size_t boundary = steps.size();
  steps.insert(steps.end(), pair.q().steps().begin(), pair.q().steps().end());
  return {Path(std::move(steps)), boundary};
}

inline BijectionTrace trace(const RestrictedPair& pair) {
  BijectionTrace t;
  t.p = pair.p();
  t.q = pair.q();
  t.intermediate = build_intermediate(pair);
  const Path& f = t.intermediate.f;
  const std::size_t boundary = t.intermediate.boundary;
  const auto levels = f.levels();

  detail::check(f.end_level() == 2 && is_ballot(f), "F must end at level 2 and stay nonnegative");

  t.u = {boundary - 1, levels[boundary - 1]};
  t.v = {pair.p().length(), 0};
  t.v_prime = {boundary, levels[boundary]};

  const std::size_t y = detail::leftmost_highest(levels);
  detail::check(y >= boundary, "leftmost highest point of F lies in F2");
  detail::check(f[y - 1] == Step::Up, "step into y is an up step");

  std::vector<Step> out = f.steps();
  out[y - 1] = Step::Down;
  t.output = Path(std::move(out));
  t.x = {y - 1, levels[y - 1]};
  t.y = {y, levels[y]};
  t.y_prime = {y, levels[y] - 2};

  detail::check(is_dyck(t.output), "output is a Dyck path");
  return t;
}

inline Path forward(const RestrictedPair& pair) { return trace(pair).output; }

/// Convenience overload validating the raw pair first.
inline Path forward(const Path& p, const Path& q) { return forward(RestrictedPair(p, q)); }

inline RestrictedPair inverse(const Path& d) {
  if (d.empty()) throw DomainError("bijection inverse: the empty path has no preimage");
  if (!is_dyck(d)) throw DomainError("bijection inverse: \"" + d.str() + "\" is not a Dyck path");

  const auto d_levels = d.levels();
  const std::size_t x = detail::rightmost_highest(d_levels);
  detail::check(x < d.length() && d[x] == Step::Down, "step after the rightmost highest point is a down step");

  std::vector<Step> f_steps = d.steps();
  f_steps[x] = Step::Up;
  const Path f(std::move(f_steps));
  const auto f_levels = f.levels();

  std::size_t u = f_levels.size();
  for (std::size_t i = f_levels.size(); i-- > 0;) {
    if (f_levels[i] == 1) {
      u = i;
      break;
    }
  }
  detail::check(u < f.length() && f[u] == Step::Up, "rightmost level-1 point of F is followed by an up step");
  detail::check(detail::leftmost_highest(f_levels) == x + 1, "x + 1 is the leftmost highest point of F");

  std::vector<Step> p_steps(f.steps().begin(), f.steps().begin() + static_cast<std::ptrdiff_t>(u));
  p_steps.push_back(Step::Down);
  Path p(std::move(p_steps));
  Path q = f.slice(u + 1, f.length());
  return RestrictedPair(std::move(p), std::move(q));
}

/// (P, Q) pairs of E_n, P ranging over increasing semilength, each list lexicographic.
inline std::vector<RestrictedPair> enumerate_restricted_pairs(int n) {
  std::vector<RestrictedPair> out;
  for (int a = 1; a <= n; ++a) {
    const auto ps = enumerate_dyck(a);
    const auto qs = enumerate_dyck(n - a);
    for (const Path& p : ps) {
      for (const Path& q : qs) {
        if (p.height() <= q.height() + 1) out.emplace_back(p, q);
      }
    }
  }
  return out;
}

}  // namespace supercat
