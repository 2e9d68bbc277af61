#pragma once

/**
 * Lattice paths with up steps (1,1) and down steps (1,-1), starting at level 0.
 *
 * Paths are encoded as strings over {U, D}; the empty string is the empty
 * path. Enumeration is lexicographic with U < D.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercat/errors.hpp"

namespace supercat {

enum class Step : unsigned char { Up = 0, Down = 1 };

inline char to_char(Step s) { return s == Step::Up ? 'U' : 'D'; }
inline int delta(Step s) { return s == Step::Up ? 1 : -1; }
inline Step flipped(Step s) { return s == Step::Up ? Step::Down : Step::Up; }

class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

  static Path parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
      switch (c) {
        case 'U': steps.push_back(Step::Up); break;
        case 'D': steps.push_back(Step::Down); break;
        default:
          throw DomainError("invalid step '" + std::string(1, c) + "' in path \"" +
                            std::string(text) + "\" (expected U or D)");
      }
    }
    return Path(std::move(steps));
  }

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  /// Levels of the length()+1 points, starting with 0.
  std::vector<int> levels() const {
    std::vector<int> out(steps_.size() + 1, 0);
    for (std::size_t i = 0; i < steps_.size(); ++i) out[i + 1] = out[i] + delta(steps_[i]);
    return out;
  }

  int height() const {
    int level = 0, best = 0;
    for (Step s : steps_) best = std::max(best, level += delta(s));
    return best;
  }

  int min_level() const {
    int level = 0, worst = 0;
    for (Step s : steps_) worst = std::min(worst, level += delta(s));
    return worst;
  }

  int end_level() const {
    int level = 0;
    for (Step s : steps_) level += delta(s);
    return level;
  }

  std::string str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(to_char(s));
    return out;
  }

  Path& push_back(Step s) {
    steps_.push_back(s);
    return *this;
  }

  friend Path operator+(Path a, const Path& b) {
    a.steps_.insert(a.steps_.end(), b.steps_.begin(), b.steps_.end());
    return a;
  }

  /// Steps [first, last).
  Path slice(std::size_t first, std::size_t last) const {
    return Path(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(first),
                                  steps_.begin() + static_cast<std::ptrdiff_t>(last)));
  }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) { return a.steps_ <=> b.steps_; }

 private:
  std::vector<Step> steps_;
};

inline bool is_ballot(const Path& p) { return p.min_level() >= 0; }
inline bool is_dyck(const Path& p) { return is_ballot(p) && p.end_level() == 0; }

/// Semilength of a Dyck path.
inline int semilength(const Path& p) { return static_cast<int>(p.length() / 2); }

/**
 * Constraint descriptor for nonnegative paths from level 0: an end level and
 * at most one of a height upper bound or an exact height.
 *
 * A bound of -1 or -2 denotes the empty class. The empty path belongs to every
 * at_most class with end level 0 and nonnegative bound.
 */
class PathClass {
 public:
  static PathClass unbounded(int end_level) { return PathClass(std::nullopt, std::nullopt, end_level); }
  static PathClass at_most(int max_height, int end_level) {
    return PathClass(max_height, std::nullopt, end_level);
  }
  static PathClass exactly(int height, int end_level) { return PathClass(std::nullopt, height, end_level); }

  const std::optional<int>& max_height() const { return max_height_; }
  const std::optional<int>& exact_height() const { return exact_height_; }
  int end_level() const { return end_level_; }

  /// The height bound, whichever kind is present.
  std::optional<int> bound() const { return max_height_ ? max_height_ : exact_height_; }

  bool is_vacuous() const {
    const auto b = bound();
    return b && (*b < 0 || *b < end_level_);
  }

  bool contains(const Path& p) const {
    if (!is_ballot(p) || p.end_level() != end_level_) return false;
    const int h = p.height();
    if (max_height_) return h <= *max_height_;
    if (exact_height_) return h == *exact_height_;
    return true;
  }

  friend bool operator==(const PathClass&, const PathClass&) = default;

 private:
  PathClass(std::optional<int> max_height, std::optional<int> exact_height, int end_level)
      : max_height_(max_height), exact_height_(exact_height), end_level_(end_level) {
    if (end_level_ < 0) throw DomainError("path class end level must be >= 0");
    const auto b = bound();
    if (b && *b < -2) throw DomainError("height bound below -2 is not a valid class");
  }

  std::optional<int> max_height_;
  std::optional<int> exact_height_;
  int end_level_;
};

/// Splits a nonempty Dyck path R as U P D Q, where D is the first return to level 0.
inline std::pair<Path, Path> factor_dyck(const Path& r) {
  if (r.empty()) throw DomainError("factor_dyck: the empty path has no UPDQ factorization");
  if (!is_dyck(r)) throw DomainError("factor_dyck: \"" + r.str() + "\" is not a Dyck path");
  int level = 0;
  for (std::size_t i = 0; i < r.length(); ++i) {
    level += delta(r[i]);
    if (level == 0) return {r.slice(1, i), r.slice(i + 1, r.length())};
  }
  throw DomainError("factor_dyck: no return to level 0");  // unreachable for Dyck input
}

namespace detail {

struct BallotWalker {
  int steps;
  int end;
  int cap;                  // maximum level allowed
  std::optional<int> need;  // exact height to reach
  std::vector<Step> buf;
  std::vector<Path>* out;

  void run(int level, int peak) {
    const int pos = static_cast<int>(buf.size());
    const int remaining = steps - pos;
    if (remaining == 0) {
      if (level == end && (!need || peak == *need)) out->push_back(Path(buf));
      return;
    }
    for (Step s : {Step::Up, Step::Down}) {
      const int next = level + delta(s);
      if (next < 0 || next > cap) continue;
      const int rem = remaining - 1;
      if (std::abs(next - end) > rem) continue;
      const int next_peak = std::max(peak, next);
      if (need && next_peak < *need && (*need - next) + (*need - end) > rem) continue;
      buf.push_back(s);
      run(next, next_peak);
      buf.pop_back();
    }
  }
};

}  // namespace detail

/// All paths with the given step count in the class, lexicographic with U < D.
inline std::vector<Path> enumerate_ballot(const PathClass& cls, int steps) {
  if (steps < 0) throw DomainError("enumerate_ballot: negative step count");
  std::vector<Path> out;
  if (cls.is_vacuous()) return out;
  if ((steps - cls.end_level()) % 2 != 0) return out;
  const auto b = cls.bound();
  detail::BallotWalker walker{steps, cls.end_level(), b ? *b : steps, cls.exact_height(), {}, &out};
  walker.buf.reserve(static_cast<std::size_t>(steps));
  walker.run(0, 0);
  return out;
}

/// All Dyck paths of semilength n, lexicographic with U < D.
inline std::vector<Path> enumerate_dyck(int n) {
  if (n < 0) throw DomainError("enumerate_dyck: negative semilength");
  return enumerate_ballot(PathClass::unbounded(0), 2 * n);
}

}  // namespace supercat
