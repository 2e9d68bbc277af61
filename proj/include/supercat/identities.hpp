#pragma once

/**
 * Verification suite for the super Catalan identities.
 *
 * Each verify_* function checks one displayed identity exactly, either as an
 * integer equality over a range or as an equality of truncated series, and
 * cross-checks it against path enumeration or DP counts where the identity
 * has a combinatorial reading. A report records the first mismatch found;
 * all remaining checks still run.
 */

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "supercat/bijection.hpp"
#include "supercat/bivariate.hpp"
#include "supercat/counting.hpp"
#include "supercat/height_gf.hpp"
#include "supercat/lattice_paths.hpp"
#include "supercat/numeric.hpp"
#include "supercat/series.hpp"

namespace supercat {

struct Mismatch {
  std::string check;  // which sub-identity
  std::string power;  // "x^5", "t^7", "x^2*y^3", "n=4", ...
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
  std::string identity_id;
  int order = 0;
  bool passed = true;
  std::optional<Mismatch> first_mismatch;
  std::chrono::duration<double, std::milli> elapsed{0};
  std::vector<std::string> notes;
};

/// Accumulates checks for one report; only the first mismatch is kept.
class ReportBuilder {
 public:
  ReportBuilder(std::string id, int order)
      : id_(std::move(id)), order_(order), start_(std::chrono::steady_clock::now()) {}

  static std::string power_label(int t_power) {
    if (t_power % 2 == 0) return "x^" + std::to_string(t_power / 2);
    return "t^" + std::to_string(t_power);
  }

  void fail(const std::string& check, const std::string& power, const std::string& lhs, const std::string& rhs) {
    if (!mismatch_) mismatch_ = Mismatch{check, power, lhs, rhs};
  }

  template <class R>
  bool series(const std::string& check, const Series<R>& lhs, const Series<R>& rhs) {
    if (const auto k = first_mismatch(lhs, rhs)) {
      fail(check, power_label(*k), to_string(lhs[*k]), to_string(rhs[*k]));
      return false;
    }
    return true;
  }

  template <class A, class B>
  bool value(const std::string& check, const std::string& label, const A& lhs, const B& rhs) {
    if (lhs != rhs) {
      fail(check, label, to_string(lhs), to_string(rhs));
      return false;
    }
    return true;
  }

  bool expect(const std::string& check, const std::string& label, bool ok, const std::string& detail = "") {
    if (!ok) fail(check, label, detail.empty() ? "false" : detail, "true");
    return ok;
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  VerificationReport finish() const {
    VerificationReport r;
    r.identity_id = id_;
    r.order = order_;
    r.passed = !mismatch_;
    r.first_mismatch = mismatch_;
    r.elapsed = std::chrono::steady_clock::now() - start_;
    r.notes = notes_;
    return r;
  }

 private:
  static std::string to_string(const std::string& s) { return s; }
  static std::string to_string(const BigInt& v) { return supercat::to_string(v); }
  static std::string to_string(const BigRat& v) { return supercat::to_string(v); }
  static std::string to_string(long long v) { return std::to_string(v); }
  static std::string to_string(std::size_t v) { return std::to_string(v); }
  static std::string to_string(int v) { return std::to_string(v); }

  std::string id_;
  int order_;
  std::chrono::steady_clock::time_point start_;
  std::optional<Mismatch> mismatch_;
  std::vector<std::string> notes_;
};

namespace detail {

inline std::string n_label(int n) { return "n=" + std::to_string(n); }

/// Series in x from integer coefficients xs[0..], t-order 2N+1.
inline IntSeries x_series(const std::vector<BigInt>& xs, int x_order) {
  return IntSeries::from_x_coefficients(xs, t_order_for_x(x_order));
}

/// Dyck paths of semilength n grouped by height: counts[n][h].
inline std::vector<std::vector<BigInt>> dyck_height_histogram(int n_max) {
  std::vector<std::vector<BigInt>> out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto& row = out[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (const Path& p : enumerate_dyck(n)) ++row[static_cast<std::size_t>(p.height())];
  }
  return out;
}

}  // namespace detail

/// T(2,n) = 4 C_n - C_{n+1} for 1 <= n <= n_max.
inline VerificationReport verify_T2_closed_form(int n_max) {
  ReportBuilder rb("e2", n_max);
  for (int n = 1; n <= n_max; ++n) {
    rb.value("T(2,n) = 4C_n - C_{n+1}", detail::n_label(n), super_catalan(2, n), 4 * catalan(n) - catalan(n + 1));
  }
  return rb.finish();
}

/// T(3,n) = 16 C_n - 8 C_{n+1} + C_{n+2} for 1 <= n <= n_max.
inline VerificationReport verify_T3_closed_form(int n_max) {
  ReportBuilder rb("t3-closed", n_max);
  for (int n = 1; n <= n_max; ++n) {
    rb.value("T(3,n) = 16C_n - 8C_{n+1} + C_{n+2}", detail::n_label(n), super_catalan(3, n),
             16 * catalan(n) - 8 * catalan(n + 1) + catalan(n + 2));
  }
  return rb.finish();
}

/**
 * sum_n 2^(p-2n) binom(p,2n) T(m,n) = T(m, m+p) for 0 <= m <= m_max,
 * 0 <= p <= p_max. At m = 0 the identity is checked multiplied by 2, i.e.
 * with binom(2n,n) in place of T(0,n).
 */
inline VerificationReport verify_e8(int m_max, int p_max) {
  ReportBuilder rb("e8", p_max);
  rb.note("m ranges over 0.." + std::to_string(m_max) + ", p over 0.." + std::to_string(p_max));
  rb.note("m=0 checked in doubled form: sum 2^(p-2n) binom(p,2n) binom(2n,n) = binom(2p,p)");
  for (int m = 0; m <= m_max; ++m) {
    for (int p = 0; p <= p_max; ++p) {
      BigInt sum = 0;
      for (int n = 0; 2 * n <= p; ++n) {
        const BigInt term = m == 0 ? central_binomial(n) : super_catalan(m, n);
        sum += pow_int(2, static_cast<unsigned>(p - 2 * n)) * binomial(p, 2 * n) * term;
      }
      const BigInt rhs = m == 0 ? central_binomial(p) : super_catalan(m, m + p);
      rb.value(m == 0 ? "e8 doubled (m=0)" : "e8", "m=" + std::to_string(m) + ",p=" + std::to_string(p), sum, rhs);
    }
  }
  return rb.finish();
}

/// 1 + sum_{m,n>=1} C_m C_n x^m y^n = (1 - sum_{m,n>=1} T(m,n) x^m y^n)^(-1) to total degree.
inline VerificationReport verify_e_mo(int degree) {
  if (degree < 2) throw DomainError("verify_e_mo: degree must be >= 2");
  ReportBuilder rb("e-mo", degree);
  BiSeries<BigInt> lhs(degree), base(degree), one(degree);
  lhs.at(0, 0) = 1;
  base.at(0, 0) = 1;
  one.at(0, 0) = 1;
  for (int m = 1; m <= degree; ++m) {
    for (int n = 1; m + n <= degree; ++n) {
      lhs.at(m, n) = catalan(m) * catalan(n);
      base.at(m, n) = -super_catalan(m, n);
    }
  }
  const auto rhs = bi_invert(base);
  const auto label = [](std::pair<int, int> ij) {
    return "x^" + std::to_string(ij.first) + "*y^" + std::to_string(ij.second);
  };
  if (const auto at = first_mismatch(lhs, rhs)) {
    rb.fail("1 + sum C_m C_n x^m y^n = 1/(1 - sum T(m,n) x^m y^n)", label(*at), to_string(lhs.at(at->first, at->second)), to_string(rhs.at(at->first, at->second)));
  }
  const auto product = bi_mul(lhs, base);
  if (const auto at = first_mismatch(product, one)) {
    rb.fail("lhs * (1 - sum T x^m y^n) = 1", label(*at), to_string(product.at(at->first, at->second)),
            to_string(one.at(at->first, at->second)));
  }
  return rb.finish();
}

/// sum_{n>=0} (G_n - G_{n-1}) G_{n+1} = 1 + 2C, plus |F| = 2 C_n by enumeration for small n.
inline VerificationReport verify_firstsum(int x_order) {
  ReportBuilder rb("firstsum", x_order);
  const int T = t_order_for_x(x_order);
  IntSeries lhs(T);
  for (int n = 0; n <= x_order; ++n) {
    const PolyQuotient diff = G(n) - G(n - 1);
    const IntSeries diff_series = expand<BigInt>(diff, T);
    rb.expect("G_n - G_{n-1} starts at x^n", detail::n_label(n), diff_series.valuation() == 2 * n);
    lhs += expand<BigInt>(diff * G(n + 1), T);
  }
  rb.note("terms n > " + std::to_string(x_order) + " start above x^" + std::to_string(x_order) + " and are omitted");
  const IntSeries C = C_series<BigInt>(x_order);
  const IntSeries rhs = IntSeries::constant(1, T) + BigInt(2) * C;
  rb.series("sum (G_n - G_{n-1}) G_{n+1} = 1 + 2C", lhs, rhs);

  const int brute_max = std::min(x_order, 8);
  for (int n = 0; n <= brute_max; ++n) {
    rb.value("coefficient = |F_n| by enumeration", "x^" + std::to_string(n), lhs.x_coefficient(n), count_F_set(n));
  }
  rb.note("enumeration oracle through x^" + std::to_string(brute_max));
  return rb.finish();
}

/// sum_n (G_n - G_{n-1})(G_{n+1} - G_{n-2}) = 1 + 2C - C^2 = 1 + sum T(2,n) x^n, plus pair enumeration.
inline VerificationReport verify_pairsum(int x_order) {
  ReportBuilder rb("pairsum", x_order);
  const int T = t_order_for_x(x_order);
  IntSeries lhs(T);
  for (int n = 0; n <= x_order; ++n) {
    lhs += expand<BigInt>((G(n) - G(n - 1)) * (G(n + 1) - G(n - 2)), T);
  }
  const IntSeries C = C_series<BigInt>(x_order);
  const IntSeries one = IntSeries::constant(1, T);
  rb.series("pair sum = 1 + 2C - C^2", lhs, one + BigInt(2) * C - C * C);

  std::vector<BigInt> t2{1};
  for (int n = 1; n <= x_order; ++n) t2.push_back(super_catalan(2, n));
  rb.series("pair sum = 1 + sum T(2,n) x^n", lhs, detail::x_series(t2, x_order));

  const int brute_max = std::min(x_order, 9);
  for (int n = 0; n <= brute_max; ++n) {
    rb.value("coefficient = pairs with |h(P)-h(Q)| <= 1", "x^" + std::to_string(n), lhs.x_coefficient(n),
             count_pairs_height_diff(n, 1));
  }
  rb.note("enumeration oracle through x^" + std::to_string(brute_max));
  return rb.finish();
}

namespace detail {

/// sum_{n=0}^{x_order} T(3, n+1) x^n by clearing denominators of the (1-4x)^(5/2) form:
/// 1 - 10x + 30x^2 - 20x^3 - (1-4x)^(5/2), divided by 2x^4.
inline TruncSeries t3_shifted_from_radical(int x_order, ReportBuilder* rb = nullptr) {
  const int big = x_order + 4;
  const int T = t_order_for_x(big);
  const TruncSeries radical = binomial_pow(BigRat(5, 2), -4, big);
  const TruncSeries poly =
      TruncSeries::from_x_coefficients({BigRat(1), BigRat(-10), BigRat(30), BigRat(-20)}, T);
  const TruncSeries cleared = poly - radical;
  if (rb) {
    for (int k = 0; k < 8; ++k) {
      rb->value("negative powers cancel", ReportBuilder::power_label(k), cleared[k], BigRat(0));
    }
  }
  return BigRat(1, 2) * cleared.shifted_down(8);
}

}  // namespace detail

/// -(1-4x)^(5/2)/(2x^4) - 10/x + 15/x^2 - 5/x^3 + 1/(2x^4) = sum T(3,n+1) x^n.
inline VerificationReport verify_e52(int x_order) {
  ReportBuilder rb("e52", x_order);
  rb.note("compared after multiplying both sides by 2x^4");
  const int big = x_order + 4;
  const int T = t_order_for_x(big);
  const TruncSeries radical = binomial_pow(BigRat(5, 2), -4, big);
  const TruncSeries lhs = TruncSeries::from_x_coefficients({BigRat(1), BigRat(-10), BigRat(30), BigRat(-20)}, T) - radical;
  std::vector<BigRat> xs(4, BigRat(0));
  for (int n = 0; n <= x_order; ++n) xs.push_back(BigRat(2 * super_catalan(3, n + 1)));
  const TruncSeries rhs = TruncSeries::from_x_coefficients(xs, T);
  rb.series("2x^4 * e52", lhs, rhs);

  // T(3,n) = 1/2 (-1)^n 4^(3+n) binom(5/2, 3+n), the coefficient form used above.
  for (int n = 1; n <= x_order + 1; ++n) {
    const BigRat form = BigRat(1, 2) * (n % 2 == 0 ? 1 : -1) * BigRat(pow_int(4, static_cast<unsigned>(3 + n))) *
                        binomial(BigRat(5, 2), 3 + n);
    rb.value("T(3,n) = 1/2 (-1)^n 4^(3+n) binom(5/2, 3+n)", detail::n_label(n), form, BigRat(super_catalan(3, n)));
  }
  return rb.finish();
}

namespace detail {

/// t * sum_{k>=6} H_k^(4) H_{k-2}^(3) H_{k-4}^(2) through t^t_order. The k-th term
/// starts no lower than t^(6k-20); summation stops once that bound exceeds the order.
inline IntSeries t3_triple_sum(int t_order, ReportBuilder& rb) {
  IntSeries sum(t_order);
  int k = 6;
  for (;; ++k) {
    const int min_degree = 6 * k - 20;
    if (min_degree > t_order) break;
    const PolyQuotient product = H_end(k, 4) * H_end(k - 2, 3) * H_end(k - 4, 2);
    const IntSeries term = expand<BigInt>(product, t_order - 1).shifted_up(1);
    const auto v = term.valuation();
    rb.expect("triple term k starts at t^(6k-20)", "k=" + std::to_string(k), v.has_value() && *v == min_degree,
              v ? "t^" + std::to_string(*v) : "zero");
    sum += term;
  }
  rb.note("triple sum truncated after k=" + std::to_string(k - 1) + "; term k=" + std::to_string(k) +
          " starts at t^" + std::to_string(6 * k - 20) + " > t^" + std::to_string(t_order));
  return sum;
}

inline IntSeries t3_lhs(int x_order) {
  std::vector<BigInt> xs{1 + super_catalan(3, 1)};
  for (int n = 1; n <= x_order; ++n) xs.push_back(super_catalan(3, n + 1));
  return x_series(xs, x_order);
}

inline IntSeries t3_corrections(int t_order) {
  return BigInt(2) * expand<BigInt>(G(1), t_order) + BigInt(2) * expand<BigInt>(G(2), t_order) +
         expand<BigInt>(G(3), t_order) + expand<BigInt>(G(5), t_order);
}

inline void check_t3_series(ReportBuilder& rb, int x_order) {
  const int T = t_order_for_x(x_order);
  const IntSeries triples = t3_triple_sum(T, rb);
  const IntSeries corrections = t3_corrections(T);
  const IntSeries rhs = triples + corrections;
  const IntSeries lhs = t3_lhs(x_order);
  rb.series("1 + sum T(3,n+1) x^n = sqrt(x) sum HHH + 2G_1 + 2G_2 + G_3 + G_5", lhs, rhs);
  rb.value("constant term = 1 + T(3,1)", "x^0", rhs[0], BigInt(6));

  // The k-sum against the closed rational expression, literal polynomials.
  const TruncSeries e52 = t3_shifted_from_radical(x_order, &rb).truncated(T);
  const auto quotient = [T](PolyX num, PolyX den) { return expand<BigRat>(PolyQuotient(std::move(num), std::move(den)), T); };
  const TruncSeries expression = e52 + TruncSeries::constant(1, T) - BigRat(2) * quotient({1}, {1, -1}) -
                                 BigRat(2) * quotient({1, -1}, {1, -2}) - quotient({1, -2}, {1, -3, 1}) -
                                 quotient({1, -4, 3}, {1, -5, 6, -1});
  rb.series("sqrt(x) sum HHH = closed rational expression", series_cast<BigRat>(triples), expression);
}

/// Brute-force reading of the T(3) identity: triples of enumerated ballot paths with
/// heights k, k-2, k-4 ending at levels 4, 3, 2, plus Dyck paths of height <= 1, 2, 3, 5
/// counted with multiplicities 2, 2, 1, 1.
inline void check_t3_oracle(ReportBuilder& rb, int n_max, const IntSeries* triple_series = nullptr) {
  const int max_steps = 2 * n_max - 1;
  // bucket[(steps, height, end)] = paths
  std::map<std::tuple<int, int, int>, std::vector<Path>> bucket;
  for (int s = 0; s <= std::max(max_steps, 0); ++s) {
    for (int end = 2; end <= 4; ++end) {
      for (Path& p : enumerate_ballot(PathClass::unbounded(end), s)) {
        bucket[{s, p.height(), end}].push_back(std::move(p));
      }
    }
  }
  const auto paths = [&](int s, int h, int end) -> const std::vector<Path>& {
    static const std::vector<Path> none;
    const auto it = bucket.find({s, h, end});
    return it == bucket.end() ? none : it->second;
  };

  const auto hist = dyck_height_histogram(n_max);
  for (int n = 0; n <= n_max; ++n) {
    BigInt triples = 0;
    const int total = 2 * n - 1;  // sqrt(x) contributes one half-step
    for (int k = 6; total >= 0 && 6 * k - 21 <= total; ++k) {
      for (int a = 0; a <= total; ++a) {
        for (int b = 0; a + b <= total; ++b) {
          const int c = total - a - b;
          const auto& pa = paths(a, k, 4);
          const auto& pb = paths(b, k - 2, 3);
          const auto& pc = paths(c, k - 4, 2);
          for (const Path& x : pa) {
            for (const Path& y : pb) {
              for (const Path& z : pc) {
                if (x.end_level() == 4 && y.end_level() == 3 && z.end_level() == 2) ++triples;
              }
            }
          }
        }
      }
    }
    BigInt extra = 0;
    const auto& row = hist[static_cast<std::size_t>(n)];
    for (std::size_t h = 0; h < row.size(); ++h) {
      const int weight = (h <= 1 ? 2 : 0) + (h <= 2 ? 2 : 0) + (h <= 3 ? 1 : 0) + (h <= 5 ? 1 : 0);
      extra += weight * row[h];
    }
    const BigInt lhs = n == 0 ? 1 + super_catalan(3, 1) : super_catalan(3, n + 1);
    rb.value("enumerated triples + 2G_1 + 2G_2 + G_3 + G_5", "x^" + std::to_string(n), triples + extra, lhs);
    if (triple_series && 2 * n <= triple_series->order()) {
      rb.value("enumerated triples = triple-sum coefficient", "x^" + std::to_string(n), triples,
               triple_series->x_coefficient(n));
    }
  }
  rb.note("enumeration oracle through x^" + std::to_string(n_max));
}

}  // namespace detail

/// Series side of the T(3) identity, including the closed rational expression for the k-sum.
inline VerificationReport verify_T3_series(int x_order) {
  ReportBuilder rb("t3-main", x_order);
  detail::check_t3_series(rb, x_order);
  return rb.finish();
}

/// Enumeration side of the T(3) identity for coefficients x^0..x^n_max.
inline VerificationReport verify_T3_oracle(int n_max) {
  ReportBuilder rb("t3-main", n_max);
  ReportBuilder scratch("t3-main", n_max);
  const IntSeries triples = detail::t3_triple_sum(t_order_for_x(n_max), scratch);
  detail::check_t3_oracle(rb, n_max, &triples);
  return rb.finish();
}

/// Both sides: series to x_order, enumeration through x^min(x_order, 9).
inline VerificationReport verify_T3_main(int x_order) {
  ReportBuilder rb("t3-main", x_order);
  detail::check_t3_series(rb, x_order);
  const int n_max = std::min(x_order, 9);
  ReportBuilder scratch("t3-main", n_max);
  const IntSeries triples = detail::t3_triple_sum(t_order_for_x(n_max), scratch);
  detail::check_t3_oracle(rb, n_max, &triples);
  return rb.finish();
}

/**
 * The C-forms, the x^(1/2)-forms and the p-polynomial forms of G_k, G_k^(j),
 * G_k^(i,j) and H_k^(j) agree with each other and with DP path counts, for
 * 0 <= k <= k_max and every valid level.
 */
inline VerificationReport verify_G_closed_forms(int k_max, int x_order) {
  ReportBuilder rb("g-forms", x_order);
  rb.note("k ranges over -1.." + std::to_string(k_max));
  const int T = t_order_for_x(x_order);
  const int W = T + 1;  // working order; the x^(-1/2) variant loses one half-step

  const IntSeries C = C_series<BigInt>(x_order + 1).truncated(W);
  const IntSeries sqrtC = sqrt_C_series<BigInt>(W);
  const IntSeries one = IntSeries::constant(1, W);
  const IntSeries one_plus_C = one + C;

  const int top = k_max + 3;
  std::vector<IntSeries> Cp{one}, sCp{one}, opCp{one}, tp{one};
  for (int m = 1; m <= top; ++m) {
    Cp.push_back(Cp.back() * C);
    sCp.push_back(sCp.back() * sqrtC);
    opCp.push_back(opCp.back() * one_plus_C);
    tp.push_back(IntSeries::monomial(m, W));
  }
  const auto one_minus_Cp = [&](int m) { return one - Cp[static_cast<std::size_t>(m)]; };
  const IntSeries inv_one_minus_C = invert(one_minus_Cp(1));

  const auto dp_series = [&](int start, int end, int k) {
    std::vector<BigInt> cs;
    const CountTable table(k, T, start);
    for (int s = 0; s <= T; ++s) cs.push_back(table.at(s, end));
    return IntSeries(std::move(cs));
  };
  const auto trunc = [T](const IntSeries& s) { return s.truncated(T); };

  // k = -1: the C-form vanishes and G_{-1} = 0.
  rb.series("G_k C-form at k=-1", trunc(one_plus_C * one_minus_Cp(0) * invert(one_minus_Cp(1))), IntSeries(T));
  rb.expect("G(-1) is zero", "k=-1", G(-1).is_zero());

  for (int k = 0; k <= k_max; ++k) {
    const std::string ks = "k=" + std::to_string(k);
    const IntSeries inv_den = invert(one_minus_Cp(k + 2));

    const IntSeries g_c = trunc(one_plus_C * one_minus_Cp(k + 1) * inv_den);
    const IntSeries g_p = expand<BigInt>(G(k), T);
    const IntSeries g_dp = dp_series(0, 0, k);
    rb.series("G_k C-form = p_k/p_{k+1} [" + ks + "]", g_c, g_p);
    rb.series("G_k = DP count [" + ks + "]", g_p, g_dp);

    for (int j = 0; j <= k + 1; ++j) {
      const std::string kj = ks + ",j=" + std::to_string(j);
      const IntSeries tail = one_minus_Cp(k - j + 1) * inv_den;
      const IntSeries c_form = trunc(sCp[static_cast<std::size_t>(j)] * one_plus_C * tail);
      const IntSeries x_form =
          trunc(tp[static_cast<std::size_t>(j)] * opCp[static_cast<std::size_t>(j + 1)] * tail);
      const IntSeries p_form = expand<BigInt>(G_end(k, j), T);
      const IntSeries dp = dp_series(0, j, k);
      rb.series("G_k^(j) C-form = x-form [" + kj + "]", c_form, x_form);
      rb.series("G_k^(j) C-form = p-form [" + kj + "]", c_form, p_form);
      rb.series("G_k^(j) = DP count [" + kj + "]", p_form, dp);
      rb.expect("G_k^(j) parity [" + kj + "]", kj, has_parity(p_form, j % 2));

      if (k >= 1) {
        const IntSeries h = expand<BigInt>(H_end(k, j), T);
        std::vector<BigInt> exact;
        for (int s = 0; s <= T; ++s) exact.push_back(count_ballot_dp(PathClass::exactly(k, j), s));
        rb.series("H_k^(j) = exact-height DP count [" + kj + "]", h, IntSeries(std::move(exact)));
        rb.series("H_k^(j) = G_k^(j) - G_{k-1}^(j) [" + kj + "]", h, p_form - expand<BigInt>(G_end(k - 1, j), T));
      }
    }

    for (int i = 0; i <= k + 1; ++i) {
      const IntSeries head = one_minus_Cp(i + 1) * inv_one_minus_C;
      for (int j = i; j <= k + 1; ++j) {
        const std::string kij = ks + ",i=" + std::to_string(i) + ",j=" + std::to_string(j);
        const IntSeries body = head * one_minus_Cp(k - j + 1) * inv_den;
        const int d = j - i;
        const IntSeries c_form = trunc(sCp[static_cast<std::size_t>(d)] * one_plus_C * body);
        const IntSeries x_form = trunc(tp[static_cast<std::size_t>(d)] * opCp[static_cast<std::size_t>(d + 1)] * body);
        const IntSeries half_form = (sCp[static_cast<std::size_t>(d + 1)] * body).shifted_down(1);
        const IntSeries p_form = expand<BigInt>(G_between(k, i, j), T);
        rb.series("G_k^(i,j) C-form = first variant [" + kij + "]", c_form, x_form);
        rb.series("G_k^(i,j) C-form = second variant [" + kij + "]", c_form, half_form);
        rb.series("G_k^(i,j) C-form = p-form [" + kij + "]", c_form, p_form);
        rb.series("G_k^(i,j) = DP count [" + kij + "]", p_form, dp_series(i, j, k));
        rb.series("G_k^(j,i) = DP count [" + kij + "]", expand<BigInt>(G_between(k, j, i), T), dp_series(j, i, k));
      }
    }
  }
  return rb.finish();
}

/// p_n = (1 - C^(n+1)) / ((1 - C)(1 + C)^n) for 0 <= n <= n_max, and recurrence = explicit sum.
inline VerificationReport verify_p_bridge(int n_max, int x_order) {
  ReportBuilder rb("p-bridge", x_order);
  const int T = t_order_for_x(x_order);
  const IntSeries C = C_series<BigInt>(x_order);
  const IntSeries one = IntSeries::constant(1, T);
  const IntSeries inv_one_minus_C = invert(one - C);
  const IntSeries inv_one_plus_C = invert(one + C);
  IntSeries C_pow = C;                  // C^(n+1)
  IntSeries inv_op_pow = one;           // (1+C)^(-n)
  for (int n = 0; n <= n_max; ++n) {
    const IntSeries bridge = (one - C_pow) * inv_one_minus_C * inv_op_pow;
    rb.series("p_n = (1-C^(n+1))/((1-C)(1+C)^n) [n=" + std::to_string(n) + "]", p_poly(n).to_series<BigInt>(T), bridge);
    C_pow = C_pow * C;
    inv_op_pow = inv_op_pow * inv_one_plus_C;
  }
  const int rec_max = std::max(n_max, 20);
  for (int n = -1; n <= rec_max; ++n) {
    rb.expect("p_n recurrence = explicit sum", detail::n_label(n), p_poly(n) == p_poly_explicit(n),
              p_poly(n).str() + " vs " + p_poly_explicit(n).str());
  }
  return rb.finish();
}

/// |E_n| = C_n and the bijection E_n <-> D_n round-trips exhaustively for 1 <= n <= n_max.
inline VerificationReport verify_lemma_main_count(int n_max) {
  ReportBuilder rb("lemma-main", n_max);
  for (int n = 1; n <= n_max; ++n) {
    const std::string nl = detail::n_label(n);
    const BigInt cn = catalan(n);
    rb.value("|E_n| = C_n", nl, count_E_set(n), cn);

    const auto pairs = enumerate_restricted_pairs(n);
    rb.value("enumerated E_n size", nl, BigInt(pairs.size()), cn);
    std::set<Path> image;
    for (const RestrictedPair& pair : pairs) {
      const Path d = forward(pair);
      if (!rb.expect("forward preserves semilength", nl, semilength(d) == n, d.str())) continue;
      if (!image.insert(d).second) rb.fail("forward is injective", nl, d.str(), "distinct image");
      const RestrictedPair back = inverse(d);
      if (!(back == pair)) {
        rb.fail("inverse(forward(P,Q)) = (P,Q)", nl, "(" + back.p().str() + ", " + back.q().str() + ")",
                "(" + pair.p().str() + ", " + pair.q().str() + ")");
      }
    }
    const auto dyck = enumerate_dyck(n);
    rb.expect("image of forward = D_n", nl, std::set<Path>(dyck.begin(), dyck.end()) == image);
    for (const Path& d : dyck) {
      const Path again = forward(inverse(d));
      if (again != d) rb.fail("forward(inverse(D)) = D", nl, again.str(), d.str());
    }
  }
  return rb.finish();
}

/// Identity ids accepted by run_identity, in report order.
inline const std::vector<std::string>& registered_identities() {
  static const std::vector<std::string> ids{"e2",      "t3-closed", "e8",      "e-mo",       "firstsum", "pairsum",
                                            "e52",     "t3-main",   "g-forms", "lemma-main", "p-bridge"};
  return ids;
}

inline bool is_registered_identity(const std::string& id) {
  const auto& ids = registered_identities();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

/// Runs one identity at a CLI order. Exhaustive checks cap their range: lemma-main
/// at n <= 8; g-forms uses k <= 8; p-bridge uses n <= 12; e-mo needs degree >= 2.
inline VerificationReport run_identity(const std::string& id, int order) {
  if (order < 1) throw DomainError("order must be >= 1");
  if (id == "e2") return verify_T2_closed_form(order);
  if (id == "t3-closed") return verify_T3_closed_form(order);
  if (id == "e8") return verify_e8(order, order);
  if (id == "e-mo") return verify_e_mo(std::max(order, 2));
  if (id == "firstsum") return verify_firstsum(order);
  if (id == "pairsum") return verify_pairsum(order);
  if (id == "e52") return verify_e52(order);
  if (id == "t3-main") return verify_T3_main(order);
  if (id == "g-forms") return verify_G_closed_forms(8, order);
  if (id == "lemma-main") return verify_lemma_main_count(std::min(order, 8));
  if (id == "p-bridge") return verify_p_bridge(12, order);
  std::string valid;
  for (const auto& v : registered_identities()) valid += (valid.empty() ? "" : ", ") + v;
  throw DomainError("unknown identity '" + id + "'; valid ids: " + valid);
}

/// Runs every registered identity, concurrently when `parallel`; results in registry order.
inline std::vector<VerificationReport> run_all_identities(int order, bool parallel = true) {
  std::vector<VerificationReport> out;
  const auto& ids = registered_identities();
  if (!parallel) {
    for (const auto& id : ids) out.push_back(run_identity(id, order));
    return out;
  }
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& id : ids) jobs.push_back(std::async(std::launch::async, [id, order] { return run_identity(id, order); }));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace supercat
