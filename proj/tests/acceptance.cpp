// Acceptance suite: one PASS/FAIL line per criterion, all comparisons exact.
// Usage: acceptance <path-to-supercat-cli>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "supercat/supercat.hpp"

using namespace supercat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  char timing[96];
  std::snprintf(timing, sizeof timing, "%.3f s < %.0f s%s", secs, limit_s, in_time ? "" : " EXCEEDED");
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << timing << ", tolerance 0)";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

std::string run_cli(const std::string& cli, const std::string& args, int& status) {
  FILE* pipe = popen(("\"" + cli + "\" " + args).c_str(), "r");
  if (!pipe) {
    status = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

Outcome from_report(const VerificationReport& r) {
  if (r.passed) return {true, r.identity_id + " order " + std::to_string(r.order)};
  const auto& m = *r.first_mismatch;
  return {false, r.identity_id + ": " + m.check + " at " + m.power + ": lhs=" + m.lhs + " rhs=" + m.rhs};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <supercat-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];

  criterion(1, "table --m 2/3 --nmax 10 reproduce the T(2,n) and T(3,n) rows", 1.0, [&] {
    const std::vector<std::pair<std::string, std::string>> rows{
        {"table --m 2 --nmax 10", "3 2 3 6 14 36 99 286 858 2652 8398\n"},
        {"table --m 3 --nmax 10", "10 5 6 10 20 45 110 286 780 2210 6460\n"}};
    for (const auto& [args, want] : rows) {
      int status = 0;
      const std::string got = run_cli(cli, args, status);
      if (status != 0 || got != want) return Outcome{false, args + " printed '" + got + "'"};
    }
    return Outcome{};
  });

  criterion(2, "pairs with |h(P)-h(Q)| <= 1 number T(2,n), 1 <= n <= 9 (enumeration)", 10.0, [] {
    for (int n = 1; n <= 9; ++n) {
      const BigInt got = count_pairs_height_diff(n, 1);
      if (got != super_catalan(2, n)) {
        return Outcome{false, "n=" + std::to_string(n) + ": " + to_string(got) + " vs " + to_string(super_catalan(2, n))};
      }
    }
    return Outcome{true, "n = 1..9"};
  });

  criterion(3, "bijection E_n <-> D_n round-trips exhaustively, |E_n| = C_n, n <= 8", 10.0,
            [] { return from_report(verify_lemma_main_count(8)); });

  const std::vector<std::pair<std::string, std::function<VerificationReport()>>> series_checks{
      {"e2 (n <= 30)", [] { return verify_T2_closed_form(30); }},
      {"t3-closed (n <= 30)", [] { return verify_T3_closed_form(30); }},
      {"e8 (m, p <= 10)", [] { return verify_e8(10, 10); }},
      {"firstsum (x^30)", [] { return verify_firstsum(30); }},
      {"pairsum (x^30)", [] { return verify_pairsum(30); }},
      {"e52 (x^30)", [] { return verify_e52(30); }},
      {"p-bridge (n <= 12, x^30)", [] { return verify_p_bridge(12, 30); }},
      {"g-forms (k <= 8, all i, j, x^30)", [] { return verify_G_closed_forms(8, 30); }},
  };
  for (const auto& [name, run] : series_checks) {
    criterion(4, "series identity " + name, 5.0, [&] { return from_report(run()); });
  }

  criterion(5, "bivariate e-mo identity to total degree 12", 5.0, [] { return from_report(verify_e_mo(12)); });

  criterion(6, "T(3) identity: series to x^20 incl. rational-expression sub-identity", 5.0,
            [] { return from_report(verify_T3_series(20)); });
  criterion(6, "T(3) identity: triple-enumeration oracle for x^n, n <= 9", 60.0,
            [] { return from_report(verify_T3_oracle(9)); });
  criterion(6, "T(3) identity: RHS constant term 6 = 1 + T(3,1)", 5.0, [] {
    ReportBuilder scratch("t3-main", 0);
    const int T = t_order_for_x(0);
    const IntSeries rhs = detail::t3_triple_sum(T, scratch) + detail::t3_corrections(T);
    const bool ok = rhs[0] == 6 && 1 + super_catalan(3, 1) == 6;
    return Outcome{ok, "constant term " + to_string(rhs[0])};
  });

  criterion(7, "count_ballot_dp = enumeration, bound <= 6, end <= 5, steps <= 14", 30.0, [] {
    int cases = 0;
    for (int end = 0; end <= 5; ++end) {
      std::vector<PathClass> classes{PathClass::unbounded(end)};
      for (int h = -2; h <= 6; ++h) {
        classes.push_back(PathClass::at_most(h, end));
        classes.push_back(PathClass::exactly(h, end));
      }
      for (const PathClass& cls : classes) {
        for (int steps = 0; steps <= 14; ++steps) {
          ++cases;
          const BigInt dp = count_ballot_dp(cls, steps);
          const BigInt en(enumerate_ballot(cls, steps).size());
          if (dp != en) {
            return Outcome{false, "end=" + std::to_string(end) + " bound=" + (cls.bound() ? std::to_string(*cls.bound()) : "none") +
                                      " steps=" + std::to_string(steps) + ": " + to_string(dp) + " vs " + to_string(en)};
          }
        }
      }
    }
    return Outcome{true, std::to_string(cases) + " (class, steps) cases"};
  });

  criterion(8, "no large-scale experiments; criteria 2, 3, 6, 7 run their oracles at full scale", 1.0,
            [] { return Outcome{}; });

  std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: " + std::to_string(failures) + " FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
