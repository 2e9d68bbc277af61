// supercat: command-line front end for counting, enumeration, identity
// verification and bijection tracing.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "supercat/supercat.hpp"

namespace {

using namespace supercat;

constexpr int kDefaultOrder = 30;

std::string show(const Path& p) { return p.empty() ? "ε" : p.str(); }

int write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 1;
  }
  out << text;
  return 0;
}

std::string report_line(const VerificationReport& r) {
  std::string line = (r.passed ? "PASS " : "FAIL ") + r.identity_id + " order=" + std::to_string(r.order);
  if (r.first_mismatch) {
    const auto& m = *r.first_mismatch;
    line += ": " + m.check + " at " + m.power + ": lhs=" + m.lhs + " rhs=" + m.rhs;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.1f ms)", r.elapsed.count());
  return line + buf + "\n";
}

PathClass make_class(int end, std::optional<int> max_h, std::optional<int> exact_h) {
  if (max_h) return PathClass::at_most(*max_h, end);
  if (exact_h) return PathClass::exactly(*exact_h, end);
  return PathClass::unbounded(end);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Super Catalan numbers: lattice-path counts, bijection, identity verification"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "Print an exact count");
  count->require_subcommand(1);
  int cat_n = 0;
  auto* count_catalan = count->add_subcommand("catalan", "Catalan number C_n");
  count_catalan->add_option("--n", cat_n, "Index")->required()->check(CLI::NonNegativeNumber);
  int sup_m = 0, sup_n = 0;
  auto* count_super = count->add_subcommand("super", "Super Catalan number T(m,n)");
  count_super->add_option("--m", sup_m)->required()->check(CLI::NonNegativeNumber);
  count_super->add_option("--n", sup_n)->required()->check(CLI::NonNegativeNumber);
  int pairs_n = 0, pairs_d = 1;
  auto* count_pairs = count->add_subcommand("pairs", "Pairs of Dyck paths with |h(P)-h(Q)| <= diff, by enumeration");
  count_pairs->add_option("--n", pairs_n, "Total semilength")->required()->check(CLI::Range(0, 12));
  count_pairs->add_option("--diff", pairs_d, "Height difference bound")->check(CLI::NonNegativeNumber);
  int ballot_steps = 0, ballot_end = 0, ballot_start = 0;
  std::optional<int> ballot_max, ballot_exact;
  auto* count_ballot = count->add_subcommand("ballot", "Nonnegative paths in a height class, by DP");
  count_ballot->add_option("--steps", ballot_steps)->required()->check(CLI::NonNegativeNumber);
  count_ballot->add_option("--end", ballot_end, "End level")->check(CLI::NonNegativeNumber);
  count_ballot->add_option("--start", ballot_start, "Start level (requires --max-height)")->check(CLI::NonNegativeNumber);
  auto* opt_max = count_ballot->add_option("--max-height", ballot_max);
  auto* opt_exact = count_ballot->add_option("--exact-height", ballot_exact);
  opt_max->excludes(opt_exact);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List paths, one per line");
  enumerate->require_subcommand(1);
  int enum_n = 0;
  auto* enum_dyck = enumerate->add_subcommand("dyck", "Dyck paths of semilength n");
  enum_dyck->add_option("--n", enum_n)->required()->check(CLI::Range(0, 14));
  int enum_steps = 0, enum_end = 0;
  std::optional<int> enum_max, enum_exact;
  auto* enum_ballot = enumerate->add_subcommand("ballot", "Ballot paths in a height class");
  enum_ballot->add_option("--steps", enum_steps)->required()->check(CLI::Range(0, 28));
  enum_ballot->add_option("--end", enum_end)->check(CLI::NonNegativeNumber);
  auto* enum_opt_max = enum_ballot->add_option("--max-height", enum_max);
  auto* enum_opt_exact = enum_ballot->add_option("--exact-height", enum_exact);
  enum_opt_max->excludes(enum_opt_exact);

  // verify
  auto* verify = app.add_subcommand("verify", "Verify an identity (or 'all') as exact series/integers");
  std::string verify_id;
  int order = kDefaultOrder;
  std::string format = "text";
  std::string out_path;
  bool sequential = false;
  std::string valid_ids = "all";
  for (const auto& id : registered_identities()) valid_ids += ", " + id;
  verify->add_option("identity", verify_id, "One of: " + valid_ids)->required();
  verify->add_option("--order", order, "Truncation order (1..200)")
      ->envname("SUPERCAT_ORDER")
      ->check(CLI::Range(1, 200))
      ->capture_default_str();
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  verify->add_option("--out", out_path, "Write the report to a file");
  verify->add_flag("--sequential", sequential, "Run 'all' members one after another");

  // bijection
  auto* bij = app.add_subcommand("bijection", "Map between restricted pairs (P,Q) and Dyck paths");
  std::vector<std::string> forward_args;
  std::string inverse_arg;
  std::string svg_path;
  std::string bij_format = "text";
  auto* opt_fwd = bij->add_option("--forward", forward_args, "P Q (path strings; \"\" is the empty path)")
                      ->expected(2)
                      ->allow_extra_args(false);
  auto* opt_inv = bij->add_option("--inverse", inverse_arg, "Dyck path D");
  opt_fwd->excludes(opt_inv);
  bij->add_option("--svg", svg_path, "Write an SVG drawing of the surgery steps");
  bij->add_option("--format", bij_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  // table
  auto* table = app.add_subcommand("table", "Print the row T(m, 0..nmax)");
  int table_m = 0, table_nmax = 10;
  table->add_option("--m", table_m)->required()->check(CLI::NonNegativeNumber);
  table->add_option("--nmax", table_nmax)->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (count->parsed()) {
      if (count_catalan->parsed()) std::cout << catalan(cat_n) << "\n";
      if (count_super->parsed()) std::cout << super_catalan(sup_m, sup_n) << "\n";
      if (count_pairs->parsed()) std::cout << count_pairs_height_diff(pairs_n, pairs_d) << "\n";
      if (count_ballot->parsed()) {
        if (ballot_start != 0) {
          if (!ballot_max) throw DomainError("--start requires --max-height");
          std::cout << count_paths_dp(ballot_start, ballot_end, *ballot_max, ballot_steps) << "\n";
        } else {
          std::cout << count_ballot_dp(make_class(ballot_end, ballot_max, ballot_exact), ballot_steps) << "\n";
        }
      }
      return 0;
    }

    if (enumerate->parsed()) {
      const auto paths = enum_dyck->parsed()
                             ? enumerate_dyck(enum_n)
                             : enumerate_ballot(make_class(enum_end, enum_max, enum_exact), enum_steps);
      for (const Path& p : paths) std::cout << p.str() << "\n";
      return 0;
    }

    if (verify->parsed()) {
      if (verify_id != "all" && !is_registered_identity(verify_id)) {
        std::cerr << "error: unknown identity '" << verify_id << "'; valid ids: " << valid_ids << "\n";
        return 2;
      }
      std::vector<VerificationReport> reports;
      if (verify_id == "all") {
        reports = run_all_identities(order, !sequential);
      } else {
        reports.push_back(run_identity(verify_id, order));
      }
      bool all = true;
      for (const auto& r : reports) all = all && r.passed;

      std::string text;
      if (format == "json") {
        text = (verify_id == "all" ? to_json(reports) : to_json(reports.front())).dump(2) + "\n";
      } else {
        for (const auto& r : reports) text += report_line(r);
        if (verify_id == "all") text += all ? "all identities passed\n" : "some identities FAILED\n";
      }
      if (write_or_print(text, out_path) != 0) return 1;
      return all ? 0 : 1;
    }

    if (bij->parsed()) {
      if (opt_fwd->count() == 0 && opt_inv->count() == 0) {
        std::cerr << "error: bijection needs --forward P Q or --inverse D\n";
        return 2;
      }
      std::optional<RestrictedPair> pair;
      std::string result;
      if (opt_fwd->count() > 0) {
        pair.emplace(Path::parse(forward_args.at(0)), Path::parse(forward_args.at(1)));
      } else {
        pair.emplace(inverse(Path::parse(inverse_arg)));
      }
      const BijectionTrace t = trace(*pair);
      if (bij_format == "json") {
        result = to_json(t).dump(2) + "\n";
      } else if (opt_fwd->count() > 0) {
        result = t.output.str() + "\n";
      } else {
        result = "(" + show(pair->p()) + ", " + show(pair->q()) + ")\n";
      }
      std::cout << result;
      if (!svg_path.empty()) return write_or_print(svg::render(t), svg_path);
      return 0;
    }

    if (table->parsed()) {
      std::string row;
      if (table_m == 0) {
        std::cerr << "note: T(0,0) = 1/2 is not an integer; printing 2T(0,n) = binom(2n,n) instead\n";
      }
      for (int n = 0; n <= table_nmax; ++n) {
        if (n) row += ' ';
        row += (table_m == 0 ? central_binomial(n) : super_catalan(table_m, n)).str();
      }
      std::cout << row << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
