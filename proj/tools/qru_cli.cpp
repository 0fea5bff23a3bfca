// Command-line driver: runs the verification suites over parameter grids
// and emits one record per instance, plus value tables for the invariant
// and series commands.  Records are produced by a parallel map but always
// emitted in instance order, so reports are byte-identical for any worker
// count (per-record timings stay zero unless requested).
#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qru/bailey.hpp"
#include "qru/eichler.hpp"
#include "qru/identities.hpp"
#include "qru/qseries.hpp"
#include "qru/record.hpp"

namespace {

struct Range {
  long long lo = 1;
  long long hi = 1;
};

Range parse_range(const std::string& text, const char* flag) {
  Range r;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoll(text);
    } else {
      r.lo = std::stoll(text.substr(0, dots));
      r.hi = std::stoll(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(flag) +
                                ": expected an integer or A..B range");
  }
  if (r.lo < 1 || r.hi < r.lo)
    throw std::invalid_argument(std::string(flag) + ": empty or invalid range");
  return r;
}

std::vector<int> parse_id_list(const std::string& text, int max_id,
                               const char* flag) {
  std::vector<int> out;
  if (text == "all") {
    out.resize(max_id);
    std::iota(out.begin(), out.end(), 1);
    return out;
  }
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      out.push_back(std::stoi(piece));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(flag) +
                                  ": expected 'all' or a comma-separated list");
    }
    if (out.back() < 1 || out.back() > max_id)
      throw std::invalid_argument(std::string(flag) + ": ids must be 1.." +
                                  std::to_string(max_id));
  }
  if (out.empty())
    throw std::invalid_argument(std::string(flag) + ": empty list");
  return out;
}

// The coprime M values the selector expands to for a given N.
std::vector<long long> m_values(const std::string& mode, long long N) {
  std::vector<long long> out;
  if (mode == "all") {
    for (long long M = 1; M <= N; ++M)
      if (std::gcd(M, N) == 1) out.push_back(M);
    return out;
  }
  long long M = 0;
  try {
    M = std::stoll(mode);
  } catch (const std::exception&) {
    throw std::invalid_argument("--M: expected 'all' or an integer");
  }
  if (M < 1 || std::gcd(M, N) != 1)
    throw std::invalid_argument("--M: " + std::to_string(M) +
                                " is not coprime to N = " + std::to_string(N));
  out.push_back(M);
  return out;
}

// The third-modulus offsets the limit identities use for a given p3.
std::vector<long long> default_l3_values(long long p3) {
  std::vector<long long> out;
  if (p3 >= 5 && p3 % 6 == 5) {
    const long long p = (p3 + 1) / 6;
    out = {1, p, 2 * p - 1, 2 * p, 3 * p - 1};
  } else if (p3 >= 7 && p3 % 6 == 1) {
    const long long p = (p3 - 1) / 6;
    out = {1, p, 2 * p, 2 * p + 1, 3 * p};
  } else {
    throw std::invalid_argument(
        "--p3: values must be congruent to 5 or 1 mod 6 (and at least 5)");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long long> parse_int_list(const std::string& text,
                                      const char* flag) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      out.push_back(std::stoll(piece));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(flag) +
                                  ": expected a comma-separated integer list");
    }
  }
  if (out.empty())
    throw std::invalid_argument(std::string(flag) + ": empty list");
  return out;
}

using Job = std::function<qru::VerificationRecord()>;

// Runs the jobs on `workers` threads and returns results in job order.
std::vector<qru::VerificationRecord> run_jobs(const std::vector<Job>& jobs,
                                              int workers, bool timings) {
  std::vector<qru::VerificationRecord> results(jobs.size());
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        const auto start = std::chrono::steady_clock::now();
        results[i] = jobs[i]();
        if (timings) {
          const auto stop = std::chrono::steady_clock::now();
          results[i].elapsed_ms =
              std::chrono::duration_cast<std::chrono::milliseconds>(stop -
                                                                    start)
                  .count();
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(jobs.size());
        return;
      }
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

int emit_report(const std::vector<qru::VerificationRecord>& records,
                const std::string& format, const std::string& output_path,
                long long wall_ms) {
  std::ostringstream body;
  if (format == "csv") body << qru::csv_header() << "\n";
  size_t passes = 0;
  long long max_order = 0;
  for (const auto& rec : records) {
    if (rec.pass) ++passes;
    max_order = std::max(max_order, rec.L);
    if (format == "json")
      body << qru::record_to_json(rec) << "\n";
    else if (format == "csv")
      body << qru::record_to_csv(rec) << "\n";
    else
      body << qru::record_to_human(rec) << "\n";
  }
  if (output_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out)
      throw std::invalid_argument("--output: cannot open " + output_path);
    out << body.str();
  }
  std::cerr << "summary: instances=" << records.size() << " passes=" << passes
            << " failures=" << records.size() - passes
            << " max-order=" << max_order << " wall-ms=" << wall_ms << "\n";
  return passes == records.size() ? 0 : 1;
}

struct CommonFlags {
  std::string format = "human";
  std::string output;
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  bool timings = false;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  cmd->add_option("--output", flags.output, "Write the report to a file");
  cmd->add_option("--workers", flags.workers, "Worker thread count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--timings", flags.timings,
                "Record per-instance wall times (breaks byte-level "
                "reproducibility across runs)");
}

int run_suite(const std::vector<Job>& jobs, const CommonFlags& flags) {
  const auto start = std::chrono::steady_clock::now();
  auto records = run_jobs(jobs, flags.workers, flags.timings);
  const auto stop = std::chrono::steady_clock::now();
  const long long wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count();
  return emit_report(records, flags.format, flags.output, wall_ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification of nested q-series identities at roots of unity"};
  app.require_subcommand(1);

  // verify-main
  auto* main_cmd = app.add_subcommand(
      "verify-main", "Compare each nested sum with its weighted-sum limit");
  std::string main_family = "all", main_p = "1", main_n = "1..4",
              main_m = "all";
  CommonFlags main_flags;
  main_cmd->add_option("--family", main_family, "Families ('all' or list)")
      ->capture_default_str();
  main_cmd->add_option("--p", main_p, "Chain depth range A..B")
      ->capture_default_str();
  main_cmd->add_option("--N", main_n, "Root order range A..B")
      ->capture_default_str();
  main_cmd->add_option("--M", main_m, "'all' coprime values or a single M")
      ->capture_default_str();
  add_common_flags(main_cmd, main_flags);

  // verify-poly
  auto* poly_cmd = app.add_subcommand(
      "verify-poly", "Check the finite polynomial identities exactly");
  std::string poly_family = "all", poly_p = "1", poly_n = "1..4";
  CommonFlags poly_flags;
  poly_cmd->add_option("--family", poly_family, "Families ('all' or list)")
      ->capture_default_str();
  poly_cmd->add_option("--p", poly_p, "Chain depth range A..B")
      ->capture_default_str();
  poly_cmd->add_option("--N", poly_n, "Truncation range A..B")
      ->capture_default_str();
  add_common_flags(poly_cmd, poly_flags);

  // verify-bailey
  auto* bailey_cmd = app.add_subcommand(
      "verify-bailey", "Check the built-in pairs against both definitions");
  std::string bailey_pairs = "all";
  long long bailey_n_max = 12;
  CommonFlags bailey_flags;
  bailey_cmd->add_option("--pairs", bailey_pairs, "Pair ids ('all' or list)")
      ->capture_default_str();
  bailey_cmd->add_option("--n-max", bailey_n_max, "Check indices up to n-max")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common_flags(bailey_cmd, bailey_flags);

  // verify-gauss
  auto* gauss_cmd = app.add_subcommand(
      "verify-gauss",
      "Check the window relations, block chains, the quadruple identity and "
      "weighted-sum halving");
  std::string gauss_p3 = "5,7", gauss_l3 = "main", gauss_n = "1..6",
              gauss_m = "all";
  CommonFlags gauss_flags;
  gauss_cmd->add_option("--p3", gauss_p3, "Third modulus values (list)")
      ->capture_default_str();
  gauss_cmd
      ->add_option("--l3", gauss_l3,
                   "Third offsets: 'main' for the limit-identity values, or "
                   "a list")
      ->capture_default_str();
  gauss_cmd->add_option("--N", gauss_n, "Root order range A..B")
      ->capture_default_str();
  gauss_cmd->add_option("--M", gauss_m, "'all' coprime values or a single M")
      ->capture_default_str();
  add_common_flags(gauss_cmd, gauss_flags);

  // conjectures
  auto* conj_cmd = app.add_subcommand(
      "conjectures", "Run the singly-stated limit evaluations at M = 1");
  long long conj_n_max = 6;
  CommonFlags conj_flags;
  conj_cmd->add_option("--n-max", conj_n_max, "Root orders 1..n-max")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common_flags(conj_cmd, conj_flags);

  // wrt-table
  auto* wrt_cmd = app.add_subcommand(
      "wrt-table", "Tabulate the normalized Seifert-sphere invariant");
  int wrt_sign = 1;
  std::string wrt_p = "1", wrt_n = "2..6", wrt_m = "1";
  CommonFlags wrt_flags;
  wrt_cmd->add_option("--sign", wrt_sign, "+1 or -1 fibre orientation")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  wrt_cmd->add_option("--p", wrt_p, "Chain depth range A..B")
      ->capture_default_str();
  wrt_cmd->add_option("--N", wrt_n, "Root order range A..B (N >= 2)")
      ->capture_default_str();
  wrt_cmd->add_option("--M", wrt_m, "'all' coprime values or a single M")
      ->capture_default_str();
  add_common_flags(wrt_cmd, wrt_flags);

  // series
  auto* series_cmd = app.add_subcommand(
      "series", "Print leading exact terms of the q-expansion of a character");
  long long series_p1 = 2, series_p2 = 3, series_p3 = 0;
  long long series_l1 = 1, series_l2 = 1, series_l3 = 0;
  long long series_terms = 4;
  std::string series_output;
  series_cmd->add_option("--p1", series_p1, "First modulus")
      ->capture_default_str();
  series_cmd->add_option("--p2", series_p2, "Second modulus")
      ->capture_default_str();
  series_cmd->add_option("--p3", series_p3, "Third modulus")->required();
  series_cmd->add_option("--l1", series_l1, "First offset")
      ->capture_default_str();
  series_cmd->add_option("--l2", series_l2, "Second offset")
      ->capture_default_str();
  series_cmd->add_option("--l3", series_l3, "Third offset")->required();
  series_cmd->add_option("--terms", series_terms, "Nonzero terms to print")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  series_cmd->add_option("--output", series_output,
                         "Write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (main_cmd->parsed()) {
      const auto families = parse_id_list(main_family, 10, "--family");
      const Range pr = parse_range(main_p, "--p");
      const Range nr = parse_range(main_n, "--N");
      std::vector<Job> jobs;
      for (int family : families)
        for (long long p = pr.lo; p <= pr.hi; ++p)
          for (long long N = nr.lo; N <= nr.hi; ++N)
            for (long long M : m_values(main_m, N))
              jobs.push_back([family, p, M, N] {
                auto rec = qru::verify_main(family, p, M, N);
                rec.suite = "verify-main";
                return rec;
              });
      return run_suite(jobs, main_flags);
    }

    if (poly_cmd->parsed()) {
      const auto families = parse_id_list(poly_family, 10, "--family");
      const Range pr = parse_range(poly_p, "--p");
      const Range nr = parse_range(poly_n, "--N");
      std::vector<Job> jobs;
      for (int family : families)
        for (long long p = pr.lo; p <= pr.hi; ++p)
          for (long long N = nr.lo; N <= nr.hi; ++N)
            jobs.push_back([family, p, N] {
              auto rec = qru::verify_poly_identity(family, p, N);
              rec.suite = "verify-poly";
              return rec;
            });
      return run_suite(jobs, poly_flags);
    }

    if (bailey_cmd->parsed()) {
      const auto pairs = parse_id_list(bailey_pairs, 10, "--pairs");
      std::vector<Job> jobs;
      for (int id : pairs)
        jobs.push_back([id, bailey_n_max] {
          const bool ok = qru::verify_pair(qru::bailey_pair(id), bailey_n_max);
          auto rec = qru::make_flag_record("pair-definition", id, 0, 0,
                                           bailey_n_max, 0, ok);
          rec.suite = "verify-bailey";
          return rec;
        });
      return run_suite(jobs, bailey_flags);
    }

    if (gauss_cmd->parsed()) {
      const auto p3s = parse_int_list(gauss_p3, "--p3");
      const Range nr = parse_range(gauss_n, "--N");
      std::vector<Job> jobs;
      for (long long p3 : p3s) {
        const auto l3s = gauss_l3 == "main" ? default_l3_values(p3)
                                            : parse_int_list(gauss_l3, "--l3");
        for (long long l3 : l3s)
          for (long long N = nr.lo; N <= nr.hi; ++N)
            for (long long M : m_values(gauss_m, N)) {
              jobs.push_back([p3, l3, M, N] {
                auto rec = qru::verify_gauss_relations(p3, l3, M, N);
                rec.suite = "verify-gauss";
                return rec;
              });
              jobs.push_back([p3, l3, M, N] {
                auto rec = qru::verify_gauss_relation_blocks(p3, l3, M, N);
                rec.suite = "verify-gauss";
                return rec;
              });
              jobs.push_back([p3, l3, M, N] {
                auto rec = qru::verify_gauss_quadruple(p3, l3, M, N);
                rec.suite = "verify-gauss";
                return rec;
              });
              jobs.push_back([p3, l3, M, N] {
                qru::ChiFunction chi(2, 3, p3, 1, 1, l3);
                auto rec = qru::verify_weighted_sum_halving(chi, M, N);
                rec.suite = "verify-gauss";
                return rec;
              });
            }
      }
      return run_suite(jobs, gauss_flags);
    }

    if (conj_cmd->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      auto records = qru::verify_conjecture_suite(conj_n_max);
      for (auto& rec : records) rec.suite = "conjectures";
      const auto stop = std::chrono::steady_clock::now();
      const long long wall_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
              .count();
      return emit_report(records, conj_flags.format, conj_flags.output,
                         wall_ms);
    }

    if (wrt_cmd->parsed()) {
      const Range pr = parse_range(wrt_p, "--p");
      const Range nr = parse_range(wrt_n, "--N");
      std::vector<Job> jobs;
      for (long long p = pr.lo; p <= pr.hi; ++p) {
        const long long p3 = wrt_sign < 0 ? 6 * p - 1 : 6 * p + 1;
        for (long long N = nr.lo; N <= nr.hi; ++N)
          for (long long M : m_values(wrt_m, N))
            jobs.push_back([wrt_sign, p, p3, M, N] {
              qru::Cyclotomic value =
                  qru::wrt_invariant(wrt_sign, p, qru::RootOfUnity(M, N));
              qru::VerificationRecord rec;
              rec.suite = "wrt-table";
              rec.identity = "wrt(2,3," + std::to_string(p3) + ")";
              rec.family = wrt_sign < 0 ? 1 : 8;
              rec.p = p;
              rec.M = M;
              rec.N = N;
              rec.L = value.order();
              rec.pass = true;
              rec.lhs = qru::coordinate_strings(value);
              rec.lhs_text = value.str("z");
              return rec;
            });
      }
      return run_suite(jobs, wrt_flags);
    }

    if (series_cmd->parsed()) {
      qru::ChiFunction chi(series_p1, series_p2, series_p3, series_l1,
                           series_l2, series_l3);
      const std::string text = qru::emit_series(chi, series_terms);
      if (text.empty())
        std::cerr << "series: the character has empty support; no terms\n";
      if (series_output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(series_output, std::ios::binary);
        if (!out)
          throw std::invalid_argument("--output: cannot open " +
                                      series_output);
        out << text;
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
