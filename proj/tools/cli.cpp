// Copyright 2026 The mdpart Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>
#include <thread>

#include "mdpart/boxed.hpp"
#include "mdpart/error.hpp"
#include "mdpart/moduli.hpp"
#include "mdpart/multipartition.hpp"
#include "mdpart/serialize.hpp"
#include "mdpart/staircase.hpp"
#include "mdpart/table_cache.hpp"

namespace mdpart::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string kind;
  int r = 0;
  int n = 0;
  int n_max = 0;
  std::size_t order = 12;
  bool punctual = false;
  bool table = false;
  bool emit_ideals = false;
  int genus = 1;
  std::int64_t chi_x = 0;
  std::int64_t chi_s = 1;
  bool kx_zero = false;
  std::size_t num_deg = 0;
  std::size_t den_deg = 0;
  bool num_deg_set = false;
  bool den_deg_set = false;
  int k = 1;
  int l = 1;
  std::string format = "text";
  unsigned threads = 1;
  std::string cache_dir;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned default_threads()
{
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string join(std::span<const Rational> coeffs)
{
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) {
      s += ',';
    }
    s += to_string(coeffs[i]);
  }
  return s;
}

std::string monomial(const Exponent &e)
{
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) {
      continue;
    }
    if (!s.empty()) {
      s += '*';
    }
    s += "z" + std::to_string(i + 1);
    if (e[i] > 1) {
      s += "^" + std::to_string(e[i]);
    }
  }
  return s.empty() ? "1" : s;
}

std::string generators_text(const std::vector<Exponent> &gens)
{
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    s += (i > 0 ? ", " : "") + monomial(gens[i]);
  }
  return s + ")";
}

void print_series(const RunConfig &c, const Series &s, ordered_json header, std::ostream &out)
{
  if (c.format == "csv") {
    out << "n,coefficient\n";
    for (std::size_t i = 0; i <= s.order(); ++i) {
      out << i << ',' << to_string(s[i]) << '\n';
    }
  } else if (c.format == "json") {
    const ordered_json body = to_json(s);
    for (const auto &[key, value] : body.items()) {
      header[key] = value;
    }
    out << header.dump(2) << '\n';
  } else {
    out << join(s.coefficients()) << '\n';
  }
}

int cmd_count(const RunConfig &c, const CountOptions &opts, std::ostream &out)
{
  if (c.n < 0) {
    throw InvalidArgument("n must satisfy n >= 0 (got " + std::to_string(c.n) + ")");
  }
  if (c.emit_ideals && c.format == "csv") {
    throw UsageError("--emit-ideals is not available with --format csv");
  }
  const auto n = static_cast<std::size_t>(c.n);
  const std::size_t first = c.table ? 0 : n;
  if (c.format == "csv") {
    const auto plain = partition_counts(c.r, c.n, false, opts);
    const auto punctual = partition_counts(c.r, c.n, true, opts);
    out << "r,n,P,P_punctual\n";
    for (std::size_t m = first; m <= n; ++m) {
      out << c.r << ',' << m << ',' << to_string(plain[m]) << ',' << to_string(punctual[m]) << '\n';
    }
    return kExitOk;
  }

  const auto counts = partition_counts(c.r, c.n, c.punctual, opts);
  std::vector<StaircaseIdeal> ideals;
  if (c.emit_ideals) {
    ideals = enumerate_ideals(c.r, c.n, c.punctual, opts.threads);
  }
  if (c.format == "json") {
    ordered_json j;
    j["r"] = c.r;
    j["n"] = c.n;
    j["punctual"] = c.punctual;
    j["count"] = to_string(counts[n]);
    if (c.table) {
      auto arr = ordered_json::array();
      for (const auto &v : counts) {
        arr.push_back(to_string(v));
      }
      j["table"] = arr;
    }
    if (c.emit_ideals) {
      auto arr = ordered_json::array();
      for (const auto &I : ideals) {
        arr.push_back({{"diagram", diagram_to_json(I)}, {"generators", minimal_generators(I)}});
      }
      j["ideals"] = arr;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (c.table) {
    for (std::size_t m = 0; m <= n; ++m) {
      out << m << ' ' << to_string(counts[m]) << '\n';
    }
  } else {
    out << to_string(counts[n]) << '\n';
  }
  for (const auto &I : ideals) {
    out << generators_text(minimal_generators(I)) << '\n';
  }
  return kExitOk;
}

FibrationData fibration(const RunConfig &c)
{
  FibrationData fd{c.r, c.genus, c.chi_x, c.chi_s, c.kx_zero};
  fd.validate();
  return fd;
}

int cmd_series(const RunConfig &c, const CountOptions &opts, std::ostream &out)
{
  ordered_json header;
  header["series"] = c.kind;
  header["r"] = c.r;
  Series s(c.order);
  if (c.kind == "partition" || c.kind == "punctual") {
    s = partition_series(c.r, c.order, c.kind == "punctual", opts);
  } else if (c.kind == "h") {
    s = h_series(c.r, c.order, opts);
  } else if (c.kind == "c") {
    s = c_series(c.r, c.order, opts);
  } else if (c.kind == "hilbert") {
    header["chi_x"] = c.chi_x;
    s = hilbert_euler_series(c.r, c.chi_x, c.order, opts);
  } else {
    const FibrationData fd = fibration(c);
    header["genus"] = fd.genus;
    header["chi_x"] = fd.chi_x;
    header["chi_s"] = fd.chi_s;
    header["kx_zero"] = fd.kx_zero;
    s = c.kind == "moduli" ? moduli_euler_series(fd, c.order, opts) : reduced_partition_function(fd, c.order, opts);
  }
  print_series(c, s, header, out);
  return kExitOk;
}

int cmd_boxed(const RunConfig &c, std::ostream &out)
{
  if (c.k < 1 || c.l < 1 || c.n < 0) {
    throw InvalidArgument("boxed counts need k >= 1, l >= 1 and n >= 0");
  }
  const BoxSpec box{c.k, c.l, c.n};
  if (c.kind == "verify") {
    const bool closed = pi_closed(box, c.order) == pi_brute(box, c.order);
    const bool punctual = tilde_pi(box, c.order) == tilde_pi_brute(box, c.order);
    const bool profile = verify_constant_profile(box, c.order);
    const std::pair<const char *, bool> results[] = {
        {"closed_form", closed}, {"punctual_relation", punctual}, {"constant_profile", profile}};
    if (c.format == "json") {
      ordered_json j;
      j["k"] = c.k;
      j["l"] = c.l;
      j["n"] = c.n;
      j["order"] = c.order;
      for (const auto &[name, ok] : results) {
        j[name] = ok;
      }
      out << j.dump(2) << '\n';
    } else if (c.format == "csv") {
      out << "k,l,n,check,result\n";
      for (const auto &[name, ok] : results) {
        out << c.k << ',' << c.l << ',' << c.n << ',' << name << ',' << (ok ? "true" : "false") << '\n';
      }
    } else {
      for (const auto &[name, ok] : results) {
        out << name << ": " << (ok ? "ok" : "MISMATCH") << '\n';
      }
    }
    return closed && punctual && profile ? kExitOk : kExitFinding;
  }

  const Series s = c.kind == "pi" ? pi_closed(box, c.order) : tilde_pi(box, c.order);
  if (c.format == "csv") {
    out << "k,l,n,m,count\n";
    for (std::size_t m = 0; m <= s.order(); ++m) {
      out << c.k << ',' << c.l << ',' << c.n << ',' << m << ',' << to_string(s[m]) << '\n';
    }
    return kExitOk;
  }
  ordered_json header;
  header["boxed"] = c.kind;
  header["k"] = c.k;
  header["l"] = c.l;
  header["n"] = c.n;
  print_series(c, s, header, out);
  return kExitOk;
}

int cmd_check(const RunConfig &c, const CountOptions &opts, std::ostream &out)
{
  if (c.kind == "pwp") {
    const ConjectureReport report = check_pwp(c.r, c.order, opts);
    if (c.format == "csv") {
      out << "n,punctual,predicted\n";
      for (std::size_t m = 0; m < report.pairs.size(); ++m) {
        out << m << ',' << to_string(report.pairs[m].first) << ',' << to_string(report.pairs[m].second) << '\n';
      }
    } else {
      out << to_json(report).dump(2) << '\n';
    }
    return report.verdict == Verdict::HoldsThroughOrder ? kExitOk : kExitFinding;
  }
  if (c.format == "csv") {
    throw UsageError("check euler has no csv form; use --format json");
  }
  const FibrationData fd = fibration(c);
  const std::size_t bound = default_degree_bound(c.order);
  const ConjectureReport report = check_conj_euler(fd, c.order, c.num_deg_set ? c.num_deg : bound,
                                                   c.den_deg_set ? c.den_deg : bound, opts);
  out << to_json(report).dump(2) << '\n';
  const bool ok = report.verdict == Verdict::HoldsThroughOrder && report.symmetry && report.symmetry->symmetric;
  return ok ? kExitOk : kExitFinding;
}

int cmd_oracle_diff(const RunConfig &c, std::ostream &out)
{
  if (c.n_max < 0) {
    throw InvalidArgument("n-max must satisfy n-max >= 0 (got " + std::to_string(c.n_max) + ")");
  }
  struct Row {
    std::size_t n;
    bool punctual;
    BigInt layered;
    BigInt staircase;
  };
  std::vector<Row> rows;
  for (const bool punctual : {false, true}) {
    const auto layered = partition_counts(c.r, c.n_max, punctual, {.threads = c.threads, .cache = nullptr});
    const auto staircase = oracle_counts(c.r, c.n_max, punctual, c.threads);
    for (std::size_t m = 0; m < layered.size(); ++m) {
      rows.push_back({m, punctual, layered[m], staircase[m]});
    }
  }
  const auto differences = std::count_if(rows.begin(), rows.end(), [](const Row &row) {
    return row.layered != row.staircase;
  });

  if (c.format == "csv") {
    out << "r,n,punctual,layered,staircase\n";
    for (const auto &row : rows) {
      out << c.r << ',' << row.n << ',' << (row.punctual ? "true" : "false") << ',' << to_string(row.layered) << ','
          << to_string(row.staircase) << '\n';
    }
  } else if (c.format == "json") {
    ordered_json j;
    j["r"] = c.r;
    j["n_max"] = c.n_max;
    j["agree"] = differences == 0;
    auto arr = ordered_json::array();
    for (const auto &row : rows) {
      if (row.layered != row.staircase) {
        arr.push_back({{"n", row.n},
                       {"punctual", row.punctual},
                       {"layered", to_string(row.layered)},
                       {"staircase", to_string(row.staircase)}});
      }
    }
    j["differences"] = arr;
    out << j.dump(2) << '\n';
  } else {
    for (const auto &row : rows) {
      if (row.layered != row.staircase) {
        out << "r=" << c.r << " n=" << row.n << (row.punctual ? " punctual" : " plain")
            << " layered=" << to_string(row.layered) << " staircase=" << to_string(row.staircase) << '\n';
      }
    }
    if (differences == 0) {
      out << "no differences for r=" << c.r << ", n <= " << c.n_max << '\n';
    } else {
      out << differences << " difference(s) for r=" << c.r << ", n <= " << c.n_max << '\n';
    }
  }
  return differences == 0 ? kExitOk : kExitFinding;
}

void add_format(CLI::App *app, RunConfig &c)
{
  app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

void add_workers(CLI::App *app, RunConfig &c, bool with_cache)
{
  app->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 4096u))->capture_default_str();
  if (with_cache) {
    app->add_option("--cache-dir", c.cache_dir,
                    std::string("Directory for cached count tables (default: $") + TableCache::kEnvVar + ")");
  }
}

void add_order(CLI::App *app, RunConfig &c)
{
  app->add_option("--order", c.order, "Truncation order")->capture_default_str();
}

void add_fibration(CLI::App *app, RunConfig &c)
{
  app->add_option("--genus", c.genus, "Fiber genus g")->capture_default_str();
  app->add_option("--chi-x", c.chi_x, "Euler number of X")->capture_default_str();
  app->add_option("--chi-s", c.chi_s, "Euler number of S")->capture_default_str();
  app->add_flag("--kx-zero", c.kx_zero, "K_X = 0 (requires genus 1)");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  RunConfig c;
  c.threads = default_threads();

  CLI::App app{"Exact counts and generating series for multi-dimensional partitions", "mdpart"};
  app.require_subcommand(1);

  auto *count = app.add_subcommand("count", "Count r-dimensional partitions of n");
  count->add_option("--r", c.r, "Dimension r")->required();
  count->add_option("--n", c.n, "Weight n")->required();
  count->add_flag("--punctual", c.punctual, "Count punctual partitions");
  count->add_flag("--table", c.table, "Print the whole table 0..n");
  count->add_flag("--emit-ideals", c.emit_ideals, "List minimal generators of every fixed-point ideal");
  add_format(count, c);
  add_workers(count, c, true);

  auto *series = app.add_subcommand("series", "Print a generating series");
  series->add_option("kind", c.kind, "partition | punctual | hilbert | moduli | reduced | h | c")
      ->required()
      ->check(CLI::IsMember({"partition", "punctual", "hilbert", "moduli", "reduced", "h", "c"}));
  series->add_option("--r", c.r, "Dimension r")->required();
  add_order(series, c);
  add_fibration(series, c);
  add_format(series, c);
  add_workers(series, c, true);

  auto *boxed = app.add_subcommand("boxed", "Boxed plane partition series");
  boxed->add_option("kind", c.kind, "pi | tilde-pi | verify")
      ->required()
      ->check(CLI::IsMember({"pi", "tilde-pi", "verify"}));
  boxed->add_option("--k", c.k, "Rows k")->required();
  boxed->add_option("--l", c.l, "Columns l")->required();
  boxed->add_option("--n", c.n, "Entry bound n")->required();
  add_order(boxed, c);
  add_format(boxed, c);
  add_workers(boxed, c, false);

  auto *check = app.add_subcommand("check", "Test a conjecture through a given order");
  check->add_option("kind", c.kind, "pwp | euler")->required()->check(CLI::IsMember({"pwp", "euler"}));
  check->add_option("--r", c.r, "Dimension r")->required();
  add_order(check, c);
  add_fibration(check, c);
  auto *num_deg = check->add_option("--num-deg", c.num_deg, "Numerator degree bound (default order/2 - 1)");
  auto *den_deg = check->add_option("--den-deg", c.den_deg, "Denominator degree bound (default order/2 - 1)");
  add_format(check, c);
  add_workers(check, c, true);

  auto *diff = app.add_subcommand("oracle-diff", "Compare the layered and staircase counters");
  diff->add_option("--r", c.r, "Dimension r")->required();
  diff->add_option("--n-max", c.n_max, "Largest weight")->required();
  add_format(diff, c);
  add_workers(diff, c, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  c.num_deg_set = num_deg->count() > 0;
  c.den_deg_set = den_deg->count() > 0;

  try {
    std::optional<TableCache> cache;
    if (!c.cache_dir.empty()) {
      cache.emplace(c.cache_dir, kLayeredAlgorithmVersion);
    } else {
      cache = TableCache::from_environment(kLayeredAlgorithmVersion);
    }
    const CountOptions opts{.threads = c.threads, .cache = cache ? &*cache : nullptr};

    // Buffer so a failing command leaves no partial output behind.
    std::ostringstream buffer;
    int status = kExitOk;
    if (count->parsed()) {
      status = cmd_count(c, opts, buffer);
    } else if (series->parsed()) {
      status = cmd_series(c, opts, buffer);
    } else if (boxed->parsed()) {
      status = cmd_boxed(c, buffer);
    } else if (check->parsed()) {
      status = cmd_check(c, opts, buffer);
    } else {
      status = cmd_oracle_diff(c, buffer);
    }
    out << buffer.str();
    return status;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonMonotoneProfile &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace mdpart::cli
