#include "symchar/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>

#include "symchar/analytics.hpp"
#include "symchar/characters.hpp"
#include "symchar/hooks.hpp"
#include "symchar/reduction.hpp"
#include "symchar/report.hpp"
#include "symchar/sampler.hpp"

#ifndef SYMCHAR_VERSION
#define SYMCHAR_VERSION "v0.1.0"
#endif

namespace symchar::cli {

const char* version() { return SYMCHAR_VERSION; }

namespace {

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
  }
}

std::set<int> parse_ks(const std::string& spec) {
  std::set<int> ks;
  if (spec.empty()) return ks;
  std::stringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) ks.insert(parse_int(token, "--K entry"));
  return ks;
}

int require_p(const RunConfig& c) {
  if (!c.p) throw UsageError("--p is required for this command");
  return *c.p;
}

const std::vector<std::string> kSuites = {"orthogonality", "congruence", "tcore",  "noncore",
                                          "confluence",    "restricted", "lemma3", "hooks"};

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path path(out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path;
}

void deliver(const CsvDocument& doc, const RunConfig& c, std::ostream& out) {
  if (c.out.empty()) {
    write_csv(doc, out);
  } else {
    emit_csv(doc, output_path(c.out));
  }
}

std::vector<std::string> provenance(const RunConfig& c, const std::string& command) {
  std::vector<std::string> lines = {"symchar " + std::string(version()) + " " + command};
  if (!c.n_spec.empty()) lines.push_back("N=" + c.n_spec);
  if (c.p) lines.push_back("p=" + std::to_string(*c.p));
  lines.push_back("seed=" + std::to_string(c.seed));
  return lines;
}

TableOptions table_options(const RunConfig& c) { return {c.threads, c.exact_cap, c.mod_cap}; }

template <class Table, class Build, class Load>
Table cached_table(const RunConfig& c, const std::string& name, Build build, Load load) {
  if (c.cache_dir.empty()) return build();
  const std::filesystem::path path = std::filesystem::path(c.cache_dir) / name;
  if (auto cached = load(path)) return std::move(*cached);
  Table table = build();
  std::filesystem::create_directories(c.cache_dir);
  emit_csv(table_csv(table), path);
  return table;
}

ExactTable exact_table_for(const RunConfig& c, int n) {
  return cached_table<ExactTable>(
      c, table_cache_name(n, std::nullopt), [&] { return build_exact_table(n, table_options(c)); },
      [&](const std::filesystem::path& path) { return load_exact_table(path, n); });
}

ModTable mod_table_for(const RunConfig& c, int n, int p) {
  return cached_table<ModTable>(
      c, table_cache_name(n, p), [&] { return build_mod_table(n, p, table_options(c)); },
      [&](const std::filesystem::path& path) { return load_mod_table(path, n, p); });
}

int run_table(const RunConfig& c, std::ostream& out) {
  const int n = parse_n_range(c.n_spec).first;
  CsvDocument doc;
  if (c.mode == "exact") {
    doc = table_csv(exact_table_for(c, n));
  } else {
    doc = table_csv(mod_table_for(c, n, require_p(c)));
  }
  doc.comments = provenance(c, "table mode=" + c.mode);
  deliver(doc, c, out);
  return kExitOk;
}

int run_density(const RunConfig& c, std::ostream& out) {
  const auto [lo, hi] = parse_n_range(c.n_spec);
  const int p = require_p(c);
  std::vector<DensityReport> reports;
  for (int n = lo; n <= hi; ++n) {
    const ModTable mod = mod_table_for(c, n, p);
    if (n <= c.exact_cap) {
      const ExactTable exact = exact_table_for(c, n);
      reports.push_back(density_report(mod, &exact));
    } else {
      reports.push_back(density_report(mod, nullptr));
    }
  }
  CsvDocument doc = density_csv(reports);
  doc.comments = provenance(c, "density");
  deliver(doc, c, out);
  return kExitOk;
}

int run_reduce(const RunConfig& c, std::ostream& out) {
  const int p = require_p(c);
  const Partition mu = Partition::parse(c.mu);
  const ReductionTrace trace = tilde_reduce(mu, p, c.trace ? TraceMode::with_steps : TraceMode::final_only);
  if (c.trace) {
    for (const auto& step : trace.steps) {
      out << "# merge " << step.count << "x" << step.part << " -> " << step.result.to_string() << '\n';
    }
  }
  out << trace.final.to_string() << '\n';
  return kExitOk;
}

struct SuiteResult {
  std::string suite;
  int n = 0;
  int p = 0;
  std::size_t checked = 0;
  std::size_t violations = 0;
};

SuiteResult run_suite(const RunConfig& c, int n) {
  SuiteResult res{c.suite, n, c.p.value_or(0), 0, 0};
  if (c.suite == "orthogonality") {
    const auto report = verify_orthogonality(exact_table_for(c, n));
    res.checked = report.pairs_checked;
    res.violations = report.violations;
  } else if (c.suite == "congruence") {
    const auto report = verify_congruence(mod_table_for(c, n, require_p(c)));
    res.checked = report.pairs_checked;
    res.violations = report.violations;
  } else if (c.suite == "tcore") {
    const ExactTable table = exact_table_for(c, n);
    for (std::size_t col = 0; col < table.size(); ++col) {
      const int t = table.partitions[col].largest();
      for (std::size_t row = 0; row < table.size(); ++row) {
        if (t < 1 || !is_t_core(table.partitions[row], t)) continue;
        ++res.checked;
        if (table(row, col) != 0) ++res.violations;
      }
    }
  } else if (c.suite == "noncore") {
    const auto pn = partition_numbers(n);
    for (int t = 1; t <= n; ++t) {
      ++res.checked;
      const BigInt bound = BigInt(t + 1) * pn[static_cast<std::size_t>(n - t)];
      if (BigInt(count_non_t_cores(n, t)) > bound) ++res.violations;
    }
  } else if (c.suite == "confluence") {
    const int p = require_p(c);
    const PartitionSampler sampler(n);
    for (std::size_t i = 0; i < c.samples; ++i) {
      const Partition mu = sampler.sample(c.seed, i);
      const ReductionTrace trace = tilde_reduce(mu, p);
      const Partition& replayed = trace.steps.empty() ? mu : trace.steps.back().result;
      ++res.checked;
      if (replayed != trace.final || trace.final.max_multiplicity() > p - 1) ++res.violations;
    }
  } else if (c.suite == "restricted") {
    const RestrictedCountSpec spec{n, require_p(c), c.r, parse_ks(c.k_spec)};
    const BigInt brute = count_restricted_bruteforce(spec);
    ++res.checked;
    if (count_restricted_gf(spec) != brute) ++res.violations;
    if (n >= 1) {
      ++res.checked;
      if (!Interval::from_bigint(brute).certainly_le(restricted_upper_bound(spec))) ++res.violations;
    }
  } else if (c.suite == "lemma3") {
    for (int p = 2; p * p <= kLemma3Cap; ++p) {
      if (!is_prime(p)) continue;
      long long pr = static_cast<long long>(p) * p;
      for (int r = 2; pr <= kLemma3Cap; ++r, pr *= p) {
        ++res.checked;
        if (!lemma3_check(p, r)) ++res.violations;
      }
    }
  } else if (c.suite == "hooks") {
    for (const Partition& lambda : enumerate_partitions(n)) {
      for (int t = 1; t <= n; ++t) {
        ++res.checked;
        const bool core = is_t_core(lambda, t);
        if (core != is_t_core_beta(lambda, t) || core != remove_border_strips(lambda, t).empty()) {
          ++res.violations;
        }
      }
    }
  }
  return res;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const auto [lo, hi] = parse_n_range(c.n_spec.empty() ? "0" : c.n_spec);
  CsvDocument doc;
  doc.comments = provenance(c, "verify suite=" + c.suite);
  doc.header = {"suite", "N", "p", "checked", "violations"};
  std::size_t violations = 0;
  for (int n = lo; n <= hi; ++n) {
    const SuiteResult res = run_suite(c, n);
    violations += res.violations;
    doc.rows.push_back({res.suite, std::to_string(res.n), std::to_string(res.p), std::to_string(res.checked),
                        std::to_string(res.violations)});
    if (c.suite == "lemma3") break;
  }
  deliver(doc, c, out);
  return violations == 0 ? kExitOk : kExitViolations;
}

int run_bounds(const RunConfig& c, std::ostream& out) {
  std::vector<BoundRow> rows;
  bool all_certified = true;
  if (c.kind == "restricted") {
    const RestrictedCountSpec spec{parse_n_range(c.n_spec).first, require_p(c), c.r, parse_ks(c.k_spec)};
    const BigInt brute = count_restricted_bruteforce(spec);
    const Interval brute_i = Interval::from_bigint(brute);
    const Interval bound = restricted_upper_bound(spec);
    const bool certified = brute_i.certainly_le(bound);
    all_certified = certified;
    rows.push_back({"bruteforce_count", brute_i, std::nullopt});
    rows.push_back({"gf_count", Interval::from_bigint(count_restricted_gf(spec)), std::nullopt});
    rows.push_back({"upper_bound", bound, certified});
  } else if (c.kind == "delta") {
    const long long n = std::stoll(c.n_spec);
    const DeltaReport report = delta_eval(n, require_p(c));
    const bool chain = report.lower_bound.certainly_le(report.delta);
    const bool window = report.window_floor.certainly_le(report.window_sum);
    all_certified = chain;
    rows.push_back({"x", report.params.x, std::nullopt});
    rows.push_back({"K", report.params.k_min, std::nullopt});
    rows.push_back({"delta", report.delta, std::nullopt});
    rows.push_back({"delta_lower_bound", report.lower_bound, chain});
    rows.push_back({"window_sum", report.window_sum, std::nullopt});
    rows.push_back({"window_floor", report.window_floor, window});
    rows.push_back({"n_pow_1_over_12p", report.growth_reference, std::nullopt});
  } else if (c.kind == "fp") {
    const int p = require_p(c);
    const Interval product = eval_Fp(c.x, p);
    const Interval series = eval_Fp_series(c.x, p);
    rows.push_back({"Fp_product", product, std::nullopt});
    rows.push_back({"Fp_series", series, product.overlaps(series)});
    if (c.x >= 1.0) {
      const Lemma2Window w = lemma2_window(c.x, p);
      rows.push_back({"lemma2_deviation_low", w.deviation_low, std::nullopt});
      rows.push_back({"lemma2_deviation_high", w.deviation_high, std::nullopt});
    }
    all_certified = product.overlaps(series);
  } else if (c.kind == "saddle") {
    const SaddleWeight sw = saddle_weight(std::stoll(c.n_spec));
    rows.push_back({"x", sw.x, std::nullopt});
    rows.push_back({"q", sw.q, std::nullopt});
  }
  CsvDocument doc = bounds_csv(rows);
  doc.comments = provenance(c, "bounds kind=" + c.kind);
  deliver(doc, c, out);
  return all_certified ? kExitOk : kExitViolations;
}

int run_sample(const RunConfig& c, std::ostream& out) {
  const int n = parse_n_range(c.n_spec).first;
  const PartitionSampler sampler(n);
  CsvDocument doc;
  doc.comments = provenance(c, "sample");
  doc.header = {"index", "largest", "num_parts"};
  if (c.p) doc.header.push_back("tilde_largest");
  std::vector<Partition> draws(c.samples);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < c.samples; i = next++) draws[i] = sampler.sample(c.seed, i);
  };
  if (c.threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < c.threads; ++i) pool.emplace_back(worker);
  }
  double total_largest = 0.0;
  std::size_t below = 0;
  const double threshold = c.p ? largest_part_threshold(n, 1.0 + 1.0 / (5.0 * *c.p)) : 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const Partition& mu = draws[i];
    total_largest += mu.largest();
    std::vector<std::string> row = {std::to_string(i), std::to_string(mu.largest()), std::to_string(mu.length())};
    if (c.p) {
      const int reduced = tilde_reduce_digits(mu, *c.p).largest();
      if (reduced < threshold) ++below;
      row.push_back(std::to_string(reduced));
    }
    doc.rows.push_back(std::move(row));
  }
  if (!draws.empty() && n >= 2) {
    const double mean = total_largest / static_cast<double>(draws.size());
    const double predicted = largest_part_threshold(n, 1.0);
    doc.comments.push_back("mean_largest=" + format_fixed(mean, 6) + " predicted=" + format_fixed(predicted, 6) +
                           " ratio=" + format_fixed(mean / predicted, 6));
    if (c.p) {
      const auto [wlo, whi] = wilson_interval(below, draws.size());
      doc.comments.push_back("tail_threshold=" + format_fixed(threshold, 6) + " below=" + std::to_string(below) +
                             " fraction=" + format_fixed(static_cast<double>(below) / draws.size(), 6) +
                             " wilson95=[" + format_fixed(wlo, 6) + "," + format_fixed(whi, 6) + "]");
    }
  }
  deliver(doc, c, out);
  return kExitOk;
}

}  // namespace

std::pair<int, int> parse_n_range(const std::string& spec) {
  const auto dots = spec.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(spec, "--N");
    return {n, n};
  }
  const int lo = parse_int(spec.substr(0, dots), "--N lower end");
  const int hi = parse_int(spec.substr(dots + 2), "--N upper end");
  if (lo > hi) throw UsageError("--N range is empty: " + spec);
  return {lo, hi};
}

void validate(const RunConfig& c) {
  if (c.threads < 1) throw UsageError("--threads must be >= 1");
  if (c.p && !is_prime(*c.p)) throw UsageError("--p must be prime");
  auto need_n = [&] {
    if (c.n_spec.empty()) throw UsageError("--N is required for this command");
  };
  switch (c.command) {
    case Command::table: {
      need_n();
      const int n = parse_n_range(c.n_spec).first;
      if (n < 0) throw UsageError("--N must be >= 0");
      if (c.mode != "exact" && c.mode != "mod") throw UsageError("--mode must be exact or mod");
      if (c.mode == "mod") {
        if (require_p(c) > kMaxModulus) throw UsageError("--p must be <= 64 for residue tables");
        if (n > c.mod_cap) throw UsageError("resource cap: N exceeds the residue table cap " + std::to_string(c.mod_cap));
      } else if (n > c.exact_cap) {
        throw UsageError("resource cap: N exceeds the exact table cap " + std::to_string(c.exact_cap));
      }
      break;
    }
    case Command::density: {
      need_n();
      const auto [lo, hi] = parse_n_range(c.n_spec);
      if (lo < 0) throw UsageError("--N must be >= 0");
      if (require_p(c) > kMaxModulus) throw UsageError("--p must be <= 64");
      if (hi > c.mod_cap) throw UsageError("resource cap: N exceeds the residue table cap " + std::to_string(c.mod_cap));
      break;
    }
    case Command::reduce:
      require_p(c);
      try {
        (void)Partition::parse(c.mu);
      } catch (const std::exception& e) {
        throw UsageError(std::string("--mu: ") + e.what());
      }
      break;
    case Command::verify: {
      if (std::find(kSuites.begin(), kSuites.end(), c.suite) == kSuites.end()) {
        throw UsageError("unknown --suite '" + c.suite + "'");
      }
      if (c.suite == "lemma3") break;
      need_n();
      const auto [lo, hi] = parse_n_range(c.n_spec);
      if (lo < 0) throw UsageError("--N must be >= 0");
      if (c.suite == "congruence" || c.suite == "confluence" || c.suite == "restricted") require_p(c);
      if ((c.suite == "orthogonality" || c.suite == "tcore") && hi > c.exact_cap) {
        throw UsageError("resource cap: N exceeds the exact table cap " + std::to_string(c.exact_cap));
      }
      if (c.suite == "congruence" && (hi > c.mod_cap || *c.p > kMaxModulus)) {
        throw UsageError("resource cap: N exceeds the residue table cap " + std::to_string(c.mod_cap));
      }
      if ((c.suite == "noncore" || c.suite == "hooks" || c.suite == "restricted") && hi > kDefaultEnumerationCap) {
        throw UsageError("resource cap: N exceeds the enumeration cap");
      }
      if (c.suite == "restricted") {
        try {
          RestrictedCountSpec{lo, *c.p, c.r, parse_ks(c.k_spec)}.validate();
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      }
      break;
    }
    case Command::bounds: {
      if (c.kind != "restricted" && c.kind != "delta" && c.kind != "fp" && c.kind != "saddle") {
        throw UsageError("unknown --kind '" + c.kind + "'");
      }
      if (c.kind == "fp") {
        require_p(c);
        if (!(c.x > 0)) throw UsageError("--x must be > 0");
        break;
      }
      need_n();
      long long n = 0;
      try {
        n = std::stoll(c.n_spec);
      } catch (const std::exception&) {
        throw UsageError("cannot parse --N '" + c.n_spec + "'");
      }
      if (n < 1) throw UsageError("--N must be >= 1");
      if (c.kind == "restricted") {
        if (n > kDefaultEnumerationCap) throw UsageError("resource cap: N exceeds the enumeration cap");
        try {
          RestrictedCountSpec{static_cast<int>(n), require_p(c), c.r, parse_ks(c.k_spec)}.validate();
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      }
      if (c.kind == "delta") {
        try {
          if (prop_two_params(n, require_p(c)).r < 2) throw UsageError("--kind delta needs log N >= 4ep (r >= 2)");
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      }
      break;
    }
    case Command::sample: {
      need_n();
      if (parse_n_range(c.n_spec).first < 0) throw UsageError("--N must be >= 0");
      break;
    }
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::table: return run_table(config, out);
      case Command::density: return run_density(config, out);
      case Command::reduce: return run_reduce(config, out);
      case Command::verify: return run_verify(config, out);
      case Command::bounds: return run_bounds(config, out);
      case Command::sample: return run_sample(config, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace symchar::cli
