#include "qljung/driver.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "qljung/congmod.hpp"
#include "qljung/errors.hpp"
#include "qljung/intarith.hpp"
#include "qljung/qcore.hpp"

namespace qljung {

namespace {

struct Task {
  StatementId statement;
  Params params;
  std::function<CheckResult()> run;
};

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a nonnegative integer: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::int64_t si(std::uint64_t v) { return static_cast<std::int64_t>(v); }

ReportEntry entry_from(const CheckResult& r) {
  ReportEntry e;
  e.statement = r.statement;
  e.params = r.params;
  e.passed = r.passed;
  e.status = r.passed ? Status::passed : Status::failed;
  if (r.witness && !r.witness->is_zero()) e.witness = WitnessSummary::from_poly(*r.witness);
  e.parts = r.parts;
  e.elapsed_ms = r.elapsed_ms;
  return e;
}

ReportEntry skipped(StatementId id, Params params, std::string note) {
  ReportEntry e;
  e.statement = id;
  e.params = std::move(params);
  e.status = Status::skipped;
  e.note = std::move(note);
  return e;
}

bool is_negative_control(StatementId id, const Params& params) {
  if (id != StatementId::classical) return false;
  for (const auto& [name, value] : params) {
    if (name == "p") return value < 5;
  }
  return false;
}

class Planner {
 public:
  explicit Planner(const RunConfig& config) : config_(config) {}

  void plan(StatementId id) {
    if (id == StatementId::qchu) {
      plan_qchu();
      return;
    }
    for (std::uint64_t p : config_.p_values) {
      if (!is_prime(p)) {
        skips_.push_back(skipped(id, {{"p", si(p)}}, "not prime"));
        continue;
      }
      if (config_.small_primes_identities_only && p < 5 && !is_exact_identity(id)) continue;
      plan_prime(id, p);
    }
  }

  std::vector<Task>& tasks() { return tasks_; }
  std::vector<ReportEntry>& skips() { return skips_; }

 private:
  std::uint64_t b_limit(std::uint64_t a) const {
    return std::min(a, config_.b_max.value_or(config_.a_max));
  }

  void add(StatementId id, Params params, std::function<CheckResult()> fn) {
    tasks_.push_back({id, std::move(params), std::move(fn)});
  }

  void plan_qchu() {
    const std::uint64_t top = config_.a_max;
    for (std::uint64_t m = 0; m <= top; ++m) {
      for (std::uint64_t n = 0; n <= top; ++n) {
        for (std::uint64_t k = 0; k <= m + n; ++k) {
          add(StatementId::qchu, {{"m", si(m)}, {"n", si(n)}, {"k", si(k)}},
              [=] { return check_qchu(m, n, k); });
        }
      }
    }
  }

  template <typename Fn>
  void for_ab(StatementId id, std::uint64_t p, Fn make) {
    for (std::uint64_t a = 0; a <= config_.a_max; ++a) {
      for (std::uint64_t b = 0; b <= b_limit(a); ++b) {
        add(id, {{"p", si(p)}, {"a", si(a)}, {"b", si(b)}}, make(a, b));
      }
    }
  }

  void plan_prime(StatementId id, std::uint64_t p) {
    const auto k = config_.k_override;
    const std::uint64_t budget = config_.budget;
    switch (id) {
      case StatementId::qchu:
        break;
      case StatementId::expansion:
        for_ab(id, p, [=](std::uint64_t a, std::uint64_t b) {
          return [=] { return check_expansion_identity(p, a, b, budget); };
        });
        break;
      case StatementId::convolution:
        add(id, {{"p", si(p)}}, [=] { return check_convolution_identity(p); });
        break;
      case StatementId::clark:
        for_ab(id, p, [=](std::uint64_t a, std::uint64_t b) {
          return [=] { return check_clark(p, a, b, k.value_or(2)); };
        });
        break;
      case StatementId::q_ljunggren:
        for_ab(id, p, [=](std::uint64_t a, std::uint64_t b) {
          return [=] { return check_q_ljunggren(p, a, b, k.value_or(3)); };
        });
        break;
      case StatementId::cong2:
        for_ab(id, p, [=](std::uint64_t a, std::uint64_t b) {
          return [=] { return check_cong2(p, a, b, k.value_or(3)); };
        });
        break;
      case StatementId::q_wolstenholme:
        add(id, {{"p", si(p)}}, [=] { return check_q_wolstenholme(p, k.value_or(3)); });
        break;
      case StatementId::shipan:
        add(id, {{"p", si(p)}}, [=] { return check_shipan(p); });
        break;
      case StatementId::double_harmonic:
        add(id, {{"p", si(p)}}, [=] { return check_double_harmonic(p); });
        break;
      case StatementId::power_reduction:
        add(id, {{"p", si(p)}}, [=] { return check_power_reduction(p); });
        break;
      case StatementId::classical:
        for_ab(id, p, [=](std::uint64_t a, std::uint64_t b) {
          return [=] { return check_classical(p, a, b); };
        });
        break;
      case StatementId::jacobsthal:
        for (std::uint64_t a = 2; a <= config_.a_max; ++a) {
          for (std::uint64_t b = 1; b < a && b <= b_limit(a); ++b) {
            add(id, {{"p", si(p)}, {"a", si(a)}, {"b", si(b)}},
                [=] { return jacobsthal_as_check(p, a, b); });
          }
        }
        break;
    }
  }

  const RunConfig& config_;
  std::vector<Task> tasks_;
  std::vector<ReportEntry> skips_;
};

ReportEntry execute(const Task& task, bool negative_controls) {
  ReportEntry e;
  try {
    e = entry_from(task.run());
  } catch (const PrecondViolation& ex) {
    return skipped(task.statement, task.params, ex.what());
  } catch (const BudgetExceeded& ex) {
    return skipped(task.statement, task.params, ex.what());
  } catch (const std::exception& ex) {
    e = ReportEntry{};
    e.statement = task.statement;
    e.params = task.params;
    e.status = Status::errored;
    e.note = ex.what();
    return e;
  }
  if (!e.passed && is_negative_control(e.statement, e.params)) {
    e.expected_failure = true;
    if (negative_controls) e.status = Status::expected_failure;
  }
  return e;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace

std::vector<std::uint64_t> parse_p_values(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (std::string_view item : split(text, ',')) {
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_uint(item));
      continue;
    }
    const std::uint64_t lo = parse_uint(item.substr(0, dots));
    const std::uint64_t hi = parse_uint(item.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range: " + std::string(item));
    for (std::uint64_t p = lo; p <= hi; ++p) {
      if (is_prime(p)) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<StatementId> parse_statements(std::string_view text) {
  if (text == "all") return {kCatalog.begin(), kCatalog.end()};
  std::vector<StatementId> out;
  for (std::string_view item : split(text, ',')) {
    auto id = parse_statement(item);
    if (!id) throw std::invalid_argument("unknown statement: '" + std::string(item) + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  return out;
}

Report run(const RunConfig& config) {
  Planner planner(config);
  for (StatementId id : config.statements) planner.plan(id);
  const auto& tasks = planner.tasks();

  std::vector<ReportEntry> results(tasks.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(tasks.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = execute(tasks[i], config.negative_controls);
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  auto& skips = planner.skips();
  results.insert(results.end(), std::make_move_iterator(skips.begin()), std::make_move_iterator(skips.end()));
  sort_results(results);

  Report report;
  report.created = utc_timestamp();
  report.config = config;
  report.results = std::move(results);
  report.summary = tally(report.results);
  return report;
}

int exit_code(const Report& report) {
  return report.summary.failed == 0 && report.summary.errored == 0 ? kExitOk : kExitFailed;
}

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.statements.empty()) {
    err << "error: no statements selected\n";
    return kExitUsage;
  }
  const Report report = run(config);
  if (config.output_path) {
    try {
      write_file(*config.output_path, render(report, config.format));
    } catch (const std::exception& ex) {
      err << "error: " << ex.what() << '\n';
      return kExitUsage;
    }
    out << render_text(report);
  } else {
    out << render(report, config.format);
  }
  return exit_code(report);
}

int cmd_reduce(std::int64_t n, std::int64_t k, std::uint64_t p, unsigned power, std::ostream& out,
               std::ostream& err) {
  if (n < 0 || k < 0 || k > n) {
    err << "error: reduce requires 0 <= k <= n\n";
    return kExitUsage;
  }
  if (!is_prime(p)) {
    err << "error: " << p << " is not prime\n";
    return kExitUsage;
  }
  if (power == 0) {
    err << "error: power must be >= 1\n";
    return kExitUsage;
  }
  const CongruenceContext ctx(p, power);
  const Poly remainder = reduce(ctx, q_binomial(n, k));
  out << "qbinom(" << n << ", " << k << ") mod ([" << p << "]_q)^" << power << '\n';
  out << "coefficients: [";
  for (std::size_t i = 0; i < remainder.size(); ++i) {
    if (i != 0) out << ", ";
    out << remainder.coeffs()[i].get_str();
  }
  out << "]\n";
  out << "remainder: " << to_string(remainder) << '\n';
  const Integer m = ipow(p, power);
  Integer at_one;
  mpz_mod(at_one.get_mpz_t(), eval_at_one(remainder).get_mpz_t(), m.get_mpz_t());
  out << "at q=1: " << at_one.get_str() << " (mod " << m.get_str() << ")\n";
  return kExitOk;
}

RunConfig all_config(std::uint64_t p_max, std::uint64_t a_max) {
  RunConfig c;
  c.statements.assign(kCatalog.begin(), kCatalog.end());
  for (std::uint64_t p = 2; p <= p_max; ++p) {
    if (is_prime(p)) c.p_values.push_back(p);
  }
  c.a_max = a_max;
  c.small_primes_identities_only = true;
  return c;
}

int cmd_all(std::uint64_t p_max, std::uint64_t a_max, const std::optional<std::string>& output_path,
            Format format, unsigned jobs, std::ostream& out, std::ostream& err) {
  RunConfig c = all_config(p_max, a_max);
  c.output_path = output_path;
  c.format = format;
  c.jobs = jobs;
  return cmd_check(c, out, err);
}

}  // namespace qljung
