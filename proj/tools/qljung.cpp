// qljung: verify q-analog binomial congruences over Z[q].
//
//   qljung check --statements q_ljunggren --p 5,7,11,13 --a-max 4
//   qljung reduce --n 26 --k 13 --p 13 --power 3
//   qljung all --p-max 13 --a-max 4 --out report.json

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qljung/driver.hpp"

namespace {

const std::map<std::string, qljung::Format> kFormats = {{"text", qljung::Format::text},
                                                        {"json", qljung::Format::json}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-analog binomial congruences"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Run selected statements over parameter ranges");
  std::string statements;
  std::string p_text = "5,7,11,13";
  qljung::RunConfig config;
  std::optional<std::uint64_t> b_max;
  std::optional<unsigned> k_override;
  std::optional<std::string> check_out;
  check->add_option("--statements,-s", statements, "Comma-separated statement ids, or 'all'")->required();
  check->add_option("--p", p_text, "Primes: list and/or ranges, e.g. 5,7 or 5..13")->capture_default_str();
  check->add_option("--a-max", config.a_max, "Largest a (also m, n for qchu)")->capture_default_str();
  check->add_option("--b-max", b_max, "Largest b (defaults to a-max)");
  check->add_option("--k", k_override, "Override the modulus exponent")->check(CLI::PositiveNumber);
  check->add_option("--budget", config.budget, "Cap on (p+1)^a for the composition expansion")
      ->capture_default_str();
  check->add_option("--out,-o", check_out, "Write the report to this file");
  check->add_option("--format", config.format, "text or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->option_text("text|json");
  check->add_flag("--negative-controls", config.negative_controls,
                  "Tally known negative controls as expected failures");
  check->add_option("--jobs,-j", config.jobs, "Worker threads")->check(CLI::PositiveNumber);

  // reduce
  auto* red = app.add_subcommand("reduce", "Reduce qbinom(n, k) modulo ([p]_q)^power");
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::uint64_t p = 0;
  unsigned power = 3;
  red->add_option("--n", n, "Top argument of the q-binomial")->required();
  red->add_option("--k", k, "Bottom argument of the q-binomial")->required();
  red->add_option("--p", p, "Prime p of the modulus [p]_q")->required();
  red->add_option("--power", power, "Exponent of [p]_q")->capture_default_str();

  // all
  auto* all = app.add_subcommand("all", "Run the full catalog");
  std::uint64_t p_max = 13;
  std::uint64_t a_max = 4;
  std::optional<std::string> all_out;
  qljung::Format all_format = qljung::Format::text;
  unsigned all_jobs = 1;
  all->add_option("--p-max", p_max, "Largest prime")->capture_default_str();
  all->add_option("--a-max", a_max, "Largest a (also m, n for qchu)")->capture_default_str();
  all->add_option("--out,-o", all_out, "Write the report to this file");
  all->add_option("--format", all_format, "text or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->option_text("text|json");
  all->add_option("--jobs,-j", all_jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qljung::kExitUsage;
  }

  // A written report's format follows a .json extension unless --format is given.
  try {
    if (check->parsed()) {
      config.statements = qljung::parse_statements(statements);
      config.p_values = qljung::parse_p_values(p_text);
      config.b_max = b_max;
      config.k_override = k_override;
      config.output_path = check_out;
      if (check_out && check_out->ends_with(".json") && check->count("--format") == 0) {
        config.format = qljung::Format::json;
      }
      return qljung::cmd_check(config, std::cout, std::cerr);
    }
    if (red->parsed()) return qljung::cmd_reduce(n, k, p, power, std::cout, std::cerr);
    if (all->parsed()) {
      if (all_out && all_out->ends_with(".json") && all->count("--format") == 0) {
        all_format = qljung::Format::json;
      }
      return qljung::cmd_all(p_max, a_max, all_out, all_format, all_jobs, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qljung::kExitUsage;
  }
  return qljung::kExitUsage;
}
