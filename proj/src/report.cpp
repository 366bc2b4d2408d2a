#include "qljung/report.hpp"

#include <algorithm>
#include <array>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qljung {

namespace {

constexpr std::array<std::string_view, 5> kStatusNames = {"passed", "failed", "expected_failure",
                                                          "skipped", "errored"};

using ojson = nlohmann::ordered_json;

std::string_view format_name(Format f) { return f == Format::json ? "json" : "text"; }

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format: " + s);
}

StatementId statement_from(const std::string& s) {
  auto id = parse_statement(s);
  if (!id) throw std::invalid_argument("unknown statement: " + s);
  return *id;
}

ojson params_to_json(const Params& params) {
  ojson j = ojson::object();
  for (const auto& [name, value] : params) j[name] = value;
  return j;
}

Params params_from_json(const ojson& j) {
  Params out;
  for (const auto& [name, value] : j.items()) out.emplace_back(name, value.get<std::int64_t>());
  return out;
}

ojson config_to_json(const RunConfig& c) {
  ojson j;
  ojson names = ojson::array();
  for (StatementId id : c.statements) names.push_back(std::string(to_string(id)));
  j["statements"] = std::move(names);
  j["p_values"] = c.p_values;
  j["a_max"] = c.a_max;
  j["b_max"] = c.b_max ? ojson(*c.b_max) : ojson(nullptr);
  j["k_override"] = c.k_override ? ojson(*c.k_override) : ojson(nullptr);
  j["budget"] = c.budget;
  j["output_path"] = c.output_path ? ojson(*c.output_path) : ojson(nullptr);
  j["format"] = std::string(format_name(c.format));
  j["negative_controls"] = c.negative_controls;
  j["small_primes_identities_only"] = c.small_primes_identities_only;
  j["jobs"] = c.jobs;
  return j;
}

RunConfig config_from_json(const ojson& j) {
  RunConfig c;
  for (const auto& s : j.at("statements")) c.statements.push_back(statement_from(s.get<std::string>()));
  c.p_values = j.at("p_values").get<std::vector<std::uint64_t>>();
  c.a_max = j.at("a_max").get<std::uint64_t>();
  if (!j.at("b_max").is_null()) c.b_max = j.at("b_max").get<std::uint64_t>();
  if (!j.at("k_override").is_null()) c.k_override = j.at("k_override").get<unsigned>();
  c.budget = j.at("budget").get<std::uint64_t>();
  if (!j.at("output_path").is_null()) c.output_path = j.at("output_path").get<std::string>();
  c.format = parse_format(j.at("format").get<std::string>());
  c.negative_controls = j.at("negative_controls").get<bool>();
  c.small_primes_identities_only = j.at("small_primes_identities_only").get<bool>();
  c.jobs = j.at("jobs").get<unsigned>();
  return c;
}

ojson entry_to_json(const ReportEntry& e) {
  ojson j;
  j["statement"] = std::string(to_string(e.statement));
  j["params"] = params_to_json(e.params);
  j["status"] = std::string(to_string(e.status));
  j["passed"] = e.passed;
  j["expected_failure"] = e.expected_failure;
  if (e.witness) {
    ojson w;
    w["degree"] = e.witness->degree;
    w["coefficients"] = e.witness->coefficients;
    w["truncated"] = e.witness->truncated;
    j["witness_truncated"] = std::move(w);
  } else {
    j["witness_truncated"] = nullptr;
  }
  ojson parts = ojson::object();
  for (const auto& part : e.parts) parts[part.name] = part.passed;
  j["parts"] = std::move(parts);
  j["elapsed_ms"] = e.elapsed_ms;
  j["note"] = e.note;
  return j;
}

ReportEntry entry_from_json(const ojson& j) {
  ReportEntry e;
  e.statement = statement_from(j.at("statement").get<std::string>());
  e.params = params_from_json(j.at("params"));
  auto status = parse_status(j.at("status").get<std::string>());
  if (!status) throw std::invalid_argument("unknown status");
  e.status = *status;
  e.passed = j.at("passed").get<bool>();
  e.expected_failure = j.at("expected_failure").get<bool>();
  const auto& w = j.at("witness_truncated");
  if (!w.is_null()) {
    WitnessSummary ws;
    ws.degree = w.at("degree").get<std::int64_t>();
    ws.coefficients = w.at("coefficients").get<std::vector<std::string>>();
    ws.truncated = w.at("truncated").get<bool>();
    e.witness = std::move(ws);
  }
  for (const auto& [name, value] : j.at("parts").items()) e.parts.push_back({name, value.get<bool>()});
  e.elapsed_ms = j.at("elapsed_ms").get<double>();
  e.note = j.at("note").get<std::string>();
  return e;
}

std::string params_text(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ' ';
    out += name + '=' + std::to_string(value);
  }
  return out;
}

std::string witness_text(const WitnessSummary& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.coefficients.size(); ++i) {
    if (i != 0) out += ", ";
    out += w.coefficients[i];
  }
  if (w.truncated) out += ", ...";
  out += "] degree " + std::to_string(w.degree);
  return out;
}

}  // namespace

std::string_view to_string(Status s) noexcept { return kStatusNames[static_cast<std::size_t>(s)]; }

std::optional<Status> parse_status(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i) {
    if (kStatusNames[i] == s) return static_cast<Status>(i);
  }
  return std::nullopt;
}

WitnessSummary WitnessSummary::from_poly(const Poly& p) {
  WitnessSummary w;
  w.degree = p.is_zero() ? -1 : static_cast<std::int64_t>(p.degree().value());
  const std::size_t n = std::min(p.size(), kWitnessCoefficients);
  for (std::size_t i = 0; i < n; ++i) w.coefficients.push_back(p.coeffs()[i].get_str());
  w.truncated = p.size() > kWitnessCoefficients;
  return w;
}

Summary tally(const std::vector<ReportEntry>& results) {
  Summary s;
  s.total = results.size();
  for (const auto& e : results) {
    switch (e.status) {
      case Status::passed: ++s.passed; break;
      case Status::failed: ++s.failed; break;
      case Status::expected_failure: ++s.expected_failures; break;
      case Status::skipped: ++s.skipped; break;
      case Status::errored: ++s.errored; break;
    }
  }
  return s;
}

void sort_results(std::vector<ReportEntry>& results) {
  auto key = [](const ReportEntry& e) {
    std::vector<std::int64_t> values;
    values.reserve(e.params.size());
    for (const auto& kv : e.params) values.push_back(kv.second);
    return std::pair{static_cast<int>(e.statement), std::move(values)};
  };
  std::stable_sort(results.begin(), results.end(),
                   [&](const ReportEntry& x, const ReportEntry& y) { return key(x) < key(y); });
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

nlohmann::ordered_json to_json(const Report& report) {
  ojson j;
  j["version"] = report.version;
  j["created"] = report.created;
  j["config"] = config_to_json(report.config);
  ojson results = ojson::array();
  for (const auto& e : report.results) results.push_back(entry_to_json(e));
  j["results"] = std::move(results);
  const Summary& s = report.summary;
  j["summary"] = {{"total", s.total},
                  {"passed", s.passed},
                  {"failed", s.failed},
                  {"expected_failures", s.expected_failures},
                  {"skipped", s.skipped},
                  {"errored", s.errored}};
  return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.version = j.at("version").get<std::string>();
  r.created = j.at("created").get<std::string>();
  r.config = config_from_json(j.at("config"));
  for (const auto& e : j.at("results")) r.results.push_back(entry_from_json(e));
  const auto& s = j.at("summary");
  r.summary.total = s.at("total").get<std::size_t>();
  r.summary.passed = s.at("passed").get<std::size_t>();
  r.summary.failed = s.at("failed").get<std::size_t>();
  r.summary.expected_failures = s.at("expected_failures").get<std::size_t>();
  r.summary.skipped = s.at("skipped").get<std::size_t>();
  r.summary.errored = s.at("errored").get<std::size_t>();
  return r;
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  for (const auto& e : report.results) {
    switch (e.status) {
      case Status::passed: os << "PASS  "; break;
      case Status::failed: os << "FAIL  "; break;
      case Status::expected_failure: os << "XFAIL "; break;
      case Status::skipped: os << "SKIP  "; break;
      case Status::errored: os << "ERROR "; break;
    }
    os << to_string(e.statement) << ' ' << params_text(e.params);
    os << "  (" << std::fixed << std::setprecision(2) << e.elapsed_ms << " ms)";
    if (e.expected_failure && e.status == Status::failed) os << "  [expected failure]";
    if (!e.note.empty()) os << "  " << e.note;
    os << '\n';
    for (const auto& part : e.parts) {
      if (!part.passed) os << "      part " << part.name << ": does not hold\n";
    }
    if (e.witness) os << "      witness " << witness_text(*e.witness) << '\n';
  }
  const Summary& s = report.summary;
  os << "summary: " << s.total << " total, " << s.passed << " passed, " << s.failed << " failed, "
     << s.expected_failures << " expected failures, " << s.skipped << " skipped, " << s.errored
     << " errored\n";
  return os.str();
}

std::string render(const Report& report, Format format) {
  if (format == Format::json) return to_json(report).dump(2) + "\n";
  return render_text(report);
}

}  // namespace qljung
