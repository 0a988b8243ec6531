#include "frobkit/cli/report.hpp"

#include <cstdio>
#include <ostream>

namespace frobkit::cli {

using frobenius::FrobeniusReport;
using frobenius::Verdict;
using nlohmann::json;

namespace {

std::string fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkipped:
      return "skipped";
  }
  return "?";
}

std::string opt_type(const std::optional<poly::CycleType>& t) { return t ? t->to_string() : ""; }

}  // namespace

json to_json(const Report& r) {
  json lines = json::array();
  for (const auto& l : r.lines()) {
    lines.push_back({{"id", l.id}, {"label", l.label}, {"computed", l.computed}, {"expected", l.expected},
                     {"pass", l.pass}});
  }
  return {{"name", r.name()}, {"checks", lines}, {"notes", r.notes()}, {"pass", r.all_pass()}};
}

json to_json(const FrobeniusReport& r) {
  json v = json::object();
  for (std::size_t i = 0; i < frobenius::kCheckIds.size(); ++i) v[frobenius::kCheckIds[i]] = verdict_name(r.verdicts[i]);
  return {{"p", r.p},
          {"type5", r.type5.to_string()},
          {"type6", r.type6 ? json(r.type6->to_string()) : json(nullptr)},
          {"type48", r.type48 ? json(r.type48->to_string()) : json(nullptr)},
          {"class", std::string(groups::label(r.cls))},
          {"candidate_traces", r.candidate_traces},
          {"det", r.det},
          {"ap_sq", r.ap_sq ? json(*r.ap_sq) : json(nullptr)},
          {"N_p", r.n_p},
          {"k19", r.k19},
          {"k151", r.k151},
          {"k2869", r.k2869},
          {"verdicts", v},
          {"predicted_product", r.predicted_product},
          {"pass", r.all_pass()}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string csv_row(const FrobeniusReport& r) {
  const std::vector<std::string> f{std::to_string(r.p),
                                   r.type5.to_string(),
                                   opt_type(r.type6),
                                   opt_type(r.type48),
                                   std::string(groups::label(r.cls)),
                                   r.ap_sq ? std::to_string(*r.ap_sq) : "",
                                   std::to_string(r.n_p),
                                   std::to_string(r.k19),
                                   std::to_string(r.k151),
                                   std::to_string(r.k2869),
                                   r.verdict_string(),
                                   std::to_string(r.predicted_product)};
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + csv_field(f[i]);
  return out;
}

void write_suites(std::ostream& out, const Config& c, const std::vector<Suite>& suites) {
  bool ok = true;
  for (const auto& s : suites) ok = ok && s.report.all_pass();
  if (c.format == Format::kCsv) {
    out << "# config: " << to_json(c).dump() << '\n';
    out << "target,id,label,computed,expected,pass\n";
    for (const auto& s : suites) {
      for (const auto& l : s.report.lines()) {
        out << csv_field(s.target) << ',' << csv_field(l.id) << ',' << csv_field(l.label) << ','
            << csv_field(l.computed) << ',' << csv_field(l.expected) << ',' << (l.pass ? "pass" : "fail") << '\n';
      }
    }
    return;
  }
  json arr = json::array();
  for (const auto& s : suites) {
    json j = to_json(s.report);
    j["target"] = s.target;
    j["claim"] = s.claim;
    arr.push_back(std::move(j));
  }
  out << json{{"config", to_json(c)}, {"suites", arr}, {"pass", ok}}.dump(2) << '\n';
}

void write_prime_report(std::ostream& out, const Config& c, const FrobeniusReport& r) {
  if (c.format == Format::kCsv) {
    out << "# config: " << to_json(c).dump() << '\n' << kSweepCsvHeader << '\n' << csv_row(r) << '\n';
    return;
  }
  out << json{{"config", to_json(c)}, {"report", to_json(r)}}.dump(2) << '\n';
}

void write_sweep(std::ostream& out, const Config& c, const frobenius::RangeSummary& s) {
  const double total = static_cast<double>(s.reports.size());
  std::vector<std::vector<std::string>> freq;
  for (const auto& [cls, n] : s.class_counts) {
    const double expected = groups::s5_class_size(cls) / 120.0;
    freq.push_back({std::string(groups::label(cls)), std::to_string(n), total > 0 ? fixed(n / total, 6) : "",
                    fixed(expected, 6)});
  }
  if (c.format == Format::kCsv) {
    out << "# config: " << to_json(c).dump() << '\n' << kSweepCsvHeader << '\n';
    for (const auto& r : s.reports) out << csv_row(r) << '\n';
    out << "# class,count,frequency,expected\n";
    for (const auto& f : freq) {
      out << "# " << csv_field(f[0]) << ',' << f[1] << ',' << f[2] << ',' << f[3] << '\n';
    }
    for (const auto& [p, why] : s.skipped) out << "# skipped " << p << ": " << why << '\n';
    return;
  }
  json rows = json::array();
  for (const auto& r : s.reports) rows.push_back(to_json(r));
  json fj = json::array();
  for (const auto& f : freq) fj.push_back({{"class", f[0]}, {"count", std::stoi(f[1])}, {"frequency", f[2]}, {"expected", f[3]}});
  json sk = json::array();
  for (const auto& [p, why] : s.skipped) sk.push_back({{"p", p}, {"reason", why}});
  out << json{{"config", to_json(c)}, {"pmax", s.pmax}, {"rows", rows}, {"frequencies", fj}, {"skipped", sk},
              {"checks", to_json(s.checks)}}
             .dump(2)
      << '\n';
}

}  // namespace frobkit::cli
