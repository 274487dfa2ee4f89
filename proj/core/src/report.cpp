#include <sstream>

#include "brauerc/verify.hpp"
#include "json.hpp"

namespace brauerc {

void Report::add(std::string index, std::string expected, std::string computed, bool pass) {
  Instance in{std::move(index), std::move(expected), std::move(computed), {}};
  if (in_hypothesis) in.pass = pass;
  instances.push_back(std::move(in));
}

bool Report::all_pass() const {
  for (const auto& i : instances)
    if (i.pass == false) return false;
  return true;
}

bool SuiteResult::all_pass() const {
  for (const auto& r : reports)
    if (!r.all_pass()) return false;
  return true;
}

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  throw ParseError("unknown format '" + s + "' (json, csv, text)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pass_text(const std::optional<bool>& p) {
  return p ? (*p ? "true" : "false") : "out-of-hypothesis";
}

std::string render_json(const SuiteResult& res) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["suite"] = res.suite;
  out["placement"] = to_string(res.placement);
  out["seed"] = res.config.seed;
  out["pass"] = res.all_pass();
  out["reports"] = ordered_json::array();
  for (const auto& r : res.reports) {
    ordered_json jr;
    jr["claim"] = r.claim;
    jr["hypothesis"] = {{"char", r.characteristic}, {"delta", r.delta}, {"r", r.r}, {"satisfied", r.in_hypothesis}};
    jr["instances"] = ordered_json::array();
    for (const auto& i : r.instances) {
      ordered_json ji;
      ji["index"] = i.index;
      ji["expected"] = i.expected;
      ji["computed"] = i.computed;
      ji["pass"] = i.pass ? ordered_json(*i.pass) : ordered_json(nullptr);
      jr["instances"].push_back(std::move(ji));
    }
    out["reports"].push_back(std::move(jr));
  }
  return out.dump(2) + "\n";
}

}  // namespace

std::string render(const SuiteResult& res, ReportFormat format) {
  if (format == ReportFormat::json) return render_json(res);
  std::ostringstream os;
  if (format == ReportFormat::csv) {
    os << "claim,index,expected,computed,pass\n";
    for (const auto& r : res.reports)
      for (const auto& i : r.instances)
        os << csv_field(r.claim) << ',' << csv_field(i.index) << ',' << csv_field(i.expected) << ','
           << csv_field(i.computed) << ',' << pass_text(i.pass) << '\n';
    return os.str();
  }
  os << "suite " << res.suite << " (placement " << to_string(res.placement) << ", seed " << res.config.seed
     << ")\n";
  for (const auto& r : res.reports) {
    os << "\n" << r.claim << "  [char " << r.characteristic << ", delta " << r.delta << ", r " << r.r
       << (r.in_hypothesis ? "" : ", outside hypotheses") << "]\n";
    for (const auto& i : r.instances)
      os << "  " << (i.pass ? (*i.pass ? "ok  " : "FAIL") : "n/a ") << " " << i.index << ": expected "
         << i.expected << ", computed " << i.computed << "\n";
  }
  os << "\n" << (res.all_pass() ? "all instances pass" : "some instances FAIL") << "\n";
  return os.str();
}

}  // namespace brauerc
