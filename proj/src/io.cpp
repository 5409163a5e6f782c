#include "ternary/io.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace ternary {

Json toJson(const QSeries& s) {
  Json j;
  j["trunc"] = s.trunc();
  j["coeffs"] = Json(std::vector<std::int64_t>(s.coeffs().begin(), s.coeffs().end()));
  return j;
}

QSeries seriesFromJson(const Json& j) {
  auto coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
  if (static_cast<int>(coeffs.size()) != j.at("trunc").get<int>() + 1)
    throw DomainError("series JSON: coeffs length must be trunc + 1");
  return QSeries(std::move(coeffs));
}

Json toJson(const TernaryForm& f) {
  const auto t = f.tuple();
  return Json(std::vector<std::int64_t>(t.begin(), t.end()));
}

TernaryForm formFromJson(const Json& j) {
  const auto v = j.get<std::vector<std::int64_t>>();
  if (v.size() != 6) throw DomainError("form JSON must have six entries");
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

Json toJson(const Genus& g) {
  Json j;
  j["discriminant"] = g.discriminant;
  Json members = Json::array();
  for (const auto& f : g.members) members.push_back(toJson(f));
  j["members"] = members;
  j["autCounts"] = g.autCounts;
  j["weights48"] = g.weights48();
  return j;
}

Json toJson(const VerificationReport& r, bool timing) {
  Json j;
  j["id"] = r.id;
  j["order"] = r.order;
  j["status"] = r.passed() ? "pass" : "fail";
  if (r.firstMismatch)
    j["firstMismatch"] = {{"index", r.firstMismatch->index}, {"lhs", r.firstMismatch->lhs}, {"rhs", r.firstMismatch->rhs}};
  else
    j["firstMismatch"] = nullptr;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.terms.empty()) {
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back({{"coefficient", t.coefficient}, {"form", toJson(t.form)}});
    j["terms"] = terms;
  }
  if (timing) j["elapsed"] = r.elapsedSeconds;
  return j;
}

Format parseFormat(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  throw DomainError("unknown format " + name);
}

namespace {

std::string mismatchText(const VerificationReport& r) {
  if (!r.firstMismatch) return "-";
  const auto& m = *r.firstMismatch;
  return "n=" + std::to_string(m.index) + ": " + std::to_string(m.lhs) + " != " + std::to_string(m.rhs);
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

void writeReports(std::ostream& os, const std::vector<VerificationReport>& reports, Format format, bool timing) {
  switch (format) {
    case Format::Json:
      for (const auto& r : reports) os << toJson(r, timing).dump() << '\n';
      break;
    case Format::Csv:
      os << "id,order,status,index,lhs,rhs" << (timing ? ",elapsed" : "") << '\n';
      for (const auto& r : reports) {
        os << csvField(r.id) << ',' << r.order << ',' << (r.passed() ? "pass" : "fail") << ',';
        if (r.firstMismatch)
          os << r.firstMismatch->index << ',' << r.firstMismatch->lhs << ',' << r.firstMismatch->rhs;
        else
          os << ",,";
        if (timing) os << ',' << r.elapsedSeconds;
        os << '\n';
      }
      break;
    case Format::Table: {
      std::size_t width = 2;
      for (const auto& r : reports) width = std::max(width, r.id.size());
      int failed = 0;
      for (const auto& r : reports) {
        failed += !r.passed();
        os << std::left << std::setw(static_cast<int>(width) + 2) << r.id << std::setw(8) << r.order
           << std::setw(6) << (r.passed() ? "pass" : "FAIL") << mismatchText(r);
        if (timing) os << "  " << std::fixed << std::setprecision(3) << r.elapsedSeconds << "s";
        if (!r.detail.empty()) os << "  " << r.detail;
        os << '\n';
      }
      os << reports.size() - failed << " passed, " << failed << " failed\n";
      break;
    }
  }
}

}  // namespace ternary
