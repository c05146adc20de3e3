#include "degen/serialize.hpp"

#include <sstream>

#include "degen/errors.hpp"

namespace degen {

std::string rational_to_string(const Rational& r) { return r.str(); }

Json bipoly_to_json(const BiPoly& p) {
  Json records = Json::array();
  for (const auto& t : p.terms()) {
    records.push_back(Json{{"dl", t.dl}, {"dx", t.dx}, {"c", rational_to_string(t.c)}});
  }
  return records;
}

BiPoly bipoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array of term records");
  std::vector<BiPoly::Term> terms;
  for (const auto& rec : j) {
    if (!rec.is_object() || !rec.contains("dl") || !rec.contains("dx") || !rec.contains("c") ||
        !rec["dl"].is_number_integer() || !rec["dx"].is_number_integer() || !rec["c"].is_string()) {
      throw ParseError("malformed term record " + rec.dump());
    }
    terms.push_back({rec["dl"].get<int>(), rec["dx"].get<int>(), Rational::parse(rec["c"].get<std::string>())});
  }
  return BiPoly::from_terms(std::move(terms));
}

Json report_to_json(const VerificationReport& report, bool include_timing) {
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json indices = Json::object();
    for (const auto& index : c.indices) {
      std::visit([&](const auto& v) { indices[index.key] = v; }, index.value);
    }
    cases.push_back(Json{{"indices", std::move(indices)},
                         {"status", c.passed ? "pass" : "fail"},
                         {"residual", bipoly_to_json(c.residual)}});
  }
  Json out;
  out["identity"] = std::string(identity_info(report.identity).name);
  out["ranges"] = Json{{"max_n", report.max_n}, {"max_order", report.max_order}, {"trunc", report.trunc}};
  out["profile"] = report.profile;
  out["cases"] = std::move(cases);
  out["wall_time_ms"] = include_timing ? Json(report.wall_time_ms) : Json(nullptr);
  return out;
}

std::string indices_to_string(const std::vector<CaseIndex>& indices) {
  std::ostringstream os;
  bool first = true;
  for (const auto& index : indices) {
    if (!first) os << ';';
    first = false;
    os << index.key << '=';
    std::visit([&os](const auto& v) { os << v; }, index.value);
  }
  return os.str();
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "identity,indices,status,residual\n";
  for (const auto& report : reports) {
    for (const auto& c : report.cases) {
      os << identity_info(report.identity).name << ',' << indices_to_string(c.indices) << ','
         << (c.passed ? "pass" : "fail") << ',' << c.residual.str() << '\n';
    }
  }
  return os.str();
}

}  // namespace degen
