#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "degen/bipoly.hpp"
#include "degen/identities.hpp"
#include "degen/rational.hpp"

namespace degen {

using Json = nlohmann::ordered_json;

/// "p/q", or "p" for integers.
std::string rational_to_string(const Rational& r);

/// [{"dl": int, "dx": int, "c": "p/q"}, ...] in graded-lex order.
Json bipoly_to_json(const BiPoly& p);
/// Inverse of bipoly_to_json. Throws ParseError on malformed input.
BiPoly bipoly_from_json(const Json& j);

/// Report object; wall_time_ms is null when `include_timing` is false.
Json report_to_json(const VerificationReport& report, bool include_timing = true);

/// "n=3;k=2"
std::string indices_to_string(const std::vector<CaseIndex>& indices);

/// Header "identity,indices,status,residual" followed by one row per case.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace degen
