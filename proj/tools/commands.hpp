#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "starfrob/frobenius.hpp"
#include "starfrob/oracle.hpp"
#include "starfrob/reduction.hpp"
#include "starfrob/selftest.hpp"

namespace starfrob::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Wraps a command body in the versioned output envelope.
Json envelope(const std::string& command, Json input_echo, Json result, std::int64_t timing_ms);

Json decision_body(const CofiniteResult& result);
Json reduction_body(const CnfInstance& cnf, const RegexAst& regex);
Json sat_body(const std::optional<std::vector<bool>>& assignment);
Json oracle_body(const oracle::OracleReport& report);
Json numeric_body(const NumericFrobenius& result);
Json selftest_body(const SelftestReport& report);

/// `key: value` lines, nested objects flattened with dotted keys.
std::string render_text(const Json& envelope);

}  // namespace starfrob::cli
