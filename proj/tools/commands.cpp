#include "commands.hpp"

#include <sstream>

namespace starfrob::cli {

Json envelope(const std::string& command, Json input_echo, Json result, std::int64_t timing_ms) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command;
    out["input_echo"] = std::move(input_echo);
    out["result"] = std::move(result);
    out["timing_ms"] = timing_ms;
    return out;
}

Json decision_body(const CofiniteResult& result) {
    Json body;
    body["cofinite"] = result.cofinite();
    body["frobenius_length"] = nullptr;
    body["witness"] = nullptr;
    body["window_witness"] = nullptr;
    if (const auto* c = std::get_if<Cofinite>(&result.verdict)) {
        if (c->frobenius_length) {
            body["frobenius_length"] = *c->frobenius_length;
            body["witness"] = *c->witness;
        }
    } else {
        const auto& w = std::get<NotCofinite>(result.verdict).witness;
        body["window_witness"] = Json{{"length", w.length}, {"word", w.word}};
    }
    body["dfa_states"] = result.stats.dfa_states;
    body["nfa_states"] = result.stats.nfa_states;
    body["t"] = result.stats.symbol_length ? Json(*result.stats.symbol_length) : Json(nullptr);
    return body;
}

Json reduction_body(const CnfInstance& cnf, const RegexAst& regex) {
    Json body;
    body["regex"] = to_string(regex);
    body["n"] = cnf.variable_count();
    body["m"] = cnf.clause_count();
    body["symbol_count"] = symbol_length(regex);
    return body;
}

Json sat_body(const std::optional<std::vector<bool>>& assignment) {
    Json body;
    body["satisfiable"] = assignment.has_value();
    if (assignment) {
        Json values = Json::array();
        for (bool b : *assignment) values.push_back(b);
        body["assignment"] = std::move(values);
    } else {
        body["assignment"] = nullptr;
    }
    return body;
}

Json oracle_body(const oracle::OracleReport& report) {
    Json body;
    body["horizon"] = report.horizon;
    Json missing = Json::array();
    for (const auto& m : report.missing) {
        missing.push_back(Json{{"length", m.length}, {"count", m.count}, {"smallest", m.smallest}});
    }
    body["missing"] = std::move(missing);
    body["conclusive"] = report.conclusive;
    if (report.verdict) {
        Json verdict;
        verdict["cofinite"] = report.verdict->cofinite;
        verdict["frobenius_length"] =
            report.verdict->frobenius_length ? Json(*report.verdict->frobenius_length) : Json(nullptr);
        body["verdict"] = std::move(verdict);
    } else {
        body["verdict"] = nullptr;
    }
    return body;
}

Json numeric_body(const NumericFrobenius& result) {
    Json body;
    body["inputs"] = result.inputs;
    body["g"] = result.g;
    return body;
}

Json selftest_body(const SelftestReport& report) {
    Json body;
    Json suites = Json::array();
    for (const auto& s : report.suites) {
        Json suite;
        suite["name"] = s.name;
        suite["passed"] = s.passed;
        suite["failed"] = s.failed;
        suite["inconclusive"] = s.inconclusive;
        suite["first_failure"] = s.first_failure.empty() ? Json(nullptr) : Json(s.first_failure);
        suites.push_back(std::move(suite));
    }
    body["suites"] = std::move(suites);
    body["ok"] = report.ok();
    return body;
}

namespace {

void flatten(const Json& value, const std::string& prefix, std::ostringstream& out) {
    if (value.is_object()) {
        for (const auto& [key, child] : value.items()) {
            flatten(child, prefix.empty() ? key : prefix + "." + key, out);
        }
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
        for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], prefix + "." + std::to_string(i), out);
    } else if (value.is_string()) {
        out << prefix << ": " << value.get<std::string>() << '\n';
    } else {
        out << prefix << ": " << value.dump() << '\n';
    }
}

}  // namespace

std::string render_text(const Json& envelope) {
    std::ostringstream out;
    flatten(envelope, "", out);
    return out.str();
}

}  // namespace starfrob::cli
