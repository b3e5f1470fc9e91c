#ifndef LYNDON_JSON_IO_HPP
#define LYNDON_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "lyndon/chains.hpp"
#include "lyndon/invariants.hpp"
#include "lyndon/presentation.hpp"

// Job-spec parsing (schema-validated, unknown fields rejected) and JSON
// report serialization. Reports use sorted keys and canonical scalar
// printing so reruns are byte-identical.

namespace lyndon {

/// Thrown on malformed job specs; the message names the offending field.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct JobSpec {
    AlphabetPtr alphabet;
    std::optional<std::vector<LyndonWord>> closed_set;
    std::optional<std::vector<Word>> antichain;
    std::optional<std::vector<std::string>> relations; // parsed against q later
    std::optional<QMatrix> q;
    bool q_symbolic = false;
    NumberFieldPtr field;
    std::optional<std::string> route;
    GValueMap g_values;
    std::optional<int> degree_cap;
    std::optional<std::string> command;
};

JobSpec parse_job(const nlohmann::json& j);
JobSpec parse_job_file(const std::string& path);

RelationSet parse_relations(const JobSpec& spec);

nlohmann::json words_to_json(const std::vector<Word>& ws, const Alphabet& a);
nlohmann::json lyndon_words_to_json(const std::vector<LyndonWord>& ws, const Alphabet& a);
nlohmann::json chain_graph_to_json(const ChainGraph& g);
nlohmann::json certificate_to_json(const Certificate& c);
nlohmann::json conditions_to_json(const ConditionSystem& cs);
nlohmann::json invariants_to_json(const InvariantReport& r, const Alphabet& a);
nlohmann::json fibonacci_failure_to_json(const FibonacciFailureReport& r);

} // namespace lyndon

#endif
