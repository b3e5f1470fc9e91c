#include "lyndon/json_io.hpp"

#include <cctype>
#include <fstream>
#include <set>

namespace lyndon {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object())
        throw ValidationError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (allowed.count(it.key()) == 0)
            throw ValidationError(where + ": unknown field \"" + it.key() + "\"");
}

AlphabetPtr parse_alphabet(const json& j) {
    require_keys(j, {"n", "weights"}, "alphabet");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ValidationError("alphabet.n: expected an integer");
    int n = j["n"].get<int>();
    std::vector<int> weights;
    if (j.contains("weights")) {
        if (!j["weights"].is_array())
            throw ValidationError("alphabet.weights: expected an array");
        for (const auto& w : j["weights"]) {
            if (!w.is_number_integer())
                throw ValidationError("alphabet.weights: expected integers");
            weights.push_back(w.get<int>());
        }
    }
    try {
        return make_alphabet(n, std::move(weights));
    } catch (const std::exception& e) {
        throw ValidationError(std::string("alphabet: ") + e.what());
    }
}

QMatrix parse_q(const json& j, int n, bool& symbolic, NumberFieldPtr& field) {
    require_keys(j, {"mode", "entries", "extension"}, "q");
    if (!j.contains("mode") || !j["mode"].is_string())
        throw ValidationError("q.mode: expected \"numeric\" or \"symbolic\"");
    std::string mode = j["mode"].get<std::string>();
    if (j.contains("extension")) {
        if (!j["extension"].is_string())
            throw ValidationError("q.extension: expected a string");
        std::string ext = j["extension"].get<std::string>();
        try {
            auto modulus = parse_modulus(ext);
            if (modulus == std::vector<Rational>{1, 1, 1}) {
                field = NumberField::cyclotomic3();
            } else {
                // User-supplied moduli are trusted (irreducibility unchecked).
                field = std::make_shared<NumberField>("zeta", std::move(modulus));
            }
        } catch (const std::exception& e) {
            throw ValidationError(std::string("q.extension: ") + e.what());
        }
    }
    if (mode == "symbolic") {
        symbolic = true;
        return QMatrix::symbolic(n);
    }
    if (mode != "numeric")
        throw ValidationError("q.mode: expected \"numeric\" or \"symbolic\"");
    symbolic = false;
    if (!j.contains("entries") || !j["entries"].is_object())
        throw ValidationError("q.entries: expected an object");
    std::vector<Scalar> entries(static_cast<size_t>(n) * static_cast<size_t>(n), Scalar::one());
    std::vector<bool> seen(entries.size(), false);
    for (auto it = j["entries"].begin(); it != j["entries"].end(); ++it) {
        const std::string& key = it.key();
        if (key.size() != 2 || !std::isdigit(static_cast<unsigned char>(key[0])) ||
            !std::isdigit(static_cast<unsigned char>(key[1])))
            throw ValidationError("q.entries: keys are two-digit index pairs like \"21\"");
        int i = key[0] - '0', jj = key[1] - '0';
        if (i < 1 || i > n || jj < 1 || jj > n)
            throw ValidationError("q.entries." + key + ": index out of range");
        if (!it.value().is_string())
            throw ValidationError("q.entries." + key + ": expected a scalar string");
        Scalar s;
        try {
            s = parse_scalar(it.value().get<std::string>(), 0, field);
        } catch (const std::exception& e) {
            throw ValidationError("q.entries." + key + ": " + e.what());
        }
        if (s.is_zero())
            throw ValidationError("q.entries." + key + ": entries must be nonzero");
        entries[static_cast<size_t>((i - 1) * n + (jj - 1))] = s;
        seen[static_cast<size_t>((i - 1) * n + (jj - 1))] = true;
    }
    for (size_t k = 0; k < seen.size(); ++k)
        if (!seen[k])
            throw ValidationError("q.entries: missing entry " +
                                  std::to_string(static_cast<int>(k) / n + 1) +
                                  std::to_string(static_cast<int>(k) % n + 1));
    return QMatrix(n, std::move(entries));
}

} // namespace

JobSpec parse_job(const nlohmann::json& j) {
    require_keys(j,
                 {"command", "alphabet", "closed_set", "antichain", "relations", "q", "route",
                  "g_values", "options"},
                 "job");
    JobSpec spec;
    if (j.contains("command")) {
        if (!j["command"].is_string())
            throw ValidationError("command: expected a string");
        spec.command = j["command"].get<std::string>();
    }
    if (!j.contains("alphabet"))
        throw ValidationError("alphabet: required");
    spec.alphabet = parse_alphabet(j["alphabet"]);

    auto parse_word_list = [&](const json& arr, const std::string& where) {
        if (!arr.is_array())
            throw ValidationError(where + ": expected an array of word strings");
        std::vector<Word> out;
        for (const auto& s : arr) {
            if (!s.is_string())
                throw ValidationError(where + ": expected word strings");
            try {
                out.push_back(parse_word(s.get<std::string>(), *spec.alphabet));
            } catch (const std::exception& e) {
                throw ValidationError(where + ": " + e.what());
            }
        }
        return out;
    };

    if (j.contains("closed_set")) {
        std::vector<LyndonWord> ws;
        for (Word& w : parse_word_list(j["closed_set"], "closed_set")) {
            try {
                ws.emplace_back(std::move(w));
            } catch (const std::exception& e) {
                throw ValidationError(std::string("closed_set: ") + e.what());
            }
        }
        spec.closed_set = std::move(ws);
    }
    if (j.contains("antichain"))
        spec.antichain = parse_word_list(j["antichain"], "antichain");
    if (j.contains("relations")) {
        if (!j["relations"].is_array())
            throw ValidationError("relations: expected an array of polynomial strings");
        std::vector<std::string> rels;
        for (const auto& s : j["relations"]) {
            if (!s.is_string())
                throw ValidationError("relations: expected polynomial strings");
            rels.push_back(s.get<std::string>());
        }
        spec.relations = std::move(rels);
    }
    if (j.contains("q"))
        spec.q = parse_q(j["q"], spec.alphabet->size(), spec.q_symbolic, spec.field);
    if (j.contains("route")) {
        if (!j["route"].is_string())
            throw ValidationError("route: expected \"thm39\" or \"thm312\"");
        std::string r = j["route"].get<std::string>();
        if (r != "thm39" && r != "thm312")
            throw ValidationError("route: expected \"thm39\" or \"thm312\"");
        spec.route = r;
    }
    if (j.contains("g_values")) {
        if (!j["g_values"].is_object())
            throw ValidationError("g_values: expected an object of word -> super-word strings");
        for (auto it = j["g_values"].begin(); it != j["g_values"].end(); ++it) {
            if (!it.value().is_string())
                throw ValidationError("g_values." + it.key() + ": expected a string");
            try {
                Word v = parse_word(it.key(), *spec.alphabet);
                spec.g_values.insert_or_assign(
                    v.letters(), parse_superword_expr(it.value().get<std::string>(), spec.alphabet,
                                                      spec.alphabet->size(), spec.field));
            } catch (const std::exception& e) {
                throw ValidationError("g_values." + it.key() + ": " + e.what());
            }
        }
    }
    if (j.contains("options")) {
        require_keys(j["options"], {"degree_cap"}, "options");
        if (j["options"].contains("degree_cap")) {
            if (!j["options"]["degree_cap"].is_number_integer())
                throw ValidationError("options.degree_cap: expected an integer");
            spec.degree_cap = j["options"]["degree_cap"].get<int>();
        }
    }
    return spec;
}

JobSpec parse_job_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open job spec: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError(std::string("job spec is not valid JSON: ") + e.what());
    }
    return parse_job(j);
}

RelationSet parse_relations(const JobSpec& spec) {
    if (!spec.relations)
        throw ValidationError("relations: required for this command");
    std::vector<NcPoly> polys;
    int msize = spec.q_symbolic ? spec.alphabet->size() : 0;
    for (const std::string& s : *spec.relations) {
        try {
            polys.push_back(parse_ncpoly(s, spec.alphabet, msize, spec.field).monic());
        } catch (const std::exception& e) {
            throw ValidationError("relations: \"" + s + "\": " + e.what());
        }
    }
    try {
        return RelationSet(spec.alphabet, std::move(polys));
    } catch (const std::exception& e) {
        throw ValidationError(std::string("relations: ") + e.what());
    }
}

nlohmann::json words_to_json(const std::vector<Word>& ws, const Alphabet& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Word& w : ws)
        arr.push_back(w.empty() ? std::string() : word_to_string(w, a));
    return arr;
}

nlohmann::json lyndon_words_to_json(const std::vector<LyndonWord>& ws, const Alphabet& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (const LyndonWord& w : ws)
        arr.push_back(word_to_string(w.word(), a));
    return arr;
}

nlohmann::json chain_graph_to_json(const ChainGraph& g) {
    // The root (empty word) serializes as "" so it cannot collide with the
    // letter x1, whose compact rendering is "1".
    nlohmann::json out;
    out["vertices"] = words_to_json(g.vertices, *g.alph);
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& [a, b] : g.arrows) {
        nlohmann::json pair = nlohmann::json::array();
        pair.push_back(g.vertices[a].empty() ? std::string() : word_to_string(g.vertices[a], *g.alph));
        pair.push_back(g.vertices[b].empty() ? std::string() : word_to_string(g.vertices[b], *g.alph));
        arrows.push_back(std::move(pair));
    }
    out["arrows"] = std::move(arrows);
    return out;
}

nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json out;
    switch (c.status) {
    case Certificate::Status::Certified: out["status"] = "certified"; break;
    case Certificate::Status::Refuted: out["status"] = "refuted"; break;
    case Certificate::Status::Undetermined: out["status"] = "undetermined"; break;
    }
    out["route"] = to_string(c.route);
    out["gldim"] = c.gldim;
    out["gkdim"] = c.gkdim;
    out["gorenstein_parameter"] = c.gorenstein_parameter;
    out["as_regular"] = c.certified();
    out["strongly_noetherian"] = c.strongly_noetherian;
    out["auslander_regular"] = c.auslander_regular;
    out["cohen_macaulay"] = c.cohen_macaulay;
    out["compositions_checked"] = c.compositions_checked;
    out["triples_checked"] = c.triples_checked;
    out["witnesses"] = c.witnesses;
    return out;
}

nlohmann::json conditions_to_json(const ConditionSystem& cs) {
    nlohmann::json out;
    nlohmann::json conds = nlohmann::json::array();
    for (const Condition& c : cs.conditions) {
        nlohmann::json jc;
        jc["condition"] = to_string(c.poly);
        jc["provenance"] = c.provenance;
        conds.push_back(std::move(jc));
    }
    out["conditions"] = std::move(conds);
    out["triples_checked"] = cs.triples_checked;
    out["empty"] = cs.empty();
    return out;
}

nlohmann::json invariants_to_json(const InvariantReport& r, const Alphabet& a) {
    nlohmann::json out;
    out["obstructions"] = words_to_json(r.obstructions, a);
    out["hilbert"] = r.hilbert;
    out["gkdim"] = r.gkdim;
    out["gldim"] = r.gldim.value;
    out["gldim_exact"] = r.gldim.exact;
    out["gorenstein_parameter"] = r.gorenstein_parameter;
    if (r.fibonacci_bound) {
        out["fibonacci_bound"] = *r.fibonacci_bound;
        out["bound_satisfied"] = r.bound_satisfied;
    }
    return out;
}

nlohmann::json fibonacci_failure_to_json(const FibonacciFailureReport& r) {
    nlohmann::json out;
    out["r"] = r.r;
    out["refuted_for_all_q"] = r.refuted;
    out["detail"] = r.detail;
    if (!r.conditions.empty())
        out["conditions"] = r.conditions;
    if (!r.residual.empty()) {
        out["residual"] = r.residual;
        out["unit_term_present"] = r.unit_term_present;
    }
    return out;
}

} // namespace lyndon
