#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lyndon/chains.hpp"
#include "lyndon/invariants.hpp"
#include "lyndon/json_io.hpp"
#include "lyndon/presentation.hpp"

// Batch front door. One process, one job; exit 0 on success/certified,
// 2 on refuted/failed checks, 1 on usage or validation errors.

using namespace lyndon;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefuted = 2;

struct Output {
    std::string format = "text";

    void emit(const json& j, const std::string& text) const {
        if (format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
    }
};

AlphabetPtr alphabet_from_flags(int n, const std::string& weights_csv) {
    std::vector<int> weights;
    if (!weights_csv.empty()) {
        std::istringstream is(weights_csv);
        std::string tok;
        while (std::getline(is, tok, ','))
            weights.push_back(std::stoi(tok));
    }
    return make_alphabet(n, std::move(weights));
}

ClosedSet closed_set_of(const JobSpec& spec) {
    if (!spec.closed_set)
        throw ValidationError("closed_set: required for this command");
    try {
        return ClosedSet(spec.alphabet, *spec.closed_set);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("closed_set: ") + e.what());
    }
}

std::string render_set(const std::vector<LyndonWord>& ws, const Alphabet& a) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < ws.size(); ++i)
        os << (i ? ", " : "") << word_to_string(ws[i].word(), a);
    os << "}";
    return os.str();
}

int run_lyndon(int n, const std::string& weights, int max_deg, const Output& out) {
    AlphabetPtr a = alphabet_from_flags(n, weights);
    auto ws = generate_lyndon(*a, max_deg);
    std::ostringstream text;
    for (const LyndonWord& w : ws)
        text << word_to_string(w.word(), *a) << "\n";
    out.emit(lyndon_words_to_json(ws, *a), text.str());
    return kExitOk;
}

int run_closure(const JobSpec& spec, const Output& out) {
    std::vector<LyndonWord> seed;
    if (spec.closed_set)
        seed = *spec.closed_set;
    ClosedSet U = close(spec.alphabet, seed);
    out.emit(lyndon_words_to_json(U.elements(), *spec.alphabet),
             render_set(U.elements(), *spec.alphabet) + "\n");
    return kExitOk;
}

int run_phi(const JobSpec& spec, bool bar, const Output& out) {
    ClosedSet U = closed_set_of(spec);
    auto V = bar ? phibar(U) : phi(U);
    out.emit(lyndon_words_to_json(V, *spec.alphabet), render_set(V, *spec.alphabet) + "\n");
    return kExitOk;
}

int run_psi(const JobSpec& spec, int cap, const Output& out) {
    if (!spec.antichain)
        throw ValidationError("antichain: required for psi");
    std::vector<LyndonWord> V;
    for (const Word& w : *spec.antichain)
        V.emplace_back(w);
    auto ws = psi(*spec.alphabet, V, cap);
    out.emit(lyndon_words_to_json(ws, *spec.alphabet), render_set(ws, *spec.alphabet) + "\n");
    return kExitOk;
}

int run_upsilon(const JobSpec& spec, const Output& out) {
    ClosedSet U = closed_set_of(spec);
    auto pairs = upsilon(U);
    json arr = json::array();
    std::ostringstream text;
    for (const auto& [u, v] : pairs) {
        json p = json::array();
        p.push_back(word_to_string(u.word(), *spec.alphabet));
        p.push_back(word_to_string(v.word(), *spec.alphabet));
        arr.push_back(std::move(p));
        text << "(" << word_to_string(u.word(), *spec.alphabet) << ", "
             << word_to_string(v.word(), *spec.alphabet) << ")\n";
    }
    out.emit(arr, text.str());
    return kExitOk;
}

int run_chains(const JobSpec& spec, std::optional<int> p, bool graph, bool verify,
               const Output& out) {
    if (verify) {
        ClosedSet U = closed_set_of(spec);
        ChainUniquenessReport rep = verify_chain_uniqueness(U);
        json j;
        j["pass"] = rep.pass;
        j["d"] = rep.d;
        j["expected"] = word_to_string(rep.expected, *spec.alphabet);
        j["c_d"] = words_to_json(rep.c_d, *spec.alphabet);
        j["c_d_plus_1"] = words_to_json(rep.c_d1, *spec.alphabet);
        j["c_d_plus_2"] = words_to_json(rep.c_d2, *spec.alphabet);
        std::ostringstream text;
        text << (rep.pass ? "pass" : "fail") << ": C_" << rep.d << " = "
             << (rep.c_d.size() == 1 ? word_to_string(rep.c_d[0], *spec.alphabet) : "?")
             << ", expected " << word_to_string(rep.expected, *spec.alphabet) << "\n";
        out.emit(j, text.str());
        return rep.pass ? kExitOk : kExitRefuted;
    }
    std::vector<Word> V;
    if (spec.antichain) {
        V = *spec.antichain;
    } else {
        ClosedSet U = closed_set_of(spec);
        for (const LyndonWord& v : phi(U))
            V.push_back(v.word());
    }
    if (!is_antichain(V))
        throw ValidationError("antichain: the given words are not an antichain");
    ChainGraph g = chain_graph(spec.alphabet, V);
    if (graph) {
        std::ostringstream text;
        text << "vertices:";
        for (const Word& v : g.vertices)
            text << " " << word_to_string(v, *spec.alphabet);
        text << "\narrows:";
        for (const auto& [a, b] : g.arrows)
            text << " " << word_to_string(g.vertices[a], *spec.alphabet) << "->"
                 << word_to_string(g.vertices[b], *spec.alphabet);
        text << "\n";
        out.emit(chain_graph_to_json(g), text.str());
        return kExitOk;
    }
    if (!p)
        throw ValidationError("--p: required unless --graph or --verify is given");
    auto ws = chains(g, *p);
    std::ostringstream text;
    for (const Word& w : ws)
        text << word_to_string(w, *spec.alphabet) << "\n";
    out.emit(words_to_json(ws, *spec.alphabet), text.str());
    return kExitOk;
}

int run_present(const JobSpec& spec, const Output& out) {
    ClosedSet U = closed_set_of(spec);
    if (!spec.q)
        throw ValidationError("q: required for present");
    PresentationH H = build_H(U, *spec.q, spec.g_values, spec.degree_cap);
    json j;
    json letters = json::array();
    for (int i = 1; i <= H.extended().ext->size(); ++i)
        letters.push_back(H.extended().ext->name(i));
    j["letters"] = std::move(letters);
    json rels = json::array();
    std::ostringstream text;
    text << "X_U:";
    for (int i = 1; i <= H.extended().ext->size(); ++i)
        text << " " << H.extended().ext->name(i);
    text << "\n";
    size_t idx = 1;
    for (const PairRelation& pr : H.pairs()) {
        std::ostringstream line;
        line << "[" << H.extended().ext->name(H.extended().letter_of(pr.u.word())) << ","
             << H.extended().ext->name(H.extended().letter_of(pr.v.word())) << "]";
        if (!pr.h.is_zero())
            line << " - (" << to_string(pr.h) << ")";
        json rel;
        rel["pair"] = json::array({word_to_string(pr.u.word(), *spec.alphabet),
                                   word_to_string(pr.v.word(), *spec.alphabet)});
        rel["h"] = to_string(pr.h);
        rel["relation"] = to_string(pr.relation);
        rels.push_back(std::move(rel));
        text << "f" << idx++ << " = " << line.str() << "\n";
    }
    j["relations"] = std::move(rels);
    out.emit(j, text.str());
    return kExitOk;
}

int run_certify(const JobSpec& spec, const Output& out) {
    ClosedSet U = closed_set_of(spec);
    if (!spec.q || spec.q_symbolic)
        throw ValidationError("q: certify needs a numeric q matrix");
    CertifyRoute route = CertifyRoute::Theorem39;
    std::optional<RelationSet> user_G;
    if (spec.route && *spec.route == "thm312") {
        route = CertifyRoute::Theorem312;
        user_G = parse_relations(spec);
    }
    Certificate cert;
    try {
        cert = certify(U, *spec.q, route, user_G);
    } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
    }
    std::ostringstream text;
    if (cert.certified())
        text << "AS-regular, gldim " << cert.gldim << ", l = " << cert.gorenstein_parameter
             << " (route " << to_string(cert.route) << ")\n";
    else
        text << (cert.status == Certificate::Status::Refuted ? "refuted" : "undetermined")
             << " (route " << to_string(cert.route) << ")\n";
    for (const std::string& w : cert.witnesses)
        text << "  " << w << "\n";
    out.emit(certificate_to_json(cert), text.str());
    return cert.certified() ? kExitOk : kExitRefuted;
}

int run_conditions(const JobSpec& spec, const Output& out) {
    ClosedSet U = closed_set_of(spec);
    ConditionSystem cs = extract_conditions(U);
    std::ostringstream text;
    if (cs.empty()) {
        text << "no conditions: every composition is trivial for all nonzero q\n";
    } else {
        for (const Condition& c : cs.conditions)
            text << to_string(c.poly) << "\n";
    }
    out.emit(conditions_to_json(cs), text.str());
    return cs.empty() ? kExitOk : kExitRefuted;
}

int run_invariants(const JobSpec& spec, int cap, const Output& out) {
    ClosedSet U = closed_set_of(spec);
    InvariantReport rep = invariant_report(U, cap);
    json j = invariants_to_json(rep, *spec.alphabet);
    if (spec.relations) {
        RelationSet G = parse_relations(spec);
        j["setting_valid"] = validate_setting(U, G);
        j["hilbert_from_irr"] = hilbert_from_irr(G, cap);
    }
    std::ostringstream text;
    text << "gkdim " << rep.gkdim << ", gldim " << rep.gldim.value << ", l = "
         << rep.gorenstein_parameter;
    if (rep.fibonacci_bound)
        text << ", bound " << *rep.fibonacci_bound
             << (rep.bound_satisfied ? " (satisfied)" : " (violated)");
    text << "\nhilbert:";
    for (long long h : rep.hilbert)
        text << " " << h;
    text << "\n";
    out.emit(j, text.str());
    return kExitOk;
}

int run_primitive(const JobSpec& spec, const std::string& poly, const Output& out) {
    if (!spec.q)
        throw ValidationError("q: required for primitive");
    NcPoly f(spec.alphabet);
    try {
        f = parse_ncpoly(poly, spec.alphabet, spec.q_symbolic ? spec.alphabet->size() : 0,
                         spec.field);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("--poly: ") + e.what());
    }
    QContext ctx(spec.alphabet, *spec.q);
    bool prim = is_primitive(f, ctx);
    json j;
    j["poly"] = to_string(f);
    j["primitive"] = prim;
    out.emit(j, std::string(prim ? "primitive" : "not primitive") + "\n");
    return prim ? kExitOk : kExitRefuted;
}

int run_fibonacci(std::optional<int> p, std::optional<int> failure_r, const Output& out) {
    AlphabetPtr a = make_alphabet(2);
    if (failure_r) {
        FibonacciFailureReport rep = fibonacci_failure(a, *failure_r);
        std::ostringstream text;
        text << "U_" << rep.r << ": " << (rep.refuted ? "refuted for all tested q" : "inconclusive")
             << "\n" << rep.detail << "\n";
        if (!rep.residual.empty())
            text << "residual: " << rep.residual << "\n";
        out.emit(fibonacci_failure_to_json(rep), text.str());
        return rep.refuted ? kExitRefuted : kExitOk;
    }
    if (!p)
        throw ValidationError("--p or --failure: required");
    ClosedSet U = fibonacci_closed(a, *p);
    auto V = phi(U);
    json j;
    j["U"] = lyndon_words_to_json(U.elements(), *a);
    j["phi"] = lyndon_words_to_json(V, *a);
    j["phi_size"] = V.size();
    j["closed"] = true;
    std::ostringstream text;
    text << "U_" << *p << " = " << render_set(U.elements(), *a) << "\n";
    text << "Phi = " << render_set(V, *a) << " (#" << V.size() << ")\n";
    out.emit(j, text.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lyndon-word calculus for regular graded algebras"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    int threads = 1;
    app.add_option("--threads", threads, "Internal parallelism bound")->default_val(1);
    unsigned long long seed = 0;
    app.add_option("--seed", seed, "Seed for randomized subcommands")->group("");

    std::string spec_path;
    int n = 2, max_deg = 5, cap = 8;
    std::string weights, poly;
    std::optional<int> p_opt, failure_r;
    bool graph = false, verify = false;

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("--spec", spec_path, "Job spec (JSON)")->required();
    };

    auto* c_lyndon = app.add_subcommand("lyndon", "Enumerate Lyndon words by degree");
    c_lyndon->add_option("--n", n, "Alphabet size")->required();
    c_lyndon->add_option("--weights", weights, "Comma-separated letter weights");
    c_lyndon->add_option("--max-deg", max_deg, "Degree cap")->required();

    auto* c_closure = app.add_subcommand("closure", "Smallest closed set containing the input");
    add_spec(c_closure);
    auto* c_phi = app.add_subcommand("phi", "Minimal Lyndon non-members of a closed set");
    add_spec(c_phi);
    auto* c_phibar = app.add_subcommand("phibar", "Non-members with both Shirshov parts inside");
    add_spec(c_phibar);
    auto* c_psi = app.add_subcommand("psi", "Lyndon words avoiding the antichain");
    add_spec(c_psi);
    c_psi->add_option("--cap", cap, "Degree cap")->required();
    auto* c_upsilon = app.add_subcommand("upsilon", "Lex-adjacent pairs of a closed set");
    add_spec(c_upsilon);

    auto* c_chains = app.add_subcommand("chains", "p-chains on an antichain");
    add_spec(c_chains);
    int p_val = -1;
    c_chains->add_option("--p", p_val, "Chain length");
    c_chains->add_flag("--graph", graph, "Emit the chain graph");
    c_chains->add_flag("--verify", verify, "Verify chain uniqueness for a closed set");

    auto* c_present = app.add_subcommand("present", "Presentation H on the extended alphabet");
    add_spec(c_present);
    auto* c_certify = app.add_subcommand("certify", "Certify AS-regularity of A(U,q)");
    add_spec(c_certify);
    auto* c_conditions = app.add_subcommand("conditions", "Symbolic Groebner conditions on q");
    add_spec(c_conditions);
    auto* c_invariants = app.add_subcommand("invariants", "Hilbert series and dimensions");
    add_spec(c_invariants);
    c_invariants->add_option("--cap", cap, "Hilbert cap")->default_val(8);
    auto* c_primitive = app.add_subcommand("primitive", "Primitivity under the braided coproduct");
    add_spec(c_primitive);
    c_primitive->add_option("--poly", poly, "Polynomial to test")->required();

    auto* c_fib = app.add_subcommand("fibonacci", "Fibonacci word families");
    int fib_p = -1, fib_failure = -1;
    c_fib->add_option("--p", fib_p, "Family size");
    c_fib->add_option("--failure", fib_failure, "Failure certificate for U_r");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_lyndon->parsed())
            return run_lyndon(n, weights, max_deg, out);
        if (c_fib->parsed()) {
            if (fib_p > 0)
                p_opt = fib_p;
            if (fib_failure > 0)
                failure_r = fib_failure;
            return run_fibonacci(p_opt, failure_r, out);
        }
        JobSpec spec = parse_job_file(spec_path);
        if (c_closure->parsed())
            return run_closure(spec, out);
        if (c_phi->parsed())
            return run_phi(spec, false, out);
        if (c_phibar->parsed())
            return run_phi(spec, true, out);
        if (c_psi->parsed())
            return run_psi(spec, cap, out);
        if (c_upsilon->parsed())
            return run_upsilon(spec, out);
        if (c_chains->parsed())
            return run_chains(spec, p_val >= 0 ? std::optional<int>(p_val) : std::nullopt, graph,
                              verify, out);
        if (c_present->parsed())
            return run_present(spec, out);
        if (c_certify->parsed())
            return run_certify(spec, out);
        if (c_conditions->parsed())
            return run_conditions(spec, out);
        if (c_invariants->parsed())
            return run_invariants(spec, cap, out);
        if (c_primitive->parsed())
            return run_primitive(spec, poly, out);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
