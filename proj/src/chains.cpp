#include "lyndon/chains.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lyndon {

bool is_antichain(const std::vector<Word>& V) {
    for (const Word& u : V)
        for (const Word& v : V)
            if (u != v && is_factor(u, v))
                return false;
    // Repeated elements are fine (sets); a word is not a proper factor of itself.
    return true;
}

std::vector<size_t> ChainGraph::successors(size_t v) const {
    std::vector<size_t> out;
    for (const auto& [a, b] : arrows)
        if (a == v)
            out.push_back(b);
    return out;
}

namespace {

// Factors of w that belong to V, as a set of distinct words.
std::vector<Word> factors_in(const Word& w, const std::vector<Word>& V) {
    std::vector<Word> out;
    for (const Word& v : V)
        if (is_factor(v, w))
            out.push_back(v);
    return out;
}

} // namespace

ChainGraph chain_graph(AlphabetPtr alph, const std::vector<Word>& V) {
    if (!is_antichain(V))
        throw std::invalid_argument("chain graph needs an antichain");
    std::set<std::vector<int>> vset;
    auto in_V = [&](const Word& w) {
        return std::any_of(V.begin(), V.end(), [&](const Word& v) { return v == w; });
    };
    for (int i = 1; i <= alph->size(); ++i) {
        Word l = Word::letter(i);
        if (!in_V(l))
            vset.insert(l.letters());
    }
    for (const Word& v : V)
        for (size_t k = 2; k < v.length(); ++k)
            vset.insert(v.suffix(k).letters());

    ChainGraph g;
    g.alph = alph;
    g.vertices.push_back(Word{});
    for (const auto& ls : vset)
        g.vertices.emplace_back(ls);
    std::sort(g.vertices.begin() + 1, g.vertices.end(),
              [&](const Word& x, const Word& y) { return deglex_less(x, y, *alph); });

    for (size_t i = 1; i < g.vertices.size(); ++i) {
        const Word& u = g.vertices[i];
        if (u.length() == 1 && !in_V(u))
            g.arrows.emplace_back(0, i);
    }
    for (size_t i = 1; i < g.vertices.size(); ++i) {
        for (size_t j = 1; j < g.vertices.size(); ++j) {
            Word uv = g.vertices[i].concat(g.vertices[j]);
            std::vector<Word> fs = factors_in(uv, V);
            if (fs.size() == 1 && is_suffix(fs.front(), uv))
                g.arrows.emplace_back(i, j);
        }
    }
    return g;
}

std::vector<Word> chains(const ChainGraph& g, int p) {
    if (p < 0)
        throw std::invalid_argument("p must be >= 0");
    if (p == 0)
        return {Word{}};
    std::vector<std::pair<size_t, Word>> frontier{{0, Word{}}};
    for (int step = 0; step < p; ++step) {
        std::vector<std::pair<size_t, Word>> next;
        for (const auto& [v, w] : frontier)
            for (size_t s : g.successors(v))
                next.emplace_back(s, w.concat(g.vertices[s]));
        frontier = std::move(next);
        if (frontier.empty())
            return {};
    }
    std::vector<Word> out;
    out.reserve(frontier.size());
    for (auto& [v, w] : frontier)
        out.push_back(std::move(w));
    std::sort(out.begin(), out.end(),
              [&](const Word& x, const Word& y) { return deglex_less(x, y, *g.alph); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Word> chains(AlphabetPtr alph, const std::vector<Word>& V, int p) {
    return chains(chain_graph(std::move(alph), V), p);
}

ChainUniquenessReport verify_chain_uniqueness(const ClosedSet& U) {
    ChainUniquenessReport rep;
    rep.d = U.size();
    std::vector<Word> V;
    for (const LyndonWord& v : phi(U))
        V.push_back(v.word());
    for (const LyndonWord& z : U.lex_descending())
        rep.expected = rep.expected.concat(z.word());

    ChainGraph g = chain_graph(U.alphabet(), V);
    rep.c_d = chains(g, static_cast<int>(rep.d));
    rep.c_d1 = chains(g, static_cast<int>(rep.d) + 1);
    rep.c_d2 = chains(g, static_cast<int>(rep.d) + 2);

    std::ostringstream detail;
    rep.pass = true;
    if (rep.c_d.size() != 1 || rep.c_d.front() != rep.expected) {
        rep.pass = false;
        detail << "C_d mismatch; ";
    }
    if (!rep.c_d1.empty() || !rep.c_d2.empty()) {
        rep.pass = false;
        detail << "chains beyond d exist; ";
    }
    rep.detail = detail.str();
    return rep;
}

} // namespace lyndon
