#include "lyndon/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lyndon {

RelationSet::RelationSet(AlphabetPtr alph, std::vector<NcPoly> polys)
    : alph_(std::move(alph)), polys_(std::move(polys)) {
    for (const NcPoly& f : polys_) {
        if (f.is_zero())
            throw std::invalid_argument("zero polynomial in relation set");
        if (!f.alphabet()->same_as(*alph_))
            throw std::invalid_argument("relation over a different alphabet");
        if (!f.is_homogeneous())
            throw std::invalid_argument("relations must be homogeneous");
        if (!f.leading_coeff().is_one())
            throw std::invalid_argument("relations must be monic");
    }
}

std::vector<Word> RelationSet::leading_words() const {
    std::vector<Word> out;
    out.reserve(polys_.size());
    for (const NcPoly& f : polys_)
        out.push_back(f.leading_word());
    return out;
}

bool RelationSet::is_reduced() const {
    for (size_t i = 0; i < polys_.size(); ++i) {
        for (const auto& [w, c] : polys_[i].terms()) {
            (void)c;
            for (size_t j = 0; j < polys_.size(); ++j) {
                if (j == i)
                    continue;
                if (is_factor(polys_[j].leading_word(), w))
                    return false;
            }
        }
    }
    return true;
}

namespace {

struct Occurrence {
    size_t rel;
    size_t pos;
};

// Earliest-listed relation whose leading word occurs in w; leftmost position.
std::optional<Occurrence> find_reduction(const Word& w, const RelationSet& G) {
    for (size_t k = 0; k < G.size(); ++k) {
        const Word& lw = G.polys()[k].leading_word();
        if (lw.length() > w.length())
            continue;
        for (size_t pos = 0; pos + lw.length() <= w.length(); ++pos) {
            if (std::equal(lw.letters().begin(), lw.letters().end(),
                           w.letters().begin() + static_cast<std::ptrdiff_t>(pos)))
                return Occurrence{k, pos};
        }
    }
    return std::nullopt;
}

} // namespace

NcPoly normal_form(const NcPoly& f, const RelationSet& G) {
    NcPoly r = f;
    if (G.empty())
        return r;
    while (true) {
        // Deglex-largest reducible word first.
        bool reduced_one = false;
        for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
            const Word w = it->first;
            auto occ = find_reduction(w, G);
            if (!occ)
                continue;
            const NcPoly& g = G.polys()[occ->rel];
            const Word& lw = g.leading_word();
            Scalar c = it->second;
            Word a = w.prefix(occ->pos);
            Word b = w.suffix(w.length() - occ->pos - lw.length());
            // r -= c * a * (g / lc(g)) * b ; relations are monic.
            r = r - g.framed(a, b).scaled(c);
            reduced_one = true;
            break;
        }
        if (!reduced_one)
            return r;
    }
}

std::vector<Ambiguity> ambiguities(const RelationSet& G) {
    std::vector<Ambiguity> out;
    const auto lws = G.leading_words();
    for (size_t i = 0; i < lws.size(); ++i) {
        for (size_t j = 0; j < lws.size(); ++j) {
            const Word& u1 = lws[i];
            const Word& u2 = lws[j];
            // Overlaps: a nontrivial proper suffix of u1 equals a nontrivial
            // proper prefix of u2; u1*r1 = l2*u2.
            for (size_t m = 1; m < std::min(u1.length(), u2.length()); ++m) {
                if (u1.suffix(m) == u2.prefix(m)) {
                    Ambiguity amb;
                    amb.i = i;
                    amb.j = j;
                    amb.kind = Ambiguity::Kind::Overlap;
                    amb.l1 = Word{};
                    amb.r1 = u2.suffix(u2.length() - m);
                    amb.l2 = u1.prefix(u1.length() - m);
                    amb.r2 = Word{};
                    out.push_back(std::move(amb));
                }
            }
            // Inclusions: u2 occurs inside u1 (the self pair is always trivial).
            if (i != j) {
                for (size_t pos = 0; pos + u2.length() <= u1.length(); ++pos) {
                    if (std::equal(u2.letters().begin(), u2.letters().end(),
                                   u1.letters().begin() + static_cast<std::ptrdiff_t>(pos))) {
                        Ambiguity amb;
                        amb.i = i;
                        amb.j = j;
                        amb.kind = Ambiguity::Kind::Inclusion;
                        amb.l1 = Word{};
                        amb.r1 = Word{};
                        amb.l2 = u1.prefix(pos);
                        amb.r2 = u1.suffix(u1.length() - pos - u2.length());
                        out.push_back(std::move(amb));
                    }
                }
            }
        }
    }
    return out;
}

NcPoly composition(const NcPoly& f1, const NcPoly& f2, const Ambiguity& amb) {
    NcPoly a = f1.monic().framed(amb.l1, amb.r1);
    NcPoly b = f2.monic().framed(amb.l2, amb.r2);
    return a - b;
}

GroebnerReport is_groebner(const RelationSet& G, bool reduce_first) {
    RelationSet H = reduce_first ? reduce_set(G) : G;
    GroebnerReport rep;
    for (const Ambiguity& amb : ambiguities(H)) {
        NcPoly s = composition(H.polys()[amb.i], H.polys()[amb.j], amb);
        NcPoly r = normal_form(s, H);
        ++rep.compositions_checked;
        if (!r.is_zero())
            rep.failures.emplace_back(amb, std::move(r));
    }
    rep.status = rep.failures.empty() ? GroebnerReport::Status::Groebner
                                      : GroebnerReport::Status::NotGroebner;
    return rep;
}

RelationSet reduce_set(const RelationSet& G) {
    std::vector<NcPoly> polys = G.polys();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < polys.size(); ++i) {
            std::vector<NcPoly> others;
            others.reserve(polys.size() - 1);
            for (size_t j = 0; j < polys.size(); ++j)
                if (j != i)
                    others.push_back(polys[j]);
            RelationSet rest(G.alphabet(), others);
            NcPoly r = normal_form(polys[i], rest);
            if (r.is_zero()) {
                polys.erase(polys.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            r = r.monic();
            if (r != polys[i]) {
                polys[i] = std::move(r);
                changed = true;
                break;
            }
        }
    }
    std::sort(polys.begin(), polys.end(), [&](const NcPoly& x, const NcPoly& y) {
        return deglex_less(x.leading_word(), y.leading_word(), *G.alphabet());
    });
    return RelationSet(G.alphabet(), std::move(polys));
}

RelationSet complete(const RelationSet& G, int degree_bound) {
    RelationSet cur = reduce_set(G);
    while (true) {
        std::vector<NcPoly> additions;
        for (const Ambiguity& amb : ambiguities(cur)) {
            NcPoly s = composition(cur.polys()[amb.i], cur.polys()[amb.j], amb);
            if (s.is_zero())
                continue;
            auto d = s.homogeneous_degree();
            if (d && *d > degree_bound)
                continue;
            NcPoly r = normal_form(s, cur);
            if (!r.is_zero())
                additions.push_back(r.monic());
        }
        if (additions.empty())
            return cur;
        std::sort(additions.begin(), additions.end(), [&](const NcPoly& x, const NcPoly& y) {
            return deglex_less(x.leading_word(), y.leading_word(), *G.alphabet());
        });
        std::vector<NcPoly> polys = cur.polys();
        for (NcPoly& f : additions) {
            NcPoly r = normal_form(f, RelationSet(G.alphabet(), polys));
            if (!r.is_zero())
                polys.push_back(r.monic());
        }
        cur = reduce_set(RelationSet(G.alphabet(), std::move(polys)));
    }
}

std::vector<std::vector<Word>> irr_words(const RelationSet& G, int degree_cap) {
    const Alphabet& a = *G.alphabet();
    const auto lws = G.leading_words();
    auto reducible = [&](const Word& w) {
        return std::any_of(lws.begin(), lws.end(), [&](const Word& lw) {
            return is_suffix(lw, w); // new occurrences end at the appended letter
        });
    };
    std::vector<std::vector<Word>> graded(static_cast<size_t>(degree_cap) + 1);
    graded[0].push_back(Word{});
    std::vector<Word> frontier{Word{}};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (int i = 1; i <= a.size(); ++i) {
                Word e = w.concat(Word::letter(i));
                int d = degree(e, a);
                if (d > degree_cap || reducible(e))
                    continue;
                graded[static_cast<size_t>(d)].push_back(e);
                next.push_back(std::move(e));
            }
        }
        frontier = std::move(next);
    }
    for (auto& level : graded)
        std::sort(level.begin(), level.end(),
                  [&](const Word& x, const Word& y) { return lex_less(x, y); });
    return graded;
}

std::vector<size_t> irr_counts(const RelationSet& G, int degree_cap) {
    auto graded = irr_words(G, degree_cap);
    std::vector<size_t> out;
    out.reserve(graded.size());
    for (const auto& level : graded)
        out.push_back(level.size());
    return out;
}

std::vector<Word> obstructions(const RelationSet& G) {
    std::vector<Word> lws = G.leading_words();
    std::sort(lws.begin(), lws.end(), [&](const Word& x, const Word& y) {
        return deglex_less(x, y, *G.alphabet());
    });
    lws.erase(std::unique(lws.begin(), lws.end()), lws.end());
    std::vector<Word> out;
    for (const Word& w : lws) {
        bool minimal = std::none_of(lws.begin(), lws.end(), [&](const Word& v) {
            return v != w && is_factor(v, w);
        });
        if (minimal)
            out.push_back(w);
    }
    return out;
}

std::string to_string(const Ambiguity& amb, const Alphabet& a) {
    std::ostringstream os;
    os << (amb.kind == Ambiguity::Kind::Overlap ? "overlap" : "inclusion") << "(" << amb.i << ","
       << amb.j << ")[" << word_to_string(amb.l1, a) << "," << word_to_string(amb.r1, a) << ","
       << word_to_string(amb.l2, a) << "," << word_to_string(amb.r2, a) << "]";
    return os.str();
}

} // namespace lyndon
