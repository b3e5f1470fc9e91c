#include "lyndon/closed_sets.hpp"

#include <algorithm>
#include <set>

namespace lyndon {

std::vector<LyndonWord> sort_deglex(std::vector<LyndonWord> ws, const Alphabet& a) {
    std::sort(ws.begin(), ws.end(), [&](const LyndonWord& x, const LyndonWord& y) {
        return deglex_less(x.word(), y.word(), a);
    });
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
}

bool contains_word(const std::vector<LyndonWord>& ws, const Word& w) {
    return std::any_of(ws.begin(), ws.end(), [&](const LyndonWord& x) { return x.word() == w; });
}

ClosedSet::ClosedSet(AlphabetPtr alph, std::vector<LyndonWord> elements)
    : alph_(std::move(alph)), elems_(sort_deglex(std::move(elements), *alph_)) {
    if (!is_closed(*alph_, elems_))
        throw std::invalid_argument("set is not closed");
}

bool ClosedSet::contains(const Word& w) const {
    return contains_word(elems_, w);
}

std::vector<LyndonWord> ClosedSet::lex_descending() const {
    std::vector<LyndonWord> out = elems_;
    std::sort(out.begin(), out.end(), [](const LyndonWord& x, const LyndonWord& y) {
        return lex_compare(x.word(), y.word()) == Ordering::Greater;
    });
    return out;
}

bool is_closed(const Alphabet& a, const std::vector<LyndonWord>& elements) {
    for (int i = 1; i <= a.size(); ++i)
        if (!contains_word(elements, Word::letter(i)))
            return false;
    for (const LyndonWord& u : elements)
        for (const LyndonWord& f : lyndon_factors(u.word()))
            if (!contains_word(elements, f.word()))
                return false;
    return true;
}

ClosedSet close(AlphabetPtr alph, const std::vector<LyndonWord>& seed) {
    std::set<std::vector<int>> seen;
    std::vector<LyndonWord> out;
    auto add = [&](LyndonWord w) {
        if (seen.insert(w.word().letters()).second)
            out.push_back(std::move(w));
    };
    for (int i = 1; i <= alph->size(); ++i)
        add(LyndonWord(Word::letter(i)));
    for (const LyndonWord& u : seed) {
        add(u);
        for (LyndonWord& f : lyndon_factors(u.word()))
            add(std::move(f));
    }
    return ClosedSet(std::move(alph), std::move(out));
}

namespace {

// Candidate pool for Phi/PhiBar of a finite closed U: both are contained in
// {uv | u >_lex v in U} \ U.
std::vector<LyndonWord> pair_concatenations(const ClosedSet& U) {
    std::set<std::vector<int>> seen;
    std::vector<LyndonWord> out;
    for (const LyndonWord& u : U.elements()) {
        for (const LyndonWord& v : U.elements()) {
            if (lex_compare(u.word(), v.word()) != Ordering::Greater)
                continue;
            Word uv = u.word().concat(v.word());
            if (U.contains(uv))
                continue;
            if (seen.insert(uv.letters()).second)
                out.emplace_back(uv);
        }
    }
    return out;
}

bool all_proper_lyndon_factors_in(const Word& v, const ClosedSet& U) {
    for (const LyndonWord& f : lyndon_factors(v))
        if (f.word() != v && !U.contains(f.word()))
            return false;
    return true;
}

} // namespace

std::vector<LyndonWord> phi(const ClosedSet& U) {
    std::vector<LyndonWord> out;
    for (const LyndonWord& v : pair_concatenations(U))
        if (all_proper_lyndon_factors_in(v.word(), U))
            out.push_back(v);
    return sort_deglex(std::move(out), *U.alphabet());
}

std::vector<LyndonWord> phibar(const ClosedSet& U) {
    std::vector<LyndonWord> out;
    for (const LyndonWord& v : pair_concatenations(U)) {
        if (U.contains(v.sh_left().word()) && U.contains(v.sh_right().word()))
            out.push_back(v);
    }
    return sort_deglex(std::move(out), *U.alphabet());
}

std::vector<LyndonWord> psi(const Alphabet& a, const std::vector<LyndonWord>& V, int degree_cap) {
    for (const LyndonWord& v : V)
        if (v.is_letter())
            throw std::invalid_argument("Psi domain excludes letters");
    std::vector<LyndonWord> out;
    for (LyndonWord& w : generate_lyndon(a, degree_cap)) {
        bool clean = std::none_of(V.begin(), V.end(), [&](const LyndonWord& v) {
            return is_factor(v.word(), w.word());
        });
        if (clean)
            out.push_back(std::move(w));
    }
    return out;
}

std::vector<LyndonWord> phi_bounded(const Alphabet& a, const std::vector<LyndonWord>& members,
                                    int degree_cap) {
    std::vector<LyndonWord> out;
    for (LyndonWord& v : generate_lyndon(a, degree_cap)) {
        if (contains_word(members, v.word()))
            continue;
        bool minimal = true;
        for (const LyndonWord& f : lyndon_factors(v.word())) {
            if (f.word() != v.word() && !contains_word(members, f.word())) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::pair<LyndonWord, LyndonWord>> upsilon(const ClosedSet& U) {
    std::vector<LyndonWord> desc = U.lex_descending();
    std::vector<std::pair<LyndonWord, LyndonWord>> out;
    for (size_t i = 0; i + 1 < desc.size(); ++i)
        out.emplace_back(desc[i], desc[i + 1]);
    return out;
}

std::vector<LyndonWord> fibonacci_words(AlphabetPtr alph, int count) {
    if (alph->size() != 2)
        throw std::invalid_argument("Fibonacci words live on a two-letter alphabet");
    if (count < 1)
        throw std::invalid_argument("count must be >= 1");
    std::vector<Word> f;
    f.push_back(Word::letter(1));
    if (count > 1)
        f.push_back(Word::letter(2));
    for (int m = 2; m < count; ++m) {
        // f_{2r} = f_{2r-1} f_{2r-2}, f_{2r+1} = f_{2r-1} f_{2r}
        if (m % 2 == 0)
            f.push_back(f[static_cast<size_t>(m - 1)].concat(f[static_cast<size_t>(m - 2)]));
        else
            f.push_back(f[static_cast<size_t>(m - 2)].concat(f[static_cast<size_t>(m - 1)]));
    }
    std::vector<LyndonWord> out;
    out.reserve(f.size());
    for (Word& w : f)
        out.emplace_back(std::move(w));
    return out;
}

ClosedSet fibonacci_closed(AlphabetPtr alph, int p) {
    if (p < 2)
        throw std::invalid_argument("need p >= 2 so that all letters are present");
    return ClosedSet(alph, fibonacci_words(alph, p));
}

std::vector<LyndonWord> fibonacci_phi_formula(AlphabetPtr alph, int p) {
    if (p < 2)
        throw std::invalid_argument("need p >= 2");
    std::vector<LyndonWord> f = fibonacci_words(alph, p + 1);
    std::vector<LyndonWord> out;
    for (int r = 1; 2 * r + 1 <= p; ++r)
        out.emplace_back(f[static_cast<size_t>(2 * r - 1)].word().concat(f[static_cast<size_t>(2 * r + 1)].word()));
    for (int r = 1; 2 * r <= p; ++r)
        out.emplace_back(f[static_cast<size_t>(2 * r)].word().concat(f[static_cast<size_t>(2 * r - 2)].word()));
    out.push_back(f[static_cast<size_t>(p)]);
    return sort_deglex(std::move(out), *alph);
}

} // namespace lyndon
