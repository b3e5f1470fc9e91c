#include "lyndon/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lyndon/invariants.hpp"

namespace lyndon {

int ExtendedAlphabet::letter_of(const Word& base_word) const {
    auto it = rho.find(base_word.letters());
    if (it == rho.end())
        throw std::invalid_argument("word is not a member of the closed set");
    return it->second;
}

Word ExtendedAlphabet::word_of(const std::vector<LyndonWord>& tuple) const {
    std::vector<int> ls;
    ls.reserve(tuple.size());
    for (const LyndonWord& u : tuple)
        ls.push_back(letter_of(u.word()));
    return Word(std::move(ls));
}

ExtendedAlphabet extend_alphabet(const ClosedSet& U) {
    // Letters ascending in the lex order of their underlying words, so the
    // letter order realizes x_{rho(u)} > x_{rho(v)} iff u >_lex v.
    std::vector<LyndonWord> asc = U.lex_descending();
    std::reverse(asc.begin(), asc.end());
    std::vector<std::vector<int>> underlying;
    std::vector<int> weights;
    std::vector<std::string> names;
    for (const LyndonWord& u : asc) {
        underlying.push_back(u.word().letters());
        weights.push_back(degree(u.word(), *U.alphabet()));
        std::ostringstream name;
        name << "x";
        for (int l : u.word().letters())
            name << l;
        names.push_back(name.str());
    }
    ExtendedAlphabet out;
    out.ext = std::make_shared<Alphabet>(U.alphabet(), std::move(underlying), std::move(weights),
                                         std::move(names));
    for (size_t i = 0; i < asc.size(); ++i)
        out.rho[asc[i].word().letters()] = static_cast<int>(i) + 1;
    return out;
}

RelationSet build_G(const ClosedSet& U, const QMatrix& q) {
    QContext ctx(U.alphabet(), q);
    std::vector<NcPoly> polys;
    for (const LyndonWord& v : phibar(U))
        polys.push_back(ctx.super_letter(v));
    return RelationSet(U.alphabet(), std::move(polys));
}

namespace {

struct MemberSet {
    std::set<std::vector<int>> words;

    explicit MemberSet(const ClosedSet& U) {
        for (const LyndonWord& u : U.elements())
            words.insert(u.word().letters());
    }
    bool contains(const LyndonWord& w) const { return words.count(w.word().letters()) > 0; }
};

Word tuple_concat(const std::vector<LyndonWord>& t) {
    Word w;
    for (const LyndonWord& u : t)
        w = w.concat(u.word());
    return w;
}

bool tuple_monotonic(const std::vector<LyndonWord>& t) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (lex_compare(t[i].word(), t[i + 1].word()) == Ordering::Greater)
            return false;
    return true;
}

std::vector<LyndonWord> splice(const std::vector<LyndonWord>& t, size_t from, size_t drop,
                               const std::vector<LyndonWord>& repl) {
    std::vector<LyndonWord> out;
    out.reserve(t.size() - drop + repl.size());
    out.insert(out.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(from));
    out.insert(out.end(), repl.begin(), repl.end());
    out.insert(out.end(), t.begin() + static_cast<std::ptrdiff_t>(from + drop), t.end());
    return out;
}

// Rewrites an expression of super-letter tuples into monotonic super-words
// over U, modulo the ideal generated by {[v] - g_v | v in PhiBar(U)}. Three
// moves: substitute g_v when both Shirshov parts lie in U, split a non-member
// along its Shirshov pair, and straighten an inverted adjacent pair over U.
// Always applied to the tuple with the deglex-largest concatenation.
SuperWordExpr rewrite_over_U(SuperWordExpr E, const ClosedSet& U, const GValueMap& g,
                             const QContext& ctx) {
    const Alphabet& a = *ctx.alphabet();
    MemberSet members(U);
    auto g_of = [&](const LyndonWord& v) -> const SuperWordExpr* {
        auto it = g.find(v.word().letters());
        return it == g.end() ? nullptr : &it->second;
    };

    for (size_t guard = 0;; ++guard) {
        if (guard > 200000)
            throw std::logic_error("super-word rewriting did not settle");
        // Pick the offending tuple with the largest concatenation.
        const std::vector<LyndonWord>* target = nullptr;
        Scalar coeff;
        Word best_concat;
        for (const auto& [key, tc] : E.terms()) {
            (void)key;
            const auto& tuple = tc.first;
            bool over_U = std::all_of(tuple.begin(), tuple.end(),
                                      [&](const LyndonWord& w) { return members.contains(w); });
            if (over_U && tuple_monotonic(tuple))
                continue;
            Word c = tuple_concat(tuple);
            if (!target || deglex_less(best_concat, c, a)) {
                target = &tuple;
                coeff = tc.second;
                best_concat = std::move(c);
            }
        }
        if (!target)
            break;
        std::vector<LyndonWord> T = *target;
        E.add_term(T, -coeff);

        size_t bad = T.size();
        for (size_t i = 0; i < T.size(); ++i) {
            if (!members.contains(T[i])) {
                bad = i;
                break;
            }
        }
        if (bad < T.size()) {
            const LyndonWord& v = T[bad];
            const LyndonWord& v1 = v.sh_left();
            const LyndonWord& v2 = v.sh_right();
            if (members.contains(v1) && members.contains(v2)) {
                // v in PhiBar(U): replace [v] by g_v (zero when absent).
                if (const SuperWordExpr* gv = g_of(v)) {
                    for (const auto& [key, tc] : gv->terms()) {
                        (void)key;
                        E.add_term(splice(T, bad, 1, tc.first), coeff * tc.second);
                    }
                }
            } else {
                // [v] = [v'][v''] - q_{v',v''}[v''][v']
                E.add_term(splice(T, bad, 1, {v1, v2}), coeff);
                E.add_term(splice(T, bad, 1, {v2, v1}),
                           -(coeff * ctx.q_of(v1.word(), v2.word())));
            }
            continue;
        }

        // All letters lie in U; straighten the leftmost inversion.
        size_t inv = T.size();
        for (size_t i = 0; i + 1 < T.size(); ++i) {
            if (lex_compare(T[i].word(), T[i + 1].word()) == Ordering::Greater) {
                inv = i;
                break;
            }
        }
        if (inv == T.size())
            throw std::logic_error("offending tuple with no inversion");
        const LyndonWord& x = T[inv];
        const LyndonWord& y = T[inv + 1];
        // [x][y] = q_{x,y}[y][x] + [[x],[y]]
        E.add_term(splice(T, inv, 2, {y, x}), coeff * ctx.q_of(x.word(), y.word()));
        LyndonWord xy(x.word().concat(y.word()));
        if (xy.sh_left().word() == x.word()) {
            // [[x],[y]] = [xy]
            E.add_term(splice(T, inv, 2, {xy}), coeff);
        } else {
            SuperWordExpr B =
                to_superword_basis(ctx.bracket(ctx.super_letter(x), ctx.super_letter(y)), ctx);
            for (const auto& [key, tc] : B.terms()) {
                (void)key;
                E.add_term(splice(T, inv, 2, tc.first), coeff * tc.second);
            }
        }
    }
    return E;
}

void validate_g_values(const ClosedSet& U, const GValueMap& g) {
    MemberSet members(U);
    std::set<std::vector<int>> bar;
    for (const LyndonWord& v : phibar(U))
        bar.insert(v.word().letters());
    for (const auto& [vw, expr] : g) {
        if (bar.count(vw) == 0)
            throw std::invalid_argument("g value given for a word outside PhiBar(U)");
        Word v(vw);
        int dv = degree(v, *U.alphabet());
        for (const auto& [key, tc] : expr.terms()) {
            (void)key;
            for (const LyndonWord& w : tc.first)
                if (!members.contains(w))
                    throw std::invalid_argument("g value tuple leaves U");
            Word c = tuple_concat(tc.first);
            if (degree(c, *U.alphabet()) != dv)
                throw std::invalid_argument("g value of wrong degree");
            if (lex_compare(c, v) != Ordering::Less)
                throw std::invalid_argument("g value not lex-smaller than its word");
        }
    }
}

} // namespace

SuperWordExpr c_value(const LyndonWord& u, const LyndonWord& v, const ClosedSet& U,
                      const GValueMap& g, const QContext& ctx) {
    if (lex_compare(u.word(), v.word()) != Ordering::Greater)
        throw std::invalid_argument("c value needs u >_lex v");
    Word uv_word = u.word().concat(v.word());
    LyndonWord uv(uv_word);
    SuperWordExpr E(ctx.alphabet());
    if (uv.sh_left().word() == u.word()) {
        E.add_term({uv}, Scalar::one()); // [[u],[v]] = [uv]
    } else {
        E = to_superword_basis(ctx.bracket(ctx.super_letter(u), ctx.super_letter(v)), ctx);
    }
    E = rewrite_over_U(std::move(E), U, g, ctx);
    for (const auto& [key, tc] : E.terms()) {
        (void)key;
        Word c = tuple_concat(tc.first);
        if (lex_compare(c, uv_word) == Ordering::Greater)
            throw std::logic_error("c value exceeded [uu'] in lex order");
    }
    return E;
}

PresentationH::PresentationH(ClosedSet U, QMatrix q, GValueMap g, std::optional<int> degree_cap)
    : U_(std::move(U)),
      ext_(extend_alphabet(U_)),
      base_ctx_(U_.alphabet(), q),
      ext_ctx_(ext_.ext, q),
      cap_(degree_cap) {
    validate_g_values(U_, g);
    std::vector<LyndonWord> desc = U_.lex_descending();
    for (size_t i = 0; i < desc.size(); ++i) {
        for (size_t j = i + 1; j < desc.size(); ++j) {
            const LyndonWord& u = desc[i];
            const LyndonWord& v = desc[j];
            int d = degree(u.word(), *U_.alphabet()) + degree(v.word(), *U_.alphabet());
            if (cap_ && d > *cap_)
                continue;
            PairRelation pr{u, v, SuperWordExpr(U_.alphabet()), NcPoly(ext_.ext), NcPoly(ext_.ext)};
            pr.c = c_value(u, v, U_, g, base_ctx_);
            for (const auto& [key, tc] : pr.c.terms()) {
                (void)key;
                pr.h.add_term(ext_.word_of(tc.first), tc.second);
            }
            Word xu = Word::letter(ext_.letter_of(u.word()));
            Word xv = Word::letter(ext_.letter_of(v.word()));
            pr.relation = ext_ctx_.bracket(xu, xv) - pr.h;
            if (pr.relation.leading_word() != xu.concat(xv) || !pr.relation.leading_coeff().is_one())
                throw std::logic_error("presentation relation is not led by x_u x_v");
            // F_U sits inside H: when uv lies in U the tail is the new letter.
            if (U_.contains(u.word().concat(v.word())) &&
                LyndonWord(u.word().concat(v.word())).sh_left().word() == u.word()) {
                Word xuv = Word::letter(ext_.letter_of(u.word().concat(v.word())));
                if (!(pr.h == NcPoly::monomial(ext_.ext, xuv)))
                    throw std::logic_error("F_U relation mismatch in presentation");
            }
            pairs_.push_back(std::move(pr));
        }
    }
}

PresentationH build_H(const ClosedSet& U, const QMatrix& q, const GValueMap& g,
                      std::optional<int> degree_cap) {
    return PresentationH(U, q, g, degree_cap);
}

const NcPoly& PresentationH::h_of(const Word& u, const Word& v) const {
    for (const PairRelation& pr : pairs_)
        if (pr.u.word() == u && pr.v.word() == v)
            return pr.h;
    throw std::out_of_range("no h value for this pair (outside the degree cap?)");
}

RelationSet PresentationH::relations() const {
    std::vector<NcPoly> polys;
    polys.reserve(pairs_.size());
    for (const PairRelation& pr : pairs_)
        polys.push_back(pr.relation);
    return RelationSet(ext_.ext, std::move(polys));
}

NcPoly jacobi_J(const LyndonWord& u, const LyndonWord& v, const LyndonWord& w,
                const PresentationH& H) {
    const QContext& ctx = H.ext_context();
    const ExtendedAlphabet& ext = H.extended();
    NcPoly xu = NcPoly::monomial(ext.ext, Word::letter(ext.letter_of(u.word())));
    NcPoly xv = NcPoly::monomial(ext.ext, Word::letter(ext.letter_of(v.word())));
    NcPoly xw = NcPoly::monomial(ext.ext, Word::letter(ext.letter_of(w.word())));
    const NcPoly& h_uv = H.h_of(u.word(), v.word());
    const NcPoly& h_vw = H.h_of(v.word(), w.word());
    const NcPoly& h_uw = H.h_of(u.word(), w.word());
    Scalar q_uv = H.base_context().q_of(u.word(), v.word());
    Scalar q_vw = H.base_context().q_of(v.word(), w.word());
    return ctx.bracket(h_uv, xw) - ctx.bracket(xu, h_vw) + (xv * h_uw).scaled(q_uv) -
           (h_uw * xv).scaled(q_vw);
}

namespace {

std::vector<std::array<LyndonWord, 3>> descending_triples(const ClosedSet& U) {
    std::vector<LyndonWord> desc = U.lex_descending();
    std::vector<std::array<LyndonWord, 3>> out;
    for (size_t i = 0; i < desc.size(); ++i)
        for (size_t j = i + 1; j < desc.size(); ++j)
            for (size_t k = j + 1; k < desc.size(); ++k)
                out.push_back({desc[i], desc[j], desc[k]});
    return out;
}

std::string triple_name(const LyndonWord& u, const LyndonWord& v, const LyndonWord& w,
                        const Alphabet& a) {
    std::ostringstream os;
    os << "J(" << word_to_string(u.word(), a) << ", " << word_to_string(v.word(), a) << ", "
       << word_to_string(w.word(), a) << ")";
    return os.str();
}

} // namespace

Certificate certify(const ClosedSet& U, const QMatrix& q, CertifyRoute route,
                    const std::optional<RelationSet>& user_G) {
    if (!q.is_numeric())
        throw std::invalid_argument("certification needs a numeric q matrix");
    Certificate cert;
    cert.route = route;
    cert.gldim = U.size();
    cert.gkdim = U.size();
    cert.gorenstein_parameter = gorenstein_parameter(U);

    bool ok = false;
    if (route == CertifyRoute::Theorem39) {
        RelationSet G = build_G(U, q);
        GroebnerReport rep = is_groebner(G);
        cert.compositions_checked = rep.compositions_checked;
        for (const auto& [amb, residual] : rep.failures) {
            std::ostringstream os;
            os << "composition " << to_string(amb, *U.alphabet())
               << " residual: " << to_string(residual);
            cert.witnesses.push_back(os.str());
        }

        PresentationH H = build_H(U, q);
        RelationSet rels = H.relations();
        bool all_trivial = true;
        for (const auto& [u, v, w] : descending_triples(U)) {
            NcPoly r = normal_form(jacobi_J(u, v, w, H), rels);
            ++cert.triples_checked;
            if (!r.is_zero()) {
                all_trivial = false;
                std::ostringstream os;
                os << triple_name(u, v, w, *U.alphabet()) << " residual: " << to_string(r);
                cert.witnesses.push_back(os.str());
            }
        }
        if (rep.ok() != all_trivial)
            throw std::logic_error("Groebner check and J-triviality disagree");
        ok = rep.ok();
        cert.status = ok ? Certificate::Status::Certified : Certificate::Status::Refuted;
    } else {
        if (!user_G)
            throw std::invalid_argument("route thm312 needs a relation set");
        if (!validate_setting(U, *user_G))
            throw std::invalid_argument("relations do not satisfy Phi(U) <= lw(G) <= L\\U");
        GroebnerReport rep = is_groebner(*user_G);
        cert.compositions_checked = rep.compositions_checked;
        if (!rep.ok())
            throw std::invalid_argument("route thm312 needs a Groebner relation set");
        QContext ctx(U.alphabet(), q);
        ok = true;
        for (const NcPoly& g : user_G->polys()) {
            if (!is_primitive(g, ctx)) {
                ok = false;
                cert.witnesses.push_back("non-primitive relation: " + to_string(g));
            }
        }
        if (ok && !braiding_stable(user_G->polys(), ctx)) {
            ok = false;
            cert.witnesses.push_back("relation span is not stable under the braiding");
        }
        cert.status = ok ? Certificate::Status::Certified : Certificate::Status::Undetermined;
    }
    cert.strongly_noetherian = ok;
    cert.auslander_regular = ok;
    cert.cohen_macaulay = ok;
    return cert;
}

ConditionSystem extract_conditions(const ClosedSet& U) {
    int n = U.alphabet()->size();
    PresentationH H = build_H(U, QMatrix::symbolic(n));
    RelationSet rels = H.relations();
    ConditionSystem cs;
    cs.matrix_size = n;
    std::map<LaurentPoly, std::vector<std::string>> collected;
    for (const auto& [u, v, w] : descending_triples(U)) {
        NcPoly r = normal_form(jacobi_J(u, v, w, H), rels);
        ++cs.triples_checked;
        for (const auto& [word, coeff] : r.terms()) {
            LaurentPoly p = coeff.is_laurent()
                                ? coeff.laurent()
                                : LaurentPoly::constant(n, coeff.rational());
            std::ostringstream prov;
            prov << triple_name(u, v, w, *U.alphabet()) << " @ "
                 << word_to_string(word, *H.extended().ext);
            collected[normalize_condition(p)].push_back(prov.str());
        }
    }
    for (auto& [poly, prov] : collected)
        cs.conditions.push_back(Condition{poly, std::move(prov)});
    return cs;
}

FibonacciFailureReport fibonacci_failure(AlphabetPtr alph, int r) {
    if (r < 5)
        throw std::invalid_argument("the Fibonacci families admit q for r < 5");
    FibonacciFailureReport rep;
    rep.r = r;
    int n = alph->size();
    if (n != 2)
        throw std::invalid_argument("Fibonacci families live on two letters");

    if (r == 5) {
        ClosedSet U5 = fibonacci_closed(alph, 5);
        ConditionSystem cs = extract_conditions(U5);
        for (const Condition& c : cs.conditions)
            rep.conditions.push_back(to_string(c.poly));
        // The four-equation subsystem: q21q12q11 = 1, q22^2+q22+1 = 0,
        // q11 = -q22^3 = -1, q22^6(q21q12)^5 q11^4 = 1. Along the chain the
        // first three pin q22 to a primitive cube root of 1, q11 = -1 and
        // q21q12 = -1, and then the last one evaluates to -2, never zero.
        auto sym = [&](int i, int j) { return Scalar::q_symbol(n, i, j); };
        Scalar one = Scalar::one();
        std::vector<Scalar> eqs = {
            sym(2, 1) * sym(1, 2) * sym(1, 1) - one,
            sym(2, 2) * sym(2, 2) + sym(2, 2) + one,
            sym(1, 1) + one,
            sym(2, 2).pow(6) * (sym(2, 1) * sym(1, 2)).pow(5) * sym(1, 1).pow(4) - one,
        };
        NumberFieldPtr F = NumberField::cyclotomic3();
        Scalar zeta(Algebraic::generator(F));
        bool refuted = !cs.empty();
        for (Rational q21v : {Rational(1), Rational(2), Rational(-3)}) {
            QAssignment asg;
            asg[{1, 1}] = Scalar(Rational(-1));
            asg[{2, 2}] = zeta;
            asg[{2, 1}] = Scalar(q21v);
            asg[{1, 2}] = Scalar(Rational(-1) / q21v);
            bool first_three_vanish = evaluate(eqs[0], asg).is_zero() &&
                                      evaluate(eqs[1], asg).is_zero() &&
                                      evaluate(eqs[2], asg).is_zero();
            bool last_nonzero = !evaluate(eqs[3], asg).is_zero();
            if (!first_three_vanish || !last_nonzero)
                refuted = false;
        }
        rep.refuted = refuted;
        rep.detail = "condition system is nonempty and the four-equation subsystem has no "
                     "common solution along the constraint chain";
        return rep;
    }

    // r >= 6: one symbolic composition suffices. The triple has degree 8, so
    // pairs beyond that degree never enter the reduction.
    ClosedSet Ur = fibonacci_closed(alph, r);
    std::vector<LyndonWord> f = fibonacci_words(alph, r);
    PresentationH H = build_H(Ur, QMatrix::symbolic(n), {}, 8);
    NcPoly J = jacobi_J(f[1], f[4], f[2], H);
    NcPoly residual = normal_form(J, H.relations());
    rep.residual = to_string(residual);
    for (const auto& [word, coeff] : residual.terms()) {
        (void)word;
        if (coeff.is_laurent() && coeff.laurent().is_unit())
            rep.unit_term_present = true;
    }
    rep.refuted = !residual.is_zero() && rep.unit_term_present;
    rep.detail = rep.refuted
                     ? "residual of J(x2, x22121, x21) has a unit coefficient, so it vanishes "
                       "for no nonzero q"
                     : "residual did not certify failure";
    return rep;
}

std::string to_string(CertifyRoute route) {
    return route == CertifyRoute::Theorem39 ? "thm39" : "thm312";
}

} // namespace lyndon
