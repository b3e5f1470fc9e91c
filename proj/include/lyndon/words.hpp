#ifndef LYNDON_WORDS_HPP
#define LYNDON_WORDS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Alphabets, words and the Lyndon structure theory used everywhere else.
//
// Order conventions: a proper prefix is lex-GREATER than its extensions,
// and a Lyndon word is lex-greater than all of its proper rotations.
// This is the only convention offered; the classical (dual) one is not.

namespace lyndon {

class Word;

/// A finite enumerated alphabet x_1 < x_2 < ... < x_n with positive integer
/// weights deg(x_i). Extended alphabets (one letter per member of a closed
/// set) additionally carry the underlying base word of each letter.
class Alphabet {
public:
    Alphabet(int n, std::vector<int> weights);

    /// Extended alphabet: one letter per underlying word, listed in
    /// increasing letter order. Weights are the underlying degrees.
    Alphabet(std::shared_ptr<const Alphabet> base,
             std::vector<std::vector<int>> underlying,
             std::vector<int> weights,
             std::vector<std::string> names);

    int size() const { return n_; }
    int weight(int letter) const { return weights_.at(static_cast<size_t>(letter - 1)); }
    const std::vector<int>& weights() const { return weights_; }
    bool unit_weights() const;

    bool is_extended() const { return base_ != nullptr; }
    const std::shared_ptr<const Alphabet>& base() const { return base_; }
    /// Underlying base-letter sequence of a letter (identity on base alphabets).
    const std::vector<int>& underlying(int letter) const;
    /// Occurrence counts of base letters in underlying(letter).
    const std::vector<int>& base_constitute(int letter) const;
    const std::string& name(int letter) const { return names_.at(static_cast<size_t>(letter - 1)); }

    bool same_as(const Alphabet& other) const;

private:
    int n_;
    std::vector<int> weights_;
    std::vector<std::string> names_;
    std::shared_ptr<const Alphabet> base_;
    std::vector<std::vector<int>> underlying_;
    std::vector<std::vector<int>> base_constitute_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(int n, std::vector<int> weights = {});

/// Immutable word over some alphabet; letters are 1-based indices.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters) : ls_(std::move(letters)) {}

    static Word letter(int i) { return Word(std::vector<int>{i}); }

    size_t length() const { return ls_.size(); }
    bool empty() const { return ls_.empty(); }
    int at(size_t i) const { return ls_[i]; }
    const std::vector<int>& letters() const { return ls_; }

    Word concat(const Word& other) const;
    Word subword(size_t pos, size_t len) const;
    Word prefix(size_t len) const { return subword(0, len); }
    Word suffix(size_t len) const { return subword(ls_.size() - len, len); }

    bool operator==(const Word& o) const { return ls_ == o.ls_; }
    bool operator!=(const Word& o) const { return ls_ != o.ls_; }

private:
    std::vector<int> ls_;
};

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

/// Paper lex order: u < v iff the first difference has a smaller letter in u,
/// or v is a proper prefix of u. Total order; the empty word is the maximum.
Ordering lex_compare(const Word& u, const Word& v);
bool lex_less(const Word& u, const Word& v);

int degree(const Word& u, const Alphabet& a);
std::vector<int> constitute(const Word& u, const Alphabet& a);

/// deglex: degree first, then lex. Admissible well-order.
Ordering deglex_compare(const Word& u, const Word& v, const Alphabet& a);
bool deglex_less(const Word& u, const Word& v, const Alphabet& a);

/// Stateful comparator for ordered containers keyed by Word.
struct DeglexLess {
    const Alphabet* alph = nullptr;
    bool operator()(const Word& u, const Word& v) const { return deglex_less(u, v, *alph); }
};

bool is_prefix(const Word& p, const Word& u);
bool is_suffix(const Word& s, const Word& u);
bool is_factor(const Word& f, const Word& u);
bool is_proper_factor(const Word& f, const Word& u);
/// Number of distinct start positions at which f occurs inside u.
size_t count_occurrences(const Word& f, const Word& u);

bool is_lyndon(const Word& u);

/// A validated Lyndon word with its Shirshov factorization (for length >= 2)
/// computed once at construction: sh(u) = (u', u'') with u'' the longest
/// proper Lyndon suffix.
class LyndonWord {
public:
    explicit LyndonWord(Word w);

    const Word& word() const { return w_; }
    size_t length() const { return w_.length(); }
    bool is_letter() const { return w_.length() == 1; }

    /// Requires length >= 2.
    const LyndonWord& sh_left() const;
    const LyndonWord& sh_right() const;

    bool operator==(const LyndonWord& o) const { return w_ == o.w_; }
    bool operator!=(const LyndonWord& o) const { return w_ != o.w_; }

private:
    Word w_;
    std::shared_ptr<const std::pair<LyndonWord, LyndonWord>> sh_;
};

std::pair<LyndonWord, LyndonWord> shirshov(const LyndonWord& u);

/// Unique factorization u = w_1 ... w_r into Lyndon words with
/// w_1 <=_lex ... <=_lex w_r. Rejects the empty word.
std::vector<LyndonWord> lyndon_decomposition(const Word& u);

/// All Lyndon words occurring as factors of u.
std::vector<LyndonWord> lyndon_factors(const Word& u);

/// All Lyndon words of degree <= max_degree, deglex-sorted.
std::vector<LyndonWord> generate_lyndon(const Alphabet& a, int max_degree);

/// All words of degree <= max_degree (including the empty word), deglex-sorted.
std::vector<Word> generate_words(const Alphabet& a, int max_degree);

// Text syntax. Base alphabets with n <= 9 use compact digit strings
// ("221" = x2x2x1), otherwise bracketed index lists ("[2,2,1]"). The empty
// word renders as "1". Extended alphabets join letter names with "*" and
// compress runs ("x21^2").
std::string word_to_string(const Word& u, const Alphabet& a);
Word parse_word(const std::string& text, const Alphabet& a);

std::string ordering_to_string(Ordering o);

} // namespace lyndon

#endif
