#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncp {

/// A single generator power: x_i or x_i^-1, or the auxiliary constant a / a^-1.
struct Letter {
    static constexpr int kAux = -1;

    int sym = 0;  // generator index >= 0, or kAux for the auxiliary constant
    int exp = 1;  // +1 or -1

    Letter() = default;
    Letter(int s, int e) : sym(s), exp(e) {
        if (exp != 1 && exp != -1) throw std::invalid_argument("Letter: exponent must be +1 or -1");
        if (sym < 0 && sym != kAux) throw std::invalid_argument("Letter: bad symbol");
    }

    static Letter gen(int i) { return Letter(i, 1); }
    static Letter gen_inv(int i) { return Letter(i, -1); }
    static Letter aux() { return Letter(kAux, 1); }
    static Letter aux_inv() { return Letter(kAux, -1); }

    Letter inverse() const { return Letter(sym, -exp); }

    // Total order x0 < x1 < ... < x0^-1 < x1^-1 < ... < a < a^-1.
    int rank() const {
        constexpr int kBlock = 1 << 20;
        if (sym == kAux) return 2 * kBlock + (exp < 0 ? 1 : 0);
        return (exp < 0 ? kBlock : 0) + sym;
    }

    bool cancels(const Letter& o) const { return sym == o.sym && exp == -o.exp; }

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.sym == b.sym && a.exp == b.exp;
    }
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
        return a.rank() <=> b.rank();
    }
};

/// Reduced monomial in the free Laurent algebra. The empty word is the unit.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);  // reduces on construction

    static Word one() { return Word(); }
    static Word gen(int i) { return Word({Letter::gen(i)}); }
    static Word gen_inv(int i) { return Word({Letter::gen_inv(i)}); }
    static Word aux() { return Word({Letter::aux()}); }
    static Word aux_inv() { return Word({Letter::aux_inv()}); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool is_one() const { return letters_.empty(); }

    Word operator*(const Word& rhs) const;

    /// Subword [begin, end), not re-reduced (valid for slices of a reduced word).
    Word slice(std::size_t begin, std::size_t end) const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    struct raw_tag {};
    Word(std::vector<Letter> letters, raw_tag) : letters_(std::move(letters)) {}

    std::vector<Letter> letters_;

    friend Word reduce_word(std::vector<Letter> letters);
    friend class CycWord;
};

/// Cancels adjacent inverse pairs until no pair remains. The result is
/// independent of the cancellation order.
Word reduce_word(std::vector<Letter> letters);

/// Canonical representative of the cyclic class of a word: cyclically reduce
/// (cancel inverse first/last pairs), then take the lexicographically minimal
/// rotation.
class CycWord {
public:
    CycWord() = default;
    explicit CycWord(const Word& w);

    const Word& rep() const { return rep_; }
    bool is_one() const { return rep_.is_one(); }

    friend bool operator==(const CycWord& a, const CycWord& b) { return a.rep_ == b.rep_; }
    friend std::strong_ordering operator<=>(const CycWord& a, const CycWord& b) {
        return a.rep_ <=> b.rep_;
    }

private:
    Word rep_;
};

/// Renders `x1.x2^-1.a` style text; generator i prints as `<prefix><i+1>`.
std::string to_string(const Word& w, const std::string& prefix = "x");
std::string to_string(const CycWord& w, const std::string& prefix = "x");

/// Parses the rendered format back. Accepts any single-letter generator
/// prefix (x, u, ...) and the bare auxiliary letter `a`. `1` is the unit.
Word parse_word(const std::string& text);

}  // namespace ncp
