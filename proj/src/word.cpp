#include "ncpoisson/word.hpp"

#include <algorithm>
#include <charconv>

namespace ncp {

Word reduce_word(std::vector<Letter> letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!out.empty() && out.back().cancels(l)) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return Word(std::move(out), Word::raw_tag{});
}

Word::Word(std::vector<Letter> letters) { *this = reduce_word(std::move(letters)); }

Word Word::operator*(const Word& rhs) const {
    std::vector<Letter> cat = letters_;
    cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
    return reduce_word(std::move(cat));
}

Word Word::slice(std::size_t begin, std::size_t end) const {
    return Word(std::vector<Letter>(letters_.begin() + begin, letters_.begin() + end), raw_tag{});
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    const auto& la = a.letters_;
    const auto& lb = b.letters_;
    const std::size_t m = std::min(la.size(), lb.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (auto c = la[i] <=> lb[i]; c != 0) return c;
    }
    return la.size() <=> lb.size();
}

CycWord::CycWord(const Word& w) {
    std::vector<Letter> ls = w.letters();
    // Cyclic reduction: a rotation can expose a cancellable pair across the seam.
    while (ls.size() >= 2 && ls.front().cancels(ls.back())) {
        ls.erase(ls.begin());
        ls.pop_back();
    }
    const std::size_t L = ls.size();
    if (L <= 1) {
        rep_ = Word(std::move(ls), Word::raw_tag{});
        return;
    }
    std::size_t best = 0;
    auto less_rotation = [&](std::size_t r1, std::size_t r2) {
        for (std::size_t i = 0; i < L; ++i) {
            int a = ls[(r1 + i) % L].rank();
            int b = ls[(r2 + i) % L].rank();
            if (a != b) return a < b;
        }
        return false;
    };
    for (std::size_t r = 1; r < L; ++r) {
        if (less_rotation(r, best)) best = r;
    }
    std::vector<Letter> rot(L);
    for (std::size_t i = 0; i < L; ++i) rot[i] = ls[(best + i) % L];
    rep_ = Word(std::move(rot), Word::raw_tag{});
}

std::string to_string(const Word& w, const std::string& prefix) {
    if (w.is_one()) return "1";
    std::string out;
    bool first = true;
    for (const Letter& l : w.letters()) {
        if (!first) out += '.';
        first = false;
        if (l.sym == Letter::kAux) {
            out += 'a';
        } else {
            out += prefix;
            out += std::to_string(l.sym + 1);
        }
        if (l.exp < 0) out += "^-1";
    }
    return out;
}

std::string to_string(const CycWord& w, const std::string& prefix) {
    return to_string(w.rep(), prefix);
}

Word parse_word(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_word: empty input");
    if (text == "1") return Word::one();
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t dot = text.find('.', pos);
        std::string tok = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        pos = dot == std::string::npos ? text.size() : dot + 1;

        int exp = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            if (tok.substr(caret) != "^-1") throw std::invalid_argument("parse_word: bad exponent in '" + tok + "'");
            exp = -1;
            tok = tok.substr(0, caret);
        }
        if (tok == "a") {
            letters.emplace_back(Letter::kAux, exp);
            continue;
        }
        if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
            throw std::invalid_argument("parse_word: bad letter '" + tok + "'");
        int idx = 0;
        auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
        if (ec != std::errc{} || p != tok.data() + tok.size() || idx < 1)
            throw std::invalid_argument("parse_word: bad letter '" + tok + "'");
        letters.emplace_back(idx - 1, exp);
    }
    return Word(std::move(letters));
}

}  // namespace ncp
