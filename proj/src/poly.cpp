#include "ncpoisson/poly.hpp"

#include <sstream>

namespace ncp {

namespace {

template <typename P>
P& add_all(P& a, const P& b, Complex scale) {
    for (const auto& [k, c] : b.terms()) a.add_term(k, scale * c);
    return a;
}

template <typename P>
P& scale_all(P& a, Complex c) {
    P out;
    for (const auto& [k, v] : a.terms()) out.add_term(k, c * v);
    a = std::move(out);
    return a;
}

}  // namespace

NcPoly& NcPoly::operator+=(const NcPoly& o) { return add_all(*this, o, 1.0); }
NcPoly& NcPoly::operator-=(const NcPoly& o) { return add_all(*this, o, -1.0); }
NcPoly& NcPoly::operator*=(Complex c) { return scale_all(*this, c); }

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) out.add_term(wa * wb, ca * cb);
    return out;
}

TracePoly& TracePoly::operator+=(const TracePoly& o) { return add_all(*this, o, 1.0); }
TracePoly& TracePoly::operator-=(const TracePoly& o) { return add_all(*this, o, -1.0); }
TracePoly& TracePoly::operator*=(Complex c) { return scale_all(*this, c); }

TracePoly trace(const NcPoly& f) {
    TracePoly out;
    for (const auto& [w, c] : f.terms()) out.add_term(CycWord(w), c);
    return out;
}

TracePoly trace(const Word& w) { return TracePoly(CycWord(w)); }

Tensor& Tensor::operator+=(const Tensor& o) { return add_all(*this, o, 1.0); }
Tensor& Tensor::operator-=(const Tensor& o) { return add_all(*this, o, -1.0); }
Tensor& Tensor::operator*=(Complex c) { return scale_all(*this, c); }

Tensor operator*(const Tensor& a, const Tensor& b) {
    Tensor out;
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms())
            out.add_term({pa.first * pb.first, pb.second * pa.second}, ca * cb);
    return out;
}

NcPoly tensor_apply(const Tensor& t, const NcPoly& f) {
    NcPoly out;
    for (const auto& [pair, ct] : t.terms())
        for (const auto& [w, cf] : f.terms()) out.add_term(pair.first * w * pair.second, ct * cf);
    return out;
}

Tensor tensor_star(const Tensor& t) {
    Tensor out;
    for (const auto& [pair, c] : t.terms()) out.add_term({pair.second, pair.first}, c);
    return out;
}

Word dilate(const Word& w) {
    std::vector<Letter> out;
    out.reserve(2 * w.size());
    for (const Letter& l : w.letters()) {
        if (l.sym == Letter::kAux) {
            out.push_back(l);
        } else if (l.exp > 0) {
            out.push_back(Letter::aux());
            out.push_back(l);
        } else {
            out.push_back(l);
            out.push_back(Letter::aux_inv());
        }
    }
    return Word(std::move(out));
}

NcPoly dilate(const NcPoly& f) {
    NcPoly out;
    for (const auto& [w, c] : f.terms()) out.add_term(dilate(w), c);
    return out;
}

TracePoly dilate(const TracePoly& f) {
    TracePoly out;
    for (const auto& [w, c] : f.terms()) out.add_term(CycWord(dilate(w.rep())), c);
    return out;
}

namespace {

std::string coeff_str(Complex c) {
    std::ostringstream os;
    os << "(" << c.real() << "," << c.imag() << ")";
    return os.str();
}

template <typename Terms, typename KeyStr>
std::string render(const Terms& terms, KeyStr key_str) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first) out += " + ";
        first = false;
        out += coeff_str(c) + "*" + key_str(k);
    }
    return out;
}

}  // namespace

std::string to_string(const NcPoly& f, const std::string& prefix) {
    return render(f.terms(), [&](const Word& w) { return to_string(w, prefix); });
}

std::string to_string(const TracePoly& f, const std::string& prefix) {
    return render(f.terms(), [&](const CycWord& w) { return "tr(" + to_string(w, prefix) + ")"; });
}

std::string to_string(const Tensor& t, const std::string& prefix) {
    return render(t.terms(), [&](const std::pair<Word, Word>& p) {
        return to_string(p.first, prefix) + " (x) " + to_string(p.second, prefix);
    });
}

}  // namespace ncp
