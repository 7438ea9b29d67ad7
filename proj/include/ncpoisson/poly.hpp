#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "ncpoisson/word.hpp"

namespace ncp {

using Complex = std::complex<double>;

/// Relative magnitude below which stored coefficients are treated as
/// numerical dust and dropped.
inline constexpr double kZeroThreshold = 1e-12;

namespace detail {

template <typename Key>
class LinComb {
public:
    using Terms = std::map<Key, Complex>;

    LinComb() = default;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Complex coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Complex(0.0) : it->second;
    }

    void add_term(const Key& k, Complex c) {
        if (c == Complex(0.0)) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == Complex(0.0)) terms_.erase(it);
        }
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Drops coefficients below rel * max|coeff|.
    void prune(double rel = kZeroThreshold) {
        const double cut = rel * max_abs();
        if (cut == 0.0) return;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (std::abs(it->second) < cut)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

protected:
    Terms terms_;
};

}  // namespace detail

/// Element of the free Laurent algebra: finite complex combination of Words.
class NcPoly : public detail::LinComb<Word> {
public:
    NcPoly() = default;
    NcPoly(const Word& w, Complex c = 1.0) { add_term(w, c); }
    explicit NcPoly(Complex c) { add_term(Word::one(), c); }

    static NcPoly zero() { return NcPoly(); }
    static NcPoly one() { return NcPoly(Word::one()); }
    static NcPoly gen(int i) { return NcPoly(Word::gen(i)); }
    static NcPoly gen_inv(int i) { return NcPoly(Word::gen_inv(i)); }

    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    NcPoly& operator*=(Complex c);

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator-(const NcPoly& a) { NcPoly r; return r -= a; }
    friend NcPoly operator*(Complex c, NcPoly a) { return a *= c; }
    friend NcPoly operator*(NcPoly a, Complex c) { return a *= c; }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);  // free product

    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }
};

/// Element of the trace space F = A/[A,A]: combination of cyclic classes.
class TracePoly : public detail::LinComb<CycWord> {
public:
    TracePoly() = default;
    TracePoly(const CycWord& w, Complex c = 1.0) { add_term(w, c); }

    TracePoly& operator+=(const TracePoly& o);
    TracePoly& operator-=(const TracePoly& o);
    TracePoly& operator*=(Complex c);

    friend TracePoly operator+(TracePoly a, const TracePoly& b) { return a += b; }
    friend TracePoly operator-(TracePoly a, const TracePoly& b) { return a -= b; }
    friend TracePoly operator-(const TracePoly& a) { TracePoly r; return r -= a; }
    friend TracePoly operator*(Complex c, TracePoly a) { return a *= c; }
    friend TracePoly operator*(TracePoly a, Complex c) { return a *= c; }

    friend bool operator==(const TracePoly& a, const TracePoly& b) { return a.terms_ == b.terms_; }
};

/// The quotient map tr: A -> F.
TracePoly trace(const NcPoly& f);
TracePoly trace(const Word& w);

/// Element of A (x) A^op: pair (b, c) encodes b⊗c acting by (b⊗c)(f) = b f c.
class Tensor : public detail::LinComb<std::pair<Word, Word>> {
public:
    Tensor() = default;
    Tensor(const Word& left, const Word& right, Complex c = 1.0) { add_term({left, right}, c); }

    static Tensor identity() { return Tensor(Word::one(), Word::one()); }

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(Complex c);

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator-(const Tensor& a) { Tensor r; return r -= a; }
    friend Tensor operator*(Complex c, Tensor a) { return a *= c; }
    friend Tensor operator*(Tensor a, Complex c) { return a *= c; }

    /// Product in A⊗A^op: (b⊗c)(b'⊗c') = bb' ⊗ c'c.
    friend Tensor operator*(const Tensor& a, const Tensor& b);

    friend bool operator==(const Tensor& a, const Tensor& b) { return a.terms_ == b.terms_; }
};

/// (b⊗c)(f) = b f c, extended bilinearly.
NcPoly tensor_apply(const Tensor& t, const NcPoly& f);

/// Anti-involution (b⊗c)* = c⊗b.
Tensor tensor_star(const Tensor& t);

/// Homomorphism x_i -> a x_i, a -> a on words, polynomials and traces.
Word dilate(const Word& w);
NcPoly dilate(const NcPoly& f);
TracePoly dilate(const TracePoly& f);

std::string to_string(const NcPoly& f, const std::string& prefix = "x");
std::string to_string(const TracePoly& f, const std::string& prefix = "x");
std::string to_string(const Tensor& t, const std::string& prefix = "x");

}  // namespace ncp
