#include "ncpoisson/json_io.hpp"

#include <cctype>
#include <stdexcept>

namespace ncp {

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex value must be a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    auto fail = [&] { throw std::invalid_argument("bad complex literal: " + text); };
    auto read_num = [&](std::size_t& pos) {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        bool digits = false;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '.' || s[pos] == 'e' || s[pos] == 'E' ||
                                  ((s[pos] == '+' || s[pos] == '-') &&
                                   (s[pos - 1] == 'e' || s[pos - 1] == 'E')))) {
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) digits = true;
            ++pos;
        }
        // a bare sign before `i` means +1 / -1
        if (!digits && pos < s.size() && s[pos] == 'i') return s[start] == '-' ? -1.0 : 1.0;
        if (!digits) fail();
        return std::stod(s.substr(start, pos - start));
    };

    std::size_t pos = 0;
    double first = read_num(pos);
    if (pos == s.size()) return Complex(first, 0.0);
    if (s[pos] == 'i') {
        if (pos + 1 != s.size()) fail();
        return Complex(0.0, first);
    }
    if (s[pos] != '+' && s[pos] != '-') fail();
    double second = read_num(pos);
    if (pos >= s.size() || s[pos] != 'i' || pos + 1 != s.size()) fail();
    return Complex(first, second);
}

Json to_json(const EllipticParams& p) {
    return Json{{"n", p.n}, {"k", p.k}, {"tau", to_json(p.tau)}};
}

EllipticParams params_from_json(const Json& j) {
    EllipticParams p;
    p.n = j.at("n").get<int>();
    p.k = j.at("k").get<int>();
    p.tau = complex_from_json(j.at("tau"));
    return p;
}

Json to_json(const CoeffMatrix& c) {
    Json rows = Json::array();
    for (int i = 0; i < c.n; ++i) {
        Json row = Json::array();
        for (int r = 0; r < c.n; ++r) row.push_back(to_json(c.at(i, r)));
        rows.push_back(std::move(row));
    }
    return Json{{"n", c.n}, {"entries", std::move(rows)}};
}

CoeffMatrix coeff_matrix_from_json(const Json& j) {
    CoeffMatrix c(j.at("n").get<int>());
    const Json& rows = j.at("entries");
    for (int i = 0; i < c.n; ++i)
        for (int r = 0; r < c.n; ++r) c.at(i, r) = complex_from_json(rows.at(i).at(r));
    return c;
}

Json to_json(const RTensor& r) {
    Json trips = Json::array();
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            for (int a = 0; a < r.n; ++a)
                for (int b = 0; b < r.n; ++b)
                    if (Complex c = r.at(i, j, a, b); c != Complex(0.0))
                        trips.push_back(Json{{"i", i},
                                             {"j", j},
                                             {"a", a},
                                             {"b", b},
                                             {"coeff", to_json(c)}});
    return Json{{"n", r.n}, {"triplets", std::move(trips)}};
}

RTensor r_tensor_from_json(const Json& j) {
    RTensor r(j.at("n").get<int>());
    for (const Json& t : j.at("triplets"))
        r.at(t.at("i").get<int>(), t.at("j").get<int>(), t.at("a").get<int>(),
             t.at("b").get<int>()) = complex_from_json(t.at("coeff"));
    return r;
}

Json to_json(const AffineBracket& b) {
    Json entries = Json::array();
    for (int i = 0; i < b.n_total; ++i)
        for (int j = 0; j < b.n_total; ++j)
            for (const auto& [pair, c] : b.theta.at(i, j).terms())
                entries.push_back(Json{{"i", i},
                                       {"j", j},
                                       {"left_word", to_string(pair.first, "u")},
                                       {"right_word", to_string(pair.second, "u")},
                                       {"coeff", to_json(c)}});
    Json out{{"n_total", b.n_total}, {"chart", b.chart}, {"entries", std::move(entries)}};
    if (b.provenance) out["r_tensor"] = to_json(*b.provenance);
    return out;
}

AffineBracket affine_from_json(const Json& j) {
    AffineBracket b;
    b.n_total = j.at("n_total").get<int>();
    b.chart = j.at("chart").get<int>();
    b.theta = Bivector::zero(b.n_total);
    for (const Json& e : j.at("entries"))
        b.theta.at(e.at("i").get<int>(), e.at("j").get<int>())
            .add_term({parse_word(e.at("left_word").get<std::string>()),
                       parse_word(e.at("right_word").get<std::string>())},
                      complex_from_json(e.at("coeff")));
    if (j.contains("r_tensor")) b.provenance = r_tensor_from_json(j.at("r_tensor"));
    return b;
}

Json to_json(const Jac2Certificate& cert) {
    Json p = Json::array(), q = Json::array();
    for (const Complex& v : cert.p) p.push_back(to_json(v));
    for (const Complex& v : cert.q) q.push_back(to_json(v));
    return Json{{"n", cert.n}, {"p", std::move(p)}, {"q", std::move(q)},
                {"residual", cert.residual}};
}

}  // namespace ncp
