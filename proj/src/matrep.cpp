#include "ncpoisson/matrep.hpp"

#include <stdexcept>

namespace ncp {

MatPoint::MatPoint(std::vector<Eigen::MatrixXcd> mats, double cond_bound)
    : N_(mats.empty() ? 0 : static_cast<int>(mats[0].rows())),
      mats_(std::move(mats)),
      invs_(mats_.size()),
      cond_bound_(cond_bound) {
    for (const auto& m : mats_)
        if (m.rows() != N_ || m.cols() != N_)
            throw std::invalid_argument("MatPoint: matrices must be square of equal size");
}

MatPoint MatPoint::random(Rng& rng, int n_vars, int N) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Eigen::MatrixXcd> mats(n_vars);
    for (auto& m : mats) {
        m.resize(N, N);
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
    }
    return MatPoint(std::move(mats));
}

const Eigen::MatrixXcd& MatPoint::mat(int sym) const {
    if (sym < 0 || sym >= n_vars()) throw std::out_of_range("MatPoint: variable index");
    return mats_[sym];
}

const Eigen::MatrixXcd& MatPoint::inv(int sym) const {
    if (sym < 0 || sym >= n_vars()) throw std::out_of_range("MatPoint: variable index");
    if (!invs_[sym]) {
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(mats_[sym]);
        Eigen::MatrixXcd inv = lu.inverse();
        const double cond = mats_[sym].norm() * inv.norm();
        if (!std::isfinite(cond) || cond > cond_bound_)
            throw std::runtime_error("MatPoint: matrix too ill-conditioned to invert");
        invs_[sym] = std::move(inv);
    }
    return *invs_[sym];
}

MatPoint MatPoint::conjugated(const Eigen::MatrixXcd& g) const {
    Eigen::MatrixXcd ginv = g.inverse();
    std::vector<Eigen::MatrixXcd> mats;
    mats.reserve(mats_.size());
    for (const auto& m : mats_) mats.push_back(g * m * ginv);
    return MatPoint(std::move(mats), cond_bound_);
}

Eigen::MatrixXcd eval_word(const Word& w, const MatPoint& pt) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(pt.N(), pt.N());
    for (const Letter& l : w.letters()) {
        if (l.sym == Letter::kAux)
            throw std::invalid_argument("eval_word: auxiliary letter has no representation");
        out *= l.exp > 0 ? pt.mat(l.sym) : pt.inv(l.sym);
    }
    return out;
}

Eigen::MatrixXcd eval_nc_poly(const NcPoly& f, const MatPoint& pt) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(pt.N(), pt.N());
    for (const auto& [w, c] : f.terms()) out += c * eval_word(w, pt);
    return out;
}

Complex eval_trace_poly(const TracePoly& f, const MatPoint& pt) {
    Complex out = 0.0;
    for (const auto& [w, c] : f.terms()) out += c * eval_word(w.rep(), pt).trace();
    return out;
}

Complex bracket_value(const AffineBracket& b, const TracePoly& f, const TracePoly& g,
                      const MatPoint& pt) {
    return eval_trace_poly(biv_apply(b, f, g), pt);
}

Complex bracket_value_matrix(const AffineBracket& b, const TracePoly& f, const TracePoly& g,
                             const MatPoint& pt) {
    const int n = b.n_total;
    Complex out = 0.0;
    for (int i = 0; i < n; ++i) {
        NcPoly dfi = cyclic_diff(f, i);
        if (dfi.is_zero()) continue;
        Eigen::MatrixXcd mf = eval_nc_poly(dfi, pt);
        for (int j = 0; j < n; ++j) {
            const Tensor& th = b.theta.at(i, j);
            if (th.is_zero()) continue;
            NcPoly dgj = cyclic_diff(g, j);
            if (dgj.is_zero()) continue;
            Eigen::MatrixXcd mg = eval_nc_poly(dgj, pt);
            for (const auto& [pair, c] : th.terms()) {
                Eigen::MatrixXcd left = eval_word(pair.first, pt);
                Eigen::MatrixXcd right = eval_word(pair.second, pt);
                out += c * (mf * left * mg * right).trace();
            }
        }
    }
    return out;
}

double jacobi_matrix_test(const AffineBracket& b, int N, int samples, int degree, unsigned seed) {
    Rng rng(seed);
    const auto gens = chart_gens(b.n_total, b.chart);
    auto battery = trace_monomials(gens, degree);
    if (battery.size() < 3) throw std::invalid_argument("jacobi_matrix_test: battery too small");
    std::uniform_int_distribution<std::size_t> pick(0, battery.size() - 1);

    struct Triple {
        TracePoly jac;
        std::array<TracePoly, 3> terms;
    };
    const int n_triples = 8;
    std::vector<Triple> triples;
    for (int t = 0; t < n_triples; ++t) {
        const TracePoly& f = battery[pick(rng)];
        const TracePoly& g = battery[pick(rng)];
        const TracePoly& h = battery[pick(rng)];
        Triple tr;
        tr.terms = {biv_apply(b, biv_apply(b, f, g), h), biv_apply(b, biv_apply(b, g, h), f),
                    biv_apply(b, biv_apply(b, h, f), g)};
        tr.jac = tr.terms[0] + tr.terms[1] + tr.terms[2];
        triples.push_back(std::move(tr));
    }

    double residual = 0.0;
    for (int s = 0; s < samples; ++s) {
        // chart variables carry no inverses, so any Gaussian point works
        MatPoint pt = MatPoint::random(rng, b.n_total, N);
        const Triple& tr = triples[s % triples.size()];
        double scale = 1.0;
        for (const auto& term : tr.terms)
            scale = std::max(scale, std::abs(eval_trace_poly(term, pt)));
        residual = std::max(residual, std::abs(eval_trace_poly(tr.jac, pt)) / scale);
    }
    return residual;
}

}  // namespace ncp
