#include "ncpoisson/theta.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ncp {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

double rel_residual(Complex lhs, Complex rhs) {
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
    return std::abs(lhs - rhs) / scale;
}

}  // namespace

int theta_truncation(Complex tau) {
    const double im = tau.imag();
    if (im < 0.05) throw std::invalid_argument("theta: Im(tau) must be >= 0.05");
    return static_cast<int>(std::ceil(std::sqrt(40.0 / (kPi * im)))) + 4;
}

std::array<Complex, 4> theta_derivs(Complex tau, int trunc, Complex z) {
    // Extra margin when Im(z) shifts the dominant term away from m = 0.
    const int m_extra = static_cast<int>(std::ceil(2.0 * std::abs(z.imag()) / tau.imag()));
    const int M = trunc + m_extra;
    std::array<Complex, 4> out{};
    for (int m = -M; m <= M; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        const Complex term = sign * std::exp(2.0 * kPi * kI *
                                             (double(m) * z + 0.5 * double(m) * double(m - 1) * tau));
        const Complex d = 2.0 * kPi * kI * double(m);
        out[0] += term;
        out[1] += d * term;
        out[2] += d * d * term;
        out[3] += d * d * d * term;
    }
    return out;
}

ThetaCtx::ThetaCtx(Complex tau, int n, int trunc_override)
    : tau_(tau), n_(n),
      trunc_(trunc_override > 0 ? trunc_override : theta_truncation(tau)) {
    if (n < 1) throw std::invalid_argument("ThetaCtx: n must be positive");
    th0_.resize(n);
    th0p_.resize(n);
    double scale = 0.0;
    for (int a = 0; a < n; ++a) {
        auto [v, d] = theta_char(*this, a, 0.0);
        th0_[a] = v;
        th0p_[a] = d;
        scale = std::max({scale, std::abs(v), std::abs(d)});
    }
    if (std::abs(th0_[0]) > 1e-8 * scale)
        throw std::runtime_error("ThetaCtx: theta_0(0) did not vanish; series unstable");
}

std::pair<Complex, Complex> theta(const ThetaCtx& ctx, Complex z) {
    auto d = theta_derivs(ctx.tau(), ctx.truncation(), z);
    return {d[0], d[1]};
}

Complex rho(const ThetaCtx& ctx, Complex z) {
    auto [v, d] = theta(ctx, z);
    if (std::abs(v) < 1e-12 * (std::abs(d) + 1.0))
        throw std::domain_error("rho: pole at a lattice point");
    return d / v - kPi * kI;
}

Complex rho_prime(const ThetaCtx& ctx, Complex z) {
    auto d = theta_derivs(ctx.tau(), ctx.truncation(), z);
    if (std::abs(d[0]) < 1e-12 * (std::abs(d[1]) + 1.0))
        throw std::domain_error("rho_prime: pole at a lattice point");
    return (d[2] * d[0] - d[1] * d[1]) / (d[0] * d[0]);
}

std::pair<Complex, Complex> theta_char(const ThetaCtx& ctx, int alpha, Complex z) {
    const int n = ctx.n();
    const Complex tau = ctx.tau();
    // the function is n-periodic in alpha, so the raw value may be used as is
    const double a = static_cast<double>(alpha);

    std::vector<Complex> f(n), fp(n);
    for (int j = 0; j < n; ++j) {
        const Complex zj = z + double(j) / n + a / n * tau;
        auto d = theta_derivs(tau, ctx.truncation(), zj);
        f[j] = d[0];
        fp[j] = d[1];
    }
    const Complex e = std::exp(kPi * kI * ((2.0 * a - n) * z - a / n + a * (a - n) / n * tau));
    const Complex e_logd = kPi * kI * (2.0 * a - n);

    // prefix/suffix products keep the derivative division-free
    std::vector<Complex> pre(n + 1), suf(n + 1);
    pre[0] = 1.0;
    for (int j = 0; j < n; ++j) pre[j + 1] = pre[j] * f[j];
    suf[n] = 1.0;
    for (int j = n - 1; j >= 0; --j) suf[j] = suf[j + 1] * f[j];

    Complex value = pre[n] * e;
    Complex deriv = value * e_logd;
    for (int j = 0; j < n; ++j) deriv += pre[j] * fp[j] * suf[j + 1] * e;
    return {value, deriv};
}

namespace {

// c_{i,r} for k = 1, straight from the theta constants.
Complex c_k1(const ThetaCtx& ctx, int i, int r) {
    i = ctx.mod(i);
    r = ctx.mod(r);
    if (i == 0 && r == 0) return 0.0;
    if (r == 0 || r == i) return ctx.theta0_prime(i) / ctx.theta0(i);
    return ctx.theta0_prime(0) * ctx.theta0(i) / (ctx.theta0(r) * ctx.theta0(i - r));
}

Complex genf1_lhs(const ThetaCtx& ctx, int alpha, int beta, Complex y, Complex z) {
    Complex lhs = 0.0;
    for (int r = 0; r < ctx.n(); ++r)
        lhs += c_k1(ctx, beta - alpha, r) * theta_char(ctx, beta - r, y).first *
               theta_char(ctx, alpha + r, z).first;
    return lhs;
}

// Also reports the magnitude of the largest constituent term, so the caller
// can form a meaningful relative residual when the terms cancel (alpha = beta).
Complex genf1_rhs(const ThetaCtx& ctx, int alpha, int beta, Complex y, Complex z,
                  double* scale = nullptr) {
    const double n = ctx.n();
    auto [tay, tayp] = theta_char(ctx, alpha, y);
    auto [taz, tazp] = theta_char(ctx, alpha, z);
    auto [tby, tbyp] = theta_char(ctx, beta, y);
    auto [tbz, tbzp] = theta_char(ctx, beta, z);
    const Complex t1 = n * rho(ctx, y - z) * tay * tbz;
    const Complex t2 = n * rho(ctx, z - y) * taz * tby;
    if (scale)
        *scale = std::max({std::abs(t1), std::abs(t2), std::abs(tay * tbzp),
                           std::abs(taz * tbyp)});
    return t1 + t2 + tay * tbzp - tayp * tbz + taz * tbyp - tazp * tby;
}

// Limit of the right side as y -> z (the two rho poles cancel).
Complex genf1_rhs_diagonal(const ThetaCtx& ctx, int alpha, int beta, Complex z,
                           double* scale = nullptr) {
    const double n = ctx.n();
    auto [ta, tap] = theta_char(ctx, alpha, z);
    auto [tb, tbp] = theta_char(ctx, beta, z);
    if (scale) *scale = std::max(1.0, std::abs(tap * tb) + std::abs(ta * tbp));
    return (n - 2.0) * (tap * tb - ta * tbp);
}

}  // namespace

std::map<std::string, double> theta_selftest(const ThetaCtx& ctx, int samples, unsigned seed) {
    std::map<std::string, double> r;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-0.45, 0.45);
    const Complex tau = ctx.tau();
    const int n = ctx.n();

    auto sample = [&] {
        while (true) {
            Complex z = unif(rng) + unif(rng) * tau;
            if (std::abs(theta(ctx, z).first) > 1e-4) return z;
        }
    };
    auto acc = [&r](const std::string& key, double v) {
        auto [it, ok] = r.emplace(key, v);
        if (!ok) it->second = std::max(it->second, v);
    };

    for (int s = 0; s < samples; ++s) {
        const Complex z = sample();
        const Complex x = sample();
        std::uniform_int_distribution<int> chr(0, n - 1);
        const int alpha = chr(rng), beta = chr(rng);

        auto th = [&](Complex w) { return theta(ctx, w).first; };
        acc("theta_period_1", rel_residual(th(z + 1.0), th(z)));
        acc("theta_quasi_tau", rel_residual(th(z + tau), -std::exp(-2.0 * kPi * kI * z) * th(z)));
        acc("theta_reflect", rel_residual(th(-z), -std::exp(-2.0 * kPi * kI * z) * th(z)));

        acc("rho_odd", rel_residual(rho(ctx, -z), -rho(ctx, z)));
        acc("rho_period_tau", rel_residual(rho(ctx, z + tau), rho(ctx, z) - 2.0 * kPi * kI));

        // three-point identity, with -x-y as the third point
        Complex w = -x - z;
        if (std::abs(theta(ctx, w).first) > 1e-4) {
            auto d0 = theta_derivs(tau, ctx.truncation(), 0.0);
            Complex rx = rho(ctx, x), rz = rho(ctx, z), rw = rho(ctx, w);
            Complex lhs = rx * rz + rx * rw + rz * rw;
            Complex rhs = -0.5 * (rx * rx + rz * rz + rw * rw) -
                          0.5 * (rho_prime(ctx, x) + rho_prime(ctx, z) + rho_prime(ctx, w)) +
                          1.5 * kPi * kPi + d0[3] / (2.0 * d0[1]);
            acc("rho_three_point", rel_residual(lhs, rhs));
        }

        // central-difference cross-check of the termwise rho'
        {
            const double h = 1e-5;
            Complex fd = (rho(ctx, z + h) - rho(ctx, z - h)) / (2.0 * h);
            acc("rho_prime_fd", rel_residual(rho_prime(ctx, z), fd));
        }

        auto tc = [&](int a, Complex w2) { return theta_char(ctx, a, w2).first; };
        acc("theta_char_period_n", rel_residual(tc(alpha + n, z), tc(alpha, z)));
        acc("theta_char_period_1",
            rel_residual(tc(alpha, z + 1.0), (n % 2 ? -1.0 : 1.0) * tc(alpha, z)));
        acc("theta_char_quasi_tau",
            rel_residual(tc(alpha, z + tau),
                         -std::exp(-2.0 * kPi * kI * double(n) * (z + 0.5 * tau)) * tc(alpha, z)));
        acc("theta_char_reflect",
            rel_residual(tc(alpha, -z),
                         -std::exp(-2.0 * kPi * kI * double(alpha) / double(n)) * tc(-alpha, z)));

        // k = 1 generating identity
        if (std::abs(theta(ctx, x - z).first) > 1e-4) {
            double scale = 0.0;
            Complex rhs = genf1_rhs(ctx, alpha, beta, x, z, &scale);
            Complex lhs = genf1_lhs(ctx, alpha, beta, x, z);
            acc("genf1", std::abs(lhs - rhs) / std::max({std::abs(lhs), scale, 1e-30}));
        }
        {
            double scale = 0.0;
            Complex rhs = genf1_rhs_diagonal(ctx, alpha, beta, z, &scale);
            Complex lhs = genf1_lhs(ctx, alpha, beta, z, z);
            acc("genf1_diagonal", std::abs(lhs - rhs) / std::max({std::abs(lhs), scale, 1e-30}));
        }
    }
    return r;
}

}  // namespace ncp
