#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace ncp {

using Complex = std::complex<double>;

/// Truncation bound for the theta series: terms decay like
/// exp(-pi Im(tau) m^2), so this keeps the tail below 1e-16.
/// Throws for Im(tau) < 0.05 (ill-conditioned).
int theta_truncation(Complex tau);

/// theta(z) = sum_m (-1)^m exp(2 pi i (m z + m(m-1) tau / 2)) and its first
/// three derivatives, by termwise differentiation of the truncated series.
std::array<Complex, 4> theta_derivs(Complex tau, int trunc, Complex z);

/// Evaluation context: modular parameter, characteristic modulus n, cached
/// theta constants theta_alpha(0) and theta'_alpha(0).
class ThetaCtx {
public:
    ThetaCtx(Complex tau, int n, int trunc_override = 0);

    Complex tau() const { return tau_; }
    int n() const { return n_; }
    int truncation() const { return trunc_; }

    Complex theta0(int alpha) const { return th0_[mod(alpha)]; }
    Complex theta0_prime(int alpha) const { return th0p_[mod(alpha)]; }

    int mod(int alpha) const { return ((alpha % n_) + n_) % n_; }

private:
    Complex tau_;
    int n_;
    int trunc_;
    std::vector<Complex> th0_, th0p_;
};

/// theta(z) and theta'(z).
std::pair<Complex, Complex> theta(const ThetaCtx& ctx, Complex z);

/// rho(z) = theta'(z)/theta(z) - pi i. Throws near lattice points.
Complex rho(const ThetaCtx& ctx, Complex z);
Complex rho_prime(const ThetaCtx& ctx, Complex z);

/// Theta function with characteristic alpha (mod n) and its z-derivative,
/// via the n-fold product of translated theta factors times an exponential.
/// The derivative uses the product rule over factors (no division).
std::pair<Complex, Complex> theta_char(const ThetaCtx& ctx, int alpha, Complex z);

/// Max relative residual per identity over `samples` random points:
/// quasi-periodicity of theta and theta_alpha, oddness of rho, the rho
/// three-point identity (with a finite-difference cross-check of rho'),
/// the reflection law for theta_alpha, and the k=1 generating identity.
std::map<std::string, double> theta_selftest(const ThetaCtx& ctx, int samples = 20,
                                             unsigned seed = 0);

}  // namespace ncp
