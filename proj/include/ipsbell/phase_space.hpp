#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "ipsbell/errors.hpp"

namespace ipsbell {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double pi_sq = std::numbers::pi * std::numbers::pi;

namespace detail {
inline void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) throw InvalidParameter(std::string(name) + " must be finite");
}
} // namespace detail

/// A point (alpha, beta) of two-mode phase space.
///
/// Convention: alpha = x + i p with vacuum Wigner (2/pi) exp(-2|alpha|^2) per
/// mode, i.e. vacuum quadrature variance 1/4. Every module in this library
/// uses this convention.
struct PhasePoint {
    double alpha_re = 0.0;
    double alpha_im = 0.0;
    double beta_re = 0.0;
    double beta_im = 0.0;

    PhasePoint() = default;
    PhasePoint(double are, double aim, double bre, double bim)
        : alpha_re(are), alpha_im(aim), beta_re(bre), beta_im(bim) {
        detail::require_finite(are, "alpha_re");
        detail::require_finite(aim, "alpha_im");
        detail::require_finite(bre, "beta_re");
        detail::require_finite(bim, "beta_im");
    }
    PhasePoint(Complex alpha, Complex beta)
        : PhasePoint(alpha.real(), alpha.imag(), beta.real(), beta.imag()) {}

    Complex alpha() const { return {alpha_re, alpha_im}; }
    Complex beta() const { return {beta_re, beta_im}; }
};

/// One centered two-mode Gaussian exponential:
///
///   weight * exp{ -u|alpha|^2 - v|beta|^2 + t (alpha beta + conj(alpha beta)) }
///
/// All coefficients are real. u,v must be positive; integrability of the
/// term alone additionally needs u*v > t^2, which is checked where it
/// matters (total_integral) rather than at construction.
struct GaussianTerm {
    double weight;
    double u;
    double v;
    double t;

    GaussianTerm(double weight_, double u_, double v_, double t_)
        : weight(weight_), u(u_), v(v_), t(t_) {
        detail::require_finite(weight, "weight");
        detail::require_finite(u, "u");
        detail::require_finite(v, "v");
        detail::require_finite(t, "t");
        if (u <= 0.0 || v <= 0.0)
            throw InvalidParameter("GaussianTerm requires u > 0 and v > 0");
    }
};

/// A weighted sum of centered two-mode Gaussians. This is the universal
/// state representation of the library: the twin beam is one term, the
/// photon-subtracted state is four.
struct TwoModeGaussianSum {
    std::vector<GaussianTerm> terms;
    std::string label;
};

/// Twin-beam (two-mode squeezed vacuum) parameters derived from the
/// squeezing r: lambda = tanh r, big_a = cosh 2r, big_b = sinh 2r.
struct TwbParams {
    double r;
    double lambda;
    double big_a;
    double big_b;

    explicit TwbParams(double r_) : r(r_) {
        detail::require_finite(r, "r");
        if (r < 0.0) throw InvalidParameter("TwbParams requires r >= 0");
        if (r > 6.0)
            throw InvalidParameter("TwbParams: r > 6 exceeds the supported range "
                                   "(cosh/sinh identities degrade in double precision)");
        lambda = std::tanh(r);
        big_a = std::cosh(2.0 * r);
        big_b = std::sinh(2.0 * r);
    }
};

/// Wigner function of the twin beam: a single Gaussian term
/// (4/pi^2) exp{-2A(|alpha|^2+|beta|^2) + 2B(alpha beta + conj)}.
inline TwoModeGaussianSum twb_wigner(const TwbParams& p) {
    TwoModeGaussianSum sum;
    sum.terms.emplace_back(4.0 / pi_sq, 2.0 * p.big_a, 2.0 * p.big_a, 2.0 * p.big_b);
    sum.label = "twb r=" + std::to_string(p.r);
    return sum;
}

/// Pointwise evaluation of the sum. Always real:
/// (alpha beta + conj) = 2 (x1 x2 - y1 y2).
inline double evaluate(const TwoModeGaussianSum& sum, const PhasePoint& p) {
    const double a2 = p.alpha_re * p.alpha_re + p.alpha_im * p.alpha_im;
    const double b2 = p.beta_re * p.beta_re + p.beta_im * p.beta_im;
    const double cross = 2.0 * (p.alpha_re * p.beta_re - p.alpha_im * p.beta_im);
    double value = 0.0;
    for (const auto& term : sum.terms)
        value += term.weight * std::exp(-term.u * a2 - term.v * b2 + term.t * cross);
    return value;
}

/// Integral of a single term over the whole four-dimensional phase space.
/// The (x1,x2) and (y1,y2) blocks decouple and each contributes
/// pi / sqrt(u v - t^2), so the term integrates to weight * pi^2 / (u v - t^2).
inline double term_integral(const GaussianTerm& term) {
    const double disc = term.u * term.v - term.t * term.t;
    if (!(disc > 0.0))
        throw NonIntegrableTerm("term has u*v <= t^2 (u=" + std::to_string(term.u) +
                                ", v=" + std::to_string(term.v) +
                                ", t=" + std::to_string(term.t) + ")");
    return term.weight * pi_sq / disc;
}

/// Integral of the sum over phase space; 1 for a normalized state.
inline double total_integral(const TwoModeGaussianSum& sum) {
    double value = 0.0;
    for (const auto& term : sum.terms) value += term_integral(term);
    return value;
}

} // namespace ipsbell
