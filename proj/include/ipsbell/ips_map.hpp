#pragma once

#include <array>
#include <cmath>
#include <string>

#include "ipsbell/errors.hpp"
#include "ipsbell/phase_space.hpp"

namespace ipsbell {

/// Parameters of the photon-subtraction (degaussification) map.
///
/// Each twin-beam mode is mixed with vacuum at a beam splitter of
/// transmissivity tau and the reflected beams hit on/off detectors of
/// efficiency eta; the map conditions on both detectors clicking.
///
/// An inefficient detector is folded into the beam splitter: the closed
/// form is evaluated at unit efficiency with tau replaced by
/// tau_eff = 1 - eta (1 - tau). The raw (tau, eta) pair is kept for
/// provenance only. Note the click probability is exactly invariant under
/// this reduction while the conditional state is not (the reduced map
/// differs by residual loss tau/tau_eff on each signal mode); the closed
/// form below represents the reduced state.
struct IpsParams {
    double r;
    double tau;
    double eta;
    // derived, at unit efficiency and effective transmissivity
    double tau_eff;
    double big_a;  // cosh 2r
    double big_b;  // sinh 2r
    double a_coef; // 2 (A (1-tau_eff) + tau_eff)
    double b_coef; // 2 (A tau_eff + (1-tau_eff))

    IpsParams(double r_, double tau_, double eta_) : r(r_), tau(tau_), eta(eta_) {
        detail::require_finite(r, "r");
        detail::require_finite(tau, "tau");
        detail::require_finite(eta, "eta");
        if (r < 0.0 || r > 6.0) throw InvalidParameter("IpsParams requires 0 <= r <= 6");
        if (!(tau > 0.0 && tau <= 1.0)) throw InvalidParameter("IpsParams requires tau in (0, 1]");
        if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidParameter("IpsParams requires eta in [0, 1]");
        tau_eff = 1.0 - eta * (1.0 - tau);
        big_a = std::cosh(2.0 * r);
        big_b = std::sinh(2.0 * r);
        const double s = 1.0 - tau_eff;
        a_coef = 2.0 * (big_a * s + tau_eff);
        b_coef = 2.0 * (big_a * tau_eff + s);
    }

    /// Convenience: parameters already expressed as (r, tau_eff).
    static IpsParams from_tau_eff(double r, double tau_eff) { return {r, tau_eff, 1.0}; }

    std::string label() const {
        return "ips r=" + std::to_string(r) + " tau_eff=" + std::to_string(tau_eff);
    }
};

/// One row of the four-row coefficient table behind the closed-form
/// photon-subtracted Wigner function.
struct CoefficientRow {
    int j;    // 1..4
    double x; // |zeta|^2 coefficient of the detector Gaussian
    double y; // |xi|^2 coefficient
    double c; // sign-carrying weight: (1, -2, -2, 4)
    double f; // added to -|alpha|^2 coefficient: u = b - f
    double g; // added to -|beta|^2 coefficient: v = b - g
    double h; // added to the coupling: t = 2 B tau_eff + h
    double n; // shared prefactor 4 tau_eff (1-tau_eff) / (x y - 4 B^2 (1-tau_eff)^2)
};

/// The four coefficient rows at unit efficiency and effective transmissivity.
///
/// The h row uses 2 B (B^2 + (1-A)^2)(1-tau_eff) for the coupling part; the
/// factor 2 is what the Gaussian integrals over the detector modes produce,
/// and is confirmed by the Fock-space oracle.
inline std::array<CoefficientRow, 4> coefficient_table(const IpsParams& p) {
    const double A = p.big_a, B = p.big_b;
    const double te = p.tau_eff, s = 1.0 - p.tau_eff;
    const double a = p.a_coef;
    const std::array<double, 4> xs{a, a + 2.0, a, a + 2.0};
    const std::array<double, 4> ys{a, a, a + 2.0, a + 2.0};
    const std::array<double, 4> cs{1.0, -2.0, -2.0, 4.0};

    const double one_m_a = 1.0 - A;
    std::array<CoefficientRow, 4> rows{};
    for (int j = 0; j < 4; ++j) {
        const double x = xs[j], y = ys[j];
        const double denom = x * y - 4.0 * B * B * s * s;
        if (!(denom > 0.0))
            throw DegenerateDenominator("x_j y_j - 4 B^2 (1-tau_eff)^2 <= 0 at j=" +
                                        std::to_string(j + 1));
        const double n = 4.0 * te * s / denom;
        rows[j] = CoefficientRow{
            j + 1, x, y, cs[j],
            n * (x * one_m_a * one_m_a + 4.0 * B * B * one_m_a * s + y * B * B),
            n * (x * B * B + 4.0 * B * B * one_m_a * s + y * one_m_a * one_m_a),
            n * ((x + y) * B * one_m_a + 2.0 * B * (B * B + one_m_a * one_m_a) * s),
            n};
    }
    return rows;
}

namespace detail {

/// The four-term Gaussian sum before conditioning, i.e. not yet divided by
/// the double-click probability. Its total integral is p11.
inline TwoModeGaussianSum unnormalized_ips_sum(const IpsParams& p) {
    const auto rows = coefficient_table(p);
    const double B = p.big_b, te = p.tau_eff, s = 1.0 - p.tau_eff;
    TwoModeGaussianSum sum;
    for (const auto& row : rows) {
        const double denom = row.x * row.y - 4.0 * B * B * s * s;
        sum.terms.emplace_back(16.0 / pi_sq * row.c / denom,
                               p.b_coef - row.f,
                               p.b_coef - row.g,
                               2.0 * B * te + row.h);
    }
    sum.label = p.label() + " (unnormalized)";
    return sum;
}

} // namespace detail

/// Probability that both on/off detectors click, in [0, 1).
///
/// Computed as the phase-space integral of the unnormalized four-term sum.
/// (The same number also follows from the photon-number expansion as
/// 1 - 2(1-lambda^2)/(1-lambda^2 tau_eff) + (1-lambda^2)/(1-lambda^2 tau_eff^2);
/// the test suite holds the two routes against each other.)
inline double click_probability(const IpsParams& p) {
    return total_integral(detail::unnormalized_ips_sum(p));
}

/// The Wigner function of the conditioned (photon-subtracted) state: four
/// Gaussian terms normalized by the click probability. No longer Gaussian,
/// and in general negative somewhere.
///
/// Throws ZeroClickProbability when the conditioning event has vanishing
/// probability (r = 0 or tau_eff = 1), including parameter regimes where
/// p11 is too small to resolve in double precision.
inline TwoModeGaussianSum ips_wigner(const IpsParams& p) {
    TwoModeGaussianSum sum = detail::unnormalized_ips_sum(p);
    const double p11 = total_integral(sum);
    if (!std::isfinite(p11) || p11 < 1e-300)
        throw ZeroClickProbability("double-click probability vanishes at r=" +
                                   std::to_string(p.r) +
                                   ", tau_eff=" + std::to_string(p.tau_eff));
    for (auto& term : sum.terms) term.weight /= p11;
    sum.label = p.label();
    return sum;
}

} // namespace ipsbell
