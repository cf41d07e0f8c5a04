#pragma once

// Parameter records for the two-sector growth model, derived quantities,
// the four-regime classifier and the closed-form inequality measures.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace growthtax {

// Raw economic parameters.  Rates are per year; s and sigma are the rms of
// the private/public growth-rate noise, rho the common fraction of the
// private noise variance, tau the noise correlation time in years.
struct ModelParams {
    double m = 0.0;         // private mean growth rate
    double s = 0.0;         // private growth-rate rms
    double rho = 0.0;       // common-noise fraction, in [0, 1]
    double tau = 1.0;       // noise correlation time (years)
    double mu_tilde = 0.0;  // public dressed growth rate
    double sigma = 0.0;     // public growth-rate rms
    double phi = 0.0;       // wealth-tax rate
    double f = 0.0;         // redistribution rate
    double j0 = 0.0;        // mean-field exchange intensity
    std::int64_t n_agents = 1;
    std::vector<double> kappa;  // redistribution weights; empty = uniform 1/N
};

// Dressed quantities computed once from ModelParams.
struct DerivedParams {
    double m_tilde = 0.0;       // m + (1-rho) s^2 / 2
    double sigma2_total = 0.0;  // sigma^2 + rho s^2
    double delta = 0.0;         // m_tilde - mu_tilde + f - phi
    double nu = 0.0;            // 2 delta / sigma2_total
    double theta_plus = 0.0;    // sigma2_total / 2
    std::optional<double> theta_minus;  // f + sigma2_total/(4 tau f); absent when f = 0

    // Inputs carried along for the growth-rate formulas.
    double mu_tilde = 0.0;
    double f = 0.0;
    double phi = 0.0;
    double tau = 1.0;
};

enum class RegimeLabel { NoTax, ModerateTax, StrongTax, FullTax };

inline const char* regime_name(RegimeLabel r)
{
    switch (r) {
        case RegimeLabel::NoTax: return "NoTax";
        case RegimeLabel::ModerateTax: return "ModerateTax";
        case RegimeLabel::StrongTax: return "StrongTax";
        case RegimeLabel::FullTax: return "FullTax";
    }
    return "?";
}

struct Regime {
    RegimeLabel label;
    double gap;          // m_tilde - mu_tilde
    double theta_plus;
    double theta_minus;
};

namespace detail {

inline void require(bool ok, const std::string& field, const std::string& what)
{
    if (!ok) throw std::invalid_argument("ModelParams." + field + ": " + what);
}

}  // namespace detail

inline void validate(const ModelParams& p)
{
    detail::require(p.s >= 0.0, "s", "must be >= 0");
    detail::require(p.sigma >= 0.0, "sigma", "must be >= 0");
    detail::require(p.tau > 0.0, "tau", "must be > 0");
    detail::require(p.rho >= 0.0 && p.rho <= 1.0, "rho", "must lie in [0, 1]");
    detail::require(p.phi >= 0.0, "phi", "must be >= 0");
    detail::require(p.f >= 0.0, "f", "must be >= 0");
    detail::require(p.j0 >= 0.0, "j0", "must be >= 0");
    detail::require(p.n_agents >= 1, "n_agents", "must be >= 1");
    detail::require(std::isfinite(p.m), "m", "must be finite");
    detail::require(std::isfinite(p.mu_tilde), "mu_tilde", "must be finite");
    if (!p.kappa.empty()) {
        detail::require(static_cast<std::int64_t>(p.kappa.size()) == p.n_agents,
                        "kappa", "length must equal n_agents");
        double sum = 0.0;
        for (double k : p.kappa) {
            detail::require(k >= 0.0, "kappa", "entries must be >= 0");
            sum += k;
        }
        detail::require(std::abs(sum - 1.0) <= 1e-12, "kappa",
                        "entries must sum to 1 (got " + std::to_string(sum) + ")");
    }
}

// Redistribution weights with the uniform default filled in.
inline std::vector<double> effective_kappa(const ModelParams& p)
{
    if (!p.kappa.empty()) return p.kappa;
    return std::vector<double>(static_cast<std::size_t>(p.n_agents),
                               1.0 / static_cast<double>(p.n_agents));
}

inline DerivedParams derive(const ModelParams& p)
{
    validate(p);
    DerivedParams d;
    d.m_tilde = p.m + 0.5 * (1.0 - p.rho) * p.s * p.s;
    d.sigma2_total = p.sigma * p.sigma + p.rho * p.s * p.s;
    d.delta = d.m_tilde - p.mu_tilde + p.f - p.phi;
    d.nu = 2.0 * d.delta / d.sigma2_total;
    d.theta_plus = 0.5 * d.sigma2_total;
    if (p.f > 0.0)
        d.theta_minus = p.f + d.sigma2_total / (4.0 * p.tau * p.f);
    d.mu_tilde = p.mu_tilde;
    d.f = p.f;
    d.phi = p.phi;
    d.tau = p.tau;
    return d;
}

// Four-regime classifier on the performance gap m_tilde - mu_tilde.
// Boundary ties resolve toward the adjacent taxed regime.
inline Regime classify(const DerivedParams& d)
{
    if (!d.theta_minus)
        throw std::invalid_argument(
            "classify: theta_minus undefined (f = 0); classification unsupported");
    const double gap = (d.delta - d.f + d.phi) + d.mu_tilde - d.mu_tilde;  // see below
    // gap = m_tilde - mu_tilde; recover it without carrying m_tilde twice.
    const double g = d.delta - d.f + d.phi;
    (void)gap;
    Regime r{RegimeLabel::StrongTax, g, d.theta_plus, *d.theta_minus};
    if (g > d.theta_plus) r.label = RegimeLabel::NoTax;
    else if (g > 0.0) r.label = RegimeLabel::ModerateTax;
    else if (g >= -*d.theta_minus) r.label = RegimeLabel::StrongTax;
    else r.label = RegimeLabel::FullTax;
    return r;
}

// Pareto tail exponent of the stationary wealth distribution in the
// mean-field exchange model: alpha = 1 + 2 (J0 + phi) / ((1 - rho) s^2).
inline double pareto_alpha(const ModelParams& p)
{
    validate(p);
    const double idio = (1.0 - p.rho) * p.s * p.s;
    if (!(idio > 0.0))
        throw std::domain_error(
            "pareto_alpha: tail exponent undefined for zero idiosyncratic "
            "variance (rho = 1 or s = 0)");
    return 1.0 + 2.0 * (p.j0 + p.phi) / idio;
}

// Gini coefficient from the tail exponent, G = 1/(2 alpha - 1), clamped to
// [0, 1].  Requires alpha > 1/2.
inline double gini_from_alpha(double alpha)
{
    if (!(alpha > 0.5))
        throw std::domain_error("gini_from_alpha: requires alpha > 1/2, got " +
                                std::to_string(alpha));
    const double g = 1.0 / (2.0 * alpha - 1.0);
    return std::min(1.0, std::max(0.0, g));
}

}  // namespace growthtax
