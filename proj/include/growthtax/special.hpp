#pragma once

// Real-valued special functions: Gamma, log-Gamma and the modified Bessel
// function of the second kind K_nu for real order.  K_nu is evaluated in a
// scaled representation so that ratios of neighbouring orders stay accurate
// far past the range where the plain values under- or overflow.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace growthtax {

struct BesselEval {
    double value;      // K_nu(z); saturates to 0 or +inf outside double range
    double log_value;  // ln K_nu(z); finite for every z > 0, |nu| <= 500
    double order;
    double argument;
};

namespace detail {

inline constexpr double pi_v = 3.14159265358979323846264338328;
inline constexpr double ln2_v = 0.69314718055994530941723212146;

// Lanczos approximation, g = 607/128, 14 terms.  Relative error a few 1e-16
// over the positive axis.
inline double log_gamma_positive(double x)
{
    static const double cof[14] = {
        57.1562356658629235,     -59.5979603554754912,
        14.1360979747417471,     -0.491913816097620199,
        0.339946499848118887e-4,  0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3,
        -0.210264441724104883e-3, 0.217439618115212643e-3,
        -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5};
    double y = x;
    double tmp = x + 5.24218750000000000;  // x + g + 1/2
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (double c : cof) ser += c / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

// sin(pi x) with exact argument reduction; avoids the catastrophic loss of
// std::sin(pi*x) for large |x|.
inline double sin_pi(double x)
{
    double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(pi_v * r);
}

inline bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

}  // namespace detail

// ln Gamma(x) for x > 0.
inline double log_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive, got " +
                                std::to_string(x));
    return detail::log_gamma_positive(x);
}

// Gamma(x) for real x away from the poles at 0, -1, -2, ...
inline double gamma_fn(double x)
{
    if (std::isnan(x)) throw std::domain_error("gamma_fn: NaN argument");
    if (detail::is_nonpositive_integer(x))
        throw std::domain_error("gamma_fn: pole at non-positive integer x = " +
                                std::to_string(x));
    if (x >= 0.5) return std::exp(detail::log_gamma_positive(x));
    // Reflection in log space so that deep negative arguments (where the
    // value is subnormal) keep their sign and saturate cleanly.
    const double s = detail::sin_pi(x);
    const double log_abs = std::log(detail::pi_v) - std::log(std::abs(s)) -
                           detail::log_gamma_positive(1.0 - x);
    return std::copysign(std::exp(log_abs), s);
}

namespace detail {

// (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), continuous through mu = 0.
// Odd Taylor coefficients of 1/Gamma(1+x) for the small-|mu| branch.
inline double temme_gamma1(double mu)
{
    if (std::abs(mu) > 0.1) {
        const double t1 = 1.0 / std::exp(log_gamma_positive(1.0 - mu));
        const double t2 = 1.0 / std::exp(log_gamma_positive(1.0 + mu));
        return (t1 - t2) / (2.0 * mu);
    }
    static const double odd[8] = {
        0.57721566490153286061, -0.042002635034095236,
        -0.042197734555544337,   0.0072189432466630995,
        -0.00021524167411495098, -0.0000201348547807882,
        0.0000011330272319817,   0.0000000061160951045};
    const double mu2 = mu * mu;
    double s = 0.0, p = 1.0;
    for (double c : odd) {
        s += c * p;
        p *= mu2;
    }
    return -s;
}

// Pair (K_mu(z), K_{mu+1}(z)) by Temme's series, z <= 2, |mu| <= 1/2.
// Unscaled; never overflows for z above ~1e-300.
inline void temme_pair(double mu, double z, double& kmu, double& kmu1)
{
    const double tol = std::numeric_limits<double>::epsilon();
    const double mu2 = mu * mu;
    const double lhalf = std::log(2.0 / z);  // ln(2/z)
    const double fmu = mu * lhalf;

    const double g1 = temme_gamma1(mu);
    const double inv_gp = 1.0 / std::exp(log_gamma_positive(1.0 + mu));
    const double inv_gm = 1.0 / std::exp(log_gamma_positive(1.0 - mu));
    const double g2 = 0.5 * (inv_gm + inv_gp);

    double fc = 1.0;
    if (mu != 0.0) fc = mu * pi_v / std::sin(mu * pi_v);
    double smu = 1.0;
    if (fmu != 0.0) smu = std::sinh(fmu) / fmu;

    double f = fc * (g1 * std::cosh(fmu) + g2 * lhalf * smu);
    const double emu = std::exp(fmu);  // (2/z)^mu
    double p = 0.5 * emu / inv_gp;     // Gamma(1+mu)/2 (2/z)^mu
    double q = 0.5 / (emu * inv_gm);   // Gamma(1-mu)/2 (z/2)^mu

    const double cx = 0.25 * z * z;
    double ck = 1.0;
    double sum0 = f;   // -> K_mu
    double sum1 = p;   // -> (x/2) K_{mu+1}
    for (int k = 1; k < 500; ++k) {
        const double ak = static_cast<double>(k);
        f = (ak * f + p + q) / (ak * ak - mu2);
        p /= (ak - mu);
        q /= (ak + mu);
        ck *= cx / ak;
        const double d0 = ck * f;
        sum0 += d0;
        const double d1 = ck * (p - ak * f);
        sum1 += d1;
        if (std::abs(d0) < std::abs(sum0) * tol &&
            std::abs(d1) < std::abs(sum1) * tol)
            break;
    }
    kmu = sum0;
    kmu1 = sum1 * (2.0 / z);
}

// Pair (K_mu, K_{mu+1}) scaled by e^{z}, via Steed's continued fraction for
// the confluent hypergeometric U.  z >= 2, |mu| <= 1/2.
inline void cf2_pair_scaled(double mu, double z, double& kmu, double& kmu1)
{
    const double eps = std::numeric_limits<double>::epsilon();
    const int max_iter = 10000;
    const double mu2 = mu * mu;

    double b = 2.0 * (1.0 + z);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    int i = 1;
    for (; i < max_iter; ++i) {
        a -= 2.0 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) <= eps) break;
    }
    if (i >= max_iter)
        throw std::runtime_error("bessel_k: continued fraction failed to converge");
    h = a1 * h;
    kmu = std::sqrt(pi_v / (2.0 * z)) / s;
    kmu1 = kmu * (mu + z + 0.5 - h) / z;
}

struct ScaledKPair {
    double k_lower;    // K_{a-1}(z) * exp(-log_scale); NaN when a < 1/2
    double k_at;       // K_a(z)     * exp(-log_scale)
    double log_scale;
};

// Consecutive pair (K_{a-1}, K_a) for a >= 0 in a shared scaled
// representation.  Forward recurrence in the order is stable for K and is
// renormalised so that neither value leaves the double range.
inline ScaledKPair k_scaled_pair(double a, double z)
{
    const int nl = static_cast<int>(a + 0.5);
    const double mu = a - nl;  // in [-1/2, 1/2)

    double f0, f1, log_scale;
    if (std::abs(mu) == 0.5) {
        // K_{+-1/2}(z) = sqrt(pi/(2z)) e^{-z} exactly; keeps the half-order
        // ratio identity K_{-1/2} == K_{1/2} bit-exact.
        f0 = f1 = std::sqrt(pi_v / (2.0 * z));
        log_scale = -z;
    } else if (z <= 2.0) {
        temme_pair(mu, z, f0, f1);
        log_scale = 0.0;
    } else {
        cf2_pair_scaled(mu, z, f0, f1);
        log_scale = -z;
    }

    for (int j = 1; j < nl; ++j) {
        const double next = f0 + (2.0 * (mu + j) / z) * f1;
        f0 = f1;
        f1 = next;
        if (f1 > 1e270) {
            f0 = std::ldexp(f0, -600);
            f1 = std::ldexp(f1, -600);
            log_scale += 600.0 * ln2_v;
        }
    }
    if (nl == 0)
        return {std::numeric_limits<double>::quiet_NaN(), f0, log_scale};
    return {f0, f1, log_scale};
}

inline void check_bessel_args(double nu, double z, const char* who)
{
    if (!(z > 0.0))
        throw std::domain_error(std::string(who) +
                                ": argument must be positive, got z = " +
                                std::to_string(z));
    if (!(std::abs(nu) <= 500.0))
        throw std::domain_error(std::string(who) +
                                ": |order| must be <= 500, got nu = " +
                                std::to_string(nu));
}

}  // namespace detail

// Modified Bessel function of the second kind, real order.  Uses the
// symmetry K_{-nu} = K_nu.  Supported range |nu| <= 500, z > 0.
inline BesselEval bessel_k(double nu, double z)
{
    detail::check_bessel_args(nu, z, "bessel_k");
    const auto p = detail::k_scaled_pair(std::abs(nu), z);
    const double log_value = std::log(p.k_at) + p.log_scale;
    const double value = (p.log_scale == 0.0) ? p.k_at : std::exp(log_value);
    return {value, log_value, nu, z};
}

// K_{nu-1}(z) / K_nu(z), computed from a shared scaled pair so the result
// stays fully accurate when both values under- or overflow.
inline double bessel_k_ratio(double nu, double z)
{
    detail::check_bessel_args(nu, z, "bessel_k_ratio");
    if (nu >= 0.5) {
        const auto p = detail::k_scaled_pair(nu, z);
        return p.k_lower / p.k_at;
    }
    // K_{nu-1} = K_{1-nu} and K_nu = K_{-nu}: read both off the pair at 1-nu.
    const auto p = detail::k_scaled_pair(1.0 - nu, z);
    return p.k_at / p.k_lower;
}

}  // namespace growthtax
