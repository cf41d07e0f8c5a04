#pragma once

// Globally adaptive Gauss-Kronrod (G7, K15) quadrature on a finite interval.
// The segment with the largest error estimate is bisected until the summed
// estimate meets max(abs_tol, rel_tol * |integral|).

#include <cmath>
#include <stdexcept>
#include <vector>

namespace growthtax {

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// 15-point Kronrod nodes (positive half) and weights; the embedded 7-point
// Gauss rule lives on the odd-indexed nodes.
inline constexpr double gk15_nodes[8] = {
    0.99145537112081263921, 0.94910791234275852453,
    0.86486442335976907279, 0.74153118559939443986,
    0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
inline constexpr double gk15_wk[8] = {
    0.02293532201052922496, 0.06309209262997855329,
    0.10479001032225018384, 0.14065325971552591875,
    0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
inline constexpr double gk15_wg[4] = {
    0.12948496616886969327, 0.27970539148927666790,
    0.38183005050511894495, 0.41795918367346938776};

template <class F>
inline void gk15(F& f, double a, double b, double& kronrod, double& err)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * gk15_nodes[i]);
        fv[14 - i] = f(c + h * gk15_nodes[i]);
    }
    fv[7] = f(c);
    double sk = gk15_wk[7] * fv[7];
    double sg = gk15_wg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        sk += gk15_wk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) sg += gk15_wg[i / 2] * (fv[i] + fv[14 - i]);
    }
    kronrod = sk * h;
    err = std::abs((sk - sg) * h);
}

}  // namespace detail

// Integrate f over [a, b].  Throws NumericalError when the tolerance cannot
// be met within max_segments bisections.
template <class F>
inline double integrate(F f, double a, double b, double abs_tol = 1e-10,
                        double rel_tol = 1e-12, int max_segments = 4000)
{
    struct Segment {
        double a, b, value, error;
    };
    std::vector<Segment> segs;
    segs.reserve(128);

    double v, e;
    detail::gk15(f, a, b, v, e);
    segs.push_back({a, b, v, e});
    double total_value = v;
    double total_error = e;

    while (total_error > std::max(abs_tol, rel_tol * std::abs(total_value))) {
        if (static_cast<int>(segs.size()) >= max_segments)
            throw NumericalError("integrate: tolerance not reached within segment budget");
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].error > segs[worst].error) worst = i;
        const Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b)
            throw NumericalError("integrate: interval too small to bisect further");
        Segment left{s.a, mid, 0, 0}, right{mid, s.b, 0, 0};
        detail::gk15(f, left.a, left.b, left.value, left.error);
        detail::gk15(f, right.a, right.b, right.value, right.error);
        total_value += left.value + right.value - s.value;
        total_error += left.error + right.error - s.error;
        segs[worst] = left;
        segs.push_back(right);
    }
    return total_value;
}

}  // namespace growthtax
