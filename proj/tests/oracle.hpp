#pragma once

// Test-only numeric machinery, kept independent of the library's analytic
// integration paths: adaptive Simpson quadrature and direct samplers for the
// primitive triangle measures.

#include <cmath>
#include <random>

namespace oracle {

template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-9, int depth = 24) {
    if (b <= a) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

/// Integral of f over {(x, y) : x in [x0, x1], max(x, ylo) <= y <= yhi}.
template <class F2>
double integrate_tri(const F2& f, double x0, double x1, double ylo, double yhi,
                     double tol = 1e-8) {
    return integrate(
        [&](double x) {
            double lo = std::max(x, ylo);
            if (yhi <= lo) return 0.0;
            return integrate([&, x](double y) { return f(x, y); }, lo, yhi, tol * 0.1);
        },
        x0, x1, tol);
}

/// A focal interval [x, y] drawn from a primitive measure.
struct Interval {
    double x, y;
    bool empty = false;
};

inline Interval intersect(Interval a, Interval b) {
    if (a.empty || b.empty) return {0, 0, true};
    double x = std::max(a.x, b.x), y = std::min(a.y, b.y);
    if (x > y) return {0, 0, true};
    return {x, y, false};
}

/// Samples the normalized evidence measure for (r, s): x ~ Beta(r, s+1) and
/// 1-y = (1-x) U^{1/s}, with the one-sided and vacuous degenerate cases.
struct EvidenceSampler {
    long long r, s;

    Interval operator()(std::mt19937_64& rng) const {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        if (r == 0 && s == 0) return {0.0, 1.0};
        if (s == 0) {
            double x = std::pow(unif(rng), 1.0 / static_cast<double>(r));
            return {x, 1.0};
        }
        if (r == 0) {
            double y = 1.0 - std::pow(unif(rng), 1.0 / static_cast<double>(s));
            return {0.0, y};
        }
        std::gamma_distribution<double> ga(static_cast<double>(r), 1.0);
        std::gamma_distribution<double> gb(static_cast<double>(s) + 1.0, 1.0);
        double u = ga(rng), v = gb(rng);
        double x = u / (u + v);
        double y = 1.0 - (1.0 - x) * std::pow(unif(rng), 1.0 / static_cast<double>(s));
        return {x, y};
    }
};

}  // namespace oracle
