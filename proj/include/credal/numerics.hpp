#pragma once

#include <cmath>
#include <limits>

namespace credal::num {

inline double ipow(double base, int n) {
    double r = 1.0;
    for (double b = base; n > 0; n >>= 1, b *= b)
        if (n & 1) r *= b;
    return r;
}

/// log(e^la - e^lb) assuming la >= lb; -inf when equal or lb is -inf-larger.
inline double log_diff_exp(double la, double lb) {
    if (lb == -std::numeric_limits<double>::infinity()) return la;
    if (la <= lb) return -std::numeric_limits<double>::infinity();
    return la + std::log1p(-std::exp(lb - la));
}

inline double lchoose(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// Regularized incomplete beta I_x(a, b).
double ibeta_reg(double a, double b, double x);

/// log Beta(a, b).
inline double lbeta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

/// x^n with the measure-theoretic conventions 0^0 = 1, 0^n = 0 (n > 0),
/// computed through logs for large n.
inline double pow_real(double x, double n) {
    if (n == 0.0) return 1.0;
    if (x <= 0.0) return 0.0;
    return std::exp(n * std::log(x));
}

}  // namespace credal::num
