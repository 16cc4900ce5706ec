#include "ramify/scalar.hpp"

#include <cmath>
#include <cstdlib>

namespace ramify {

bool rational_reconstruct(double x, Rational& out, std::int64_t max_den, double tol) {
    if (!std::isfinite(x)) return false;
    if (std::abs(x - std::round(x)) <= tol && std::abs(x) < 9e15) {
        out = Rational(BigInt(static_cast<long long>(std::round(x))));
        return true;
    }
    // Continued fraction expansion of x, convergents p/q with q <= max_den.
    double v = x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0; // convergent recurrence seeds
    std::int64_t p = 0, q = 1;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (std::abs(fl) > 9e15) return false;
        std::int64_t a = static_cast<std::int64_t>(fl);
        // next convergent
        __int128 pn = static_cast<__int128>(a) * p1 + p0;
        __int128 qn = static_cast<__int128>(a) * q1 + q0;
        if (qn > max_den || qn < -max_den) break;
        p0 = p1; q0 = q1;
        p1 = static_cast<std::int64_t>(pn);
        q1 = static_cast<std::int64_t>(qn);
        p = p1; q = q1;
        double approx = q ? double(p) / double(q) : 0.0;
        if (std::abs(approx - x) <= tol) {
            out = Rational(BigInt(p), BigInt(q));
            return true;
        }
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q != 0 && std::abs(double(p) / double(q) - x) <= tol) {
        out = Rational(BigInt(p), BigInt(q));
        return true;
    }
    return false;
}

bool gaussian_reconstruct(const std::complex<double>& z, GaussianRational& out,
                          std::int64_t max_den, double tol) {
    Rational re, im;
    if (!rational_reconstruct(z.real(), re, max_den, tol)) return false;
    if (!rational_reconstruct(z.imag(), im, max_den, tol)) return false;
    out = GaussianRational(re, im);
    return true;
}

} // namespace ramify
