#pragma once

// Two scalar backends behind one interface: exact Gaussian rationals for the
// algebraic identities, complex doubles for anything that needs root finding
// or path tracking.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "ramify/errors.hpp"

namespace ramify {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Default point-equality tolerance for the approximate backend (chordal).
inline constexpr double kTauPoint = 1e-9;
// Root clusters closer than this are one multiple root.
inline constexpr double kTauCluster = 1e-6;
// Residual bound for numeric root acceptance.
inline constexpr double kTauResidual = 1e-10;

/// Element of Q(i): a complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw Error("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline std::string rational_to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational rational_from_string(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool is_exact = true;
    static bool eq(const GaussianRational& a, const GaussianRational& b, double /*tol*/) {
        return a == b;
    }
    static bool is_zero(const GaussianRational& a, double /*tol*/ = 0) { return a.is_zero(); }
    static std::complex<double> to_complex(const GaussianRational& a) {
        return {a.re.convert_to<double>(), a.im.convert_to<double>()};
    }
    static GaussianRational from_long(long v) { return GaussianRational(v); }
    static GaussianRational conj(const GaussianRational& a) { return {a.re, -a.im}; }
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool is_exact = false;
    static bool eq(const std::complex<double>& a, const std::complex<double>& b, double tol) {
        return std::abs(a - b) <= tol;
    }
    static bool is_zero(const std::complex<double>& a, double tol = 0) {
        return std::abs(a) <= tol;
    }
    static std::complex<double> to_complex(const std::complex<double>& a) { return a; }
    static std::complex<double> from_long(long v) { return {double(v), 0.0}; }
    static std::complex<double> conj(const std::complex<double>& a) { return std::conj(a); }
};

using Exact = GaussianRational;
using Approx = std::complex<double>;

inline Approx to_approx(const Exact& a) { return scalar_traits<Exact>::to_complex(a); }
inline Approx to_approx(const Approx& a) { return a; }

/// Best rational approximation with bounded denominator (continued fractions).
/// Returns false when no candidate within `tol` of x exists.
bool rational_reconstruct(double x, Rational& out, std::int64_t max_den = 1000000,
                          double tol = 1e-9);

/// Reconstruct a Gaussian rational from a complex double; verified by the caller.
bool gaussian_reconstruct(const std::complex<double>& z, GaussianRational& out,
                          std::int64_t max_den = 1000000, double tol = 1e-9);

} // namespace ramify
