#pragma once

// Points of the Riemann sphere C u {inf}, the chordal metric, and Mobius
// transformations. Infinity is a first-class point, never a large finite stand-in.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>

#include "ramify/scalar.hpp"

namespace ramify {

template <class K>
class SpherePoint {
public:
    SpherePoint() : finite_(scalar_traits<K>::from_long(0)) {}
    explicit SpherePoint(K v) : finite_(std::move(v)) {}
    static SpherePoint infinity() {
        SpherePoint p;
        p.finite_.reset();
        return p;
    }
    static SpherePoint finite(K v) { return SpherePoint(std::move(v)); }

    bool is_infinity() const { return !finite_.has_value(); }
    const K& value() const { return *finite_; }

    bool eq(const SpherePoint& o, double tol = kTauPoint) const {
        if (is_infinity() || o.is_infinity()) {
            if (is_infinity() && o.is_infinity()) return true;
            if constexpr (scalar_traits<K>::is_exact) return false;
            // approximate: compare chordally so huge values match infinity
            return chordal(*this, o) <= tol;
        }
        if constexpr (scalar_traits<K>::is_exact)
            return scalar_traits<K>::eq(*finite_, o.value(), tol);
        else
            return chordal(*this, o) <= tol;
    }

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) { return a.eq(b); }

    std::complex<double> approx() const {
        if (is_infinity()) return {std::numeric_limits<double>::infinity(), 0.0};
        return scalar_traits<K>::to_complex(*finite_);
    }

    /// Chordal metric via stereographic projection, value in [0, 2].
    static double chordal(const SpherePoint& p, const SpherePoint& q) {
        if (p.is_infinity() && q.is_infinity()) return 0.0;
        if (p.is_infinity()) return chordal(q, p);
        std::complex<double> a = scalar_traits<K>::to_complex(p.value());
        double na = std::norm(a);
        if (q.is_infinity()) return 2.0 / std::sqrt(1.0 + na);
        std::complex<double> b = scalar_traits<K>::to_complex(q.value());
        double nb = std::norm(b);
        return 2.0 * std::abs(a - b) / std::sqrt((1.0 + na) * (1.0 + nb));
    }

private:
    std::optional<K> finite_;
};

template <class K>
double chordal_distance(const SpherePoint<K>& p, const SpherePoint<K>& q) {
    return SpherePoint<K>::chordal(p, q);
}

template <class K>
SpherePoint<Approx> to_approx_point(const SpherePoint<K>& p) {
    if (p.is_infinity()) return SpherePoint<Approx>::infinity();
    return SpherePoint<Approx>(scalar_traits<K>::to_complex(p.value()));
}

/// z -> (az + b) / (cz + d), ad - bc != 0.
template <class K>
struct MobiusTransform {
    K a, b, c, d;

    static MobiusTransform identity() {
        using T = scalar_traits<K>;
        return {T::from_long(1), T::from_long(0), T::from_long(0), T::from_long(1)};
    }

    K det() const { return a * d - b * c; }

    bool degenerate(double tol = 1e-14) const {
        return scalar_traits<K>::is_zero(det(), tol);
    }

    MobiusTransform inverse() const { return {d, -b, -c, a}; }

    friend MobiusTransform operator*(const MobiusTransform& S, const MobiusTransform& T) {
        // composition: (S * T)(z) = S(T(z))
        return {S.a * T.a + S.b * T.c, S.a * T.b + S.b * T.d,
                S.c * T.a + S.d * T.c, S.c * T.b + S.d * T.d};
    }

    /// Equality up to coefficient proportionality.
    bool proportional_to(const MobiusTransform& o, double tol = 1e-9) const {
        using T = scalar_traits<K>;
        // cross products of the coefficient quadruples must vanish
        const K x[4] = {a, b, c, d};
        const K y[4] = {o.a, o.b, o.c, o.d};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!T::is_zero(x[i] * y[j] - x[j] * y[i], tol)) return false;
        return true;
    }
};

template <class K>
SpherePoint<K> mobius_apply(const MobiusTransform<K>& t, const SpherePoint<K>& p) {
    using T = scalar_traits<K>;
    double ztol = T::is_exact ? 0.0 : 1e-13;
    if (p.is_infinity()) {
        if (T::is_zero(t.c, ztol)) return SpherePoint<K>::infinity();
        return SpherePoint<K>(t.a / t.c);
    }
    K den = t.c * p.value() + t.d;
    if (T::is_zero(den, ztol)) return SpherePoint<K>::infinity();
    return SpherePoint<K>((t.a * p.value() + t.b) / den);
}

namespace detail {
// Mobius sending (p1, p2, p3) -> (0, 1, inf): the cross-ratio map.
template <class K>
MobiusTransform<K> to_standard_triple(const SpherePoint<K>& p1, const SpherePoint<K>& p2,
                                      const SpherePoint<K>& p3) {
    using T = scalar_traits<K>;
    const K one = T::from_long(1), zero = T::from_long(0);
    if (p1.is_infinity()) {
        // (p2 - p3) / (z - p3)
        return {zero, p2.value() - p3.value(), one, -p3.value()};
    }
    if (p2.is_infinity()) {
        // (z - p1) / (z - p3)
        return {one, -p1.value(), one, -p3.value()};
    }
    if (p3.is_infinity()) {
        // (z - p1) / (p2 - p1)
        return {one, -p1.value(), zero, p2.value() - p1.value()};
    }
    // ((z - p1)(p2 - p3)) / ((z - p3)(p2 - p1))
    K u = p2.value() - p3.value();
    K v = p2.value() - p1.value();
    return {u, -p1.value() * u, v, -p3.value() * v};
}
} // namespace detail

/// The unique Mobius transform carrying src[i] -> dst[i] for three pairwise
/// distinct points on each side.
template <class K>
MobiusTransform<K> mobius_sending_three(const std::array<SpherePoint<K>, 3>& src,
                                        const std::array<SpherePoint<K>, 3>& dst) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (src[i].eq(src[j])) throw DegenerateTriple("repeated source point");
            if (dst[i].eq(dst[j])) throw DegenerateTriple("repeated destination point");
        }
    auto s = detail::to_standard_triple(src[0], src[1], src[2]);
    auto d = detail::to_standard_triple(dst[0], dst[1], dst[2]);
    return d.inverse() * s;
}

} // namespace ramify
