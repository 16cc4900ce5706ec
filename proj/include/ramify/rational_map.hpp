#pragma once

// Rational self-maps of the sphere: exact degree, evaluation that is total on
// the sphere, local degrees, fibers with multiplicity, critical points, and
// branch passports.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "ramify/passport.hpp"
#include "ramify/polynomial.hpp"
#include "ramify/roots.hpp"
#include "ramify/sphere.hpp"

namespace ramify {

inline constexpr int kMaxDegree = 64;

namespace detail {

// Cancel common roots of num/den within tolerance (approximate reduction).
inline void reduce_approx(Polynomial<Approx>& num, Polynomial<Approx>& den) {
    if (num.degree() < 1 || den.degree() < 1) return;
    auto rn = roots_with_multiplicity(num);
    auto rd = roots_with_multiplicity(den);
    bool cancelled = false;
    for (auto& [zn, mn] : rn) {
        for (auto& [zd, md] : rd) {
            if (md == 0) continue;
            if (std::abs(zn - zd) <= kTauPoint * std::max(1.0, std::abs(zd))) {
                int c = std::min(mn, md);
                mn -= c;
                md -= c;
                cancelled = cancelled || c > 0;
                break;
            }
        }
    }
    if (!cancelled) return;
    auto rebuild = [](const std::vector<std::pair<Approx, int>>& roots, Approx lead) {
        Polynomial<Approx> p = Polynomial<Approx>::constant(lead);
        for (auto& [z, m] : roots)
            for (int i = 0; i < m; ++i)
                p = p * Polynomial<Approx>(std::vector<Approx>{-z, {1.0, 0.0}});
        return p;
    };
    num = rebuild(rn, num.leading());
    den = rebuild(rd, den.leading());
}

} // namespace detail

template <class K>
class RationalMap {
public:
    RationalMap(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.is_zero() && den_.is_zero()) throw Error("0/0 is not a map");
        reduce();
        if (std::max(num_.degree(), den_.degree()) > kMaxDegree)
            throw Error("map degree exceeds the supported maximum");
    }

    const Polynomial<K>& num() const { return num_; }
    const Polynomial<K>& den() const { return den_; }

    int degree() const {
        int d = std::max(num_.degree(), den_.degree());
        if (d < 1) throw ConstantMap("map is constant");
        return d;
    }

    bool is_constant() const { return std::max(num_.degree(), den_.degree()) < 1; }

    SpherePoint<K> evaluate(const SpherePoint<K>& p) const {
        using T = scalar_traits<K>;
        if (den_.is_zero()) return SpherePoint<K>::infinity();
        if (num_.is_zero()) return SpherePoint<K>(T::from_long(0));
        if (p.is_infinity()) {
            int dn = num_.degree(), dd = den_.degree();
            if (dn > dd) return SpherePoint<K>::infinity();
            if (dn < dd) return SpherePoint<K>(T::from_long(0));
            return SpherePoint<K>(num_.leading() / den_.leading());
        }
        K a = num_.eval(p.value());
        K b = den_.eval(p.value());
        if constexpr (T::is_exact) {
            if (T::is_zero(b)) return SpherePoint<K>::infinity();
            return SpherePoint<K>(a / b);
        } else {
            double sn = poly_scale(num_), sd = poly_scale(den_);
            double zp = std::max(1.0, std::abs(T::to_complex(p.value())));
            double tb = 1e-12 * sd * std::pow(zp, std::max(0, den_.degree()));
            double ta = 1e-12 * sn * std::pow(zp, std::max(0, num_.degree()));
            if (std::abs(b) <= tb) {
                if (std::abs(a) <= ta) {
                    // imperfectly cancelled common root: evaluate via shifted quotient
                    auto ns = num_.shifted(p.value());
                    auto ds = den_.shifted(p.value());
                    int on = ns.order_at_zero(), od = ds.order_at_zero();
                    int k = std::min(on, od);
                    if (od > k) return SpherePoint<K>::infinity();
                    K va = (on > k) ? T::from_long(0) : ns.coeff(k);
                    return SpherePoint<K>(va / ds.coeff(k));
                }
                return SpherePoint<K>::infinity();
            }
            return SpherePoint<K>(a / b);
        }
    }

    RationalMap derivative() const {
        Polynomial<K> n = num_.derivative() * den_ - num_ * den_.derivative();
        Polynomial<K> d = den_ * den_;
        if (d.is_zero()) d = Polynomial<K>::constant(scalar_traits<K>::from_long(1));
        return RationalMap(std::move(n), std::move(d));
    }

    /// f(1/z): conjugation of the source by the inversion.
    RationalMap precompose_inversion() const {
        int d = std::max(num_.degree(), den_.degree());
        return RationalMap(num_.reversed(d), den_.reversed(d));
    }

    /// 1/f: conjugation of the target by the inversion.
    RationalMap postcompose_inversion() const { return RationalMap(den_, num_); }

    /// m o f for a Mobius transform m of the target.
    RationalMap postcompose(const MobiusTransform<K>& m) const {
        return RationalMap(num_ * m.a + den_ * m.b, num_ * m.c + den_ * m.d);
    }

private:
    static double poly_scale(const Polynomial<K>& p) {
        if constexpr (scalar_traits<K>::is_exact) return 1.0;
        else {
            double s = 0;
            for (const auto& v : p.coeffs()) s = std::max(s, std::abs(v));
            return s;
        }
    }

    void reduce() {
        if constexpr (scalar_traits<K>::is_exact) {
            if (!num_.is_zero() && !den_.is_zero()) {
                auto g = poly_gcd(num_, den_);
                if (g.degree() > 0) {
                    num_ = divmod(num_, g).first;
                    den_ = divmod(den_, g).first;
                }
            }
        } else {
            detail::reduce_approx(num_, den_);
        }
        // normalize: monic denominator (or monic numerator if den is constant)
        if (!den_.is_zero()) {
            K inv = scalar_traits<K>::from_long(1) / den_.leading();
            num_ = num_ * inv;
            den_ = den_ * inv;
        } else if (!num_.is_zero()) {
            K inv = scalar_traits<K>::from_long(1) / num_.leading();
            num_ = num_ * inv;
        }
    }

    Polynomial<K> num_, den_;
};

template <class K>
struct PassportEntry {
    SpherePoint<K> value;
    std::vector<int> local_degrees; // sorted descending
};

template <class K>
struct Passport {
    int map_degree = 0;
    std::vector<PassportEntry<K>> entries;

    PassportShape shape() const {
        PassportShape s;
        s.degree = map_degree;
        for (const auto& e : entries) s.entries.push_back(e.local_degrees);
        return s;
    }
};

// ---- fibers ----

namespace detail {

template <class K>
std::vector<std::pair<K, int>> poly_roots(const Polynomial<K>& p) {
    if constexpr (scalar_traits<K>::is_exact)
        return exact_roots_with_multiplicity(p);
    else
        return roots_with_multiplicity(p);
}

} // namespace detail

/// All sphere solutions of f(z) = y with local degrees; degrees sum to deg f.
template <class K>
std::vector<std::pair<SpherePoint<K>, int>> fiber(const RationalMap<K>& f,
                                                  const SpherePoint<K>& y) {
    int d = f.degree();
    Polynomial<K> p;
    if (y.is_infinity())
        p = f.den();
    else
        p = f.num() - f.den() * y.value();
    std::vector<std::pair<SpherePoint<K>, int>> out;
    for (auto& [z, m] : detail::poly_roots(p))
        out.emplace_back(SpherePoint<K>(z), m);
    int got = 0;
    for (auto& [z, m] : out) got += m;
    if (got < d) out.emplace_back(SpherePoint<K>::infinity(), d - got);
    if (got > d) throw RootFindingFailure("fiber exceeds the map degree");
    return out;
}

/// Multiplicity of p as a solution of f(z) = f(p); equals 1 + beta_f(p).
/// Infinity and poles are handled by conjugation with z -> 1/z.
template <class K>
int local_degree(const RationalMap<K>& f, const SpherePoint<K>& p) {
    (void)f.degree(); // rejects constant maps
    if (p.is_infinity())
        return local_degree(f.precompose_inversion(), SpherePoint<K>(scalar_traits<K>::from_long(0)));
    SpherePoint<K> v = f.evaluate(p);
    if (v.is_infinity())
        return local_degree(f.postcompose_inversion(), p);
    Polynomial<K> q = f.num() - f.den() * v.value();
    int ord = q.shifted(p.value()).order_at_zero();
    if (ord < 1) throw RootFindingFailure("local degree: point does not solve f(z)=f(p)");
    return ord;
}

/// All points with local degree >= 2 and their branch orders beta; the betas
/// sum to 2 deg - 2 (Riemann-Hurwitz on the sphere).
template <class K>
std::vector<std::pair<SpherePoint<K>, int>> critical_points(const RationalMap<K>& f) {
    int d = f.degree();
    std::vector<SpherePoint<K>> candidates;
    auto push_unique = [&](const SpherePoint<K>& p) {
        for (const auto& q : candidates)
            if (q.eq(p)) return;
        candidates.push_back(p);
    };
    RationalMap<K> df = f.derivative();
    if (!df.num().is_zero() && df.num().degree() >= 1)
        for (auto& [z, m] : detail::poly_roots(df.num())) push_unique(SpherePoint<K>(z));
    if (df.num().is_zero() && !df.den().is_zero()) {
        // derivative identically zero cannot happen for a nonconstant map
        throw RootFindingFailure("vanishing derivative of a nonconstant map");
    }
    if (f.den().degree() >= 1)
        for (auto& [z, m] : detail::poly_roots(f.den())) push_unique(SpherePoint<K>(z));
    push_unique(SpherePoint<K>::infinity());

    std::vector<std::pair<SpherePoint<K>, int>> out;
    int total_beta = 0;
    for (const auto& p : candidates) {
        int k = local_degree(f, p);
        if (k >= 2) {
            out.emplace_back(p, k - 1);
            total_beta += k - 1;
        }
    }
    if (total_beta != 2 * d - 2)
        throw RootFindingFailure("critical points violate Riemann-Hurwitz");
    return out;
}

/// One passport entry per target value.
template <class K>
Passport<K> passport_over(const RationalMap<K>& f, const std::vector<SpherePoint<K>>& targets) {
    if (targets.empty()) throw Error("passport_over: empty target set");
    for (size_t i = 0; i < targets.size(); ++i)
        for (size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i].eq(targets[j])) throw Error("passport_over: repeated target value");
    Passport<K> p;
    p.map_degree = f.degree();
    for (const auto& y : targets) {
        PassportEntry<K> e;
        e.value = y;
        for (auto& [z, m] : fiber(f, y)) e.local_degrees.push_back(m);
        std::sort(e.local_degrees.rbegin(), e.local_degrees.rend());
        p.entries.push_back(std::move(e));
    }
    p.shape().validate();
    return p;
}

template <class K>
RationalMap<Approx> to_approx_map(const RationalMap<K>& f) {
    return RationalMap<Approx>(to_approx_poly(f.num()), to_approx_poly(f.den()));
}

} // namespace ramify
