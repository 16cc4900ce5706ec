#pragma once

// Dense univariate polynomials over either scalar backend, coefficients in
// ascending degree. The zero polynomial is the empty coefficient list.

#include <algorithm>
#include <vector>

#include "ramify/scalar.hpp"

namespace ramify {

template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(K v) { return Polynomial(std::vector<K>{std::move(v)}); }
    static Polynomial x() {
        using T = scalar_traits<K>;
        return Polynomial(std::vector<K>{T::from_long(0), T::from_long(1)});
    }
    static Polynomial zero() { return Polynomial(); }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const K& leading() const { return c_.back(); }
    const K& coeff(int k) const { return c_[static_cast<size_t>(k)]; }

    K eval(const K& z) const {
        using T = scalar_traits<K>;
        K acc = T::from_long(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<K> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k)
            d[k - 1] = c_[k] * scalar_traits<K>::from_long(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), scalar_traits<K>::from_long(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), scalar_traits<K>::from_long(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<K> r = a.c_;
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, scalar_traits<K>::from_long(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const K& s) {
        std::vector<K> r = a.c_;
        for (auto& v : r) v = v * s;
        return Polynomial(std::move(r));
    }

    Polynomial pow(int e) const {
        Polynomial r = constant(scalar_traits<K>::from_long(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    /// Coefficients reversed: z^deg * p(1/z). Used for conjugation by 1/z.
    Polynomial reversed(int target_degree) const {
        std::vector<K> r(static_cast<size_t>(target_degree) + 1, scalar_traits<K>::from_long(0));
        for (size_t i = 0; i < c_.size(); ++i)
            r[static_cast<size_t>(target_degree) - i] = c_[i];
        return Polynomial(std::move(r));
    }

    /// Taylor shift: p(z + a).
    Polynomial shifted(const K& a) const {
        // Horner on p with (z + a) as the variable
        Polynomial r = zero();
        Polynomial lin(std::vector<K>{a, scalar_traits<K>::from_long(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * lin + constant(*it);
        return r;
    }

    /// Order of vanishing at 0: index of the first nonzero coefficient
    /// (relative threshold in approximate mode). Returns degree()+1 for zero poly.
    int order_at_zero() const {
        if (is_zero()) return 0;
        double scale = 0;
        if constexpr (!scalar_traits<K>::is_exact)
            for (const auto& v : c_) scale = std::max(scale, std::abs(v));
        for (size_t i = 0; i < c_.size(); ++i) {
            if constexpr (scalar_traits<K>::is_exact) {
                if (!scalar_traits<K>::is_zero(c_[i])) return static_cast<int>(i);
            } else {
                if (std::abs(c_[i]) > kTauCluster * scale) return static_cast<int>(i);
            }
        }
        return static_cast<int>(c_.size());
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if constexpr (scalar_traits<K>::is_exact) return a.c_ == b.c_;
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!scalar_traits<K>::eq(a.c_[i], b.c_[i], kTauPoint)) return false;
        return true;
    }

private:
    void trim() {
        if constexpr (scalar_traits<K>::is_exact) {
            while (!c_.empty() && scalar_traits<K>::is_zero(c_.back())) c_.pop_back();
        } else {
            double scale = 0;
            for (const auto& v : c_) scale = std::max(scale, std::abs(v));
            while (!c_.empty() && std::abs(c_.back()) <= 1e-12 * scale) c_.pop_back();
            if (scale == 0) c_.clear();
        }
    }

    std::vector<K> c_;
};

// ---- exact-field division and gcd ----

template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divmod(const Polynomial<K>& a, const Polynomial<K>& b) {
    static_assert(scalar_traits<K>::is_exact, "polynomial division is exact-mode only");
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<K> rem = a.coeffs();
    std::vector<K> quo;
    int db = b.degree();
    if (a.degree() < db) return {Polynomial<K>::zero(), a};
    quo.assign(static_cast<size_t>(a.degree() - db) + 1, scalar_traits<K>::from_long(0));
    for (int k = a.degree(); k >= db; --k) {
        K q = rem[static_cast<size_t>(k)] / b.leading();
        quo[static_cast<size_t>(k - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k - db + j)] =
                rem[static_cast<size_t>(k - db + j)] - q * b.coeff(j);
    }
    return {Polynomial<K>(std::move(quo)), Polynomial<K>(std::move(rem))};
}

/// Monic gcd over the exact field.
template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    static_assert(scalar_traits<K>::is_exact);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    // make monic
    K inv = scalar_traits<K>::from_long(1) / a.leading();
    return a * inv;
}

template <class K>
Polynomial<Approx> to_approx_poly(const Polynomial<K>& p) {
    std::vector<Approx> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(scalar_traits<K>::to_complex(v));
    return Polynomial<Approx>(std::move(c));
}

} // namespace ramify
