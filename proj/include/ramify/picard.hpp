#pragma once

// The degree-4 obstruction covering: given a finite w != 0, the map
// f(z) = (z - x1)^3 (z - x2) / z with x1 = (w/16)^(1/3), x2 = -3 x1 misses
// exactly {0, w, inf} off its six-point preimage set, with passport {3,1}
// over each of the three values. Both the construction and the converse
// checker live here.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "ramify/rational_map.hpp"

namespace ramify::picard {

template <class K>
struct PicardConfig {
    SpherePoint<K> w, x1, x2, y1, y2;
    std::vector<SpherePoint<K>> targets;   // {0, w, inf}
    std::vector<SpherePoint<K>> preimages; // X = {0, inf, x1, x2, y1, y2}
    RationalMap<K> map;
    Passport<K> passport; // over the targets, verified {3,1} each
};

namespace detail {

inline Approx principal_cbrt(const Approx& v) {
    return std::pow(v, Approx{1.0 / 3.0, 0.0});
}

// Exact cube root of a Gaussian rational, when one exists. Q(i) holds no
// nontrivial cube root of unity, so such a root is unique; the principal
// numeric branch may be the wrong rotation, hence all three are tried.
inline bool exact_cbrt(const Exact& v, Exact& out) {
    Approx guess = principal_cbrt(to_approx(v));
    for (int k = 0; k < 3; ++k) {
        Exact cand;
        Approx rotated = guess * std::polar(1.0, 2.0 * M_PI * k / 3.0);
        if (!gaussian_reconstruct(rotated, cand)) continue;
        if (cand * cand * cand != v) continue;
        out = cand;
        return true;
    }
    return false;
}

} // namespace detail

/// Build the map for a given x1 (all derived points follow the fixed relations).
template <class K>
PicardConfig<K> construct_from_x1(const K& x1) {
    using T = scalar_traits<K>;
    const K three = T::from_long(3);
    K x2 = -(three * x1);
    K y1 = -x1;
    K y2 = three * x1;
    K w = T::from_long(16) * x1 * x1 * x1;
    if (T::is_zero(x1, kTauPoint)) throw DegenerateW("x1 = 0 degenerates the configuration");

    Polynomial<K> lin1(std::vector<K>{-x1, T::from_long(1)});
    Polynomial<K> lin2(std::vector<K>{-x2, T::from_long(1)});
    Polynomial<K> num = lin1.pow(3) * lin2;
    Polynomial<K> den = Polynomial<K>::x();
    RationalMap<K> f(num, den);

    PicardConfig<K> cfg{SpherePoint<K>(w),
                        SpherePoint<K>(x1),
                        SpherePoint<K>(x2),
                        SpherePoint<K>(y1),
                        SpherePoint<K>(y2),
                        {SpherePoint<K>(T::from_long(0)), SpherePoint<K>(w), SpherePoint<K>::infinity()},
                        {SpherePoint<K>(T::from_long(0)), SpherePoint<K>::infinity(),
                         SpherePoint<K>(x1), SpherePoint<K>(x2), SpherePoint<K>(y1), SpherePoint<K>(y2)},
                        f,
                        {}};
    for (size_t i = 0; i < cfg.preimages.size(); ++i)
        for (size_t j = i + 1; j < cfg.preimages.size(); ++j)
            if (cfg.preimages[i].eq(cfg.preimages[j]))
                throw DegenerateW("preimage set X has fewer than six points");

    cfg.passport = passport_over(f, cfg.targets);
    if (cfg.passport.map_degree != 4) throw VerificationFailure("constructed map is not degree 4");
    for (const auto& e : cfg.passport.entries)
        if (e.local_degrees != std::vector<int>{3, 1})
            throw VerificationFailure("constructed passport is not {3,1} over a target value");
    return cfg;
}

/// construct(w): x1 is the principal cube root of w/16. The exact overload
/// requires w/16 to be a perfect cube in Q(i) and throws otherwise.
inline PicardConfig<Approx> construct(const Approx& w) {
    if (std::abs(w) == 0.0 || !std::isfinite(std::abs(w)))
        throw DegenerateW("w must be finite and nonzero");
    return construct_from_x1<Approx>(detail::principal_cbrt(w / Approx{16.0, 0.0}));
}

inline PicardConfig<Exact> construct(const Exact& w) {
    if (w.is_zero()) throw DegenerateW("w must be finite and nonzero");
    Exact x1;
    if (!detail::exact_cbrt(w / Exact(16), x1))
        throw ExactRootsUnavailable("w/16 is not a perfect cube in Q(i); use the approximate backend");
    return construct_from_x1<Exact>(x1);
}

struct TargetsResult {
    PicardConfig<Approx> config;          // for w = 1
    MobiusTransform<Approx> psi;          // psi(Y) = {0, 1, inf}
    RationalMap<Approx> composite;        // psi^{-1} o f, misses exactly Y
};

/// Normalize an arbitrary 3-point target set to {0, 1, inf} and pull the
/// w = 1 configuration back through the Mobius transform.
inline TargetsResult construct_for_targets(const std::array<SpherePoint<Approx>, 3>& targets) {
    const SpherePoint<Approx> zero{Approx{0, 0}}, one{Approx{1, 0}},
        inf = SpherePoint<Approx>::infinity();
    MobiusTransform<Approx> psi = mobius_sending_three<Approx>(targets, {zero, one, inf});
    PicardConfig<Approx> cfg = construct(Approx{1, 0});
    RationalMap<Approx> composite = cfg.map.postcompose(psi.inverse());
    return {std::move(cfg), psi, std::move(composite)};
}

// ---- converse checker ----

struct ConverseReport {
    int m = 0;       // |Y1|
    int degree = 0;  // deg h
    int num_branch_points = 0;        // #B_h
    int branch_order_total = 0;       // beta(B_h)
    int preimage_count = 0;           // #X
    bool all_branch_orders_two = false;
    bool degree_is_four = false;
    bool three_branch_points = false;
    bool preimage_count_matches = false; // #X == 6 + 4m
    // derived identity (#Y0 - 2)(deg - 1) == #B_h
    long long derived_lhs = 0, derived_rhs = 0;
    bool derived_identity_holds = false;
    // the identity as printed, (#Y0 - 2)(deg - 1) == #B_h + beta(B_h)
    long long printed_lhs = 0, printed_rhs = 0;
    bool printed_identity_holds = false;
    // one unramified preimage per Y0 value is presumed by the argument;
    // flagged when a fiber carries several
    bool extra_unramified_preimages = false;
    // premise flags (violations make the verdict INCONSISTENT)
    bool premise_branch_in_y1 = false;       // a branch point lies over Y1
    bool premise_missing_unramified = false; // a Y0 fiber has no unramified point
    bool consistent = false;
};

/// Evaluate the converse's conclusions against a passport split Y = Y0 u Y1
/// (indices into the passport entries). Y0 carries all the branching.
ConverseReport check_converse(const PassportShape& passport, const std::vector<int>& y0,
                              const std::vector<int>& y1);

} // namespace ramify::picard
