#pragma once

// Permutation monodromy of a rational map outside its branch fibers, computed
// by predictor-corrector path tracking of whole fibers. Approximate backend
// only; the exact backend has nothing to continue.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ramify/rational_map.hpp"

namespace ramify::mono {

using Map = RationalMap<Approx>;
using Point = SpherePoint<Approx>;

struct LoopSpec {
    Point base;    // regular value, base of the loop
    Point target;  // the encircled puncture
    double radius = 0;
    int samples = 64; // >= 16
};

struct Permutation {
    std::vector<int> images; // images[i] = sigma(i), 0-based

    int size() const { return static_cast<int>(images.size()); }
    static Permutation identity(int n) {
        Permutation p;
        p.images.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) p.images[static_cast<size_t>(i)] = i;
        return p;
    }
    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (images[static_cast<size_t>(i)] != i) return false;
        return true;
    }
    Permutation inverse() const {
        Permutation r = identity(size());
        for (int i = 0; i < size(); ++i) r.images[static_cast<size_t>(images[static_cast<size_t>(i)])] = i;
        return r;
    }
    /// (a o b)(i) = a(b(i)): b acts first.
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        Permutation r;
        r.images.resize(b.images.size());
        for (int i = 0; i < b.size(); ++i)
            r.images[static_cast<size_t>(i)] = a.images[static_cast<size_t>(b.images[static_cast<size_t>(i)])];
        return r;
    }
    std::vector<int> cycle_type() const; // descending
    std::vector<std::vector<int>> cycles() const; // nontrivial first-min order
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images == b.images;
    }
};

struct MonodromyRep {
    std::vector<Point> base_fiber;
    Point base;
    std::vector<Point> punctures;          // in the product order used below
    std::vector<Permutation> perms;        // one per puncture, same order
    Permutation ordered_product;           // should be the identity
    bool product_is_identity = false;
    bool transitive = false;
};

/// Continue each fiber point along the discretized path. Steps are bisected
/// adaptively (depth <= 32) until Newton converges and no two sheets approach
/// within the collision tolerance.
std::vector<Point> track_fiber(const Map& f, const std::vector<Point>& path,
                               const std::vector<Point>& start_fiber);

/// Permutation of start_fiber induced by one counterclockwise circle about
/// `target` (in the chart where the target is finite).
Permutation loop_permutation(const Map& f, const LoopSpec& spec,
                             const std::vector<Point>& base_fiber);

struct MonodromyOptions {
    int samples = 64;
    double radius_factor = 0.4; // of the min distance to other special values
};

MonodromyRep monodromy_rep(const Map& f, const std::vector<Point>& punctures,
                           const Point& base, const MonodromyOptions& opts = {});

/// Deterministic automatic base point choice: below the finite special values.
Point default_base(const Map& f, const std::vector<Point>& punctures);

/// Sufficient surjectivity condition: every fiber of the passport
/// has an unramified point.
bool surjectivity_criterion(const PassportShape& p);

struct ProbeReport {
    int trials = 0;
    int min_fiber = 0, max_fiber = 0;
    bool all_regular = false; // every sampled fiber has deg simple points
};

/// Sample random values outside `excluded` and confirm their fibers are full
/// and simple.
ProbeReport regularity_probe(const Map& f, const std::vector<Point>& excluded, int trials,
                             std::uint64_t seed = 0);

bool transitive(const std::vector<Permutation>& perms, int n);

} // namespace ramify::mono
