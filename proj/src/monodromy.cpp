#include "ramify/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

namespace ramify::mono {

namespace {

using C = Approx;

constexpr double kTauCollision = 10.0 * kTauPoint;
constexpr int kMaxBisectDepth = 32;

struct Tracker {
    const Polynomial<C>&num, &den, dnum, dden;

    explicit Tracker(const Map& f)
        : num(f.num()), den(f.den()), dnum(f.num().derivative()), dden(f.den().derivative()) {}

    bool newton(C& z, const C& y) const {
        for (int it = 0; it < 60; ++it) {
            C fv = num.eval(z) - y * den.eval(z);
            C dv = dnum.eval(z) - y * dden.eval(z);
            if (std::abs(dv) < 1e-300) return false;
            C step = fv / dv;
            z -= step;
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > 1e12)
                return false;
            if (std::abs(step) <= 1e-13 * std::max(1.0, std::abs(z))) return true;
        }
        return false;
    }
};

double min_pair_dist(const std::vector<C>& pts) {
    double m = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) m = std::min(m, std::abs(pts[i] - pts[j]));
    return m;
}

// One adaptive step of the whole fiber from value y0 (already solved, in cur)
// to value y1.
void step_fiber(const Tracker& t, std::vector<C>& cur, const C& y0, const C& y1, int depth) {
    double sep = min_pair_dist(cur);
    std::vector<C> next = cur;
    bool ok = true;
    for (auto& z : next) {
        C start = z;
        if (!t.newton(z, y1) || std::abs(z - start) > 0.45 * sep) {
            ok = false;
            break;
        }
    }
    if (ok) {
        double after = min_pair_dist(next);
        if (after < kTauCollision) throw TrackingCollision("two sheets merged along the path");
        cur = std::move(next);
        return;
    }
    if (depth >= kMaxBisectDepth)
        throw PathThroughBranchValue("adaptive bisection exhausted; path too close to a branch value");
    C mid = 0.5 * (y0 + y1);
    step_fiber(t, cur, y0, mid, depth + 1);
    step_fiber(t, cur, mid, y1, depth + 1);
}

std::vector<C> finite_values(const std::vector<Point>& pts) {
    std::vector<C> out;
    for (const auto& p : pts) {
        if (p.is_infinity()) throw Error("tracking requires finite values");
        out.push_back(p.value());
    }
    return out;
}

Permutation match_fibers(const std::vector<C>& from, const std::vector<C>& to) {
    // to[i] should equal from[sigma(i)]
    const int n = static_cast<int>(from.size());
    Permutation sigma;
    sigma.images.assign(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int best = -1;
        double bd = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            double d = std::abs(to[static_cast<size_t>(i)] - from[static_cast<size_t>(j)]);
            if (d < bd) {
                bd = d;
                best = j;
            }
        }
        if (best < 0 || used[static_cast<size_t>(best)] ||
            bd > 1e-6 * std::max(1.0, std::abs(from[static_cast<size_t>(best)])))
            throw TrackingCollision("fiber matching is not a clean bijection");
        used[static_cast<size_t>(best)] = 1;
        sigma.images[static_cast<size_t>(i)] = best;
    }
    return sigma;
}

std::vector<Point> wrap(const std::vector<C>& pts) {
    std::vector<Point> out;
    for (const auto& z : pts) out.emplace_back(z);
    return out;
}

std::vector<C> track_values(const Tracker& t, std::vector<C> cur, const std::vector<C>& path) {
    for (size_t k = 0; k + 1 < path.size(); ++k) step_fiber(t, cur, path[k], path[k + 1], 0);
    return cur;
}

// Special values of f relevant to loop sizing: its branch values.
std::vector<Point> branch_values(const Map& f) {
    std::vector<Point> out;
    for (auto& [p, beta] : critical_points(f)) {
        Point v = f.evaluate(p);
        bool seen = false;
        for (auto& q : out) seen = seen || q.eq(v);
        if (!seen) out.push_back(v);
    }
    return out;
}

} // namespace

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    std::vector<char> seen(images.size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            j = images[static_cast<size_t>(j)];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images.size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = 1;
            cyc.push_back(j);
            j = images[static_cast<size_t>(j)];
        }
        if (cyc.size() > 1) out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<Point> track_fiber(const Map& f, const std::vector<Point>& path,
                               const std::vector<Point>& start_fiber) {
    if (path.empty()) return start_fiber;
    Tracker t(f);
    return wrap(track_values(t, finite_values(start_fiber), finite_values(path)));
}

Permutation loop_permutation(const Map& f, const LoopSpec& spec,
                             const std::vector<Point>& base_fiber) {
    if (spec.samples < 16) throw Error("loop needs at least 16 samples");
    if (spec.radius <= 0) throw Error("loop radius must be positive");
    if (spec.target.is_infinity()) {
        // conjugate the target chart by w -> 1/w; the fiber points are unchanged
        Map g = f.postcompose_inversion();
        if (spec.base.is_infinity() || std::abs(spec.base.value()) == 0.0)
            throw Error("base point unusable for the inverted chart");
        LoopSpec inv{Point(C{1.0, 0.0} / spec.base.value()), Point(C{0.0, 0.0}), spec.radius,
                     spec.samples};
        return loop_permutation(g, inv, base_fiber);
    }
    Tracker t(f);
    C c = spec.target.value();
    C b = spec.base.value();
    double theta0 = std::arg(b - c);
    C on_circle = c + std::polar(spec.radius, theta0);

    // straight connecting segment, then one counterclockwise circle
    std::vector<C> seg;
    int nseg = std::max(8, spec.samples / 4);
    for (int k = 0; k <= nseg; ++k) {
        double s = double(k) / nseg;
        seg.push_back(b + s * (on_circle - b));
    }
    std::vector<C> circle;
    for (int k = 0; k <= spec.samples; ++k) {
        double th = theta0 + 2.0 * M_PI * k / spec.samples;
        circle.push_back(c + std::polar(spec.radius, th));
    }

    std::vector<C> f0 = finite_values(base_fiber);
    std::vector<C> f1 = track_values(t, f0, seg);
    std::vector<C> f2 = track_values(t, f1, circle);
    return match_fibers(f1, f2);
}

Point default_base(const Map& f, const std::vector<Point>& punctures) {
    std::vector<Point> special = punctures;
    for (auto& v : branch_values(f)) {
        bool seen = false;
        for (auto& q : special) seen = seen || q.eq(v);
        if (!seen) special.push_back(v);
    }
    C centroid{0, 0};
    int n = 0;
    double spread = 1.0;
    for (auto& p : special)
        if (!p.is_infinity()) {
            centroid += p.value();
            ++n;
        }
    if (n) centroid /= double(n);
    for (auto& p : special)
        if (!p.is_infinity()) spread = std::max(spread, std::abs(p.value() - centroid));

    for (int attempt = 0; attempt < 64; ++attempt) {
        C cand = centroid + C{0.31 * spread * attempt, -2.0 * spread - 0.13 * spread * attempt};
        Point base(cand);
        if (std::abs(cand) < 0.05 * spread) continue;
        bool near = false;
        for (auto& p : special) near = near || chordal_distance(base, p) < 1e-3;
        if (near) continue;
        try {
            auto fb = fiber(f, base);
            bool simple = static_cast<int>(fb.size()) == f.degree();
            for (auto& [z, m] : fb) simple = simple && m == 1 && !z.is_infinity();
            if (simple) return base;
        } catch (const RootFindingFailure&) {
        }
    }
    throw RootFindingFailure("could not find a usable base point");
}

MonodromyRep monodromy_rep(const Map& f, const std::vector<Point>& punctures, const Point& base,
                           const MonodromyOptions& opts) {
    MonodromyRep rep;
    rep.base = base;
    const int deg = f.degree();

    std::vector<Point> special = punctures;
    for (auto& v : branch_values(f)) {
        bool covered = false;
        for (auto& q : punctures) covered = covered || q.eq(v);
        if (!covered) throw Error("punctures must contain every branch value");
        (void)covered;
    }

    auto fb = fiber(f, base);
    if (static_cast<int>(fb.size()) != deg)
        throw Error("base point is not a regular value");
    for (auto& [z, m] : fb) {
        if (m != 1 || z.is_infinity()) throw Error("base point is not a regular value");
        rep.base_fiber.push_back(z);
    }

    // product order: finite punctures by ascending argument as seen from the
    // base, the puncture at infinity last
    std::vector<Point> ordered;
    {
        std::vector<std::pair<double, Point>> fin;
        bool has_inf = false;
        for (auto& y : punctures) {
            if (y.is_infinity()) {
                has_inf = true;
                continue;
            }
            fin.emplace_back(std::arg(y.value() - base.value()), y);
        }
        std::sort(fin.begin(), fin.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [a, y] : fin) ordered.push_back(y);
        if (has_inf) ordered.push_back(Point::infinity());
    }
    rep.punctures = ordered;

    auto loop_radius = [&](const Point& y) {
        double m = std::numeric_limits<double>::infinity();
        if (y.is_infinity()) {
            // inverted chart: distance from 0 to the images 1/y' of the others
            for (auto& q : special) {
                if (q.is_infinity()) continue;
                double a = std::abs(q.value());
                if (a > 0) m = std::min(m, 1.0 / a);
            }
        } else {
            for (auto& q : special) {
                if (q.eq(y)) continue;
                if (q.is_infinity()) continue;
                m = std::min(m, std::abs(q.value() - y.value()));
            }
            m = std::min(m, 1.0 + std::abs(y.value()));
        }
        if (!std::isfinite(m)) m = 1.0;
        return opts.radius_factor * m;
    };

    for (auto& y : ordered) {
        LoopSpec spec{base, y, loop_radius(y), opts.samples};
        Permutation sigma = loop_permutation(f, spec, rep.base_fiber);
        // cycle type must match the local degrees of the fiber over y
        std::vector<int> ct = sigma.cycle_type();
        std::vector<int> ld;
        for (auto& [z, mdeg] : fiber(f, y)) ld.push_back(mdeg);
        std::sort(ld.rbegin(), ld.rend());
        if (ct != ld)
            throw CycleTypeMismatch("monodromy cycle type disagrees with fiber local degrees");
        rep.perms.push_back(std::move(sigma));
    }

    Permutation acc = Permutation::identity(deg);
    for (auto& s : rep.perms) acc = s * acc; // earlier loops act first
    rep.ordered_product = acc;
    rep.product_is_identity = acc.is_identity();
    rep.transitive = transitive(rep.perms, deg);
    return rep;
}

bool transitive(const std::vector<Permutation>& perms, int n) {
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
        return parent[static_cast<size_t>(i)] == i ? i
                                                   : parent[static_cast<size_t>(i)] = find(parent[static_cast<size_t>(i)]);
    };
    for (const auto& p : perms)
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(p.images[static_cast<size_t>(i)]);
            if (a != b) parent[static_cast<size_t>(a)] = b;
        }
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

bool surjectivity_criterion(const PassportShape& p) {
    p.validate();
    for (const auto& e : p.entries) {
        bool has_one = false;
        for (int d : e) has_one |= (d == 1);
        if (!has_one) return false;
    }
    return true;
}

ProbeReport regularity_probe(const Map& f, const std::vector<Point>& excluded, int trials,
                             std::uint64_t seed) {
    ProbeReport rep;
    rep.trials = trials;
    const int deg = f.degree();
    rep.min_fiber = deg;
    rep.max_fiber = 0;
    rep.all_regular = true;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> g(0.0, 1.0);
    int done = 0;
    int guard = 0;
    while (done < trials && guard++ < 100 * trials + 1000) {
        double x = g(rng), y = g(rng), z = g(rng);
        double r = std::sqrt(x * x + y * y + z * z);
        if (r == 0) continue;
        x /= r;
        y /= r;
        z /= r;
        Point p = (z > 1.0 - 1e-12) ? Point::infinity() : Point(C{x / (1.0 - z), y / (1.0 - z)});
        bool bad = false;
        for (auto& e : excluded) bad = bad || chordal_distance(p, e) < 1e-6;
        if (bad || p.is_infinity()) continue;
        auto fb = fiber(f, p);
        int count = static_cast<int>(fb.size());
        rep.min_fiber = std::min(rep.min_fiber, count);
        rep.max_fiber = std::max(rep.max_fiber, count);
        bool regular = count == deg;
        for (auto& [q, m] : fb) regular = regular && m == 1;
        rep.all_regular = rep.all_regular && regular;
        ++done;
    }
    if (done < trials) throw Error("regularity probe could not draw enough samples");
    return rep;
}

} // namespace ramify::mono
