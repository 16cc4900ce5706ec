#include "ramify/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace ramify {

namespace {

using C = Approx;

// Evaluate p and p' at z in one pass.
std::pair<C, C> eval_with_derivative(const std::vector<C>& c, C z) {
    C p{0, 0}, d{0, 0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z + p;
        p = p * z + *it;
    }
    return {p, d};
}

std::vector<C> aberth(const std::vector<C>& mono) {
    const int n = static_cast<int>(mono.size()) - 1;
    // Cauchy-style radius for initial guesses.
    double r = 0;
    for (int i = 0; i < n; ++i) r = std::max(r, std::abs(mono[static_cast<size_t>(i)]));
    r = 1.0 + r;
    std::vector<C> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * M_PI * i / n + 0.4; // fixed phase offset, avoids real-axis symmetry traps
        z[static_cast<size_t>(i)] = std::polar(0.5 * r + 0.1 * i / std::max(1, n), th);
    }
    for (int it = 0; it < 400; ++it) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            auto [p, d] = eval_with_derivative(mono, z[static_cast<size_t>(i)]);
            C newton = (d != C{0, 0}) ? p / d : C{1e-3, 0};
            C sum{0, 0};
            for (int j = 0; j < n; ++j)
                if (j != i) sum += C{1, 0} / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            C denom = C{1, 0} - newton * sum;
            C step = (std::abs(denom) > 1e-30) ? newton / denom : newton;
            z[static_cast<size_t>(i)] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[static_cast<size_t>(i)])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

// Newton refinement of a simple root of q near z0.
bool newton_refine(const Polynomial<C>& q, C& z) {
    const auto& c = q.coeffs();
    for (int it = 0; it < 100; ++it) {
        auto [p, d] = eval_with_derivative(c, z);
        if (std::abs(d) < 1e-300) return false;
        C step = p / d;
        z -= step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z))) return true;
        if (std::abs(z) > 1e14) return false;
    }
    return true; // stalled but close; caller validates by residual
}

double coeff_scale(const Polynomial<C>& p) {
    double s = 0;
    for (const auto& v : p.coeffs()) s = std::max(s, std::abs(v));
    return s;
}

} // namespace

std::vector<std::pair<Approx, int>> roots_with_multiplicity(const Polynomial<Approx>& p,
                                                            double tau_cluster, double tau_res) {
    const int n = p.degree();
    if (n <= 0) return {};
    std::vector<C> mono(p.coeffs());
    C lead = mono.back();
    for (auto& v : mono) v /= lead;
    if (n == 1) return {{-mono[0], 1}};

    std::vector<C> raw = aberth(mono);

    // Transitive clustering with a generous radius: raw Aberth output for a
    // multiplicity-m root scatters like eps^(1/m), which reaches ~1e-3 at
    // m = 5. Overshooting is safe: spurious clusters fail the residual check
    // below and fall back to individual roots.
    double scale = 0;
    for (const auto& z : raw) scale = std::max(scale, std::abs(z));
    double merge_r = std::max(tau_cluster, 1e-2 * std::max(1.0, scale));

    std::vector<int> comp(raw.size());
    std::iota(comp.begin(), comp.end(), 0);
    // union-find-lite on few points
    std::function<int(int)> find = [&](int i) { return comp[static_cast<size_t>(i)] == i ? i : comp[static_cast<size_t>(i)] = find(comp[static_cast<size_t>(i)]); };
    for (size_t i = 0; i < raw.size(); ++i)
        for (size_t j = i + 1; j < raw.size(); ++j)
            if (std::abs(raw[i] - raw[j]) < merge_r) comp[static_cast<size_t>(find(static_cast<int>(j)))] = find(static_cast<int>(i));

    Polynomial<C> pm{std::vector<C>(mono)};
    std::vector<Polynomial<C>> derivs{pm};
    for (int k = 1; k < n; ++k) derivs.push_back(derivs.back().derivative());

    double sc = coeff_scale(pm);
    std::vector<std::pair<C, int>> out;
    std::vector<char> done(raw.size(), 0);
    for (size_t i = 0; i < raw.size(); ++i) {
        if (done[i]) continue;
        std::vector<size_t> cluster;
        for (size_t j = 0; j < raw.size(); ++j)
            if (find(static_cast<int>(j)) == find(static_cast<int>(i))) {
                cluster.push_back(j);
                done[j] = 1;
            }
        int m = static_cast<int>(cluster.size());
        C center{0, 0};
        for (size_t j : cluster) center += raw[j];
        center /= double(m);
        // refine as a simple root of the (m-1)th derivative
        C refined = center;
        bool ok = newton_refine(derivs[static_cast<size_t>(m - 1)], refined);
        double res = std::abs(pm.eval(refined));
        double bound = tau_res * sc * std::pow(std::max(1.0, std::abs(refined)), n) * 10.0;
        if (m > 1 && (!ok || res > bound)) {
            // cluster was spurious (two distinct close roots): fall back to
            // individually Newton-refined points
            for (size_t j : cluster) {
                C z = raw[j];
                newton_refine(pm, z);
                out.emplace_back(z, 1);
            }
        } else {
            if (m == 1) newton_refine(pm, refined);
            out.emplace_back(refined, m);
        }
    }

    // final exact-tolerance merge of refined points
    std::vector<std::pair<C, int>> merged;
    for (auto& [z, m] : out) {
        bool absorbed = false;
        for (auto& [w, k] : merged)
            if (std::abs(z - w) < tau_cluster * std::max(1.0, std::abs(w))) {
                k += m;
                absorbed = true;
                break;
            }
        if (!absorbed) merged.emplace_back(z, m);
    }

    int total = 0;
    double worst = 0;
    for (auto& [z, m] : merged) {
        total += m;
        worst = std::max(worst, std::abs(pm.eval(z)) /
                                    (sc * std::pow(std::max(1.0, std::abs(z)), n)));
    }
    if (total != n)
        throw RootFindingFailure("multiplicity bookkeeping lost roots");
    if (worst > 1e-6)
        throw RootFindingFailure("numeric root residual too large");

    std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
    return merged;
}

std::vector<std::pair<Polynomial<Exact>, int>> squarefree_decomposition(Polynomial<Exact> p) {
    std::vector<std::pair<Polynomial<Exact>, int>> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm over a field of characteristic zero
    Polynomial<Exact> d = p.derivative();
    Polynomial<Exact> a = poly_gcd(p, d);
    Polynomial<Exact> b = divmod(p, a).first;
    Polynomial<Exact> c = divmod(d, a).first;
    int i = 1;
    while (b.degree() > 0) {
        Polynomial<Exact> z = c - b.derivative();
        Polynomial<Exact> g = poly_gcd(b, z);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = divmod(b, g).first;
        c = divmod(z, g).first;
        ++i;
    }
    return out;
}

std::vector<std::pair<Exact, int>> exact_roots_with_multiplicity(const Polynomial<Exact>& p) {
    std::vector<std::pair<Exact, int>> out;
    if (p.degree() <= 0) return out;
    for (auto& [factor, mult] : squarefree_decomposition(p)) {
        auto approx = roots_with_multiplicity(to_approx_poly(factor));
        for (auto& [z, m] : approx) {
            if (m != 1)
                throw ExactRootsUnavailable("squarefree factor produced a multiple numeric root");
            GaussianRational cand;
            if (!gaussian_reconstruct(z, cand))
                throw ExactRootsUnavailable("root is not a recognizable Gaussian rational");
            if (!factor.eval(cand).is_zero())
                throw ExactRootsUnavailable("reconstructed root failed exact verification");
            out.emplace_back(cand, mult);
        }
    }
    // same deterministic order as the approximate backend
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.re != b.first.re) return a.first.re < b.first.re;
        return a.first.im < b.first.im;
    });
    return out;
}

} // namespace ramify
