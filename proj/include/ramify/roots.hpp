#pragma once

// Root finding for both backends.
//
// Approximate: Aberth-Ehrlich simultaneous iteration, followed by cluster
// detection and multiplicity-aware Newton refinement (a cluster of k roots is
// refined as a simple root of the (k-1)-th derivative), so genuine multiple
// roots come back as one point with an integer multiplicity.
//
// Exact: Yun squarefree decomposition gives certified multiplicities; root
// values of each squarefree factor are recovered as Gaussian rationals when
// possible and verified by exact evaluation.

#include <complex>
#include <utility>
#include <vector>

#include "ramify/errors.hpp"
#include "ramify/polynomial.hpp"

namespace ramify {

std::vector<std::pair<Approx, int>> roots_with_multiplicity(const Polynomial<Approx>& p,
                                                            double tau_cluster = kTauCluster,
                                                            double tau_res = kTauResidual);

/// Exact roots with multiplicities; throws ExactRootsUnavailable when some
/// factor has roots outside Q(i).
std::vector<std::pair<Exact, int>> exact_roots_with_multiplicity(const Polynomial<Exact>& p);

/// Squarefree decomposition: list of (factor, multiplicity), exact field.
std::vector<std::pair<Polynomial<Exact>, int>> squarefree_decomposition(Polynomial<Exact> p);

} // namespace ramify
