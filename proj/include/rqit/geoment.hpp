#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rqit/entropy.hpp"

namespace rqit {

// Chain of N coupled oscillators with nearest-neighbour springs.
struct HarmonicChain {
  int sites = 2;
  double coupling = 1.0;
  double mass_term = 1.0;  // on-site frequency mu
  bool periodic = false;
};

struct RegionSplit {
  std::vector<int> inside;  // proper nonempty subset of {0..N-1}
};

struct GroundStateCorrelations {
  Eigen::MatrixXd position;  // <x x>
  Eigen::MatrixXd momentum;  // <p p>
};

struct ChainRuleResult {
  double total = 0.0;
  double inside = 0.0;
  double outside_given_inside = 0.0;
};

Eigen::MatrixXd dynamical_matrix(const HarmonicChain& c);

// X = K^{-1/2}/2, P = K^{1/2}/2 for the ground state; at finite inverse
// temperature beta both are scaled by coth(beta omega / 2) per normal mode.
GroundStateCorrelations ground_state_correlations(const HarmonicChain& c,
                                                  double beta = 0.0);

std::vector<double> symplectic_eigenvalues(const GroundStateCorrelations& g,
                                           const RegionSplit& r);

double geometric_entropy(const HarmonicChain& c, const RegionSplit& r, EntropyUnit unit,
                         double beta = 0.0);

double renyi_trace(const HarmonicChain& c, const RegionSplit& r, int n);

// Entropies of progressively refined discretizations of a unit-length box at a
// fixed region fraction: each size n uses lattice spacing 1/n, so the
// neighbour coupling is scaled by n^2 while the mass term stays fixed.
std::vector<double> refinement_sweep(const std::vector<int>& sizes, double coupling,
                                     double mass_term, double region_fraction,
                                     EntropyUnit unit);

ChainRuleResult entropy_chain_rule(const HarmonicChain& c, const RegionSplit& r,
                                   EntropyUnit unit, double beta = 0.0);

}  // namespace rqit
