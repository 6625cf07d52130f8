#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "rqit/qstate.hpp"

namespace rqit {

enum class EntropyUnit { Bits, Nats };

// Converts an entropy value from nats to the requested unit.
double from_nats(double nats, EntropyUnit unit);

// Nonnegative probability table: a 1-D marginal (single row) or a 2-D joint.
// Entries must sum to one within 1e-12.
struct ProbabilityTable {
  Eigen::MatrixXd values;

  explicit ProbabilityTable(Eigen::MatrixXd v);
};

// Density sampled at midpoints x_k of a uniform grid with spacing delta.
struct SampledDensity {
  std::vector<double> x;
  double delta = 0.0;
  std::vector<double> f;

  SampledDensity(std::vector<double> xs, double d, std::vector<double> fs);
};

struct ThermoParams {
  double state_count = 1.0;     // number of accessible states
  double partition = 1.0;       // partition function Z
  double energy = 0.0;          // mean energy
  double temperature = 1.0;     // k_B = 1
};

double shannon_entropy(const ProbabilityTable& p, EntropyUnit unit);
double max_entropy(long n, EntropyUnit unit);

// H(X|Y) for a joint table with rows indexing X and columns indexing Y.
double conditional_entropy(const ProbabilityTable& joint, EntropyUnit unit);
double mutual_information(const ProbabilityTable& joint, EntropyUnit unit);

// Returns {H_delta, h_estimate} with h_estimate = H_delta + log(delta).
std::pair<double, double> discretized_differential_entropy(const SampledDensity& f,
                                                           EntropyUnit unit);

double von_neumann_entropy(const DensityOperator& rho, EntropyUnit unit);

// Bipartite splits group the first `split` subsystems into A and the rest into B.
double conditional_vn(const DensityOperator& rho_ab, int split, EntropyUnit unit);
double mutual_vn(const DensityOperator& rho_ab, int split, EntropyUnit unit);

// Spectrum (descending) of exp(log rho_AB - log(1 x rho_B)) on the support of
// rho_AB. Eigenvalues above one occur exactly for entangled states.
std::vector<double> conditional_amplitude_spectrum(const DensityOperator& rho_ab,
                                                   int split);

// I = log(state_count / Z) - E/T.
double thermo_information(const ThermoParams& tp, EntropyUnit unit);

}  // namespace rqit
