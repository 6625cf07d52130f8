#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rqit/qstate.hpp"

namespace rqit {

struct BoostSpec {
  double rapidity = 0.0;
  Eigen::Vector3d axis{0.0, 0.0, 1.0};
};

struct GridSpec {
  Eigen::Vector3i points{21, 21, 21};  // per-axis node counts; 1 flattens an axis
  double extent_sigmas = 5.0;
};

// Wave packet sampled at quadrature nodes in momentum space. Each node carries
// the spin amplitudes for that momentum configuration; node momenta are
// distinct, so distinct nodes are orthogonal. A boost relabels node momenta and
// rotates the spin amplitudes, which keeps the squared norm exact.
struct SpinMomentumPacket {
  int particles = 1;
  double mass = 1.0;
  double sigma_r = 1.0;
  std::vector<Eigen::Vector3d> momenta_a;
  std::vector<Eigen::Vector3d> momenta_b;  // empty for single-particle packets
  std::vector<Eigen::VectorXcd> spin;      // per node; dim 2 or 4

  double squared_norm() const;
};

// Pure boost taking the rest frame to momentum p; the little-group rotation is
// extracted numerically from L(Lambda p)^-1 Lambda L(p).
Eigen::Matrix2cd wigner_rotation(const BoostSpec& b, const Eigen::Vector3d& p, double mass);
Eigen::Vector3d boost_momentum(const BoostSpec& b, const Eigen::Vector3d& p, double mass);

SpinMomentumPacket gaussian_packet(double sigma_r, double mass,
                                   const Eigen::Vector3d& mean_momentum,
                                   const GridSpec& grid,
                                   const Eigen::Vector2cd& spin_state);

SpinMomentumPacket bell_pair_packet(BellKind kind, double sigma_r, double mass,
                                    const Eigen::Vector3d& mean_momentum,
                                    const GridSpec& grid);

SpinMomentumPacket boost_packet(const SpinMomentumPacket& p, const BoostSpec& b);

// Momentum-averaged spin density operator (2x2 for one particle, 4x4 for two).
DensityOperator spin_marginal(const SpinMomentumPacket& p);

double wootters_concurrence(const DensityOperator& rho);

// Concurrence of the two-particle spin marginal after a shared boost orthogonal
// to the packet's momentum spread, for an initial Bell state with product
// Gaussian momenta centered at mean_momentum.
double boosted_pair_concurrence(double sigma_over_m, double rapidity, BellKind kind,
                                const GridSpec& grid);

double momentum_entangled_concurrence_closed_form(double p, double rapidity);

// Equal superposition of opposite momenta along y with spin (|00>-|11>)/sqrt(2)
// and opposite momenta along x with spin (|00>+|11>)/sqrt(2), boosted along z.
// Momenta are narrow Gaussians of width p/50 (m = 1).
double momentum_entangled_concurrence_simulated(double p, double rapidity,
                                                int nodes_per_config = 33);

}  // namespace rqit
