#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "rqit/entropy.hpp"

namespace rqit {

struct ChannelParams {
  double bandwidth = 1.0;  // Hz
  double snr = 0.0;
  double doppler = 1.0;    // received-over-emitted frequency ratio
};

struct ObserverMotion {
  double beta = 0.0;   // v/c
  double theta = 0.0;  // detector angle, radians
};

// Planar velocity samples, all strictly inside the unit disc.
struct VelocityEnsemble {
  std::vector<Eigen::Vector2d> samples;
  std::uint64_t seed = 0;
};

struct MiEstimate {
  double value = 0.0;   // requested unit
  double stderr_ = 0.0; // statistical + discretization, same unit
  double value_knn = 0.0;
};

struct MiParams {
  int bins = 0;          // 0 = choose from sample size
  int knn_k = 4;
  std::size_t knn_subsample = 50000;  // 0 disables the second-opinion estimate
  int bootstrap = 32;
};

double awng_capacity(const ChannelParams& c);
double infinite_bandwidth_capacity(double snr, double doppler);
double doppler_factor(double beta, double theta);
double moving_temperature(double rest_temperature, const ObserverMotion& m);

VelocityEnsemble sample_bounded_planar_ensemble(std::size_t n, std::uint64_t seed);
VelocityEnsemble boost_ensemble(const VelocityEnsemble& e, double beta);

MiEstimate planar_mutual_information(const VelocityEnsemble& e, const MiParams& params,
                                     EntropyUnit unit);

}  // namespace rqit
