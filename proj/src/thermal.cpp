#include "rqit/thermal.hpp"

#include <cmath>
#include <stdexcept>

namespace rqit {

namespace {

void check(const DimerParams& p) {
  if (p.beta < 0.0) throw std::invalid_argument("inverse temperature must be >= 0");
}

}  // namespace

DensityOperator dimer_density(const DimerParams& p) {
  check(p);
  const double bj = p.beta * p.J;
  const double z = dimer_partition(p);
  const double pre = std::exp(bj / 4.0) / z;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = m(3, 3) = pre * std::exp(-bj / 2.0);
  m(1, 1) = m(2, 2) = pre * std::cosh(bj / 2.0);
  m(1, 2) = m(2, 1) = -pre * std::sinh(bj / 2.0);
  return DensityOperator(std::move(m), {2, 2});
}

double dimer_partition(const DimerParams& p) {
  check(p);
  const double bj = p.beta * p.J;
  return std::exp(3.0 * bj / 4.0) + 3.0 * std::exp(-bj / 4.0);
}

double dimer_energy(const DimerParams& p) {
  check(p);
  const double bj = p.beta * p.J;
  return (3.0 * p.J / 4.0) * (1.0 - std::exp(bj)) / (3.0 + std::exp(bj));
}

double dimer_joint_entropy(const DimerParams& p, EntropyUnit unit) {
  double nats = std::log(dimer_partition(p)) + p.beta * dimer_energy(p);
  return from_nats(nats, unit);
}

double dimer_mutual_entropy(const DimerParams& p, EntropyUnit unit) {
  // S(1:2) = S(1) + S(2) - S(12); each marginal is I/2 (one bit).
  double two = from_nats(2.0 * std::log(2.0), unit);
  return two - dimer_joint_entropy(p, unit);
}

double bh_entropy(const BlackHoleState& b) {
  if (b.mass <= 0.0) throw std::invalid_argument("mass must be positive");
  return 4.0 * M_PI * b.mass * b.mass;
}

double hawking_temperature(const BlackHoleState& b) {
  if (b.mass <= 0.0) throw std::invalid_argument("mass must be positive");
  return 1.0 / (8.0 * M_PI * b.mass);
}

EvaporationStep evaporation_step(const BlackHoleState& b, double dm) {
  if (dm < 0.0) throw std::invalid_argument("mass decrement must be >= 0");
  if (dm >= b.mass) throw std::invalid_argument("mass decrement must be smaller than mass");
  EvaporationStep step;
  step.ds_bh = dm / hawking_temperature(b);  // = 8 pi M dm
  step.ds_rad = (4.0 / 3.0) * step.ds_bh;    // photon-gas flux factor
  step.ratio = 4.0 / 3.0;
  if (step.ds_bh > 0.0) step.ratio = step.ds_rad / step.ds_bh;
  return step;
}

}  // namespace rqit
