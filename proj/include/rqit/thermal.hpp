#pragma once

#include "rqit/entropy.hpp"
#include "rqit/qstate.hpp"

namespace rqit {

// Two spin-1/2 sites with exchange coupling J at inverse temperature beta.
struct DimerParams {
  double J = 1.0;
  double beta = 0.0;
};

struct BlackHoleState {
  double mass = 1.0;  // geometric units
};

struct EvaporationStep {
  double ds_bh = 0.0;
  double ds_rad = 0.0;
  double ratio = 4.0 / 3.0;
};

DensityOperator dimer_density(const DimerParams& p);
double dimer_partition(const DimerParams& p);
double dimer_energy(const DimerParams& p);
double dimer_joint_entropy(const DimerParams& p, EntropyUnit unit);
double dimer_mutual_entropy(const DimerParams& p, EntropyUnit unit);

double bh_entropy(const BlackHoleState& b);
double hawking_temperature(const BlackHoleState& b);
EvaporationStep evaporation_step(const BlackHoleState& b, double dm);

}  // namespace rqit
