#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace rqit {

using cxd = std::complex<double>;

// Normalized state vector over an ordered list of subsystems.
// Index convention is row-major: the leftmost factor is the slowest index.
struct PureState {
  Eigen::VectorXcd amplitudes;
  std::vector<int> dims;

  PureState() = default;
  PureState(Eigen::VectorXcd amps, std::vector<int> d);

  int dim() const { return static_cast<int>(amplitudes.size()); }
};

// Hermitian, unit-trace, positive semidefinite matrix over ordered subsystems.
struct DensityOperator {
  Eigen::MatrixXcd matrix;
  std::vector<int> dims;

  DensityOperator() = default;
  DensityOperator(Eigen::MatrixXcd m, std::vector<int> d);

  int dim() const { return static_cast<int>(matrix.rows()); }
};

// Ordered, distinct indices of the subsystems to keep in a partial trace.
struct SubsystemSelector {
  std::vector<int> keep;
};

DensityOperator pure_density(const PureState& psi);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);
DensityOperator partial_trace(const DensityOperator& rho, const SubsystemSelector& sel);

// Real eigenvalues in descending order; throws if the matrix is not Hermitian.
std::vector<double> eigvals_hermitian(const Eigen::MatrixXcd& m);

double purity(const DensityOperator& rho);

// f applied to the eigenvalues on the support (eigenvalues > support_cut);
// off-support directions are mapped to zero.
Eigen::MatrixXcd hermitian_function_on_support(const Eigen::MatrixXcd& m,
                                               double (*f)(double),
                                               double support_cut = 1e-15);

PureState basis_state(int index, std::vector<int> dims);

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

PureState bell_state(BellKind kind);

}  // namespace rqit
