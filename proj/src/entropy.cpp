#include "rqit/entropy.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rqit {

namespace {

double plogp_sum(const Eigen::MatrixXd& p) {
  double h = 0.0;
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j)
      if (p(i, j) > 0.0) h -= p(i, j) * std::log(p(i, j));
  return h;
}

std::pair<DensityOperator, DensityOperator> marginals(const DensityOperator& rho,
                                                      int split) {
  const int n = static_cast<int>(rho.dims.size());
  if (split < 1 || split >= n)
    throw std::invalid_argument("bipartite split index out of range");
  SubsystemSelector a, b;
  for (int i = 0; i < split; ++i) a.keep.push_back(i);
  for (int i = split; i < n; ++i) b.keep.push_back(i);
  return {partial_trace(rho, a), partial_trace(rho, b)};
}

}  // namespace

double from_nats(double nats, EntropyUnit unit) {
  return unit == EntropyUnit::Nats ? nats : nats / std::log(2.0);
}

ProbabilityTable::ProbabilityTable(Eigen::MatrixXd v) : values(std::move(v)) {
  if (values.size() == 0) throw std::invalid_argument("empty probability table");
  if (values.minCoeff() < 0.0)
    throw std::invalid_argument("probability table has a negative entry");
  if (std::abs(values.sum() - 1.0) > 1e-12)
    throw std::invalid_argument("probability table does not sum to one");
}

SampledDensity::SampledDensity(std::vector<double> xs, double d, std::vector<double> fs)
    : x(std::move(xs)), delta(d), f(std::move(fs)) {
  if (delta <= 0.0) throw std::invalid_argument("bin width must be positive");
  if (x.size() != f.size() || x.empty())
    throw std::invalid_argument("sample and density arrays mismatch");
  double mass = std::accumulate(f.begin(), f.end(), 0.0) * delta;
  if (std::abs(mass - 1.0) > 1e-6)
    throw std::invalid_argument("sampled density is not normalized");
}

double shannon_entropy(const ProbabilityTable& p, EntropyUnit unit) {
  return from_nats(plogp_sum(p.values), unit);
}

double max_entropy(long n, EntropyUnit unit) {
  if (n < 1) throw std::invalid_argument("state count must be >= 1");
  return from_nats(std::log(static_cast<double>(n)), unit);
}

double conditional_entropy(const ProbabilityTable& joint, EntropyUnit unit) {
  // H(X|Y) = H(XY) - H(Y), Y indexed by columns
  Eigen::MatrixXd q = joint.values.colwise().sum();
  return from_nats(plogp_sum(joint.values) - plogp_sum(q), unit);
}

double mutual_information(const ProbabilityTable& joint, EntropyUnit unit) {
  Eigen::MatrixXd px = joint.values.rowwise().sum();
  Eigen::MatrixXd py = joint.values.colwise().sum();
  return from_nats(plogp_sum(px) + plogp_sum(py) - plogp_sum(joint.values), unit);
}

std::pair<double, double> discretized_differential_entropy(const SampledDensity& f,
                                                           EntropyUnit unit) {
  double mass = 0.0;
  for (double v : f.f) mass += v * f.delta;
  double h = 0.0;
  for (double v : f.f) {
    double p = v * f.delta / mass;
    if (p > 0.0) h -= p * std::log(p);
  }
  double h_delta = from_nats(h, unit);
  double h_est = h_delta + from_nats(std::log(f.delta), unit);
  return {h_delta, h_est};
}

double von_neumann_entropy(const DensityOperator& rho, EntropyUnit unit) {
  double h = 0.0;
  for (double ev : eigvals_hermitian(rho.matrix))
    if (ev > 1e-15) h -= ev * std::log(ev);
  return from_nats(h, unit);
}

double conditional_vn(const DensityOperator& rho_ab, int split, EntropyUnit unit) {
  auto [a, b] = marginals(rho_ab, split);
  (void)a;
  return von_neumann_entropy(rho_ab, unit) - von_neumann_entropy(b, unit);
}

double mutual_vn(const DensityOperator& rho_ab, int split, EntropyUnit unit) {
  auto [a, b] = marginals(rho_ab, split);
  return von_neumann_entropy(a, unit) + von_neumann_entropy(b, unit) -
         von_neumann_entropy(rho_ab, unit);
}

std::vector<double> conditional_amplitude_spectrum(const DensityOperator& rho_ab,
                                                   int split) {
  auto [a, b] = marginals(rho_ab, split);
  const int da = a.dim(), db = b.dim();

  Eigen::MatrixXcd log_ab =
      hermitian_function_on_support(rho_ab.matrix, [](double x) { return std::log(x); });
  Eigen::MatrixXcd log_b =
      hermitian_function_on_support(b.matrix, [](double x) { return std::log(x); });
  Eigen::MatrixXcd lifted = Eigen::MatrixXcd::Zero(da * db, da * db);
  for (int i = 0; i < da; ++i)
    lifted.block(i * db, i * db, db, db) = log_b;

  // restrict to the support of rho_AB and exponentiate there
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_ab.matrix);
  std::vector<int> supp;
  for (int k = 0; k < es.eigenvalues().size(); ++k)
    if (es.eigenvalues()[k] > 1e-12) supp.push_back(k);
  Eigen::MatrixXcd v(da * db, static_cast<int>(supp.size()));
  for (size_t k = 0; k < supp.size(); ++k) v.col(k) = es.eigenvectors().col(supp[k]);

  Eigen::MatrixXcd restricted = v.adjoint() * (log_ab - lifted) * v;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(restricted, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (int k = 0; k < es2.eigenvalues().size(); ++k)
    out.push_back(std::exp(es2.eigenvalues()[k]));
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

double thermo_information(const ThermoParams& tp, EntropyUnit unit) {
  if (tp.partition <= 0.0) throw std::invalid_argument("partition function must be > 0");
  if (tp.temperature <= 0.0) throw std::invalid_argument("temperature must be > 0");
  if (tp.state_count < 1.0) throw std::invalid_argument("state count must be >= 1");
  double nats = std::log(tp.state_count / tp.partition) - tp.energy / tp.temperature;
  return from_nats(nats, unit);
}

}  // namespace rqit
