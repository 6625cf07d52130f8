#include "rqit/geoment.hpp"

#include <cmath>
#include <stdexcept>

namespace rqit {

namespace {

void check_region(const HarmonicChain& c, const RegionSplit& r) {
  if (r.inside.empty() || r.inside.size() >= static_cast<std::size_t>(c.sites))
    throw std::invalid_argument("region must be a nonempty proper subset");
  std::vector<bool> seen(c.sites, false);
  for (int i : r.inside) {
    if (i < 0 || i >= c.sites) throw std::invalid_argument("region index out of range");
    if (seen[i]) throw std::invalid_argument("duplicate region index");
    seen[i] = true;
  }
}

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m, const std::vector<int>& idx) {
  Eigen::MatrixXd out(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = m(idx[i], idx[j]);
  return out;
}

double entropy_of_nu(double nu) {
  if (nu <= 0.5 + 1e-12) return 0.0;
  double a = nu + 0.5, b = nu - 0.5;
  return a * std::log(a) - b * std::log(b);
}

}  // namespace

Eigen::MatrixXd dynamical_matrix(const HarmonicChain& c) {
  if (c.sites < 2) throw std::invalid_argument("chain needs at least two sites");
  const int n = c.sites;
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  double mu2 = c.mass_term * c.mass_term;
  for (int i = 0; i < n; ++i) k(i, i) = mu2;
  for (int i = 0; i + 1 < n; ++i) {
    k(i, i) += c.coupling;
    k(i + 1, i + 1) += c.coupling;
    k(i, i + 1) -= c.coupling;
    k(i + 1, i) -= c.coupling;
  }
  if (c.periodic && n > 2) {
    k(0, 0) += c.coupling;
    k(n - 1, n - 1) += c.coupling;
    k(0, n - 1) -= c.coupling;
    k(n - 1, 0) -= c.coupling;
  }
  return k;
}

GroundStateCorrelations ground_state_correlations(const HarmonicChain& c, double beta) {
  Eigen::MatrixXd k = dynamical_matrix(c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
  if (es.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("dynamical matrix is singular (zero mode)");
  const int n = c.sites;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n), p = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    double omega = std::sqrt(es.eigenvalues()[m]);
    double fill = beta > 0.0 ? 1.0 / std::tanh(beta * omega / 2.0) : 1.0;
    Eigen::VectorXd v = es.eigenvectors().col(m);
    x += (fill / (2.0 * omega)) * v * v.transpose();
    p += (fill * omega / 2.0) * v * v.transpose();
  }
  return {x, p};
}

std::vector<double> symplectic_eigenvalues(const GroundStateCorrelations& g,
                                           const RegionSplit& r) {
  Eigen::MatrixXd xr = submatrix(g.position, r.inside);
  Eigen::MatrixXd pr = submatrix(g.momentum, r.inside);
  // eigenvalues of X_R P_R via the symmetric product sqrt(X) P sqrt(X)
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ex(xr);
  Eigen::MatrixXd sx = ex.operatorSqrt();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sx * pr * sx);
  std::vector<double> nu;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double v = es.eigenvalues()[i];
    if (v < 0.25 - 1e-9) throw std::runtime_error("symplectic eigenvalue below vacuum floor");
    nu.push_back(std::sqrt(std::max(v, 0.25)));
  }
  std::sort(nu.begin(), nu.end(), std::greater<double>());
  return nu;
}

double geometric_entropy(const HarmonicChain& c, const RegionSplit& r, EntropyUnit unit,
                         double beta) {
  check_region(c, r);
  auto g = ground_state_correlations(c, beta);
  double s = 0.0;
  for (double nu : symplectic_eigenvalues(g, r)) s += entropy_of_nu(nu);
  return from_nats(s, unit);
}

double renyi_trace(const HarmonicChain& c, const RegionSplit& r, int n) {
  if (n < 2) throw std::invalid_argument("Renyi order must be >= 2");
  check_region(c, r);
  auto g = ground_state_correlations(c);
  double tr = 1.0;
  for (double nu : symplectic_eigenvalues(g, r))
    tr /= std::pow(nu + 0.5, n) - std::pow(nu - 0.5, n);
  return tr;
}

std::vector<double> refinement_sweep(const std::vector<int>& sizes, double coupling,
                                     double mass_term, double region_fraction,
                                     EntropyUnit unit) {
  if (sizes.size() < 3) throw std::invalid_argument("need at least three refinement levels");
  if (region_fraction <= 0.0 || region_fraction >= 1.0)
    throw std::invalid_argument("region fraction must be in (0, 1)");
  std::vector<double> out;
  for (int n : sizes) {
    // fixed unit-length box: lattice spacing 1/n, so the spring constant
    // between neighbours scales as coupling * n^2 while the mass term is held
    // at its continuum value
    HarmonicChain c{n, coupling * n * static_cast<double>(n), mass_term, false};
    int inside = std::max(1, std::min(n - 1, static_cast<int>(std::lround(n * region_fraction))));
    RegionSplit r;
    for (int i = 0; i < inside; ++i) r.inside.push_back(i);
    out.push_back(geometric_entropy(c, r, unit));
  }
  return out;
}

ChainRuleResult entropy_chain_rule(const HarmonicChain& c, const RegionSplit& r,
                                   EntropyUnit unit, double beta) {
  check_region(c, r);
  auto g = ground_state_correlations(c, beta);
  RegionSplit all;
  for (int i = 0; i < c.sites; ++i) all.inside.push_back(i);
  // the full-system "region" is the whole chain; its entropy is the global one
  Eigen::MatrixXd xr = g.position, pr = g.momentum;
  double total = 0.0;
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ex(xr);
    Eigen::MatrixXd sx = ex.operatorSqrt();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sx * pr * sx);
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      total += entropy_of_nu(std::sqrt(std::max(es.eigenvalues()[i], 0.25)));
  }
  ChainRuleResult out;
  out.total = from_nats(total, unit);
  out.inside = geometric_entropy(c, r, unit, beta);
  out.outside_given_inside = out.total - out.inside;
  return out;
}

}  // namespace rqit
