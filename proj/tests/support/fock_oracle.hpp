#pragma once

// Brute-force oracle: diagonalize a small oscillator chain in a truncated
// number basis and compute the entanglement entropy of a site subset directly
// from the reduced density matrix. Exponentially expensive -- only for cross-
// checking the covariance-matrix path on tiny chains.

#include <Eigen/Dense>
#include <cmath>
#include <vector>

namespace rqit::testing {

inline Eigen::MatrixXd ladder(int cutoff) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Ground-state entanglement entropy (nats) of the first `inside` sites of a
// chain with stiffness matrix k, computed in a Fock basis truncated at
// `cutoff` levels per site. Unit local oscillator frequency for the basis.
inline double fock_region_entropy(const Eigen::MatrixXd& k, int inside, int cutoff) {
  const int n = static_cast<int>(k.rows());
  Eigen::MatrixXd a1 = ladder(cutoff);
  Eigen::MatrixXd x1 = (a1 + a1.transpose()) / std::sqrt(2.0);
  // -i p = (a - a+)/sqrt(2); p^2 = -((a - a+)/sqrt(2))^2 stays real
  Eigen::MatrixXd ip1 = (a1 - a1.transpose()) / std::sqrt(2.0);

  auto embed = [&](const Eigen::MatrixXd& op, int site) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(1, 1);
    for (int s = 0; s < n; ++s)
      out = kron(out, s == site ? op : Eigen::MatrixXd::Identity(cutoff, cutoff));
    return out;
  };

  long dim = 1;
  for (int s = 0; s < n; ++s) dim *= cutoff;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<Eigen::MatrixXd> xs(n);
  for (int s = 0; s < n; ++s) {
    xs[s] = embed(x1, s);
    Eigen::MatrixXd ip = embed(ip1, s);
    h -= 0.5 * ip * ip;  // +p^2/2
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (k(i, j) != 0.0) h += 0.5 * k(i, j) * xs[i] * xs[j];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  Eigen::VectorXd gs = es.eigenvectors().col(0);

  long din = 1, dout = 1;
  for (int s = 0; s < inside; ++s) din *= cutoff;
  for (int s = inside; s < n; ++s) dout *= cutoff;
  Eigen::MatrixXd m(din, dout);
  for (long i = 0; i < din; ++i)
    for (long j = 0; j < dout; ++j) m(i, j) = gs[i * dout + j];
  Eigen::MatrixXd rho = m * m.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> er(rho);
  double s = 0.0;
  for (int i = 0; i < er.eigenvalues().size(); ++i) {
    double p = er.eigenvalues()[i];
    if (p > 1e-14) s -= p * std::log(p);
  }
  return s;
}

}  // namespace rqit::testing
