#include "rqit/qstate.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rqit {

namespace {

int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

void check_dims(const std::vector<int>& dims, int total) {
  if (dims.empty()) throw std::invalid_argument("empty subsystem dimension list");
  for (int d : dims)
    if (d < 1) throw std::invalid_argument("subsystem dimension must be >= 1");
  if (product(dims) != total)
    throw std::invalid_argument("product of subsystem dims does not match vector length");
}

}  // namespace

PureState::PureState(Eigen::VectorXcd amps, std::vector<int> d)
    : amplitudes(std::move(amps)), dims(std::move(d)) {
  check_dims(dims, static_cast<int>(amplitudes.size()));
  double n2 = amplitudes.squaredNorm();
  if (std::abs(n2 - 1.0) > 1e-12)
    throw std::invalid_argument("state vector is not normalized");
}

DensityOperator::DensityOperator(Eigen::MatrixXcd m, std::vector<int> d)
    : matrix(std::move(m)), dims(std::move(d)) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("density matrix must be square");
  check_dims(dims, static_cast<int>(matrix.rows()));
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(matrix.trace().real() - 1.0) > 1e-10 ||
      std::abs(matrix.trace().imag()) > 1e-10)
    throw std::invalid_argument("density matrix trace is not one");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9)
    throw std::invalid_argument("density matrix has a negative eigenvalue");
}

DensityOperator pure_density(const PureState& psi) {
  Eigen::MatrixXcd m = psi.amplitudes * psi.amplitudes.adjoint();
  return DensityOperator(std::move(m), psi.dims);
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  int da = a.dim(), db = b.dim();
  Eigen::MatrixXcd m(da * db, da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      m.block(i * db, j * db, db, db) = a.matrix(i, j) * b.matrix;
  std::vector<int> dims = a.dims;
  dims.insert(dims.end(), b.dims.begin(), b.dims.end());
  return DensityOperator(std::move(m), std::move(dims));
}

DensityOperator partial_trace(const DensityOperator& rho, const SubsystemSelector& sel) {
  const int n = static_cast<int>(rho.dims.size());
  std::vector<bool> kept(n, false);
  for (int k : sel.keep) {
    if (k < 0 || k >= n) throw std::invalid_argument("subsystem index out of range");
    if (kept[k]) throw std::invalid_argument("duplicate subsystem index");
    kept[k] = true;
  }
  if (sel.keep.empty()) throw std::invalid_argument("must keep at least one subsystem");

  std::vector<int> keep = sel.keep;  // ordered as requested
  std::vector<int> traced;
  for (int i = 0; i < n; ++i)
    if (!kept[i]) traced.push_back(i);

  // strides for the row-major multi-index
  std::vector<long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * rho.dims[i + 1];

  std::vector<int> keep_dims, tr_dims;
  for (int k : keep) keep_dims.push_back(rho.dims[k]);
  for (int t : traced) tr_dims.push_back(rho.dims[t]);
  long dk = product(keep_dims);
  long dt = traced.empty() ? 1 : product(tr_dims);

  auto unrank = [](long r, const std::vector<int>& dims, std::vector<int>& out) {
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
      out[i] = static_cast<int>(r % dims[i]);
      r /= dims[i];
    }
  };

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  std::vector<int> ki(keep.size()), kj(keep.size()), ti(traced.size());
  for (long i = 0; i < dk; ++i) {
    unrank(i, keep_dims, ki);
    for (long j = 0; j < dk; ++j) {
      unrank(j, keep_dims, kj);
      cxd acc = 0.0;
      for (long t = 0; t < dt; ++t) {
        unrank(t, tr_dims, ti);
        long row = 0, col = 0;
        for (size_t a = 0; a < keep.size(); ++a) {
          row += static_cast<long>(ki[a]) * stride[keep[a]];
          col += static_cast<long>(kj[a]) * stride[keep[a]];
        }
        for (size_t a = 0; a < traced.size(); ++a) {
          row += static_cast<long>(ti[a]) * stride[traced[a]];
          col += static_cast<long>(ti[a]) * stride[traced[a]];
        }
        acc += rho.matrix(row, col);
      }
      out(i, j) = acc;
    }
  }
  return DensityOperator(std::move(out), std::move(keep_dims));
}

std::vector<double> eigvals_hermitian(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
    throw std::invalid_argument("matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  std::sort(ev.begin(), ev.end(), std::greater<double>());
  return ev;
}

double purity(const DensityOperator& rho) {
  return (rho.matrix * rho.matrix).trace().real();
}

Eigen::MatrixXcd hermitian_function_on_support(const Eigen::MatrixXcd& m,
                                               double (*f)(double),
                                               double support_cut) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  Eigen::VectorXd ev = es.eigenvalues();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
  for (int k = 0; k < ev.size(); ++k) {
    if (ev[k] > support_cut)
      out += f(ev[k]) * es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
  }
  return out;
}

PureState basis_state(int index, std::vector<int> dims) {
  int d = product(dims);
  if (index < 0 || index >= d) throw std::invalid_argument("basis index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
  v[index] = 1.0;
  return PureState(std::move(v), std::move(dims));
}

PureState bell_state(BellKind kind) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  const double r = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case BellKind::PhiPlus:  v[0] = r; v[3] = r; break;
    case BellKind::PhiMinus: v[0] = r; v[3] = -r; break;
    case BellKind::PsiPlus:  v[1] = r; v[2] = r; break;
    case BellKind::PsiMinus: v[1] = r; v[2] = -r; break;
  }
  return PureState(std::move(v), {2, 2});
}

}  // namespace rqit
