#include "rqit/relquantum.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace rqit {

namespace {

using Mat4 = Eigen::Matrix4d;

Mat4 pure_boost(double chi, const Eigen::Vector3d& axis) {
  Eigen::Vector3d n = axis.normalized();
  Mat4 l = Mat4::Identity();
  double c = std::cosh(chi), s = std::sinh(chi);
  l(0, 0) = c;
  for (int i = 0; i < 3; ++i) {
    l(0, i + 1) = l(i + 1, 0) = s * n[i];
    for (int j = 0; j < 3; ++j) l(i + 1, j + 1) = (i == j) + (c - 1.0) * n[i] * n[j];
  }
  return l;
}

Mat4 standard_boost(const Eigen::Vector3d& p, double mass) {
  double pm = p.norm();
  if (pm < 1e-14) return Mat4::Identity();
  double e = std::sqrt(mass * mass + pm * pm);
  return pure_boost(std::acosh(e / mass), p / pm);
}

Eigen::Matrix2cd su2_from_rotation(const Eigen::Matrix3d& r) {
  Eigen::Quaterniond q(r);
  const cxd i(0.0, 1.0);
  Eigen::Matrix2cd u;
  u << q.w() - i * q.z(), -q.y() - i * q.x(),
       q.y() - i * q.x(),  q.w() + i * q.z();
  return u;
}

struct SpinChannel {
  // S[r][s][a][b] = sum_n w_n D_n(r,a) conj(D_n(s,b))
  cxd s[2][2][2][2] = {};

  void accumulate(double w, const Eigen::Matrix2cd& d) {
    for (int r = 0; r < 2; ++r)
      for (int t = 0; t < 2; ++t)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            s[r][t][a][b] += w * d(r, a) * std::conj(d(t, b));
  }
};

// rho'(ri, tj) = sum_{a,b} S(r,t,a,b) rho(ai, bj)  -- channel on particle A
Eigen::Matrix4cd apply_on_a(const SpinChannel& ch, const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (int r = 0; r < 2; ++r)
    for (int i = 0; i < 2; ++i)
      for (int t = 0; t < 2; ++t)
        for (int j = 0; j < 2; ++j)
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              out(2 * r + i, 2 * t + j) += ch.s[r][t][a][b] * rho(2 * a + i, 2 * b + j);
  return out;
}

Eigen::Matrix4cd apply_on_b(const SpinChannel& ch, const Eigen::Matrix4cd& rho) {
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (int r = 0; r < 2; ++r)
    for (int i = 0; i < 2; ++i)
      for (int t = 0; t < 2; ++t)
        for (int j = 0; j < 2; ++j)
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              out(2 * i + r, 2 * j + t) += ch.s[r][t][a][b] * rho(2 * i + a, 2 * j + b);
  return out;
}

std::vector<double> axis_nodes(int count, double extent) {
  std::vector<double> v(count);
  if (count == 1) {
    v[0] = 0.0;
    return v;
  }
  for (int i = 0; i < count; ++i)
    v[i] = -extent + 2.0 * extent * i / (count - 1);
  return v;
}

void for_each_gaussian_node(double sigma, const GridSpec& grid,
                            const std::function<void(const Eigen::Vector3d&, double)>& fn) {
  double ext = grid.extent_sigmas * sigma;
  auto xs = axis_nodes(grid.points[0], ext);
  auto ys = axis_nodes(grid.points[1], ext);
  auto zs = axis_nodes(grid.points[2], ext);
  double wsum = 0.0;
  std::vector<std::pair<Eigen::Vector3d, double>> nodes;
  for (double x : xs)
    for (double y : ys)
      for (double z : zs) {
        double w = std::exp(-(x * x + y * y + z * z) / (2.0 * sigma * sigma));
        nodes.push_back({{x, y, z}, w});
        wsum += w;
      }
  for (auto& [p, w] : nodes) fn(p, w / wsum);
}

}  // namespace

double SpinMomentumPacket::squared_norm() const {
  double n2 = 0.0;
  for (const auto& a : spin) n2 += a.squaredNorm();
  return n2;
}

Eigen::Vector3d boost_momentum(const BoostSpec& b, const Eigen::Vector3d& p, double mass) {
  double e = std::sqrt(mass * mass + p.squaredNorm());
  Eigen::Vector4d fourp(e, p.x(), p.y(), p.z());
  Eigen::Vector4d out = pure_boost(b.rapidity, b.axis) * fourp;
  return out.tail<3>();
}

Eigen::Matrix2cd wigner_rotation(const BoostSpec& b, const Eigen::Vector3d& p, double mass) {
  if (b.rapidity == 0.0) return Eigen::Matrix2cd::Identity();
  Mat4 lambda = pure_boost(b.rapidity, b.axis);
  Eigen::Vector3d pp = boost_momentum(b, p, mass);
  Mat4 w = standard_boost(pp, mass).inverse() * lambda * standard_boost(p, mass);
  Eigen::Matrix3d r = w.block<3, 3>(1, 1);
  // w is a pure rotation up to roundoff; re-orthonormalize through the quaternion
  return su2_from_rotation(Eigen::Quaterniond(r).normalized().toRotationMatrix());
}

SpinMomentumPacket gaussian_packet(double sigma_r, double mass,
                                   const Eigen::Vector3d& mean_momentum,
                                   const GridSpec& grid,
                                   const Eigen::Vector2cd& spin_state) {
  if (sigma_r <= 0.0) throw std::invalid_argument("momentum spread must be positive");
  if (std::abs(spin_state.squaredNorm() - 1.0) > 1e-10)
    throw std::invalid_argument("spin state must be normalized");
  SpinMomentumPacket pk;
  pk.particles = 1;
  pk.mass = mass;
  pk.sigma_r = sigma_r;
  for_each_gaussian_node(sigma_r, grid, [&](const Eigen::Vector3d& p, double w) {
    pk.momenta_a.push_back(mean_momentum + p);
    pk.spin.push_back(std::sqrt(w) * Eigen::VectorXcd(spin_state));
  });
  return pk;
}

SpinMomentumPacket bell_pair_packet(BellKind kind, double sigma_r, double mass,
                                    const Eigen::Vector3d& mean_momentum,
                                    const GridSpec& grid) {
  if (sigma_r <= 0.0) throw std::invalid_argument("momentum spread must be positive");
  SpinMomentumPacket pk;
  pk.particles = 2;
  pk.mass = mass;
  pk.sigma_r = sigma_r;
  Eigen::VectorXcd chi = bell_state(kind).amplitudes;
  std::vector<std::pair<Eigen::Vector3d, double>> nodes;
  for_each_gaussian_node(sigma_r, grid, [&](const Eigen::Vector3d& p, double w) {
    nodes.push_back({p, w});
  });
  for (const auto& [pa, wa] : nodes)
    for (const auto& [pb, wb] : nodes) {
      pk.momenta_a.push_back(mean_momentum + pa);
      pk.momenta_b.push_back(-mean_momentum + pb);
      pk.spin.push_back(std::sqrt(wa * wb) * chi);
    }
  return pk;
}

SpinMomentumPacket boost_packet(const SpinMomentumPacket& p, const BoostSpec& b) {
  if (b.rapidity < 0.0) throw std::invalid_argument("rapidity must be >= 0 (flip the axis)");
  SpinMomentumPacket out = p;
  for (std::size_t n = 0; n < p.momenta_a.size(); ++n) {
    Eigen::Matrix2cd da = wigner_rotation(b, p.momenta_a[n], p.mass);
    out.momenta_a[n] = boost_momentum(b, p.momenta_a[n], p.mass);
    if (p.particles == 1) {
      out.spin[n] = da * Eigen::Vector2cd(p.spin[n]);
    } else {
      Eigen::Matrix2cd db = wigner_rotation(b, p.momenta_b[n], p.mass);
      out.momenta_b[n] = boost_momentum(b, p.momenta_b[n], p.mass);
      Eigen::Matrix4cd dd = Eigen::Matrix4cd::Zero();
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          dd.block<2, 2>(2 * i, 2 * j) = da(i, j) * db;
      out.spin[n] = dd * Eigen::Vector4cd(p.spin[n]);
    }
  }
  return out;
}

DensityOperator spin_marginal(const SpinMomentumPacket& p) {
  int d = p.particles == 1 ? 2 : 4;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& a : p.spin) rho += a * a.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityOperator(std::move(rho),
                         p.particles == 1 ? std::vector<int>{2} : std::vector<int>{2, 2});
}

double wootters_concurrence(const DensityOperator& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("concurrence needs a two-qubit state");
  Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
  yy(0, 3) = -1.0; yy(1, 2) = 1.0; yy(2, 1) = 1.0; yy(3, 0) = -1.0;
  Eigen::Matrix4cd r = rho.matrix * yy * rho.matrix.conjugate() * yy;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(r);
  std::vector<double> lam(4);
  for (int k = 0; k < 4; ++k)
    lam[k] = std::sqrt(std::max(0.0, es.eigenvalues()[k].real()));
  std::sort(lam.begin(), lam.end(), std::greater<double>());
  double c = lam[0] - lam[1] - lam[2] - lam[3];
  return c > 1e-12 ? std::min(c, 1.0) : 0.0;
}

double boosted_pair_concurrence(double sigma_over_m, double rapidity, BellKind kind,
                                const GridSpec& grid) {
  if (sigma_over_m <= 0.0) throw std::invalid_argument("sigma_r/m must be positive");
  BoostSpec b{rapidity, {0.0, 0.0, 1.0}};
  const double mass = 1.0;
  SpinChannel ch;
  for_each_gaussian_node(sigma_over_m, grid, [&](const Eigen::Vector3d& p, double w) {
    ch.accumulate(w, wigner_rotation(b, p, mass));
  });
  Eigen::Vector4cd chi = bell_state(kind).amplitudes;
  Eigen::Matrix4cd rho = chi * chi.adjoint();
  rho = apply_on_b(ch, apply_on_a(ch, rho));
  rho = 0.5 * (rho + rho.adjoint().eval());
  return wootters_concurrence(DensityOperator(rho, {2, 2}));
}

double momentum_entangled_concurrence_closed_form(double p, double rapidity) {
  if (p < 0.0 || rapidity < 0.0) throw std::invalid_argument("p and rapidity must be >= 0");
  double ch = std::cosh(rapidity);
  double num = p * p * (ch * ch - 1.0);
  double den = std::sqrt(1.0 + p * p) * ch + 1.0;
  return num / (den * den);
}

double momentum_entangled_concurrence_simulated(double p, double rapidity,
                                                int nodes_per_config) {
  if (p <= 0.0) throw std::invalid_argument("momentum magnitude must be positive");
  const double mass = 1.0;
  const double sigma = p / 50.0;
  SpinMomentumPacket pk;
  pk.particles = 2;
  pk.mass = mass;
  pk.sigma_r = sigma;
  auto offs = axis_nodes(nodes_per_config, 4.0 * sigma);
  double wsum = 0.0;
  std::vector<double> w(offs.size());
  for (std::size_t i = 0; i < offs.size(); ++i) {
    w[i] = std::exp(-offs[i] * offs[i] / (2.0 * sigma * sigma));
    wsum += w[i];
  }
  Eigen::Vector4cd chi_m = bell_state(BellKind::PhiMinus).amplitudes;
  Eigen::Vector4cd chi_p = bell_state(BellKind::PhiPlus).amplitudes;
  const Eigen::Vector3d ex(1, 0, 0), ey(0, 1, 0);
  for (std::size_t i = 0; i < offs.size(); ++i) {
    double amp = std::sqrt(0.5 * w[i] / wsum);
    pk.momenta_a.push_back((p + offs[i]) * ey);
    pk.momenta_b.push_back(-(p + offs[i]) * ey);
    pk.spin.push_back(amp * chi_m);
    pk.momenta_a.push_back((p + offs[i]) * ex);
    pk.momenta_b.push_back(-(p + offs[i]) * ex);
    pk.spin.push_back(amp * chi_p);
  }
  SpinMomentumPacket boosted = boost_packet(pk, BoostSpec{rapidity, {0.0, 0.0, 1.0}});
  return wootters_concurrence(spin_marginal(boosted));
}

}  // namespace rqit
