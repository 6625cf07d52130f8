#include <doctest.h>

#include <cmath>
#include <random>

#include "rqit/entropy.hpp"
#include "rqit/relquantum.hpp"
#include "support/random_states.hpp"

using namespace rqit;

TEST_CASE("little-group rotation basics") {
  Eigen::Vector3d p(0.3, -0.2, 0.7);
  // zero rapidity: identity
  auto w0 = wigner_rotation({0.0, {0.0, 0.0, 1.0}}, p, 1.0);
  CHECK((w0 - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  // boost collinear with the momentum: no rotation
  auto wc = wigner_rotation({1.3, {0.0, 1.0, 0.0}}, {0.0, 2.0, 0.0}, 1.0);
  CHECK((wc - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-10);
  // boosting a particle at rest: no rotation either
  auto wr = wigner_rotation({0.8, {1.0, 0.0, 0.0}}, {0.0, 0.0, 0.0}, 1.0);
  CHECK((wr - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-10);

  // always special-unitary
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::Vector3d q(u(gen), u(gen), u(gen));
    Eigen::Vector3d ax(u(gen), u(gen), u(gen));
    if (ax.norm() < 1e-3) continue;
    auto w = wigner_rotation({u(gen), ax.normalized()}, q, 0.5 + std::abs(u(gen)));
    CHECK((w * w.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(w.determinant() - cxd(1.0, 0.0)) < 1e-10);
  }

  // perpendicular geometry oracle: p along x, boost along z.
  // tan(angle) = sinh(xi) sinh(chi) / (cosh(xi) + cosh(chi)) about the -y axis,
  // with chi the particle rapidity and xi the boost rapidity.
  double m = 1.0, chi = 0.9, xi = 1.4;
  Eigen::Vector3d px(m * std::sinh(chi), 0.0, 0.0);
  auto w = wigner_rotation({xi, {0.0, 0.0, 1.0}}, px, m);
  double expect = std::atan2(std::sinh(chi) * std::sinh(xi),
                             std::cosh(chi) + std::cosh(xi));
  // SU(2) for rotation by angle t about axis n: cos(t/2) I - i sin(t/2) n.sigma
  double half = std::acos(std::clamp(w(0, 0).real(), -1.0, 1.0));
  CHECK(2.0 * half == doctest::Approx(std::abs(expect)).epsilon(1e-9));
}

TEST_CASE("momentum transforms") {
  // pure z boost of a particle at rest
  double m = 2.0, xi = 1.1;
  auto q = boost_momentum({xi, {0.0, 0.0, 1.0}}, {0.0, 0.0, 0.0}, m);
  CHECK(q.x() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(q.z() == doctest::Approx(m * std::sinh(xi)).epsilon(1e-12));
  // transverse components are untouched; energy transforms with the boost
  Eigen::Vector3d p(0.4, -0.3, 0.2);
  auto q2 = boost_momentum({xi, {0.0, 0.0, 1.0}}, p, 1.0);
  CHECK(q2.x() == doctest::Approx(p.x()).epsilon(1e-12));
  CHECK(q2.y() == doctest::Approx(p.y()).epsilon(1e-12));
  double e = std::sqrt(1.0 + p.squaredNorm());
  CHECK(q2.z() ==
        doctest::Approx(std::cosh(xi) * p.z() + std::sinh(xi) * e).epsilon(1e-12));
  // mass-shell invariance
  double e2 = std::sqrt(1.0 + q2.squaredNorm());
  CHECK(e2 * e2 - q2.squaredNorm() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("packet construction and boost invariants") {
  GridSpec grid;
  grid.points = {9, 9, 9};
  auto pkt = gaussian_packet(1.0, 1.0, {0.0, 0.0, 0.5}, grid, {1.0, 0.0});
  CHECK(pkt.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(spin_marginal(pkt)) == doctest::Approx(1.0).epsilon(1e-12));

  BoostSpec b{1.5, {1.0, 0.0, 0.0}};
  auto boosted = boost_packet(pkt, b);
  // norm preserved exactly by construction
  CHECK(boosted.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
  // a nearly monochromatic packet keeps spin purity under boosts
  auto mono = gaussian_packet(0.02, 1.0, {0.0, 0.0, 0.5}, grid, {1.0, 0.0});
  auto wb = boost_packet(mono, b);
  CHECK(purity(spin_marginal(wb)) == doctest::Approx(1.0).epsilon(1e-4));
  // a narrow packet loses spin purity under a transverse boost
  auto narrow = gaussian_packet(0.7, 1.0, {0.0, 0.0, 0.0}, grid, {1.0, 0.0});
  auto nb = boost_packet(narrow, {3.0, {1.0, 0.0, 0.0}});
  CHECK(purity(spin_marginal(nb)) < 0.999);
  CHECK(purity(spin_marginal(nb)) > 0.5 - 1e-12);

  // entropy of the spin marginal grows with rapidity for the narrow packet
  double prev = -1.0;
  for (double xi : {0.0, 1.0, 2.0, 3.0}) {
    auto s = von_neumann_entropy(
        spin_marginal(boost_packet(narrow, {xi, {1.0, 0.0, 0.0}})),
        EntropyUnit::Bits);
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("two-particle packets") {
  GridSpec grid;
  grid.points = {5, 5, 5};
  auto pkt = bell_pair_packet(BellKind::PsiMinus, 1.0, 1.0, {0.0, 0.0, 0.4}, grid);
  CHECK(pkt.particles == 2);
  CHECK(pkt.squared_norm() == doctest::Approx(1.0).epsilon(1e-12));
  auto rho = spin_marginal(pkt);
  CHECK(rho.dim() == 4);
  // unboosted: exactly the Bell state
  auto target = pure_density(bell_state(BellKind::PsiMinus));
  CHECK((rho.matrix - target.matrix).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(wootters_concurrence(rho) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("concurrence oracle values") {
  // Bell states are maximally entangled
  for (auto k : {BellKind::PhiPlus, BellKind::PhiMinus, BellKind::PsiPlus,
                 BellKind::PsiMinus})
    CHECK(wootters_concurrence(pure_density(bell_state(k))) ==
          doctest::Approx(1.0).epsilon(1e-10));

  // product states carry none
  std::mt19937_64 gen(3);
  for (int rep = 0; rep < 50; ++rep) {
    auto a = testing::random_density({2}, gen);
    auto b = testing::random_density({2}, gen);
    CHECK(wootters_concurrence(tensor(a, b)) < 1e-8);
  }

  // isotropic mixture of a singlet: C = max(0, (3p-1)/2); p = 1/2 gives 1/4
  auto singlet = pure_density(bell_state(BellKind::PsiMinus));
  for (double p : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    Eigen::MatrixXcd m = p * singlet.matrix +
                         (1.0 - p) * 0.25 * Eigen::MatrixXcd::Identity(4, 4);
    double expect = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CHECK(wootters_concurrence(DensityOperator(m, {2, 2})) ==
          doctest::Approx(expect).epsilon(1e-9));
  }

  // pure two-qubit states: C = 2 |ad - bc|
  for (int rep = 0; rep < 50; ++rep) {
    auto psi = testing::random_pure({2, 2}, gen);
    cxd det = psi.amplitudes(0) * psi.amplitudes(3) -
              psi.amplitudes(1) * psi.amplitudes(2);
    CHECK(wootters_concurrence(pure_density(psi)) ==
          doctest::Approx(2.0 * std::abs(det)).epsilon(1e-8));
  }

  // local unitaries leave it unchanged
  for (int rep = 0; rep < 20; ++rep) {
    auto rho = testing::random_density({2, 2}, gen);
    auto u = testing::random_unitary2(gen);
    auto v = testing::random_unitary2(gen);
    Eigen::Matrix4cd uv;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) uv.block<2, 2>(2 * i, 2 * j) = u(i, j) * v;
    DensityOperator rot(uv * rho.matrix * uv.adjoint(), {2, 2});
    CHECK(wootters_concurrence(rot) ==
          doctest::Approx(wootters_concurrence(rho)).epsilon(1e-8));
  }
}

TEST_CASE("pair concurrence under a shared transverse boost") {
  GridSpec grid;
  grid.points = {1, 17, 17};  // flatten one transverse axis to keep the grid small
  // no boost: full entanglement regardless of the spread
  CHECK(boosted_pair_concurrence(1.0, 0.0, BellKind::PsiMinus, grid) ==
        doctest::Approx(1.0).epsilon(1e-10));
  // concurrence decays monotonically with rapidity
  double prev = 1.0 + 1e-12;
  for (double xi : {1.0, 2.0, 4.0}) {
    double c = boosted_pair_concurrence(1.0, xi, BellKind::PsiMinus, grid);
    CHECK(c < prev);
    CHECK(c >= 0.0);
    prev = c;
  }
  // wider momentum spread decays faster at fixed rapidity
  double narrow = boosted_pair_concurrence(1.0, 2.0, BellKind::PsiMinus, grid);
  double wide = boosted_pair_concurrence(4.0, 2.0, BellKind::PsiMinus, grid);
  CHECK(wide < narrow);
  // nearly monochromatic pairs barely decohere
  CHECK(boosted_pair_concurrence(0.05, 2.0, BellKind::PsiMinus, grid) >
        0.99);
}

TEST_CASE("momentum-entangled pair: closed form") {
  // no boost: the spin marginal is a product, so the boost has created nothing
  CHECK(momentum_entangled_concurrence_closed_form(1.0, 0.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
  auto closed = [](double p, double xi) {
    double ch = std::cosh(xi);
    double den = std::sqrt(1.0 + p * p) * ch + 1.0;
    return p * p * (ch * ch - 1.0) / (den * den);
  };
  for (double p : {0.5, 1.0, 2.0})
    for (double xi : {0.0, 0.5, 1.0, 2.0, 3.0})
      CHECK(momentum_entangled_concurrence_closed_form(p, xi) ==
            doctest::Approx(closed(p, xi)).epsilon(1e-12));
  // strictly increasing in rapidity toward the saturation value p^2/(1+p^2)
  double prev = -1.0;
  for (double xi : {0.0, 1.0, 2.0, 4.0, 8.0}) {
    double c = momentum_entangled_concurrence_closed_form(1.0, xi);
    CHECK(c > prev);
    CHECK(c < 1.0);
    prev = c;
  }
  CHECK(momentum_entangled_concurrence_closed_form(1.0, 20.0) ==
        doctest::Approx(0.5).epsilon(1e-6));
  // faster momenta entangle more strongly at fixed rapidity
  CHECK(momentum_entangled_concurrence_closed_form(2.0, 2.0) >
        momentum_entangled_concurrence_closed_form(0.5, 2.0));
}

TEST_CASE("momentum-entangled pair: simulation matches the closed form") {
  for (double p : {0.5, 1.0, 2.0})
    for (double xi : {0.0, 1.0, 2.0})
      CHECK(momentum_entangled_concurrence_simulated(p, xi) ==
            doctest::Approx(momentum_entangled_concurrence_closed_form(p, xi))
                .epsilon(2e-3));
}
