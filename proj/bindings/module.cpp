#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rqit/entropy.hpp"
#include "rqit/geoment.hpp"
#include "rqit/protocols.hpp"
#include "rqit/relclassical.hpp"
#include "rqit/relquantum.hpp"
#include "rqit/thermal.hpp"

namespace py = pybind11;
using namespace rqit;

namespace {

EntropyUnit unit_of(const std::string& s) {
  if (s == "bits") return EntropyUnit::Bits;
  if (s == "nats") return EntropyUnit::Nats;
  throw std::invalid_argument("unit must be 'bits' or 'nats'");
}

DensityOperator make_density(const Eigen::MatrixXcd& m, std::vector<int> dims) {
  return DensityOperator(m, std::move(dims));
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "entropy and information computations for classical, quantum, and "
              "relativistic systems";

  py::class_<DensityOperator>(mod, "DensityOperator")
      .def(py::init(&make_density), py::arg("matrix"), py::arg("dims"))
      .def_readonly("matrix", &DensityOperator::matrix)
      .def_readonly("dims", &DensityOperator::dims)
      .def_property_readonly("dim", &DensityOperator::dim);

  mod.def(
      "pure_density",
      [](const Eigen::VectorXcd& amps, std::vector<int> dims) {
        return pure_density(PureState(amps, std::move(dims)));
      },
      py::arg("amplitudes"), py::arg("dims"));
  mod.def(
      "bell_density",
      [](const std::string& name) {
        BellKind k;
        if (name == "phi+") k = BellKind::PhiPlus;
        else if (name == "phi-") k = BellKind::PhiMinus;
        else if (name == "psi+") k = BellKind::PsiPlus;
        else if (name == "psi-") k = BellKind::PsiMinus;
        else throw std::invalid_argument("expected phi+, phi-, psi+, or psi-");
        return pure_density(bell_state(k));
      },
      py::arg("kind"));
  mod.def(
      "partial_trace",
      [](const DensityOperator& rho, std::vector<int> keep) {
        return partial_trace(rho, {std::move(keep)});
      },
      py::arg("rho"), py::arg("keep"));
  mod.def("purity", &purity, py::arg("rho"));

  mod.def(
      "shannon_entropy",
      [](const Eigen::MatrixXd& p, const std::string& unit) {
        return shannon_entropy(ProbabilityTable(p), unit_of(unit));
      },
      py::arg("table"), py::arg("unit") = "bits");
  mod.def(
      "conditional_entropy",
      [](const Eigen::MatrixXd& p, const std::string& unit) {
        return conditional_entropy(ProbabilityTable(p), unit_of(unit));
      },
      py::arg("joint"), py::arg("unit") = "bits");
  mod.def(
      "mutual_information",
      [](const Eigen::MatrixXd& p, const std::string& unit) {
        return mutual_information(ProbabilityTable(p), unit_of(unit));
      },
      py::arg("joint"), py::arg("unit") = "bits");
  mod.def(
      "von_neumann_entropy",
      [](const DensityOperator& rho, const std::string& unit) {
        return von_neumann_entropy(rho, unit_of(unit));
      },
      py::arg("rho"), py::arg("unit") = "bits");
  mod.def(
      "conditional_vn",
      [](const DensityOperator& rho, int split, const std::string& unit) {
        return conditional_vn(rho, split, unit_of(unit));
      },
      py::arg("rho"), py::arg("split") = 1, py::arg("unit") = "bits");
  mod.def(
      "mutual_vn",
      [](const DensityOperator& rho, int split, const std::string& unit) {
        return mutual_vn(rho, split, unit_of(unit));
      },
      py::arg("rho"), py::arg("split") = 1, py::arg("unit") = "bits");
  mod.def("conditional_amplitude_spectrum",
          [](const DensityOperator& rho, int split) {
            return conditional_amplitude_spectrum(rho, split);
          },
          py::arg("rho"), py::arg("split") = 1);

  mod.def(
      "dimer_observables",
      [](double J, double beta) {
        DimerParams p{J, beta};
        py::dict d;
        d["Z"] = dimer_partition(p);
        d["E"] = dimer_energy(p);
        d["S_joint_bits"] = dimer_joint_entropy(p, EntropyUnit::Bits);
        d["S_mutual_bits"] = dimer_mutual_entropy(p, EntropyUnit::Bits);
        return d;
      },
      py::arg("J"), py::arg("beta"));
  mod.def("bh_entropy", [](double m) { return bh_entropy({m}); }, py::arg("mass"));
  mod.def("hawking_temperature", [](double m) { return hawking_temperature({m}); },
          py::arg("mass"));
  mod.def(
      "evaporation_step",
      [](double m, double dm) {
        auto s = evaporation_step({m}, dm);
        return py::make_tuple(s.ds_bh, s.ds_rad, s.ratio);
      },
      py::arg("mass"), py::arg("dm"));

  mod.def(
      "awng_capacity",
      [](double w, double snr, double doppler) {
        return awng_capacity({w, snr, doppler});
      },
      py::arg("bandwidth"), py::arg("snr"), py::arg("doppler") = 1.0);
  mod.def("infinite_bandwidth_capacity", &infinite_bandwidth_capacity, py::arg("snr"),
          py::arg("doppler") = 1.0);
  mod.def("doppler_factor", &doppler_factor, py::arg("beta"), py::arg("theta"));
  mod.def(
      "moving_temperature",
      [](double t, double beta, double theta) {
        return moving_temperature(t, {beta, theta});
      },
      py::arg("rest_temperature"), py::arg("beta"), py::arg("theta"));
  mod.def(
      "planar_mutual_information",
      [](std::size_t n, std::uint64_t seed, double beta, const std::string& unit) {
        auto e = sample_bounded_planar_ensemble(n, seed);
        if (beta > 0.0) e = boost_ensemble(e, beta);
        auto est = planar_mutual_information(e, {}, unit_of(unit));
        return py::make_tuple(est.value, est.stderr_, est.value_knn);
      },
      py::arg("n"), py::arg("seed"), py::arg("beta") = 0.0, py::arg("unit") = "nats");

  mod.def(
      "wigner_rotation",
      [](double rapidity, const Eigen::Vector3d& axis, const Eigen::Vector3d& p,
         double mass) -> Eigen::Matrix2cd {
        return wigner_rotation({rapidity, axis}, p, mass);
      },
      py::arg("rapidity"), py::arg("axis"), py::arg("momentum"), py::arg("mass") = 1.0);
  mod.def("wootters_concurrence", &wootters_concurrence, py::arg("rho"));
  mod.def(
      "boosted_pair_concurrence",
      [](double sigma_over_m, double rapidity, int grid) {
        GridSpec g;
        g.points = {1, grid, grid};
        return boosted_pair_concurrence(sigma_over_m, rapidity, BellKind::PsiMinus, g);
      },
      py::arg("sigma_over_m"), py::arg("rapidity"), py::arg("grid") = 15);
  mod.def("momentum_entangled_concurrence_closed_form",
          &momentum_entangled_concurrence_closed_form, py::arg("p"), py::arg("rapidity"));
  mod.def("momentum_entangled_concurrence_simulated",
          &momentum_entangled_concurrence_simulated, py::arg("p"), py::arg("rapidity"),
          py::arg("nodes_per_config") = 33);

  mod.def(
      "teleport",
      [](std::complex<double> a, std::complex<double> b, std::uint64_t seed) {
        Eigen::VectorXcd amps(2);
        amps << a, b;
        amps.normalize();
        auto t = teleport(PureState(amps, {2}), seed);
        return transcript_json(t);
      },
      py::arg("a"), py::arg("b"), py::arg("seed") = 1);
  mod.def(
      "superdense",
      [](int b0, int b1) { return transcript_json(superdense({b0, b1})); },
      py::arg("b0"), py::arg("b1"));
  mod.def(
      "partial_information",
      [](const DensityOperator& rho, int split, const std::string& unit) {
        return partial_information(rho, split, unit_of(unit));
      },
      py::arg("rho"), py::arg("split") = 1, py::arg("unit") = "bits");

  mod.def(
      "geometric_entropy",
      [](int sites, double coupling, double mass_term, std::vector<int> inside,
         const std::string& unit, double beta) {
        return geometric_entropy({sites, coupling, mass_term, false},
                                 {std::move(inside)}, unit_of(unit), beta);
      },
      py::arg("sites"), py::arg("coupling"), py::arg("mass_term"), py::arg("inside"),
      py::arg("unit") = "nats", py::arg("beta") = 0.0);
  mod.def(
      "renyi_trace",
      [](int sites, double coupling, double mass_term, std::vector<int> inside, int n) {
        return renyi_trace({sites, coupling, mass_term, false}, {std::move(inside)}, n);
      },
      py::arg("sites"), py::arg("coupling"), py::arg("mass_term"), py::arg("inside"),
      py::arg("n"));
  mod.def("refinement_sweep",
          [](std::vector<int> sizes, double coupling, double mass_term, double fraction,
             const std::string& unit) {
            return refinement_sweep(sizes, coupling, mass_term, fraction, unit_of(unit));
          },
          py::arg("sizes"), py::arg("coupling"), py::arg("mass_term"),
          py::arg("region_fraction"), py::arg("unit") = "nats");
}
