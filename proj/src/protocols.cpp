#include "rqit/protocols.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rqit/rng.hpp"

namespace rqit {

namespace {

const Eigen::Matrix2cd kId = Eigen::Matrix2cd::Identity();

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

// outcome index k <-> Bell vector and teleportation correction
BellKind bell_of(int k) {
  switch (k) {
    case 0: return BellKind::PhiPlus;
    case 1: return BellKind::PsiPlus;
    case 2: return BellKind::PhiMinus;
    default: return BellKind::PsiMinus;
  }
}

Eigen::Matrix2cd correction_of(int k) {
  switch (k) {
    case 0: return kId;
    case 1: return pauli_x();
    case 2: return pauli_z();
    default: return pauli_z() * pauli_x();
  }
}

std::string bits_of(int k) {
  return {static_cast<char>('0' + (k >> 1)), static_cast<char>('0' + (k & 1))};
}

}  // namespace

Eigen::MatrixXcd premeasure_unitary(const PremeasurementSpec& spec) {
  const int d = spec.dimension;
  if (d < 2) throw std::invalid_argument("premeasurement dimension must be >= 2");
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int x = 0; x < d; ++x)
    for (int a = 0; a < d; ++a) u(x * d + (a + x) % d, x * d + a) = 1.0;
  return u;
}

PureState premeasure(const PremeasurementSpec& spec, const PureState& system,
                     const PureState& pointer) {
  const int d = spec.dimension;
  if (system.dim() != d || pointer.dim() != d)
    throw std::invalid_argument("system/pointer dimension mismatch");
  if (spec.strict && std::abs(std::abs(pointer.amplitudes[0]) - 1.0) > 1e-12)
    throw std::invalid_argument("pointer must be prepared in |0>");
  Eigen::VectorXcd joint(d * d);
  for (int x = 0; x < d; ++x)
    for (int a = 0; a < d; ++a)
      joint[x * d + a] = system.amplitudes[x] * pointer.amplitudes[a];
  joint = premeasure_unitary(spec) * joint;
  return PureState(std::move(joint), {d, d});
}

ProtocolTranscript teleport_outcome(const PureState& qubit, int outcome) {
  if (qubit.dim() != 2) throw std::invalid_argument("teleportation input must be a qubit");
  if (outcome < 0 || outcome > 3) throw std::invalid_argument("outcome must be 0..3");

  ProtocolTranscript t;
  t.steps.push_back({"entangle", "Bob prepares an entangled qubit pair, sends one half to Alice"});
  Eigen::VectorXcd ebit = bell_state(BellKind::PhiPlus).amplitudes;

  // joint state on (input, Alice half, Bob half)
  Eigen::VectorXcd joint(8);
  for (int q = 0; q < 2; ++q)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        joint[4 * q + 2 * a + b] = qubit.amplitudes[q] * ebit[2 * a + b];

  // project qubits (1,2) onto the Bell vector of this outcome
  Eigen::VectorXcd bell = bell_state(bell_of(outcome)).amplitudes;
  Eigen::Vector2cd bob = Eigen::Vector2cd::Zero();
  for (int q = 0; q < 2; ++q)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        bob[b] += std::conj(bell[2 * q + a]) * joint[4 * q + 2 * a + b];
  bob.normalize();
  t.steps.push_back({"measure", "Alice measures her two qubits in the entangled basis"});
  t.classical_bits = bits_of(outcome);
  t.steps.push_back({"classical", "Alice sends outcome bits " + t.classical_bits});

  bob = correction_of(outcome) * bob;
  t.steps.push_back({"correct", "Bob applies the conditional unitary"});
  t.channel_qubits = 1;  // the ebit half initially sent to Alice
  t.final_state = PureState(Eigen::VectorXcd(bob), {2});
  cxd overlap = qubit.amplitudes.adjoint() * bob;
  t.fidelity = std::norm(overlap);
  return t;
}

ProtocolTranscript teleport(const PureState& qubit, std::uint64_t seed) {
  // all four outcomes are equiprobable for any input
  CounterRng rng(seed);
  int outcome = static_cast<int>(rng.bits(0) & 3u);
  return teleport_outcome(qubit, outcome);
}

ProtocolTranscript superdense(const std::array<int, 2>& bits) {
  for (int b : bits)
    if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
  const int k = 2 * bits[0] + bits[1];

  ProtocolTranscript t;
  t.steps.push_back({"entangle", "Bob prepares an entangled pair, sends one half to Alice"});
  Eigen::VectorXcd state = bell_state(BellKind::PhiPlus).amplitudes;

  // Alice encodes two bits on her single qubit (first factor)
  Eigen::Matrix2cd u = correction_of(k);
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(4, 4);
  full.block<2, 2>(0, 0) = u(0, 0) * kId;
  full.block<2, 2>(0, 2) = u(0, 1) * kId;
  full.block<2, 2>(2, 0) = u(1, 0) * kId;
  full.block<2, 2>(2, 2) = u(1, 1) * kId;
  state = full * state;
  t.steps.push_back({"encode", "Alice applies the unitary for bits " + bits_of(k)});
  t.steps.push_back({"send", "Alice sends her single qubit back to Bob"});
  t.channel_qubits = 1;

  // Bob's Bell measurement is deterministic: the encoded state is a Bell vector
  int decoded = -1;
  for (int m = 0; m < 4; ++m) {
    cxd ov = bell_state(bell_of(m)).amplitudes.adjoint() * state;
    if (std::norm(ov) > 0.5) decoded = m;
  }
  t.classical_bits = bits_of(decoded);
  t.steps.push_back({"measure", "Bob decodes bits " + t.classical_bits});
  t.final_state = PureState(Eigen::VectorXcd(state), {2, 2});
  t.fidelity = decoded == k ? 1.0 : 0.0;
  return t;
}

std::pair<double, double> partial_information(const DensityOperator& rho_ab, int split,
                                              EntropyUnit unit) {
  const int n = static_cast<int>(rho_ab.dims.size());
  double s_a_given_b = conditional_vn(rho_ab, split, unit);
  // S(B|A) = S(AB) - S(A)
  SubsystemSelector a;
  for (int i = 0; i < split; ++i) a.keep.push_back(i);
  (void)n;
  double s_b_given_a = von_neumann_entropy(rho_ab, unit) -
                       von_neumann_entropy(partial_trace(rho_ab, a), unit);
  return {s_a_given_b, s_b_given_a};
}

std::string transcript_json(const ProtocolTranscript& t) {
  nlohmann::json j;
  j["steps"] = nlohmann::json::array();
  for (const auto& s : t.steps) j["steps"].push_back({{"label", s.label}, {"detail", s.detail}});
  j["classical_bits"] = t.classical_bits;
  j["channel_qubits"] = t.channel_qubits;
  j["fidelity"] = t.fidelity;
  auto amps = nlohmann::json::array();
  for (int i = 0; i < t.final_state.dim(); ++i)
    amps.push_back({t.final_state.amplitudes[i].real(), t.final_state.amplitudes[i].imag()});
  j["final_state"] = amps;
  return j.dump(2);
}

}  // namespace rqit
