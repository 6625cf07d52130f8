#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rqit/entropy.hpp"
#include "rqit/qstate.hpp"

namespace rqit {

struct PremeasurementSpec {
  int dimension = 2;  // shared by system and pointer
  bool strict = true; // require the pointer to start in |0>
};

struct TranscriptStep {
  std::string label;
  std::string detail;
};

struct ProtocolTranscript {
  std::vector<TranscriptStep> steps;
  std::string classical_bits;  // e.g. "01"
  int channel_qubits = 0;
  PureState final_state;
  double fidelity = 1.0;
};

// Pointer-shift unitary on basis states: |x, a> -> |x, (a + x) mod d>.
Eigen::MatrixXcd premeasure_unitary(const PremeasurementSpec& spec);
PureState premeasure(const PremeasurementSpec& spec, const PureState& system,
                     const PureState& pointer);

// Deterministic branch of the teleportation protocol for a fixed Bell-measurement
// outcome (0..3); the sampled version draws the outcome from the Born rule.
ProtocolTranscript teleport_outcome(const PureState& qubit, int outcome);
ProtocolTranscript teleport(const PureState& qubit, std::uint64_t seed);

ProtocolTranscript superdense(const std::array<int, 2>& bits);

std::pair<double, double> partial_information(const DensityOperator& rho_ab, int split,
                                              EntropyUnit unit);

std::string transcript_json(const ProtocolTranscript& t);

}  // namespace rqit
