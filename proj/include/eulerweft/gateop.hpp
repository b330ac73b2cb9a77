#pragma once

#include <variant>
#include <vector>

#include "eulerweft/circuit.hpp"

namespace eulerweft {

/// (alpha*I + sign*beta*sigma~_word)/gamma. The word must have odd Y-count
/// for the gate to be orthogonal.
struct SigmaTildeGate {
    PauliWord word;
    double alpha = 1.0;
    double beta = 1.0;
    std::int8_t sign = +1;
    double gamma() const;
};

/// exp(-i*theta/2 * sigma_word) = cos(theta/2) I - i sin(theta/2) sigma_word.
struct PauliRotation {
    PauliWord word;
    double theta = 0.0;
};

struct Cnot {
    std::size_t control = 0;
    std::size_t target = 0;
};

using GateOp = std::variant<SigmaTildeGate, PauliRotation, Cnot>;

/// Number of qubits the op's word spans (0 for Cnot; its qubits are indices
/// into whatever register it is applied to).
std::size_t op_qubits(const GateOp& op);

GateOp inverted(const GateOp& op);

/// Gate list of a circuit: element k is gate k, to be applied k-th.
std::vector<GateOp> to_gate_sequence(const CircuitMatrix& c, const GateSpec& g);

/// Inverse of a gate sequence: reversed order, each op inverted.
std::vector<GateOp> adjoint_sequence(const std::vector<GateOp>& seq);

/// Pad every op's word so the sequence acts on new_qubits qubits.
std::vector<GateOp> extend_sequence(const std::vector<GateOp>& seq, std::size_t new_qubits);

/// Decision wrapper: [U] + [CNOT(decision_qubit -> ancilla)] + [U^dagger] on
/// qubits+1 wires, ancilla last. Output length is 2*len(u)+1.
/// Throws IndexOutOfRange when decision_qubit >= qubits.
std::vector<GateOp> decision_wrap(const std::vector<GateOp>& u, std::size_t qubits,
                                  std::size_t decision_qubit);

}  // namespace eulerweft
