#include "eulerweft/gateop.hpp"

#include <cmath>

namespace eulerweft {

double SigmaTildeGate::gamma() const { return std::sqrt(alpha * alpha + beta * beta); }

std::size_t op_qubits(const GateOp& op) {
    if (const auto* g = std::get_if<SigmaTildeGate>(&op)) return g->word.qubits();
    if (const auto* r = std::get_if<PauliRotation>(&op)) return r->word.qubits();
    return 0;
}

GateOp inverted(const GateOp& op) {
    if (const auto* g = std::get_if<SigmaTildeGate>(&op)) {
        SigmaTildeGate inv = *g;
        inv.sign = static_cast<std::int8_t>(-inv.sign);
        return inv;
    }
    if (const auto* r = std::get_if<PauliRotation>(&op)) return PauliRotation{r->word, -r->theta};
    return op;  // CNOT is self-inverse
}

std::vector<GateOp> to_gate_sequence(const CircuitMatrix& c, const GateSpec& g) {
    if (g.gates() != c.gates()) throw DimensionMismatch("to_gate_sequence: gate spec size mismatch");
    std::vector<GateOp> seq;
    seq.reserve(c.gates());
    for (std::size_t k = 0; k < c.gates(); ++k)
        seq.push_back(SigmaTildeGate{c.column_pauli(k), g.alpha, g.beta, g.signs[k]});
    return seq;
}

std::vector<GateOp> adjoint_sequence(const std::vector<GateOp>& seq) {
    std::vector<GateOp> out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(inverted(*it));
    return out;
}

std::vector<GateOp> extend_sequence(const std::vector<GateOp>& seq, std::size_t new_qubits) {
    std::vector<GateOp> out;
    out.reserve(seq.size());
    for (const GateOp& op : seq) {
        if (const auto* g = std::get_if<SigmaTildeGate>(&op)) {
            out.push_back(SigmaTildeGate{g->word.extended(new_qubits), g->alpha, g->beta, g->sign});
        } else if (const auto* r = std::get_if<PauliRotation>(&op)) {
            out.push_back(PauliRotation{r->word.extended(new_qubits), r->theta});
        } else {
            out.push_back(op);
        }
    }
    return out;
}

std::vector<GateOp> decision_wrap(const std::vector<GateOp>& u, std::size_t qubits,
                                  std::size_t decision_qubit) {
    if (decision_qubit >= qubits) throw IndexOutOfRange("decision_wrap: decision qubit out of range");
    std::size_t total = qubits + 1;
    std::vector<GateOp> wrapped = extend_sequence(u, total);
    wrapped.push_back(Cnot{decision_qubit, qubits});
    std::vector<GateOp> inv = extend_sequence(adjoint_sequence(u), total);
    wrapped.insert(wrapped.end(), inv.begin(), inv.end());
    return wrapped;
}

}  // namespace eulerweft
