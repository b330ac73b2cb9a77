#include "eulerweft/circuit.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace eulerweft {

CircuitMatrix::CircuitMatrix(std::size_t qubits, BitMatrix h) : qubits_(qubits), h_(std::move(h)) {
    if (h_.rows() != 2 * qubits_)
        throw DimensionMismatch("CircuitMatrix: H must have 2*qubits rows");
}

PauliWord CircuitMatrix::column_pauli(std::size_t k) const {
    if (k >= gates()) throw IndexOutOfRange("column_pauli: gate index out of range");
    BitVector bits(2 * qubits_);
    for (std::size_t r = 0; r < 2 * qubits_; ++r) bits.set(r, h_.get(r, k));
    return PauliWord(qubits_, std::move(bits));
}

BitVector CircuitMatrix::column_z(std::size_t k) const {
    if (k >= gates()) throw IndexOutOfRange("column_z: gate index out of range");
    BitVector v(qubits_);
    for (std::size_t q = 0; q < qubits_; ++q) v.set(q, h_.get(2 * q, k));
    return v;
}

BitVector CircuitMatrix::column_x(std::size_t k) const {
    if (k >= gates()) throw IndexOutOfRange("column_x: gate index out of range");
    BitVector v(qubits_);
    for (std::size_t q = 0; q < qubits_; ++q) v.set(q, h_.get(2 * q + 1, k));
    return v;
}

CircuitMatrix CircuitMatrix::reversed() const {
    BitMatrix h(h_.rows(), h_.cols());
    for (std::size_t r = 0; r < h_.rows(); ++r)
        for (std::size_t c = 0; c < h_.cols(); ++c)
            if (h_.get(r, c)) h.set(r, h_.cols() - 1 - c, true);
    return CircuitMatrix(qubits_, std::move(h));
}

std::string CircuitMatrix::str() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

void CircuitMatrix::write(std::ostream& os) const {
    os << "# qubits=" << qubits_ << " gates=" << gates() << '\n';
    h_.write(os);
}

CircuitMatrix CircuitMatrix::parse(std::istream& is) {
    BitMatrix h = BitMatrix::parse(is);
    if (h.rows() % 2 != 0)
        throw ParseError("circuit matrix must have an even number of rows (two per qubit)");
    return CircuitMatrix(h.rows() / 2, std::move(h));
}

CircuitMatrix CircuitMatrix::parse(const std::string& text) {
    std::istringstream is(text);
    return parse(is);
}

GateForm gate_form_from_string(const std::string& s) {
    if (s == "paper") return GateForm::PaperAnsatz;
    if (s == "edge") return GateForm::EdgeWeight;
    throw ParseError("unknown gate form '" + s + "' (expected 'paper' or 'edge')");
}

std::string to_string(GateForm form) {
    return form == GateForm::PaperAnsatz ? "paper" : "edge";
}

GateSpec::GateSpec(double alpha_, double beta_, std::size_t gates)
    : alpha(alpha_), beta(beta_), signs(gates, +1) {
    if (!(gamma() > 0)) throw InvalidCircuit("GateSpec: alpha and beta must not both be zero");
}

double GateSpec::gamma() const { return std::sqrt(alpha * alpha + beta * beta); }

GateSpec GateSpec::for_form(GateForm form, double lambda, std::size_t gates) {
    if (!(lambda > 0)) throw NonPositiveLambda("gate spec requires lambda > 0");
    if (form == GateForm::PaperAnsatz) return GateSpec(lambda, 1.0, gates);
    return GateSpec(1.0, lambda, gates);
}

ValidationReport validate(const CircuitMatrix& c, bool graph_restricted) {
    ValidationReport rep;
    for (std::size_t k = 0; k < c.gates(); ++k) {
        std::size_t ys = 0, xs = 0;
        for (std::size_t q = 0; q < c.qubits(); ++q) {
            bool z = c.h().get(2 * q, k), x = c.h().get(2 * q + 1, k);
            if (z && x) ++ys;
            else if (x) ++xs;
        }
        if (ys % 2 == 0) {
            rep.valid = false;
            rep.issues.push_back({k, "even Y-count"});
        }
        if (graph_restricted) {
            if (ys > 1) {
                rep.graph_restricted_ok = false;
                rep.issues.push_back({k, "more than one Y"});
            }
            if (xs > 1) {
                rep.graph_restricted_ok = false;
                rep.issues.push_back({k, "more than one X"});
            }
        }
    }
    if (!rep.valid) rep.graph_restricted_ok = false;
    return rep;
}

BitMatrix ch_matrix(const CircuitMatrix& c) {
    BitMatrix ch(2 * c.qubits(), c.gates());
    for (std::size_t q = 0; q < c.qubits(); ++q)
        for (std::size_t k = 0; k < c.gates(); ++k)
            if (c.h().get(2 * q + 1, k)) ch.set(2 * q, k, true);
    return ch;
}

double gate_angle(double lambda, GateForm form) {
    if (!(lambda > 0)) throw NonPositiveLambda("gate_angle requires lambda > 0");
    double ratio = lambda / std::sqrt(1.0 + lambda * lambda);
    if (form == GateForm::PaperAnsatz) return 2.0 * std::acos(ratio);
    return 2.0 * std::asin(ratio);
}

std::pair<CircuitMatrix, GateSpec> adjoint(const CircuitMatrix& c, const GateSpec& g) {
    if (g.gates() != c.gates()) throw DimensionMismatch("adjoint: gate spec size mismatch");
    GateSpec out = g;
    for (std::size_t k = 0; k < g.gates(); ++k)
        out.signs[k] = static_cast<std::int8_t>(-g.signs[g.gates() - 1 - k]);
    return {c.reversed(), std::move(out)};
}

}  // namespace eulerweft
