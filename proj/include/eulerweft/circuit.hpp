#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eulerweft/pauli.hpp"

namespace eulerweft {

/// Binary circuit encoding: a 2n x N matrix whose k-th column is the
/// two-bit word of gate k. Gate k is applied k-th (column 0 first).
class CircuitMatrix {
  public:
    CircuitMatrix() = default;
    CircuitMatrix(std::size_t qubits, BitMatrix h);

    std::size_t qubits() const { return qubits_; }
    std::size_t gates() const { return h_.cols(); }
    const BitMatrix& h() const { return h_; }

    PauliWord column_pauli(std::size_t k) const;  // IndexOutOfRange
    /// z / x parts of column k as length-n vectors (vertex-indexed).
    BitVector column_z(std::size_t k) const;
    BitVector column_x(std::size_t k) const;

    /// Columns reversed (used by adjoints).
    CircuitMatrix reversed() const;

    bool operator==(const CircuitMatrix&) const = default;

    /// Matrix text format preceded by a "# qubits=n gates=N" comment.
    std::string str() const;
    void write(std::ostream& os) const;
    static CircuitMatrix parse(std::istream& is);
    static CircuitMatrix parse(const std::string& text);

  private:
    std::size_t qubits_ = 0;
    BitMatrix h_;
};

enum class GateForm {
    PaperAnsatz,  // (lambda*I + sigma~)/sqrt(1+lambda^2)
    EdgeWeight,   // (I + lambda*sigma~)/sqrt(1+lambda^2)
};

GateForm gate_form_from_string(const std::string& s);  // "paper" | "edge"
std::string to_string(GateForm form);

/// Uniform gate family (alpha*I + s_k*beta*sigma~_{b_k})/gamma with a
/// per-gate sign s_k. alpha = 0 is allowed (pure sigma~ gates); gamma must
/// be positive.
struct GateSpec {
    double alpha = 1.0;
    double beta = 1.0;
    std::vector<std::int8_t> signs;  // +1 / -1 per gate

    GateSpec() = default;
    GateSpec(double alpha_, double beta_, std::size_t gates);

    double gamma() const;
    std::size_t gates() const { return signs.size(); }

    static GateSpec for_form(GateForm form, double lambda, std::size_t gates);
};

struct ColumnIssue {
    std::size_t column;
    std::string reason;
};

struct ValidationReport {
    bool valid = true;                // odd Y-count in every column
    bool graph_restricted_ok = true;  // exactly one Y, at most one X per column
    std::vector<ColumnIssue> issues;
};

/// Report-style check: every violating column is listed with its reason.
/// graph_restricted additionally enforces the one-Y / at-most-one-X shape.
ValidationReport validate(const CircuitMatrix& c, bool graph_restricted);

/// Apply the C block map columnwise: odd output rows (0-indexed 2i) take the
/// x rows of H (0-indexed 2i+1); x rows of the output are zero.
BitMatrix ch_matrix(const CircuitMatrix& c);

/// Rotation angle realized by a gate of the given form at this lambda:
/// PaperAnsatz  -> 2*acos(lambda/sqrt(1+lambda^2))
/// EdgeWeight   -> 2*asin(lambda/sqrt(1+lambda^2))
/// Throws NonPositiveLambda for lambda <= 0.
double gate_angle(double lambda, GateForm form);

/// Inverse circuit: columns reversed, per-gate signs flipped. The realized
/// operator is the transpose of the original.
std::pair<CircuitMatrix, GateSpec> adjoint(const CircuitMatrix& c, const GateSpec& g);

}  // namespace eulerweft
