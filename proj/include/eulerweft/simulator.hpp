#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "eulerweft/enumerators.hpp"
#include "eulerweft/gateop.hpp"

namespace eulerweft {

inline constexpr std::size_t kMaxSimQubits = 24;

/// Dense statevector, basis index bit q = qubit q. The real variant covers
/// sigma~ circuits and CNOTs; Pauli rotations need the complex one.
struct RealState {
    std::size_t qubits = 0;
    std::vector<double> amps;

    static RealState zero_state(std::size_t n);  // |0...0>, CapExceeded past kMaxSimQubits
    double norm() const;
};

struct ComplexState {
    std::size_t qubits = 0;
    std::vector<std::complex<double>> amps;

    static ComplexState zero_state(std::size_t n);
    double norm() const;
};

void apply(RealState& state, const GateOp& op);
void apply(ComplexState& state, const GateOp& op);

/// Apply op on the subspace where the control qubit is 1.
void apply_controlled(RealState& state, std::size_t control, const GateOp& op);
void apply_controlled(ComplexState& state, std::size_t control, const GateOp& op);

void apply_hadamard(RealState& state, std::size_t q);
void apply_hadamard(ComplexState& state, std::size_t q);
/// S^dagger: |1> picks up a -i phase (imaginary-part Hadamard test).
void apply_sdg(ComplexState& state, std::size_t q);

bool sequence_needs_complex(const std::vector<GateOp>& seq);
RealState run_real(const std::vector<GateOp>& seq, std::size_t qubits);
ComplexState run_complex(const std::vector<GateOp>& seq, std::size_t qubits);

/// <0...0| U |0...0> by direct gate application (real path).
double amplitude_zero(const CircuitMatrix& c, const GateSpec& g);

/// The same amplitude through the kernel expansion:
/// gamma^{-N} * sum over ker(CH) of (-1)^{h_a} (prod of chosen gate signs)
/// alpha^{N-|a|} beta^{|a|}.
double amplitude_via_expansion(const CircuitMatrix& c, const GateSpec& g,
                               const EvalOptions& opts = {});

/// Hoeffding count for a +-1-valued estimator with eps/2 slack:
/// ceil(ln(2/delta) / (2 (eps/2)^2)). Throws InvalidTolerance outside (0,1).
std::uint64_t required_samples(double epsilon, double delta);

struct EstimateResult {
    double estimate = 0.0;
    double epsilon = 0.0;
    double delta = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Simulated Hadamard test: builds the (n+1)-qubit interference circuit
/// (H on the ancilla, controlled-U, H), reads the exact ancilla
/// distribution from the statevector, then draws the Hoeffding-mandated
/// number of Bernoulli samples from it. Estimates Re<0|U|0> (Im with
/// imaginary_part, complex path only).
EstimateResult hadamard_test(const std::vector<GateOp>& u, std::size_t qubits, double epsilon,
                             double delta, std::uint64_t seed, bool imaginary_part = false);
EstimateResult hadamard_test(const CircuitMatrix& c, const GateSpec& g, double epsilon,
                             double delta, std::uint64_t seed);

struct DecisionResult {
    double p_zero = 0.0;   // ancilla marginal
    double p_one = 0.0;
    double residual = 0.0;  // probability mass outside |0...0> x ancilla
};

/// Execute a decision_wrap sequence from |0...0> and report the ancilla
/// marginal plus the residual weight outside the uncomputed register.
DecisionResult run_decision(const std::vector<GateOp>& wrapped, std::size_t total_qubits);

}  // namespace eulerweft
