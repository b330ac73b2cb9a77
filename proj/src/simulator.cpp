#include "eulerweft/simulator.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace eulerweft {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::size_t checked_dim(std::size_t n) {
    if (n > kMaxSimQubits)
        throw CapExceeded("statevector: " + std::to_string(n) + " qubits exceed the " +
                          std::to_string(kMaxSimQubits) + "-qubit limit");
    return std::size_t(1) << n;
}

// out[s] = a*v[s] + b*(sigma~ v)[s], restricted to indices where
// (s & control_mask) == control_mask. sigma~ acts by
// (sigma~ v)[s] = (-1)^{z.(s^x)} v[s^x].
template <typename T>
void sigma_tilde_mix(std::vector<T>& amps, std::uint64_t z, std::uint64_t x, double a, double b,
                     std::uint64_t control_mask) {
    std::size_t dim = amps.size();
    if (x == 0) {
        for (std::size_t s = 0; s < dim; ++s) {
            if ((s & control_mask) != control_mask) continue;
            double sgn = (std::popcount(s & z) & 1) ? -b : b;
            amps[s] = a * amps[s] + sgn * amps[s];
        }
        return;
    }
    for (std::size_t s = 0; s < dim; ++s) {
        if ((s & control_mask) != control_mask) continue;
        std::size_t t = s ^ x;
        if (t < s) continue;
        T vs = amps[s], vt = amps[t];
        T ss = (std::popcount(t & z) & 1) ? -vt : vt;
        T st = (std::popcount(s & z) & 1) ? -vs : vs;
        amps[s] = a * vs + b * ss;
        amps[t] = a * vt + b * st;
    }
}

template <typename T>
void apply_sigma_gate(std::vector<T>& amps, std::size_t qubits, const SigmaTildeGate& g,
                      std::uint64_t control_mask) {
    if (g.word.qubits() != qubits)
        throw DimensionMismatch("apply: gate word does not match the register size");
    double gamma = g.gamma();
    if (!(gamma > 0)) throw InvalidCircuit("apply: gate with zero gamma");
    sigma_tilde_mix(amps, g.word.z_mask(), g.word.x_mask(), g.alpha / gamma,
                    g.sign * g.beta / gamma, control_mask);
}

void apply_rotation(std::vector<std::complex<double>>& amps, std::size_t qubits,
                    const PauliRotation& r, std::uint64_t control_mask) {
    if (r.word.qubits() != qubits)
        throw DimensionMismatch("apply: rotation word does not match the register size");
    std::uint64_t z = r.word.z_mask(), x = r.word.x_mask();
    double c = std::cos(r.theta / 2.0);
    // sigma = i^{|b|_Y} sigma~, so the off-diagonal factor is
    // -i sin(theta/2) i^{y mod 4}.
    static constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> pref =
        std::complex<double>(0, -1) * std::sin(r.theta / 2.0) * kIPow[r.word.y_count() % 4];
    std::size_t dim = amps.size();
    if (x == 0) {
        for (std::size_t s = 0; s < dim; ++s) {
            if ((s & control_mask) != control_mask) continue;
            std::complex<double> d = (std::popcount(s & z) & 1) ? c - pref : c + pref;
            amps[s] *= d;
        }
        return;
    }
    for (std::size_t s = 0; s < dim; ++s) {
        if ((s & control_mask) != control_mask) continue;
        std::size_t t = s ^ x;
        if (t < s) continue;
        std::complex<double> vs = amps[s], vt = amps[t];
        std::complex<double> ss = (std::popcount(t & z) & 1) ? -vt : vt;
        std::complex<double> st = (std::popcount(s & z) & 1) ? -vs : vs;
        amps[s] = c * vs + pref * ss;
        amps[t] = c * vt + pref * st;
    }
}

template <typename T>
void apply_cnot(std::vector<T>& amps, std::size_t qubits, const Cnot& g,
                std::uint64_t control_mask) {
    if (g.control >= qubits || g.target >= qubits || g.control == g.target)
        throw IndexOutOfRange("apply: CNOT qubit indices out of range");
    std::uint64_t cbit = std::uint64_t(1) << g.control;
    std::uint64_t tbit = std::uint64_t(1) << g.target;
    std::size_t dim = amps.size();
    for (std::size_t s = 0; s < dim; ++s) {
        if ((s & control_mask) != control_mask) continue;
        if ((s & cbit) && !(s & tbit)) std::swap(amps[s], amps[s | tbit]);
    }
}

template <typename State>
void apply_any(State& state, const GateOp& op, std::uint64_t control_mask) {
    if (const auto* g = std::get_if<SigmaTildeGate>(&op)) {
        apply_sigma_gate(state.amps, state.qubits, *g, control_mask);
    } else if (const auto* r = std::get_if<PauliRotation>(&op)) {
        if constexpr (std::is_same_v<State, ComplexState>) {
            apply_rotation(state.amps, state.qubits, *r, control_mask);
        } else {
            (void)r;
            throw std::invalid_argument("apply: Pauli rotations need the complex path");
        }
    } else {
        apply_cnot(state.amps, state.qubits, std::get<Cnot>(op), control_mask);
    }
}

template <typename T>
void hadamard_impl(std::vector<T>& amps, std::size_t qubits, std::size_t q) {
    if (q >= qubits) throw IndexOutOfRange("apply_hadamard: qubit out of range");
    std::uint64_t bit = std::uint64_t(1) << q;
    std::size_t dim = amps.size();
    for (std::size_t s = 0; s < dim; ++s) {
        if (s & bit) continue;
        T lo = amps[s], hi = amps[s | bit];
        amps[s] = (lo + hi) * kInvSqrt2;
        amps[s | bit] = (lo - hi) * kInvSqrt2;
    }
}

}  // namespace

RealState RealState::zero_state(std::size_t n) {
    RealState st{n, std::vector<double>(checked_dim(n), 0.0)};
    st.amps[0] = 1.0;
    return st;
}

double RealState::norm() const {
    double acc = 0.0;
    for (double a : amps) acc += a * a;
    return std::sqrt(acc);
}

ComplexState ComplexState::zero_state(std::size_t n) {
    ComplexState st{n, std::vector<std::complex<double>>(checked_dim(n), 0.0)};
    st.amps[0] = 1.0;
    return st;
}

double ComplexState::norm() const {
    double acc = 0.0;
    for (const auto& a : amps) acc += std::norm(a);
    return std::sqrt(acc);
}

void apply(RealState& state, const GateOp& op) { apply_any(state, op, 0); }
void apply(ComplexState& state, const GateOp& op) { apply_any(state, op, 0); }

namespace {

// The controlled op must act as identity on the control wire, or the pair
// structure of the subspace update breaks.
void check_control_disjoint(std::size_t control, const GateOp& op) {
    if (const auto* g = std::get_if<SigmaTildeGate>(&op)) {
        if (control < g->word.qubits() && g->word.pauli_at(control) != 'I')
            throw InvalidChoice("apply_controlled: op touches the control qubit");
    } else if (const auto* r = std::get_if<PauliRotation>(&op)) {
        if (control < r->word.qubits() && r->word.pauli_at(control) != 'I')
            throw InvalidChoice("apply_controlled: op touches the control qubit");
    } else {
        const auto& cx = std::get<Cnot>(op);
        if (cx.control == control || cx.target == control)
            throw InvalidChoice("apply_controlled: op touches the control qubit");
    }
}

}  // namespace

void apply_controlled(RealState& state, std::size_t control, const GateOp& op) {
    if (control >= state.qubits) throw IndexOutOfRange("apply_controlled: control out of range");
    check_control_disjoint(control, op);
    apply_any(state, op, std::uint64_t(1) << control);
}

void apply_controlled(ComplexState& state, std::size_t control, const GateOp& op) {
    if (control >= state.qubits) throw IndexOutOfRange("apply_controlled: control out of range");
    check_control_disjoint(control, op);
    apply_any(state, op, std::uint64_t(1) << control);
}

void apply_hadamard(RealState& state, std::size_t q) { hadamard_impl(state.amps, state.qubits, q); }
void apply_hadamard(ComplexState& state, std::size_t q) {
    hadamard_impl(state.amps, state.qubits, q);
}

void apply_sdg(ComplexState& state, std::size_t q) {
    if (q >= state.qubits) throw IndexOutOfRange("apply_sdg: qubit out of range");
    std::uint64_t bit = std::uint64_t(1) << q;
    for (std::size_t s = 0; s < state.amps.size(); ++s)
        if (s & bit) state.amps[s] *= std::complex<double>(0, -1);
}

bool sequence_needs_complex(const std::vector<GateOp>& seq) {
    for (const GateOp& op : seq)
        if (std::holds_alternative<PauliRotation>(op)) return true;
    return false;
}

RealState run_real(const std::vector<GateOp>& seq, std::size_t qubits) {
    RealState st = RealState::zero_state(qubits);
    for (const GateOp& op : seq) apply(st, op);
    return st;
}

ComplexState run_complex(const std::vector<GateOp>& seq, std::size_t qubits) {
    ComplexState st = ComplexState::zero_state(qubits);
    for (const GateOp& op : seq) apply(st, op);
    return st;
}

double amplitude_zero(const CircuitMatrix& c, const GateSpec& g) {
    RealState st = run_real(to_gate_sequence(c, g), c.qubits());
    return st.amps[0];
}

double amplitude_via_expansion(const CircuitMatrix& c, const GateSpec& g,
                               const EvalOptions& opts) {
    if (g.gates() != c.gates())
        throw DimensionMismatch("amplitude_via_expansion: gate spec size mismatch");
    std::size_t n = c.gates();
    BitVector negated(n);
    for (std::size_t k = 0; k < n; ++k)
        if (g.signs[k] < 0) negated.set(k, true);
    SignedPolynomial table =
        kernel_signed_table(ch_matrix(c), phase_form(c).lower, &negated, opts);
    double gamma = g.gamma();
    double acc = 0.0;
    for (std::size_t w = 0; w <= n; ++w) {
        double c_w = table[w].convert_to<double>();
        if (c_w == 0.0) continue;
        acc += c_w * std::pow(g.alpha, double(n - w)) * std::pow(g.beta, double(w));
    }
    return acc / std::pow(gamma, double(n));
}

std::uint64_t required_samples(double epsilon, double delta) {
    if (!(epsilon > 0) || !(epsilon < 1) || !(delta > 0) || !(delta < 1))
        throw InvalidTolerance("hadamard test: epsilon and delta must lie in (0,1)");
    double half = epsilon / 2.0;
    return static_cast<std::uint64_t>(std::ceil(std::log(2.0 / delta) / (2.0 * half * half)));
}

namespace {

// Ancilla-0 probability of the interference circuit, built and run once.
template <typename State>
double interference_p0(State state, std::size_t ancilla, const std::vector<GateOp>& u,
                       bool imaginary_part) {
    apply_hadamard(state, ancilla);
    if constexpr (std::is_same_v<State, ComplexState>) {
        if (imaginary_part) apply_sdg(state, ancilla);
    } else {
        (void)imaginary_part;
    }
    for (const GateOp& op : u) apply_controlled(state, ancilla, op);
    apply_hadamard(state, ancilla);
    std::uint64_t bit = std::uint64_t(1) << ancilla;
    double p0 = 0.0;
    for (std::size_t s = 0; s < state.amps.size(); ++s)
        if (!(s & bit)) {
            if constexpr (std::is_same_v<State, ComplexState>)
                p0 += std::norm(state.amps[s]);
            else
                p0 += state.amps[s] * state.amps[s];
        }
    return p0;
}

// Uniform double in [0,1) from the top 53 bits; pinned to the mt19937_64
// stream so runs are reproducible across platforms.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

EstimateResult hadamard_test(const std::vector<GateOp>& u, std::size_t qubits, double epsilon,
                             double delta, std::uint64_t seed, bool imaginary_part) {
    std::uint64_t samples = required_samples(epsilon, delta);
    std::size_t total = qubits + 1;
    std::vector<GateOp> lifted = extend_sequence(u, total);
    double p0;
    if (imaginary_part || sequence_needs_complex(u))
        p0 = interference_p0(ComplexState::zero_state(total), qubits, lifted, imaginary_part);
    else
        p0 = interference_p0(RealState::zero_state(total), qubits, lifted, false);

    std::mt19937_64 rng(seed);
    std::uint64_t zeros = 0;
    for (std::uint64_t i = 0; i < samples; ++i)
        if (uniform01(rng) < p0) ++zeros;
    double estimate = 2.0 * static_cast<double>(zeros) / static_cast<double>(samples) - 1.0;
    return {estimate, epsilon, delta, samples, seed};
}

EstimateResult hadamard_test(const CircuitMatrix& c, const GateSpec& g, double epsilon,
                             double delta, std::uint64_t seed) {
    return hadamard_test(to_gate_sequence(c, g), c.qubits(), epsilon, delta, seed, false);
}

DecisionResult run_decision(const std::vector<GateOp>& wrapped, std::size_t total_qubits) {
    if (total_qubits == 0) throw DimensionMismatch("run_decision: empty register");
    std::uint64_t ancilla_bit = std::uint64_t(1) << (total_qubits - 1);
    DecisionResult res;
    if (sequence_needs_complex(wrapped)) {
        ComplexState st = run_complex(wrapped, total_qubits);
        for (std::size_t s = 0; s < st.amps.size(); ++s)
            ((s & ancilla_bit) ? res.p_one : res.p_zero) += std::norm(st.amps[s]);
        res.residual = 1.0 - std::norm(st.amps[0]) - std::norm(st.amps[ancilla_bit]);
    } else {
        RealState st = run_real(wrapped, total_qubits);
        for (std::size_t s = 0; s < st.amps.size(); ++s)
            ((s & ancilla_bit) ? res.p_one : res.p_zero) += st.amps[s] * st.amps[s];
        res.residual =
            1.0 - st.amps[0] * st.amps[0] - st.amps[ancilla_bit] * st.amps[ancilla_bit];
    }
    if (res.residual < 0) res.residual = 0;
    return res;
}

}  // namespace eulerweft
