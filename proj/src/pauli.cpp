#include "eulerweft/pauli.hpp"

#include <bit>

namespace eulerweft {

PauliWord::PauliWord(std::size_t qubits, BitVector bits) : qubits_(qubits), bits_(std::move(bits)) {
    if (bits_.size() != 2 * qubits_)
        throw LengthMismatch("PauliWord: bit vector must have length 2*qubits");
}

PauliWord PauliWord::from_string(const std::string& s) {
    PauliWord p(s.size());
    for (std::size_t q = 0; q < s.size(); ++q) p.set_pauli(q, s[q]);
    return p;
}

void PauliWord::set_pauli(std::size_t q, char p) {
    bool z = false, x = false;
    switch (p) {
        case 'I': break;
        case 'X': x = true; break;
        case 'Y': z = x = true; break;
        case 'Z': z = true; break;
        default: throw ParseError(std::string("unknown Pauli letter '") + p + "'");
    }
    bits_.set(2 * q, z);
    bits_.set(2 * q + 1, x);
}

char PauliWord::pauli_at(std::size_t q) const {
    if (q >= qubits_) throw IndexOutOfRange("pauli_at: qubit index out of range");
    bool z = z_bit(q), x = x_bit(q);
    if (z && x) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

std::string PauliWord::str() const {
    std::string s(qubits_, 'I');
    for (std::size_t q = 0; q < qubits_; ++q) s[q] = pauli_at(q);
    return s;
}

std::size_t PauliWord::y_count() const {
    std::size_t n = 0;
    for (std::size_t q = 0; q < qubits_; ++q)
        if (z_bit(q) && x_bit(q)) ++n;
    return n;
}

std::uint64_t PauliWord::z_mask() const {
    if (qubits_ > 64) throw DimensionMismatch("z_mask: more than 64 qubits");
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < qubits_; ++q)
        if (z_bit(q)) m |= std::uint64_t(1) << q;
    return m;
}

std::uint64_t PauliWord::x_mask() const {
    if (qubits_ > 64) throw DimensionMismatch("x_mask: more than 64 qubits");
    std::uint64_t m = 0;
    for (std::size_t q = 0; q < qubits_; ++q)
        if (x_bit(q)) m |= std::uint64_t(1) << q;
    return m;
}

PauliWord PauliWord::extended(std::size_t new_qubits) const {
    if (new_qubits < qubits_) throw DimensionMismatch("extended: cannot shrink a Pauli word");
    PauliWord out(new_qubits);
    for (std::size_t q = 0; q < qubits_; ++q) {
        out.bits_.set(2 * q, z_bit(q));
        out.bits_.set(2 * q + 1, x_bit(q));
    }
    return out;
}

bool c_form(const PauliWord& b1, const PauliWord& b2) {
    if (b1.qubits() != b2.qubits()) throw LengthMismatch("c_form: qubit count mismatch");
    bool acc = false;
    for (std::size_t q = 0; q < b1.qubits(); ++q) acc ^= b1.z_bit(q) && b2.x_bit(q);
    return acc;
}

TildeProduct tilde_product(const PauliWord& b1, const PauliWord& b2) {
    if (b1.qubits() != b2.qubits()) throw LengthMismatch("tilde_product: qubit count mismatch");
    TildeProduct out{c_form(b1, b2) ? -1 : +1, PauliWord(b1.qubits(), b1.bits() ^ b2.bits())};
    return out;
}

int zero_expectation(const PauliWord& p) {
    for (std::size_t q = 0; q < p.qubits(); ++q)
        if (p.x_bit(q)) return 0;
    return 1;
}

namespace {

template <typename T>
void apply_sigma_tilde_impl(const PauliWord& p, std::span<T> amps) {
    std::size_t dim = std::size_t(1) << p.qubits();
    if (amps.size() != dim) throw DimensionMismatch("apply_sigma_tilde: state dimension mismatch");
    std::uint64_t z = p.z_mask(), x = p.x_mask();
    if (x == 0) {
        for (std::size_t s = 0; s < dim; ++s)
            if (std::popcount(s & z) & 1) amps[s] = -amps[s];
        return;
    }
    // Process each {s, s^x} pair once, from its smaller index.
    for (std::size_t s = 0; s < dim; ++s) {
        std::size_t t = s ^ x;
        if (t < s) continue;
        T vs = amps[s], vt = amps[t];
        // out[s] = (-1)^{z.(s^x)} in[s^x]
        amps[s] = (std::popcount(t & z) & 1) ? -vt : vt;
        amps[t] = (std::popcount(s & z) & 1) ? -vs : vs;
    }
}

}  // namespace

void apply_sigma_tilde(const PauliWord& p, std::span<double> amps) {
    apply_sigma_tilde_impl(p, amps);
}

void apply_sigma_tilde(const PauliWord& p, std::span<std::complex<double>> amps) {
    apply_sigma_tilde_impl(p, amps);
}

}  // namespace eulerweft
