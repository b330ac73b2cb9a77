#pragma once

#include <complex>
#include <span>
#include <string>

#include "eulerweft/gf2.hpp"

namespace eulerweft {

/// A Pauli string on n qubits in the two-bit encoding: qubit q owns bits
/// (2q, 2q+1) of a length-2n vector, read as (z, x) with
/// (0,0)=I, (0,1)=X, (1,1)=Y, (1,0)=Z.
class PauliWord {
  public:
    PauliWord() = default;
    explicit PauliWord(std::size_t qubits) : qubits_(qubits), bits_(2 * qubits) {}
    PauliWord(std::size_t qubits, BitVector bits);

    /// "ZXY" reads qubit 1 leftmost.
    static PauliWord from_string(const std::string& s);

    std::size_t qubits() const { return qubits_; }
    const BitVector& bits() const { return bits_; }

    bool z_bit(std::size_t q) const { return bits_.get(2 * q); }
    bool x_bit(std::size_t q) const { return bits_.get(2 * q + 1); }
    void set_pauli(std::size_t q, char p);
    char pauli_at(std::size_t q) const;
    std::string str() const;

    /// Number of (1,1) pairs, i.e. Y factors.
    std::size_t y_count() const;
    bool is_identity() const { return bits_.is_zero(); }

    /// Per-qubit masks (qubit q -> bit q); requires qubits() <= 64.
    std::uint64_t z_mask() const;
    std::uint64_t x_mask() const;

    /// Same word padded with identities up to new_qubits.
    PauliWord extended(std::size_t new_qubits) const;

    bool operator==(const PauliWord&) const = default;

  private:
    std::size_t qubits_ = 0;
    BitVector bits_;
};

/// b1^T C b2 over GF(2), where C is block-diagonal [[0,1],[0,0]] per qubit.
/// Equals the dot product of b1's z-part with b2's x-part; c_form(b,b)
/// counts Y's mod 2.
bool c_form(const PauliWord& b1, const PauliWord& b2);

struct TildeProduct {
    int sign;  // +1 or -1
    PauliWord word;
};

/// sigma~_{b1} sigma~_{b2} = sign * sigma~_{b1 xor b2} with
/// sign = (-1)^{b1^T C b2}. Throws LengthMismatch on unequal qubit counts.
TildeProduct tilde_product(const PauliWord& b1, const PauliWord& b2);

/// <0...0| sigma~_p |0...0>: 1 iff every factor is I or Z, else 0.
int zero_expectation(const PauliWord& p);

/// In-place action of sigma~_p on packed amplitudes indexed by basis state
/// (qubit q = bit q): out[s] = (-1)^{z.(s^x)} in[s^x]. Real for real input.
/// Throws DimensionMismatch unless amps.size() == 2^qubits.
void apply_sigma_tilde(const PauliWord& p, std::span<double> amps);
void apply_sigma_tilde(const PauliWord& p, std::span<std::complex<double>> amps);

}  // namespace eulerweft
