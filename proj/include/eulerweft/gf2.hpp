#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "eulerweft/errors.hpp"

namespace eulerweft {

/// Dense bit vector over GF(2), packed LSB-first into 64-bit words.
/// Padding bits past size() are kept zero so equality and word-level
/// reductions work without masking at each use site.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVector from_string(const std::string& bits);  // e.g. "0110"

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t bit = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t popcount() const;
    bool is_zero() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    BitVector operator&(const BitVector& other) const;
    bool operator==(const BitVector&) const = default;

    /// GF(2) inner product: parity of the AND of the two vectors.
    static bool dot(const BitVector& a, const BitVector& b);

    std::string str() const;
    const std::vector<std::uint64_t>& words() const { return words_; }
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;

    friend class BitMatrix;
};

/// Dense GF(2) matrix, row-major with bit-packed rows.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t bit = std::uint64_t(1) << (c & 63);
        if (v)
            data_[r * stride_ + (c >> 6)] |= bit;
        else
            data_[r * stride_ + (c >> 6)] &= ~bit;
    }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    BitVector column(std::size_t c) const;

    /// row[dst] ^= row[src]
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transposed() const;
    BitVector mul(const BitVector& v) const;   // M v, throws LengthMismatch
    BitMatrix mul(const BitMatrix& o) const;

    bool is_zero() const;
    bool operator==(const BitMatrix&) const = default;

    /// Text form: first line "rows cols", then one line of space-separated
    /// 0/1 digits per row. Lines starting with '#' and blank lines are
    /// skipped on input. Round-trips bit-exactly.
    std::string str() const;
    void write(std::ostream& os) const;
    static BitMatrix parse(std::istream& is);
    static BitMatrix parse(const std::string& text);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RrefResult {
    std::size_t rank = 0;
    BitMatrix rref;
    std::vector<std::size_t> pivots;  // pivot column of each pivot row
};

/// Reduced row-echelon form over GF(2). Zero and degenerate matrices are
/// fine (rank 0).
RrefResult rank_and_rref(const BitMatrix& m);

/// Basis of { v : M v = 0 } with one basis vector per free column, ordered
/// by free-column index. Each basis vector is the only one with a 1 in its
/// own free column, so the set is independent by construction.
struct KernelBasis {
    std::size_t ambient_dim = 0;
    std::vector<BitVector> basis;
    std::size_t free_count() const { return basis.size(); }
};

KernelBasis kernel_basis(const BitMatrix& m);

/// Default ceiling on kernel enumeration: 2^30 visits is the practical
/// desk-scale limit. Hard ceiling 60 keeps the int64 coefficient
/// accumulators in the enumerators provably exact.
inline constexpr int kDefaultEnumCap = 30;
inline constexpr int kMaxEnumCap = 60;

/// Walk Gray-code positions [t_begin, t_end) of the kernel spanned by kb.
/// step(current, flipped) is called once per position; flipped is the basis
/// index toggled relative to the previous position, or -1 for the first
/// call (whose element is reconstructed from t_begin directly).
template <typename Step>
void walk_kernel_range(const KernelBasis& kb, std::uint64_t t_begin, std::uint64_t t_end,
                       Step&& step) {
    BitVector current(kb.ambient_dim);
    std::uint64_t start_code = t_begin ^ (t_begin >> 1);
    for (std::size_t i = 0; i < kb.free_count(); ++i)
        if ((start_code >> i) & 1) current ^= kb.basis[i];
    if (t_begin >= t_end) return;
    const BitVector& view = current;
    step(view, -1);
    for (std::uint64_t t = t_begin + 1; t < t_end; ++t) {
        int i = std::countr_zero(t);
        current ^= kb.basis[static_cast<std::size_t>(i)];
        step(view, i);
    }
}

/// Visit every kernel element exactly once, zero vector first, in
/// binary-reflected Gray order (consecutive elements differ by exactly one
/// basis vector). Throws CapExceeded when free_count > cap.
void enumerate_kernel(const KernelBasis& kb, const std::function<void(const BitVector&)>& visit,
                      int cap = kDefaultEnumCap);

}  // namespace eulerweft
