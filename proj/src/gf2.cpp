#include "eulerweft/gf2.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace eulerweft {

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw ParseError("bit string may only contain 0/1, got '" + bits + "'");
    }
    return v;
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitVector::is_zero() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.len_ != len_) throw LengthMismatch("BitVector xor: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector BitVector::operator&(const BitVector& other) const {
    if (other.len_ != len_) throw LengthMismatch("BitVector and: length mismatch");
    BitVector out(len_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
    return out;
}

bool BitVector::dot(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_) throw LengthMismatch("BitVector dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) acc ^= a.words_[i] & b.words_[i];
    return std::popcount(acc) & 1;
}

std::string BitVector::str() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw LengthMismatch("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j] != 0);
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    for (std::size_t w = 0; w < stride_; ++w) v.words_[w] = data_[r * stride_ + w];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    if (v.size() != cols_) throw LengthMismatch("set_row: length mismatch");
    for (std::size_t w = 0; w < stride_; ++w) data_[r * stride_ + w] = v.words_[w];
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
    return v;
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < stride_; ++w) data_[dst * stride_ + w] ^= data_[src * stride_ + w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < stride_; ++w)
        std::swap(data_[a * stride_ + w], data_[b * stride_ + w]);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t w = 0; w < stride_; ++w) {
            std::uint64_t word = data_[r * stride_ + w];
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                t.set(w * 64 + static_cast<std::size_t>(b), r, true);
            }
        }
    return t;
}

BitVector BitMatrix::mul(const BitVector& v) const {
    if (v.size() != cols_) throw LengthMismatch("matrix-vector product: size mismatch");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < stride_; ++w) acc ^= data_[r * stride_ + w] & v.words_[w];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

BitMatrix BitMatrix::mul(const BitMatrix& o) const {
    if (o.rows_ != cols_) throw LengthMismatch("matrix product: inner dimension mismatch");
    BitMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t w = 0; w < stride_; ++w) {
            std::uint64_t word = data_[r * stride_ + w];
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                std::size_t k = w * 64 + static_cast<std::size_t>(b);
                for (std::size_t ow = 0; ow < out.stride_; ++ow)
                    out.data_[r * out.stride_ + ow] ^= o.data_[k * o.stride_ + ow];
            }
        }
    }
    return out;
}

bool BitMatrix::is_zero() const {
    for (std::uint64_t w : data_)
        if (w) return false;
    return true;
}

std::string BitMatrix::str() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

void BitMatrix::write(std::ostream& os) const {
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << (get(r, c) ? '1' : '0');
        }
        os << '\n';
    }
}

namespace {

bool next_content_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

BitMatrix BitMatrix::parse(std::istream& is) {
    std::string line;
    if (!next_content_line(is, line)) throw ParseError("matrix: missing header line");
    std::istringstream header(line);
    std::size_t rows = 0, cols = 0;
    if (!(header >> rows >> cols)) throw ParseError("matrix: header must be 'rows cols'");
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!next_content_line(is, line)) throw ParseError("matrix: missing row data");
        std::istringstream row(line);
        for (std::size_t c = 0; c < cols; ++c) {
            int v = -1;
            if (!(row >> v) || (v != 0 && v != 1))
                throw ParseError("matrix: row entries must be 0 or 1");
            m.set(r, c, v == 1);
        }
        int extra;
        if (row >> extra) throw ParseError("matrix: too many entries in row");
    }
    return m;
}

BitMatrix BitMatrix::parse(const std::string& text) {
    std::istringstream is(text);
    return parse(is);
}

RrefResult rank_and_rref(const BitMatrix& m) {
    RrefResult res;
    res.rref = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && !res.rref.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        res.rref.swap_rows(r, pivot);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && res.rref.get(i, c)) res.rref.xor_row(i, r);
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

KernelBasis kernel_basis(const BitMatrix& m) {
    RrefResult rr = rank_and_rref(m);
    KernelBasis kb;
    kb.ambient_dim = m.cols();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f, true);
        for (std::size_t pr = 0; pr < rr.pivots.size(); ++pr)
            if (rr.rref.get(pr, f)) v.set(rr.pivots[pr], true);
        kb.basis.push_back(std::move(v));
    }
    return kb;
}

void enumerate_kernel(const KernelBasis& kb, const std::function<void(const BitVector&)>& visit,
                      int cap) {
    int f = static_cast<int>(kb.free_count());
    if (cap > kMaxEnumCap) cap = kMaxEnumCap;
    if (f > cap)
        throw CapExceeded("kernel enumeration: " + std::to_string(f) +
                          " free dimensions exceed cap " + std::to_string(cap));
    std::uint64_t total = std::uint64_t(1) << f;
    walk_kernel_range(kb, 0, total, [&](const BitVector& a, int) { visit(a); });
}

}  // namespace eulerweft
