#include "eulerweft/enumerators.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "eulerweft/parallel.hpp"

namespace eulerweft {

SignedPolynomial SignedPolynomial::from_coeffs(const std::vector<long long>& coeffs) {
    SignedPolynomial p(coeffs.empty() ? 0 : coeffs.size() - 1);
    for (std::size_t d = 0; d < coeffs.size(); ++d) p.coeffs_[d] = coeffs[d];
    return p;
}

double SignedPolynomial::evaluate(double x) const {
    double acc = 0.0;
    for (std::size_t d = coeffs_.size(); d-- > 0;)
        acc = acc * x + coeffs_[d].convert_to<double>();
    return acc;
}

double SignedPolynomial::evaluate_bivariate(double x, double y) const {
    double acc = 0.0;
    std::size_t n = degree_bound();
    double xp = 1.0;
    for (std::size_t d = 0; d <= n; ++d) {
        acc += coeffs_[d].convert_to<double>() * xp * std::pow(y, double(n - d));
        xp *= x;
    }
    return acc;
}

std::string SignedPolynomial::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (d) os << ", ";
        os << coeffs_[d];
    }
    os << ']';
    return os.str();
}

namespace {

int clamp_cap(int cap) { return cap > kMaxEnumCap ? kMaxEnumCap : cap; }

void check_enum_cap(const KernelBasis& kb, int cap) {
    if (static_cast<int>(kb.free_count()) > cap)
        throw CapExceeded("kernel sum: " + std::to_string(kb.free_count()) +
                          " free dimensions exceed cap " + std::to_string(cap) +
                          " (override the cap to force the exponential scan)");
}

}  // namespace

SignedPolynomial kernel_signed_table(const BitMatrix& constraint, const BitMatrix& quad,
                                     const BitVector* negated, const EvalOptions& opts) {
    std::size_t n = constraint.cols();
    if (quad.rows() != n || quad.cols() != n)
        throw DimensionMismatch("kernel sum: quadratic form must be n x n");
    if (negated && negated->size() != n)
        throw LengthMismatch("kernel sum: negation mask length mismatch");

    KernelBasis kb = kernel_basis(constraint);
    int cap = clamp_cap(opts.cap);
    check_enum_cap(kb, cap);
    std::size_t f = kb.free_count();
    std::uint64_t total = std::uint64_t(1) << f;

    // Per-basis-vector data for the incremental phase update:
    // q(a ^ v_i) = q(a) ^ q(v_i) ^ a^T (B + B^T) v_i, and the symmetrized
    // form kills its own diagonal, so the dot may use the post-flip a.
    BitMatrix quad_t = quad.transposed();
    std::vector<char> qv(f), negv(f);
    std::vector<BitVector> symv;
    symv.reserve(f);
    for (std::size_t i = 0; i < f; ++i) {
        const BitVector& v = kb.basis[i];
        qv[i] = BitVector::dot(v, quad.mul(v));
        symv.push_back(quad.mul(v) ^ quad_t.mul(v));
        negv[i] = negated ? BitVector::dot(v, *negated) : 0;
    }

    int threads = resolve_threads(opts.threads);
    std::size_t chunk_count =
        total < static_cast<std::uint64_t>(threads) ? static_cast<std::size_t>(total ? total : 1)
                                                    : static_cast<std::size_t>(threads);
    // int64 accumulators are exact: each chunk adds at most 2^cap <= 2^60
    // unit terms per degree.
    std::vector<std::vector<std::int64_t>> partial(chunk_count,
                                                   std::vector<std::int64_t>(n + 1, 0));

    parallel_chunks(total, threads, [&](std::size_t ci, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::int64_t>& local = partial[ci];
        bool q = false, np = false;
        walk_kernel_range(kb, begin, end, [&](const BitVector& a, int flipped) {
            if (flipped < 0) {
                q = BitVector::dot(a, quad.mul(a));
                np = negated ? BitVector::dot(a, *negated) : false;
            } else {
                q = q ^ (qv[flipped] != 0) ^ BitVector::dot(a, symv[flipped]);
                np = np ^ (negv[flipped] != 0);
            }
            local[a.popcount()] += (q ^ np) ? -1 : +1;
        });
    });

    SignedPolynomial out(n);
    for (const auto& local : partial)
        for (std::size_t d = 0; d <= n; ++d)
            if (local[d]) out[d] += local[d];
    return out;
}

SignedPolynomial qwgt_table(const QwgtInstance& inst, const EvalOptions& opts) {
    return kernel_signed_table(inst.a, inst.b, nullptr, opts);
}

double qwgt(const QwgtInstance& inst, const EvalOptions& opts) {
    return qwgt_table(inst, opts).evaluate_bivariate(inst.x, inst.y);
}

SignedPolynomial eulerian_genfunc(const Hypergraph& g, const EvalOptions& opts) {
    BitMatrix a = incidence_matrix(g);
    BitMatrix zero(g.edge_count(), g.edge_count());
    return kernel_signed_table(a, zero, nullptr, opts);
}

SignedPolynomial signed_genfunc(const CircuitMatrix& c, const EvalOptions& opts) {
    ValidationReport rep = validate(c, false);
    if (!rep.valid)
        throw InvalidCircuit("signed_genfunc: circuit has a column with even Y-count");
    return kernel_signed_table(ch_matrix(c), phase_form(c).lower, nullptr, opts);
}

double multivariate_genfunc(const Hypergraph& g, const std::vector<double>& weights,
                            const EvalOptions& opts) {
    if (weights.size() != g.edge_count())
        throw LengthMismatch("multivariate_genfunc: one weight per edge required");
    KernelBasis kb = kernel_basis(incidence_matrix(g));
    int cap = clamp_cap(opts.cap);
    check_enum_cap(kb, cap);
    std::uint64_t total = std::uint64_t(1) << kb.free_count();

    int threads = resolve_threads(opts.threads);
    std::size_t chunk_count =
        total < static_cast<std::uint64_t>(threads) ? static_cast<std::size_t>(total ? total : 1)
                                                    : static_cast<std::size_t>(threads);
    std::vector<double> partial(chunk_count, 0.0);

    parallel_chunks(total, threads, [&](std::size_t ci, std::uint64_t begin, std::uint64_t end) {
        double local = 0.0;
        walk_kernel_range(kb, begin, end, [&](const BitVector& a, int) {
            double prod = 1.0;
            const auto& words = a.words();
            for (std::size_t w = 0; w < words.size(); ++w) {
                std::uint64_t word = words[w];
                while (word) {
                    int b = std::countr_zero(word);
                    word &= word - 1;
                    prod *= weights[w * 64 + static_cast<std::size_t>(b)];
                }
            }
            local += prod;
        });
        partial[ci] = local;
    });

    double sum = 0.0;
    for (double p : partial) sum += p;
    return sum;
}

}  // namespace eulerweft
