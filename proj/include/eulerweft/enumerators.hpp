#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "eulerweft/graphs.hpp"

namespace eulerweft {

using BigInt = boost::multiprecision::cpp_int;

/// Integer-coefficient polynomial indexed by degree 0..N. Coefficients are
/// exact; floating evaluation happens only at the end.
class SignedPolynomial {
  public:
    SignedPolynomial() = default;
    explicit SignedPolynomial(std::size_t degree_bound) : coeffs_(degree_bound + 1) {}
    static SignedPolynomial from_coeffs(const std::vector<long long>& coeffs);

    std::size_t degree_bound() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    BigInt& operator[](std::size_t d) { return coeffs_.at(d); }
    const BigInt& operator[](std::size_t d) const { return coeffs_.at(d); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// sum_d c_d x^d
    double evaluate(double x) const;
    /// sum_d c_d x^d y^(N-d)
    double evaluate_bivariate(double x, double y) const;

    bool operator==(const SignedPolynomial&) const = default;
    std::string str() const;  // "[1, 0, 0, -1]"

  private:
    std::vector<BigInt> coeffs_;
};

struct EvalOptions {
    int cap = kDefaultEnumCap;
    int threads = 1;
};

/// S(A, B, x, y) = sum over {b : Ab = 0} of (-1)^{b^T B b} x^|b| y^(n-|b|),
/// all GF(2) arithmetic mod 2.
struct QwgtInstance {
    BitMatrix a;  // m x n constraint
    BitMatrix b;  // n x n quadratic form
    double x = 1.0;
    double y = 1.0;
};

/// Shared kernel-sum engine: coefficient d collects
/// sum over {a in ker(constraint), |a| = d} of (-1)^{a^T quad a + |a & negated|}.
/// The Gray-code walk updates the quadratic phase incrementally; chunked
/// walks re-derive their starting phase so the reduction parallelizes.
SignedPolynomial kernel_signed_table(const BitMatrix& constraint, const BitMatrix& quad,
                                     const BitVector* negated, const EvalOptions& opts = {});

/// Exact coefficient table of the QWGT by x-degree.
SignedPolynomial qwgt_table(const QwgtInstance& inst, const EvalOptions& opts = {});
double qwgt(const QwgtInstance& inst, const EvalOptions& opts = {});

/// Counts of even-degree edge subsets by size; all coefficients >= 0.
SignedPolynomial eulerian_genfunc(const Hypergraph& g, const EvalOptions& opts = {});

/// Signed variant: coefficient d is the sum of (-1)^{h_a} over kernel
/// vectors of CH with weight d. Throws InvalidCircuit on even-Y columns.
SignedPolynomial signed_genfunc(const CircuitMatrix& c, const EvalOptions& opts = {});

/// sum over even-degree edge subsets of the product of the chosen edges'
/// weights; reduces to eulerian_genfunc(lambda) when all weights equal.
double multivariate_genfunc(const Hypergraph& g, const std::vector<double>& weights,
                            const EvalOptions& opts = {});

}  // namespace eulerweft
