#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eulerweft/enumerators.hpp"

namespace eulerweft {

/// Spin-glass instance on an ordinary multigraph: size-2 edges only (loops
/// would only shift the energy and are rejected), per-edge coupling
/// magnitude |J| > 0, sign bits w (0 = ferromagnetic +J, 1 =
/// antiferromagnetic -J) and inverse temperature beta > 0.
struct IsingInstance {
    Hypergraph graph;
    std::vector<double> magnitudes;
    BitVector signs;
    double beta = 1.0;

    IsingInstance() = default;
    IsingInstance(Hypergraph g, double magnitude, BitVector w, double beta_);
    IsingInstance(Hypergraph g, std::vector<double> mags, BitVector w, double beta_);

    std::size_t edge_count() const { return graph.edge_count(); }
    std::size_t vertex_count() const { return graph.vertex_count; }

    /// Signed coupling J_e = (-1)^{w_e} |J_e|.
    double coupling(std::size_t e) const {
        return signs.get(e) ? -magnitudes[e] : magnitudes[e];
    }
    bool uniform_magnitude() const;

    /// Graph format followed by "J <value>", "beta <value>",
    /// "w <bitstring>" lines (w defaults to all-ferromagnetic).
    std::string str() const;
    void write(std::ostream& os) const;
    static IsingInstance parse(std::istream& is);
    static IsingInstance parse(const std::string& text);
};

struct SpinConfig {
    std::vector<int> spins;  // +1 / -1 per vertex
};

/// H(sigma) = -sum_e J_e sigma_i sigma_j. Throws DimensionMismatch.
double energy(const IsingInstance& inst, const SpinConfig& sigma);

inline constexpr std::size_t kMaxDirectSpins = 24;

/// Z by direct enumeration of all 2^|V| spin configurations.
double partition_direct(const IsingInstance& inst, const EvalOptions& opts = {});

/// Z via the high-temperature expansion: 2^|V| prod_e cosh(beta J_e) times
/// the kernel sum of per-edge tanh(beta J_e) weights.
double partition_vdw(const IsingInstance& inst, const EvalOptions& opts = {});

/// Z via the weight-enumerator form 2^|V| (1-lambda^2)^{-|E|/2}
/// S(A, dg(w), lambda, 1) with lambda = tanh(beta J). Requires a uniform
/// coupling magnitude (throws NonUniformCoupling otherwise).
double partition_qwgt(const IsingInstance& inst, const EvalOptions& opts = {});

}  // namespace eulerweft
