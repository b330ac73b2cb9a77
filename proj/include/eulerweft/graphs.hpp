#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eulerweft/circuit.hpp"

namespace eulerweft {

/// Multigraph / hypergraph with ordered edges (edge order = column order of
/// the incidence matrix). An edge is a sorted list of distinct vertex
/// indices; size 1 is a loop, size 2 an ordinary edge, larger a hyperedge.
/// Parallel edges are allowed.
struct Hypergraph {
    std::size_t vertex_count = 0;
    std::vector<std::vector<int>> edges;

    std::size_t edge_count() const { return edges.size(); }
    void check() const;  // throws InvalidChoice on bad vertex indices / dup vertices

    bool operator==(const Hypergraph&) const = default;

    /// Text form: "v <vertex_count>", then one line per edge of 1-based
    /// vertex indices.
    std::string str() const;
    void write(std::ostream& os) const;
    static Hypergraph parse(std::istream& is);
    static Hypergraph parse(const std::string& text);
};

/// |V| x |E| incidence matrix; column e has a 1 at each vertex of edge e
/// (a single 1 for a loop).
BitMatrix incidence_matrix(const Hypergraph& g);

/// Read the x rows of H as incidence rows, dropping all-zero rows as
/// isolated vertices. Throws InvalidCircuit if some column has no x bit.
Hypergraph graph_from_circuit(const CircuitMatrix& c);

/// Per-column lift freedom: which incident vertices become Y (odd-size
/// subset; a single vertex for ordinary edges) and which non-incident
/// vertices pick up a Z.
struct ColumnChoice {
    std::vector<int> y_vertices;
    std::vector<int> z_vertices;
    bool operator==(const ColumnChoice&) const = default;
};

struct LiftChoice {
    std::vector<ColumnChoice> columns;
    bool operator==(const LiftChoice&) const = default;
};

/// Lexicographically first choice: Y on the lowest incident vertex of each
/// edge, no Z decorations.
LiftChoice canonical_lift_choice(const Hypergraph& g);

/// Build the 2|V| x |E| circuit whose x rows equal the incidence matrix and
/// whose z bits realize the choice. Throws InvalidChoice when the choice is
/// inconsistent with g (non-incident Y, even Y-cardinality, overlapping Z).
CircuitMatrix lift_to_circuit(const Hypergraph& g, const LiftChoice& choice);

/// Quadratic phase data of a circuit: lower holds the strictly lower
/// triangle of H^T C H (lower[j][k] = z_j . x_k for j > k), diag its
/// diagonal (the per-column Y parity, all ones for a valid circuit).
struct PhaseForm {
    BitMatrix lower;
    BitVector diag;
};

PhaseForm phase_form(const CircuitMatrix& c);

/// h_a = a^T lower a (mod 2). Throws LengthMismatch.
bool quad_phase(const PhaseForm& pf, const BitVector& a);

/// a^T (lower + lower^T) b — the bilinear form pairing quad_phase values:
/// h(a^b) = h(a) ^ h(b) ^ phase_bilinear(a, b).
bool phase_bilinear(const PhaseForm& pf, const BitVector& a, const BitVector& b);

/// Polynomial-time Euler-condition check: h_a = 0 for every a in ker(CH).
/// Vanishing on a kernel basis plus vanishing of the bilinear form on basis
/// pairs is equivalent to vanishing on the whole kernel.
bool euler_condition_poly(const CircuitMatrix& c);

/// Same check against a precomputed kernel basis of CH (the kernel depends
/// only on the incidence part, so searches reuse it across lifts).
bool euler_condition_with_kernel(const CircuitMatrix& c, const KernelBasis& kb);

enum class SearchStrategy { Exhaustive, Randomized };

struct EulerSearchOptions {
    SearchStrategy strategy = SearchStrategy::Exhaustive;
    std::uint64_t budget = std::uint64_t(1) << 20;  // max lifts tested
    int z_cap = 2;          // exhaustive mode: per-column Z-mask size limit
    std::uint64_t seed = 0;  // randomized mode
};

struct EulerSearchResult {
    enum class Status { Found, ProvedAbsent, BudgetExhausted };
    Status status = Status::ProvedAbsent;
    std::optional<CircuitMatrix> circuit;
    std::optional<LiftChoice> choice;
    std::uint64_t trials = 0;
};

/// Search lift choices for one satisfying the Euler condition. Exhaustive
/// mode walks all Y-placements with empty Z-masks first, then Z-masks up to
/// z_cap per column, in deterministic lexicographic order; completing the
/// space without a hit proves absence (within that space). Randomized mode
/// draws uniform choices over the full Z space until the budget runs out.
EulerSearchResult find_euler_circuit(const Hypergraph& g, const EulerSearchOptions& opts = {});

}  // namespace eulerweft
