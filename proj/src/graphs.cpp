#include "eulerweft/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace eulerweft {

void Hypergraph::check() const {
    for (const auto& e : edges) {
        if (e.empty()) throw InvalidChoice("hypergraph: empty edge");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || static_cast<std::size_t>(e[i]) >= vertex_count)
                throw InvalidChoice("hypergraph: vertex index out of range");
            if (i > 0 && e[i] <= e[i - 1])
                throw InvalidChoice("hypergraph: edge vertices must be sorted and distinct");
        }
    }
}

std::string Hypergraph::str() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

void Hypergraph::write(std::ostream& os) const {
    os << "v " << vertex_count << '\n';
    for (const auto& e : edges) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ' ';
            os << e[i] + 1;
        }
        os << '\n';
    }
}

namespace {

bool graph_content_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Hypergraph Hypergraph::parse(std::istream& is) {
    std::string line;
    if (!graph_content_line(is, line)) throw ParseError("graph: missing 'v <count>' header");
    std::istringstream header(line);
    std::string tag;
    std::size_t count = 0;
    if (!(header >> tag >> count) || tag != "v")
        throw ParseError("graph: first line must be 'v <vertex_count>'");
    Hypergraph g;
    g.vertex_count = count;
    std::streampos mark = is.tellg();
    while (graph_content_line(is, line)) {
        std::istringstream es(line);
        std::string first;
        es >> first;
        // Stop at a non-numeric line so instance files can append parameters.
        if (first.empty() || (!isdigit(static_cast<unsigned char>(first[0])))) {
            is.clear();
            is.seekg(mark);
            break;
        }
        es.clear();
        es.seekg(0);
        std::vector<int> edge;
        int v;
        while (es >> v) {
            if (v < 1) throw ParseError("graph: vertex indices are 1-based");
            edge.push_back(v - 1);
        }
        if (!es.eof()) throw ParseError("graph: malformed edge line '" + line + "'");
        std::sort(edge.begin(), edge.end());
        g.edges.push_back(std::move(edge));
        mark = is.tellg();
    }
    g.check();
    return g;
}

Hypergraph Hypergraph::parse(const std::string& text) {
    std::istringstream is(text);
    return parse(is);
}

BitMatrix incidence_matrix(const Hypergraph& g) {
    g.check();
    BitMatrix a(g.vertex_count, g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        for (int v : g.edges[e]) a.set(static_cast<std::size_t>(v), e, true);
    return a;
}

Hypergraph graph_from_circuit(const CircuitMatrix& c) {
    std::vector<int> vertex_of_qubit(c.qubits(), -1);
    int next = 0;
    for (std::size_t q = 0; q < c.qubits(); ++q) {
        bool seen = false;
        for (std::size_t k = 0; k < c.gates() && !seen; ++k) seen = c.h().get(2 * q + 1, k);
        if (seen) vertex_of_qubit[q] = next++;
    }
    Hypergraph g;
    g.vertex_count = static_cast<std::size_t>(next);
    for (std::size_t k = 0; k < c.gates(); ++k) {
        std::vector<int> edge;
        for (std::size_t q = 0; q < c.qubits(); ++q)
            if (c.h().get(2 * q + 1, k)) edge.push_back(vertex_of_qubit[q]);
        if (edge.empty())
            throw InvalidCircuit("graph_from_circuit: column " + std::to_string(k) +
                                 " has no incidence bits");
        g.edges.push_back(std::move(edge));
    }
    return g;
}

LiftChoice canonical_lift_choice(const Hypergraph& g) {
    g.check();
    LiftChoice choice;
    choice.columns.reserve(g.edge_count());
    for (const auto& e : g.edges) choice.columns.push_back({{e.front()}, {}});
    return choice;
}

CircuitMatrix lift_to_circuit(const Hypergraph& g, const LiftChoice& choice) {
    g.check();
    if (choice.columns.size() != g.edge_count())
        throw InvalidChoice("lift: choice must cover every edge");
    BitMatrix h(2 * g.vertex_count, g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const auto& edge = g.edges[k];
        const auto& col = choice.columns[k];
        if (col.y_vertices.empty() || col.y_vertices.size() % 2 == 0)
            throw InvalidChoice("lift: column " + std::to_string(k) +
                                " needs an odd number of Y vertices");
        for (int v : edge) h.set(2 * static_cast<std::size_t>(v) + 1, k, true);
        for (int y : col.y_vertices) {
            if (!std::binary_search(edge.begin(), edge.end(), y))
                throw InvalidChoice("lift: Y vertex not incident to edge " + std::to_string(k));
            h.set(2 * static_cast<std::size_t>(y), k, true);
        }
        for (std::size_t i = 1; i < col.y_vertices.size(); ++i)
            if (col.y_vertices[i] <= col.y_vertices[i - 1])
                throw InvalidChoice("lift: Y vertices must be sorted and distinct");
        for (int z : col.z_vertices) {
            if (z < 0 || static_cast<std::size_t>(z) >= g.vertex_count)
                throw InvalidChoice("lift: Z vertex out of range");
            if (std::binary_search(edge.begin(), edge.end(), z))
                throw InvalidChoice("lift: Z vertex overlaps edge " + std::to_string(k));
            h.set(2 * static_cast<std::size_t>(z), k, true);
        }
    }
    return CircuitMatrix(g.vertex_count, std::move(h));
}

PhaseForm phase_form(const CircuitMatrix& c) {
    std::size_t n = c.gates();
    std::vector<BitVector> zs, xs;
    zs.reserve(n);
    xs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        zs.push_back(c.column_z(k));
        xs.push_back(c.column_x(k));
    }
    PhaseForm pf{BitMatrix(n, n), BitVector(n)};
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k)
            if (BitVector::dot(zs[j], xs[k])) pf.lower.set(j, k, true);
        if (BitVector::dot(zs[j], xs[j])) pf.diag.set(j, true);
    }
    return pf;
}

bool quad_phase(const PhaseForm& pf, const BitVector& a) {
    if (a.size() != pf.lower.cols()) throw LengthMismatch("quad_phase: length mismatch");
    return BitVector::dot(a, pf.lower.mul(a));
}

bool phase_bilinear(const PhaseForm& pf, const BitVector& a, const BitVector& b) {
    if (a.size() != pf.lower.cols() || b.size() != pf.lower.cols())
        throw LengthMismatch("phase_bilinear: length mismatch");
    return BitVector::dot(a, pf.lower.mul(b)) ^ BitVector::dot(b, pf.lower.mul(a));
}

bool euler_condition_with_kernel(const CircuitMatrix& c, const KernelBasis& kb) {
    PhaseForm pf = phase_form(c);
    for (const BitVector& v : kb.basis)
        if (quad_phase(pf, v)) return false;
    for (std::size_t i = 0; i < kb.basis.size(); ++i)
        for (std::size_t j = i + 1; j < kb.basis.size(); ++j)
            if (phase_bilinear(pf, kb.basis[i], kb.basis[j])) return false;
    return true;
}

bool euler_condition_poly(const CircuitMatrix& c) {
    return euler_condition_with_kernel(c, kernel_basis(ch_matrix(c)));
}

namespace {

// Odd-cardinality subsets of the (sorted) incident vertex list, ordered by
// (size, lexicographic), so ordinary edges yield [{low}, {high}].
std::vector<std::vector<int>> y_options_for_edge(const std::vector<int>& edge) {
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << edge.size()); ++m)
        if (std::popcount(m) % 2 == 1) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return a < b;
    });
    std::vector<std::vector<int>> out;
    out.reserve(masks.size());
    for (std::uint32_t m : masks) {
        std::vector<int> ys;
        for (std::size_t i = 0; i < edge.size(); ++i)
            if ((m >> i) & 1) ys.push_back(edge[i]);
        out.push_back(std::move(ys));
    }
    return out;
}

// Subsets of the non-incident vertices with size <= z_cap, ordered by
// (size, lexicographic); the empty mask comes first.
std::vector<std::vector<int>> z_options_for_edge(const std::vector<int>& edge,
                                                 std::size_t vertex_count, int z_cap) {
    std::vector<int> pool;
    for (std::size_t v = 0; v < vertex_count; ++v)
        if (!std::binary_search(edge.begin(), edge.end(), static_cast<int>(v)))
            pool.push_back(static_cast<int>(v));
    std::vector<std::vector<int>> out;
    out.push_back({});
    std::size_t max_size =
        std::min(pool.size(), static_cast<std::size_t>(z_cap < 0 ? 0 : z_cap));
    for (std::size_t size = 1; size <= max_size; ++size) {
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), std::size_t(0));
        while (true) {
            std::vector<int> subset;
            subset.reserve(size);
            for (std::size_t i : idx) subset.push_back(pool[i]);
            out.push_back(std::move(subset));
            std::size_t i = size;
            while (i-- > 0 && idx[i] == pool.size() - size + i) {
            }
            if (i == std::size_t(-1)) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

// Advance a mixed-radix counter (last digit fastest); false on wraparound.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < radix[i]) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace

EulerSearchResult find_euler_circuit(const Hypergraph& g, const EulerSearchOptions& opts) {
    g.check();
    EulerSearchResult res;
    KernelBasis kb = kernel_basis(incidence_matrix(g));
    // ker(CH) = ker(A): the zero rows of CH add no constraints. Lift the
    // basis into edge-index space once; every candidate lift shares it.
    KernelBasis ch_kb;
    ch_kb.ambient_dim = g.edge_count();
    ch_kb.basis = kb.basis;

    auto test_choice = [&](const LiftChoice& choice) -> bool {
        CircuitMatrix c = lift_to_circuit(g, choice);
        ++res.trials;
        if (euler_condition_with_kernel(c, ch_kb)) {
            res.status = EulerSearchResult::Status::Found;
            res.circuit = std::move(c);
            res.choice = choice;
            return true;
        }
        return false;
    };

    std::size_t n = g.edge_count();
    if (opts.strategy == SearchStrategy::Exhaustive) {
        std::vector<std::vector<std::vector<int>>> y_opts(n), z_opts(n);
        std::vector<std::size_t> y_radix(n), z_radix(n);
        for (std::size_t k = 0; k < n; ++k) {
            y_opts[k] = y_options_for_edge(g.edges[k]);
            z_opts[k] = z_options_for_edge(g.edges[k], g.vertex_count, opts.z_cap);
            y_radix[k] = y_opts[k].size();
            z_radix[k] = z_opts[k].size();
        }
        std::vector<std::size_t> zd(n, 0);
        bool z_more = true;
        while (z_more) {
            std::vector<std::size_t> yd(n, 0);
            bool y_more = true;
            while (y_more) {
                if (res.trials >= opts.budget) {
                    res.status = EulerSearchResult::Status::BudgetExhausted;
                    return res;
                }
                LiftChoice choice;
                choice.columns.resize(n);
                for (std::size_t k = 0; k < n; ++k)
                    choice.columns[k] = {y_opts[k][yd[k]], z_opts[k][zd[k]]};
                if (test_choice(choice)) return res;
                y_more = advance(yd, y_radix);
            }
            z_more = advance(zd, z_radix);
        }
        res.status = EulerSearchResult::Status::ProvedAbsent;
        return res;
    }

    std::mt19937_64 rng(opts.seed);
    std::vector<std::vector<std::vector<int>>> y_opts(n);
    for (std::size_t k = 0; k < n; ++k) y_opts[k] = y_options_for_edge(g.edges[k]);
    for (std::uint64_t trial = 0; trial < opts.budget; ++trial) {
        LiftChoice choice;
        choice.columns.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            const auto& ys = y_opts[k];
            choice.columns[k].y_vertices = ys[rng() % ys.size()];
            for (std::size_t v = 0; v < g.vertex_count; ++v)
                if (!std::binary_search(g.edges[k].begin(), g.edges[k].end(), static_cast<int>(v)) &&
                    (rng() & 1))
                    choice.columns[k].z_vertices.push_back(static_cast<int>(v));
        }
        if (test_choice(choice)) return res;
    }
    res.status = EulerSearchResult::Status::BudgetExhausted;
    return res;
}

}  // namespace eulerweft
