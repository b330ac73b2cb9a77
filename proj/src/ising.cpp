#include "eulerweft/ising.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "eulerweft/parallel.hpp"

namespace eulerweft {

namespace {

void check_instance(const IsingInstance& inst) {
    inst.graph.check();
    for (const auto& e : inst.graph.edges)
        if (e.size() != 2)
            throw InvalidChoice("ising: edges must join two distinct vertices (no loops)");
    if (inst.magnitudes.size() != inst.graph.edge_count())
        throw DimensionMismatch("ising: one coupling magnitude per edge required");
    for (double m : inst.magnitudes)
        if (!(m > 0)) throw InvalidChoice("ising: coupling magnitudes must be positive");
    if (inst.signs.size() != inst.graph.edge_count())
        throw DimensionMismatch("ising: sign vector must cover every edge");
    if (!(inst.beta > 0)) throw InvalidChoice("ising: beta must be positive");
}

}  // namespace

IsingInstance::IsingInstance(Hypergraph g, double magnitude, BitVector w, double beta_)
    : graph(std::move(g)), signs(std::move(w)), beta(beta_) {
    magnitudes.assign(graph.edge_count(), magnitude);
    check_instance(*this);
}

IsingInstance::IsingInstance(Hypergraph g, std::vector<double> mags, BitVector w, double beta_)
    : graph(std::move(g)), magnitudes(std::move(mags)), signs(std::move(w)), beta(beta_) {
    check_instance(*this);
}

bool IsingInstance::uniform_magnitude() const {
    for (double m : magnitudes)
        if (m != magnitudes.front()) return false;
    return true;
}

std::string IsingInstance::str() const {
    std::ostringstream os;
    write(os);
    return os.str();
}

void IsingInstance::write(std::ostream& os) const {
    graph.write(os);
    os << "J";
    if (uniform_magnitude() && !magnitudes.empty())
        os << ' ' << magnitudes.front();
    else
        for (double m : magnitudes) os << ' ' << m;
    os << '\n';
    os << "beta " << beta << '\n';
    os << "w " << signs.str() << '\n';
}

IsingInstance IsingInstance::parse(std::istream& is) {
    Hypergraph g = Hypergraph::parse(is);
    IsingInstance inst;
    inst.graph = std::move(g);
    bool have_j = false, have_beta = false;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag[0] == '#') continue;
        if (tag == "J") {
            std::vector<double> vals;
            double v;
            while (ls >> v) vals.push_back(v);
            if (vals.empty()) throw ParseError("ising: 'J' line needs a value");
            if (vals.size() == 1)
                inst.magnitudes.assign(inst.graph.edge_count(), vals[0]);
            else if (vals.size() == inst.graph.edge_count())
                inst.magnitudes = std::move(vals);
            else
                throw ParseError("ising: 'J' needs one value or one per edge");
            have_j = true;
        } else if (tag == "beta") {
            if (!(ls >> inst.beta)) throw ParseError("ising: 'beta' line needs a value");
            have_beta = true;
        } else if (tag == "w") {
            std::string bits;
            if (!(ls >> bits)) throw ParseError("ising: 'w' line needs a bitstring");
            inst.signs = BitVector::from_string(bits);
        } else {
            throw ParseError("ising: unknown line tag '" + tag + "'");
        }
    }
    if (!have_j || !have_beta) throw ParseError("ising: 'J' and 'beta' lines are required");
    if (inst.signs.size() == 0) inst.signs = BitVector(inst.graph.edge_count());
    check_instance(inst);
    return inst;
}

IsingInstance IsingInstance::parse(const std::string& text) {
    std::istringstream is(text);
    return parse(is);
}

double energy(const IsingInstance& inst, const SpinConfig& sigma) {
    check_instance(inst);
    if (sigma.spins.size() != inst.vertex_count())
        throw DimensionMismatch("energy: one spin per vertex required");
    for (int s : sigma.spins)
        if (s != 1 && s != -1) throw InvalidChoice("energy: spins must be +1 or -1");
    double h = 0.0;
    for (std::size_t e = 0; e < inst.edge_count(); ++e)
        h -= inst.coupling(e) * sigma.spins[static_cast<std::size_t>(inst.graph.edges[e][0])] *
             sigma.spins[static_cast<std::size_t>(inst.graph.edges[e][1])];
    return h;
}

double partition_direct(const IsingInstance& inst, const EvalOptions& opts) {
    check_instance(inst);
    std::size_t v = inst.vertex_count();
    if (v > kMaxDirectSpins)
        throw CapExceeded("partition_direct: more than " + std::to_string(kMaxDirectSpins) +
                          " spins");
    struct Edge {
        std::uint64_t mask_i, mask_j;
        double j;
    };
    std::vector<Edge> edges;
    edges.reserve(inst.edge_count());
    for (std::size_t e = 0; e < inst.edge_count(); ++e)
        edges.push_back({std::uint64_t(1) << inst.graph.edges[e][0],
                         std::uint64_t(1) << inst.graph.edges[e][1], inst.coupling(e)});

    std::uint64_t total = std::uint64_t(1) << v;
    int threads = resolve_threads(opts.threads);
    std::size_t chunk_count =
        total < static_cast<std::uint64_t>(threads) ? static_cast<std::size_t>(total)
                                                    : static_cast<std::size_t>(threads);
    std::vector<double> partial(chunk_count, 0.0);
    double beta = inst.beta;
    parallel_chunks(total, threads, [&](std::size_t ci, std::uint64_t begin, std::uint64_t end) {
        double local = 0.0;
        for (std::uint64_t s = begin; s < end; ++s) {
            double h = 0.0;
            for (const Edge& e : edges) {
                bool anti = static_cast<bool>(s & e.mask_i) != static_cast<bool>(s & e.mask_j);
                h -= anti ? -e.j : e.j;
            }
            local += std::exp(-beta * h);
        }
        partial[ci] = local;
    });
    double z = 0.0;
    for (double p : partial) z += p;
    return z;
}

double partition_vdw(const IsingInstance& inst, const EvalOptions& opts) {
    check_instance(inst);
    std::vector<double> weights(inst.edge_count());
    double prefactor = std::ldexp(1.0, static_cast<int>(inst.vertex_count()));
    for (std::size_t e = 0; e < inst.edge_count(); ++e) {
        prefactor *= std::cosh(inst.beta * inst.coupling(e));
        weights[e] = std::tanh(inst.beta * inst.coupling(e));
    }
    return prefactor * multivariate_genfunc(inst.graph, weights, opts);
}

double partition_qwgt(const IsingInstance& inst, const EvalOptions& opts) {
    check_instance(inst);
    if (!inst.uniform_magnitude())
        throw NonUniformCoupling(
            "partition_qwgt: the weight-enumerator form needs a single coupling magnitude; "
            "use the high-temperature route for mixed magnitudes");
    std::size_t n = inst.edge_count();
    double lambda = n ? std::tanh(inst.beta * inst.magnitudes.front()) : 0.0;
    BitMatrix b(n, n);
    for (std::size_t e = 0; e < n; ++e)
        if (inst.signs.get(e)) b.set(e, e, true);
    QwgtInstance qi{incidence_matrix(inst.graph), std::move(b), lambda, 1.0};
    double s = qwgt(qi, opts);
    double scale = std::ldexp(1.0, static_cast<int>(inst.vertex_count())) /
                   std::pow(1.0 - lambda * lambda, double(n) / 2.0);
    return scale * s;
}

}  // namespace eulerweft
