// Acceptance suite: one line per criterion, exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eulerweft/fixtures.hpp"
#include "eulerweft/ising.hpp"
#include "eulerweft/simulator.hpp"
#include "oracles.hpp"

using namespace eulerweft;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        ok = false;
        detail += " [over runtime budget]";
    }
    std::printf("[%s] %d. %s (%.1f s%s%s)\n", ok ? "PASS" : "FAIL", number, name.c_str(), secs,
                detail.empty() ? "" : "; ", detail.c_str());
    if (!ok) ++g_failures;
}

Hypergraph triangle() { return Hypergraph{3, {{0, 1}, {1, 2}, {0, 2}}}; }

double rel_dev(double a, double b) {
    double denom = std::max(std::abs(a), std::abs(b));
    return denom == 0 ? 0 : std::abs(a - b) / denom;
}

// --- 1. expansion vs direct simulation ---
bool expansion_identity(std::string& detail) {
    std::mt19937_64 rng(20240901);
    double worst = 0;
    int comparisons = 0;
    for (int trial = 0; trial < 500; ++trial) {
        CircuitMatrix c = oracles::random_valid_circuit(rng, 1 + rng() % 5, 1 + rng() % 10);
        for (GateForm form : {GateForm::PaperAnsatz, GateForm::EdgeWeight}) {
            for (double lambda : {0.25, 0.75, 4.0 / 3.0}) {
                GateSpec g = GateSpec::for_form(form, lambda, c.gates());
                double diff =
                    std::abs(amplitude_zero(c, g) - amplitude_via_expansion(c, g));
                worst = std::max(worst, diff);
                ++comparisons;
            }
        }
    }
    std::ostringstream os;
    os << comparisons << " comparisons, max |diff| = " << worst;
    detail = os.str();
    return worst <= 1e-10;
}

// --- 2. three partition-function routes ---
bool partition_agreement(std::string& detail) {
    const double betas[] = {0.1, 0.5, 1.0};
    // hand-derived anchors first
    IsingInstance ferro(triangle(), 1.0, BitVector(3), 1.0);
    if (rel_dev(partition_direct(ferro), 2 * std::exp(3.0) + 6 * std::exp(-1.0)) > 1e-9) {
        detail = "ferro anchor mismatch";
        return false;
    }
    IsingInstance frus(triangle(), 1.0, BitVector::from_string("100"), 1.0);
    if (rel_dev(partition_direct(frus), 6 * std::exp(1.0) + 2 * std::exp(-3.0)) > 1e-9) {
        detail = "frustrated anchor mismatch";
        return false;
    }

    std::mt19937_64 rng(20240902);
    double worst = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t v = 2 + rng() % 9;            // <= 10 vertices
        std::size_t e = 1 + rng() % 15;           // <= 15 edges
        Hypergraph g = oracles::random_multigraph(rng, v, e, 0.0);
        BitVector w(g.edge_count());
        for (std::size_t i = 0; i < w.size(); ++i) w.set(i, rng() & 1);
        IsingInstance inst(g, 1.0, w, betas[rng() % 3]);
        double direct = partition_direct(inst);
        double vdw = partition_vdw(inst);
        double qw = partition_qwgt(inst);
        worst = std::max({worst, rel_dev(direct, vdw), rel_dev(direct, qw), rel_dev(vdw, qw)});
    }
    std::ostringstream os;
    os << "200 instances, max relative deviation = " << worst;
    detail = os.str();
    return worst <= 1e-9;
}

// --- 3. signed generating function vs amplitude ---
bool eprime_amplitude_identity(std::string& detail) {
    std::mt19937_64 rng(20240903);
    double worst = 0;
    int found = 0, graphs = 0, coeff_mismatches = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Hypergraph g = oracles::random_multigraph(rng, 2 + rng() % 7, 1 + rng() % 12, 0.15);
        ++graphs;
        std::vector<CircuitMatrix> lifts;
        lifts.push_back(lift_to_circuit(g, canonical_lift_choice(g)));
        EulerSearchOptions opts;
        opts.z_cap = 1;
        opts.budget = 1u << 16;
        EulerSearchResult res = find_euler_circuit(g, opts);
        if (res.status == EulerSearchResult::Status::Found) {
            ++found;
            lifts.push_back(*res.circuit);
            // search-produced lifts satisfy the kernel-phase condition, so
            // the signed function must equal the unsigned one exactly
            if (!(signed_genfunc(*res.circuit) == eulerian_genfunc(g))) ++coeff_mismatches;
        }
        for (const CircuitMatrix& c : lifts) {
            SignedPolynomial ep = signed_genfunc(c);
            for (double lambda : {0.5, 4.0 / 3.0}) {
                GateSpec spec = GateSpec::for_form(GateForm::EdgeWeight, lambda, c.gates());
                double amp = amplitude_zero(c, spec);
                double predicted =
                    ep.evaluate(lambda) / std::pow(1 + lambda * lambda, double(c.gates()) / 2.0);
                worst = std::max(worst, std::abs(predicted - amp));
            }
        }
    }
    std::ostringstream os;
    os << graphs << " graphs, " << found << " search hits, max |diff| = " << worst
       << ", coefficient mismatches = " << coeff_mismatches;
    detail = os.str();
    return worst <= 1e-10 && coeff_mismatches == 0;
}

// --- 4. polynomial Euler check vs exhaustive scan ---
bool euler_checker_equivalence(std::string& detail) {
    std::mt19937_64 rng(20240904);
    int disagreements = 0, max_dim = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Hypergraph g = oracles::random_multigraph(rng, 2 + rng() % 7, 1 + rng() % 14, 0.15);
        CircuitMatrix c = lift_to_circuit(g, oracles::random_lift_choice(rng, g, 0.25));
        int dim = static_cast<int>(kernel_basis(ch_matrix(c)).free_count());
        max_dim = std::max(max_dim, dim);
        if (dim > 16) continue;
        if (euler_condition_poly(c) != oracles::euler_condition_brute(c)) ++disagreements;
    }
    std::ostringstream os;
    os << "1000 lifts, max kernel dim = " << max_dim << ", disagreements = " << disagreements;
    detail = os.str();
    return disagreements == 0;
}

// --- 5. rotation angles at the pinned lambdas ---
bool angle_caveat(std::string& detail) {
    double acos_err = std::abs(gate_angle(4.0 / 3.0, GateForm::PaperAnsatz) -
                               2 * std::acos(4.0 / 5.0));
    double asin_err = std::abs(gate_angle(3.0 / 4.0, GateForm::PaperAnsatz) -
                               2 * std::asin(4.0 / 5.0));
    std::ostringstream os;
    os << "errors " << acos_err << ", " << asin_err;
    detail = os.str();
    return acos_err <= 1e-12 && asin_err <= 1e-12;
}

// --- 6. bundled circuit fixtures ---
bool bundled_fixtures(std::string& detail) {
    CircuitMatrix h3 = CircuitMatrix::parse(std::string(find_fixture("h3q")->contents));
    if (h3.column_pauli(0).str() != "ZXY" || h3.column_pauli(1).str() != "ZZY" ||
        h3.column_pauli(2).str() != "YZZ") {
        detail = "three-qubit gate list mismatch";
        return false;
    }
    ValidationReport rep3 = validate(h3, true);

    CircuitMatrix h4 = CircuitMatrix::parse(std::string(find_fixture("h4q")->contents));
    BitMatrix expected = BitMatrix::from_rows({{1, 0, 0, 1, 0, 0},
                                               {0, 1, 0, 0, 1, 0},
                                               {0, 0, 1, 0, 1, 1},
                                               {1, 1, 1, 1, 0, 0}});
    if (!(incidence_matrix(graph_from_circuit(h4)) == expected)) {
        detail = "four-qubit incidence mismatch";
        return false;
    }
    ValidationReport rep4 = validate(h4, true);
    detail = "gate list and incidence bit-exact";
    return rep3.valid && rep3.graph_restricted_ok && rep4.valid && rep4.graph_restricted_ok;
}

// --- 7. Hadamard-test statistics ---
bool hadamard_statistics(std::string& detail) {
    CircuitMatrix k3 = lift_to_circuit(triangle(), canonical_lift_choice(triangle()));
    GateSpec g = GateSpec::for_form(GateForm::EdgeWeight, 0.5, 3);
    double truth = amplitude_zero(k3, g);
    auto seq = to_gate_sequence(k3, g);

    int failures = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        EstimateResult est = hadamard_test(k3, g, 0.05, 0.05, 1000 + seed);
        if (std::abs(est.estimate - truth) > 0.05) ++failures;
    }
    double failure_rate = failures / 200.0;

    // RMSE scaling: eps, eps/sqrt(2) and eps/2 double and quadruple the
    // Hoeffding sample count
    auto rmse_at = [&](double eps, std::uint64_t base_seed) {
        double acc = 0;
        for (std::uint64_t i = 0; i < 200; ++i) {
            EstimateResult est = hadamard_test(seq, 3, eps, 0.05, base_seed + i);
            acc += (est.estimate - truth) * (est.estimate - truth);
        }
        return std::sqrt(acc / 200.0);
    };
    double r1 = rmse_at(0.05, 5000);
    double r2 = rmse_at(0.05 / std::sqrt(2.0), 7000);
    double r4 = rmse_at(0.025, 9000);
    double double_ratio = r1 / r2;    // expected ~sqrt(2)
    double quad_ratio = r1 / r4;      // expected ~2 ("halves when quadrupled")

    std::ostringstream os;
    os << "failure rate " << failure_rate << ", rmse ratio x2 = " << double_ratio
       << ", x4 = " << quad_ratio;
    detail = os.str();
    return failure_rate <= 0.05 && double_ratio >= 1.2 && double_ratio <= 1.7 &&
           quad_ratio >= 1.2 * 1.2 && quad_ratio <= 1.7 * 1.7;
}

// --- 8. decision wrapper ---
bool decision_wrapper(std::string& detail) {
    std::mt19937_64 rng(20240908);
    double worst_marginal = 0, worst_residual = 0;
    int deterministic_cases = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 3;
        std::size_t gates = 1 + rng() % 6;
        CircuitMatrix c = oracles::random_valid_circuit(rng, n, gates);
        // half the trials use pure sigma~ gates, which map |0...0> to a
        // basis state, so the decision bit is deterministic
        bool pure = trial % 2 == 0;
        GateSpec g = pure ? GateSpec(0.0, 1.0, gates)
                          : GateSpec::for_form(GateForm::PaperAnsatz, 0.75, gates);
        auto seq = to_gate_sequence(c, g);
        std::size_t d = rng() % n;

        RealState direct = run_real(seq, n);
        double p1 = 0;
        for (std::size_t s = 0; s < direct.amps.size(); ++s)
            if ((s >> d) & 1) p1 += direct.amps[s] * direct.amps[s];

        DecisionResult res = run_decision(decision_wrap(seq, n, d), n + 1);
        worst_marginal = std::max(worst_marginal, std::abs(res.p_one - p1));
        bool deterministic = p1 < 1e-12 || p1 > 1 - 1e-12;
        if (deterministic) {
            ++deterministic_cases;
            worst_residual = std::max(worst_residual, res.residual);
        }
    }
    std::ostringstream os;
    os << "100 circuits (" << deterministic_cases
       << " deterministic), max marginal diff = " << worst_marginal
       << ", max residual = " << worst_residual;
    detail = os.str();
    return worst_marginal <= 1e-10 && worst_residual <= 1e-10 && deterministic_cases >= 50;
}

// --- 9. exact brute-force equivalence up to 16 edges ---
bool brute_force_oracles(std::string& detail) {
    std::mt19937_64 rng(20240909);
    int instances = 0;
    for (std::size_t edges : {16, 14, 12, 9, 5}) {
        Hypergraph g = oracles::random_multigraph(rng, 2 + rng() % 7, edges, 0.15);
        if (!(eulerian_genfunc(g) ==
              SignedPolynomial::from_coeffs(oracles::eulerian_coeffs_brute(g)))) {
            detail = "eulerian mismatch";
            return false;
        }
        CircuitMatrix c = lift_to_circuit(g, oracles::random_lift_choice(rng, g, 0.25));
        if (!(signed_genfunc(c) ==
              SignedPolynomial::from_coeffs(oracles::signed_coeffs_brute(c)))) {
            detail = "signed mismatch";
            return false;
        }
        QwgtInstance inst{oracles::random_bitmatrix(rng, 1 + rng() % 8, edges),
                          oracles::random_bitmatrix(rng, edges, edges), 0.5, 1.0};
        if (!(qwgt_table(inst) ==
              SignedPolynomial::from_coeffs(oracles::qwgt_coeffs_brute(inst.a, inst.b)))) {
            detail = "weight enumerator mismatch";
            return false;
        }
        ++instances;
    }
    std::ostringstream os;
    os << instances << " instance triples, exact integer equality";
    detail = os.str();
    return true;
}

}  // namespace

int main() {
    criterion(1, "expansion equals direct simulation", 30, expansion_identity);
    criterion(2, "three partition-function routes agree", 60, partition_agreement);
    criterion(3, "signed generating function matches the amplitude", 0,
              eprime_amplitude_identity);
    criterion(4, "polynomial Euler check equals the exhaustive scan", 0,
              euler_checker_equivalence);
    criterion(5, "pinned rotation angles", 0, angle_caveat);
    criterion(6, "bundled circuit fixtures decode bit-exactly", 0, bundled_fixtures);
    criterion(7, "Hadamard-test statistics", 120, hadamard_statistics);
    criterion(8, "decision wrapper marginals and residuals", 0, decision_wrapper);
    criterion(9, "brute-force oracle equality up to 16 edges", 0, brute_force_oracles);
    return g_failures;
}
