#include <doctest.h>

#include "eulerweft/enumerators.hpp"
#include "eulerweft/fixtures.hpp"
#include "oracles.hpp"

using namespace eulerweft;

namespace {

Hypergraph triangle() { return Hypergraph{3, {{0, 1}, {1, 2}, {0, 2}}}; }

SignedPolynomial from_ll(const std::vector<long long>& v) {
    return SignedPolynomial::from_coeffs(v);
}

}  // namespace

TEST_CASE("qwgt base cases") {
    // 1x1 zero constraint, zero form: both b=0,1 are in the kernel -> x + y
    QwgtInstance free1{BitMatrix(1, 1), BitMatrix(1, 1), 0.7, 1.3};
    CHECK(qwgt(free1) == doctest::Approx(0.7 + 1.3).epsilon(1e-14));
    CHECK(qwgt_table(free1) == from_ll({1, 1}));

    // identity constraint: only b=0 -> y^n
    QwgtInstance pinned{BitMatrix::identity(4), BitMatrix(4, 4), 0.3, 1.1};
    CHECK(qwgt(pinned) == doctest::Approx(std::pow(1.1, 4)).epsilon(1e-14));
    CHECK(qwgt_table(pinned) == from_ll({1, 0, 0, 0, 0}));

    // K3 incidence with B = dg(1,0,0): kernel {000, 111} -> 1 - x^3
    BitMatrix b3(3, 3);
    b3.set(0, 0, true);
    QwgtInstance k3{incidence_matrix(triangle()), b3, 0.5, 1.0};
    CHECK(qwgt_table(k3) == from_ll({1, 0, 0, -1}));
    CHECK(qwgt(k3) == doctest::Approx(1.0 - 0.125).epsilon(1e-14));
    CHECK(qwgt_table(k3).coeffs() ==
          from_ll(oracles::qwgt_coeffs_brute(k3.a, k3.b)).coeffs());
}

TEST_CASE("qwgt matches the brute-force scan on random instances") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 12;
        QwgtInstance inst{oracles::random_bitmatrix(rng, 1 + rng() % 6, n),
                          oracles::random_bitmatrix(rng, n, n), 0.8, 1.2};
        CHECK(qwgt_table(inst) == from_ll(oracles::qwgt_coeffs_brute(inst.a, inst.b)));
        CHECK(qwgt(inst) ==
              doctest::Approx(oracles::qwgt_brute(inst.a, inst.b, 0.8, 1.2)).epsilon(1e-10));
    }
}

TEST_CASE("eulerian_genfunc on the bundled graphs") {
    CHECK(eulerian_genfunc(triangle()) == from_ll({1, 0, 0, 1}));

    const Fixture* c4 = find_fixture("c4");
    REQUIRE(c4);
    CHECK(eulerian_genfunc(Hypergraph::parse(std::string(c4->contents))) ==
          from_ll({1, 0, 0, 0, 1}));

    const Fixture* bowtie = find_fixture("bowtie");
    REQUIRE(bowtie);
    CHECK(eulerian_genfunc(Hypergraph::parse(std::string(bowtie->contents))) ==
          from_ll({1, 0, 0, 2, 0, 0, 1}));

    const Fixture* q3 = find_fixture("q3cube");
    REQUIRE(q3);
    Hypergraph q3g = Hypergraph::parse(std::string(q3->contents));
    SignedPolynomial eq3 = eulerian_genfunc(q3g);
    CHECK(eq3 == from_ll({1, 0, 0, 0, 6, 0, 16, 0, 9, 0, 0, 0, 0}));
    CHECK(eq3.coeffs() == from_ll(oracles::eulerian_coeffs_brute(q3g)).coeffs());
    // bipartite: no odd-size even subgraph
    for (std::size_t d = 1; d <= 12; d += 2) CHECK(eq3[d] == 0);
}

TEST_CASE("eulerian_genfunc equals the degree-parity oracle on random multigraphs") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph g = oracles::random_multigraph(rng, 2 + rng() % 6, 1 + rng() % 13, 0.2);
        CHECK(eulerian_genfunc(g) == from_ll(oracles::eulerian_coeffs_brute(g)));
    }
}

TEST_CASE("signed_genfunc on structured lifts") {
    // trivial kernel -> constant 1
    const Fixture* f3 = find_fixture("h3q");
    REQUIRE(f3);
    CHECK(signed_genfunc(CircuitMatrix::parse(std::string(f3->contents))) ==
          from_ll({1, 0, 0, 0}));

    // Euler-satisfying K3 lift: coincides with the unsigned function
    CircuitMatrix good = lift_to_circuit(triangle(), canonical_lift_choice(triangle()));
    CHECK(signed_genfunc(good) == from_ll({1, 0, 0, 1}));
    CHECK(signed_genfunc(good) == eulerian_genfunc(triangle()));

    // flipped lift: h_{111} = 1
    LiftChoice flipped = canonical_lift_choice(triangle());
    flipped.columns[1].y_vertices = {2};
    CircuitMatrix bad = lift_to_circuit(triangle(), flipped);
    CHECK(signed_genfunc(bad) == from_ll({1, 0, 0, -1}));
    CHECK(signed_genfunc(bad).coeffs() == from_ll(oracles::signed_coeffs_brute(bad)).coeffs());

    CHECK_THROWS_AS(signed_genfunc(CircuitMatrix(1, BitMatrix(2, 1))), InvalidCircuit);
}

TEST_CASE("signed_genfunc equals the expansion-phase oracle on random lifts") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph g = oracles::random_multigraph(rng, 2 + rng() % 6, 1 + rng() % 12, 0.15);
        CircuitMatrix c = lift_to_circuit(g, oracles::random_lift_choice(rng, g, 0.3));
        CHECK(signed_genfunc(c) == from_ll(oracles::signed_coeffs_brute(c)));
    }
    // and on unstructured valid circuits
    for (int trial = 0; trial < 30; ++trial) {
        CircuitMatrix c = oracles::random_valid_circuit(rng, 1 + rng() % 4, 1 + rng() % 10);
        CHECK(signed_genfunc(c) == from_ll(oracles::signed_coeffs_brute(c)));
    }
}

TEST_CASE("multivariate_genfunc specializations") {
    Hypergraph k3 = triangle();
    // all weights equal: reduces to the one-variable evaluation
    for (double lambda : {0.25, 0.6, 1.5}) {
        CHECK(multivariate_genfunc(k3, {lambda, lambda, lambda}) ==
              doctest::Approx(eulerian_genfunc(k3).evaluate(lambda)).epsilon(1e-12));
    }
    // tree: empty cycle space
    Hypergraph tree{4, {{0, 1}, {1, 2}, {1, 3}}};
    CHECK(multivariate_genfunc(tree, {0.3, 0.7, 0.9}) == doctest::Approx(1.0));
    // K3 with distinct weights
    CHECK(multivariate_genfunc(k3, {0.2, 0.3, 0.5}) ==
          doctest::Approx(1.0 + 0.2 * 0.3 * 0.5).epsilon(1e-14));
    CHECK_THROWS_AS(multivariate_genfunc(k3, {0.2, 0.3}), LengthMismatch);

    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph g = oracles::random_multigraph(rng, 2 + rng() % 6, 1 + rng() % 12, 0.2);
        std::vector<double> weights;
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            weights.push_back(double(int(rng() % 200) - 100) / 100.0);
        CHECK(multivariate_genfunc(g, weights) ==
              doctest::Approx(oracles::multivariate_brute(g, weights)).epsilon(1e-10));
    }
}

TEST_CASE("cross-module identities") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph g = oracles::random_multigraph(rng, 2 + rng() % 6, 1 + rng() % 12, 0.2);
        // the weight enumerator with a zero form is the unsigned function
        QwgtInstance inst{incidence_matrix(g), BitMatrix(g.edge_count(), g.edge_count()), 0.5,
                          1.0};
        CHECK(qwgt_table(inst) == eulerian_genfunc(g));

        // a zeroed quadratic form turns the signed sum into the unsigned one
        CircuitMatrix c = lift_to_circuit(g, oracles::random_lift_choice(rng, g, 0.3));
        SignedPolynomial unsigned_from_circuit = kernel_signed_table(
            ch_matrix(c), BitMatrix(c.gates(), c.gates()), nullptr, {});
        CHECK(unsigned_from_circuit == eulerian_genfunc(graph_from_circuit(c)));

        // pointwise triangle inequality |E'(lambda)| <= E(|lambda|)
        SignedPolynomial ep = signed_genfunc(c);
        SignedPolynomial e = eulerian_genfunc(graph_from_circuit(c));
        for (double lambda : {-0.8, 0.3, 1.7})
            CHECK(std::abs(ep.evaluate(lambda)) <= e.evaluate(std::abs(lambda)) + 1e-12);

        // the zero vector contributes 1 at lambda = 0 in all three
        CHECK(ep[0] == 1);
        CHECK(e[0] == 1);
        CHECK(qwgt_table(inst)[0] == 1);
    }
}

TEST_CASE("kernel sums respect the enumeration cap") {
    // 35 free dimensions: must refuse at the default cap
    Hypergraph bouquet{2, {}};
    for (int e = 0; e < 35; ++e) bouquet.edges.push_back({0, 1});
    CHECK_THROWS_AS(eulerian_genfunc(bouquet), CapExceeded);

    // small instance with a tiny cap, then an explicit override
    Hypergraph five{2, {}};
    for (int e = 0; e < 5; ++e) five.edges.push_back({0, 1});
    EvalOptions tight;
    tight.cap = 3;
    CHECK_THROWS_AS(eulerian_genfunc(five, tight), CapExceeded);
    EvalOptions loose;
    loose.cap = 5;
    CHECK(eulerian_genfunc(five, loose)[0] == 1);
}

TEST_CASE("kernel sums are thread-invariant") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph g = oracles::random_multigraph(rng, 2 + rng() % 6, 4 + rng() % 9, 0.2);
        CircuitMatrix c = lift_to_circuit(g, oracles::random_lift_choice(rng, g, 0.3));
        EvalOptions one{30, 1}, four{30, 4};
        CHECK(signed_genfunc(c, one) == signed_genfunc(c, four));
        std::vector<double> weights(g.edge_count(), 0.37);
        CHECK(multivariate_genfunc(g, weights, one) ==
              doctest::Approx(multivariate_genfunc(g, weights, four)).epsilon(1e-12));
    }
}

TEST_CASE("SignedPolynomial evaluation and text form") {
    SignedPolynomial p = from_ll({1, 0, -2, 5});
    CHECK(p.evaluate(2.0) == doctest::Approx(1 - 8 + 40));
    CHECK(p.evaluate(0.0) == 1.0);
    CHECK(p.evaluate_bivariate(2.0, 1.0) == doctest::Approx(p.evaluate(2.0)));
    CHECK(p.evaluate_bivariate(1.0, 2.0) == doctest::Approx(8 - 4 + 5));
    CHECK(p.str() == "[1, 0, -2, 5]");
    CHECK(p.degree_bound() == 3);
}
