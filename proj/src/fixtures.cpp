#include "eulerweft/fixtures.hpp"

#include <array>

namespace eulerweft {

namespace {

// Triangle on three vertices, edge order 12, 23, 13.
constexpr std::string_view kTriangle = R"(v 3
1 2
2 3
1 3
)";

constexpr std::string_view kTriangleExpected =
    R"({"eulerian_coeffs": [1, 0, 0, 1]})";

constexpr std::string_view kC4 = R"(v 4
1 2
2 3
3 4
1 4
)";

constexpr std::string_view kC4Expected = R"({"eulerian_coeffs": [1, 0, 0, 0, 1]})";

// Two triangles sharing vertex 3.
constexpr std::string_view kBowtie = R"(v 5
1 2
2 3
1 3
3 4
4 5
3 5
)";

constexpr std::string_view kBowtieExpected =
    R"({"eulerian_coeffs": [1, 0, 0, 2, 0, 0, 1]})";

// 3-cube: vertices are binary triples, edges join neighbours. Every even
// subgraph has an even number of edges (the graph is bipartite).
constexpr std::string_view kQ3 = R"(v 8
1 2
1 3
1 5
2 4
2 6
3 4
3 7
4 8
5 6
5 7
6 8
7 8
)";

constexpr std::string_view kQ3Expected =
    R"({"eulerian_coeffs": [1, 0, 0, 0, 6, 0, 16, 0, 9, 0, 0, 0, 0],
        "euler_search_y_only": "absent"})";

// Three-qubit, three-gate circuit: gates Z(x)X(x)Y, Z(x)Z(x)Y, Y(x)Z(x)Z.
constexpr std::string_view kH3q = R"(# qubits=3 gates=3
6 3
1 1 1
0 0 1
0 1 1
1 0 0
1 1 1
1 1 0
)";

constexpr std::string_view kH3qExpected = R"({"gates": ["ZXY", "ZZY", "YZZ"]})";

// Four-qubit, six-gate circuit whose incidence part is a multigraph with a
// parallel pair {1,4} and a loop at 3.
constexpr std::string_view kH4q = R"(# qubits=4 gates=6
8 6
1 0 0 0 0 0
1 0 0 1 0 0
0 1 0 0 0 0
0 1 0 0 1 0
0 0 1 1 1 1
0 0 1 0 1 1
0 0 0 1 0 0
1 1 1 1 0 0
)";

constexpr std::string_view kH4qExpected = R"({"incidence": [[1, 0, 0, 1, 0, 0],
                                               [0, 1, 0, 0, 1, 0],
                                               [0, 0, 1, 0, 1, 1],
                                               [1, 1, 1, 1, 0, 0]]})";

constexpr std::string_view kK3Ferro = R"(v 3
1 2
2 3
1 3
J 1.0
beta 1.0
w 000
)";

// 2*exp(3) + 6*exp(-1)
constexpr std::string_view kK3FerroExpected = R"({"z": 42.378350493403989})";

constexpr std::string_view kK3Frustrated = R"(v 3
1 2
2 3
1 3
J 1.0
beta 1.0
w 100
)";

// 6*exp(1) + 2*exp(-3)
constexpr std::string_view kK3FrustratedExpected = R"({"z": 16.409265107489999})";

constexpr std::array<Fixture, 9> kCorpus = {{
    {"triangle", "graph", kTriangle, kTriangleExpected},
    {"c4", "graph", kC4, kC4Expected},
    {"bowtie", "graph", kBowtie, kBowtieExpected},
    {"q3cube", "graph", kQ3, kQ3Expected},
    {"h3q", "circuit", kH3q, kH3qExpected},
    {"h4q", "circuit", kH4q, kH4qExpected},
    {"k3-ferro", "ising", kK3Ferro, kK3FerroExpected},
    {"k3-frustrated", "ising", kK3Frustrated, kK3FrustratedExpected},
    {"path3", "ising",
     "v 3\n1 2\n2 3\nJ 0.7\nbeta 0.5\nw 01\n", ""},
}};

}  // namespace

std::span<const Fixture> corpus() { return {kCorpus.data(), kCorpus.size()}; }

const Fixture* find_fixture(std::string_view name) {
    for (const Fixture& f : kCorpus)
        if (f.name == name) return &f;
    return nullptr;
}

}  // namespace eulerweft
