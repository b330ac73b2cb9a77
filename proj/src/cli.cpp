#include "eulerweft/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulerweft/fixtures.hpp"
#include "eulerweft/ising.hpp"
#include "eulerweft/parallel.hpp"
#include "eulerweft/simulator.hpp"

namespace eulerweft {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::string fmt_num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

Json coeffs_json(const SignedPolynomial& p) {
    Json arr = Json::array();
    for (const BigInt& c : p.coeffs()) {
        if (c >= std::numeric_limits<long long>::min() &&
            c <= std::numeric_limits<long long>::max())
            arr.push_back(c.convert_to<long long>());
        else
            arr.push_back(c.str());
    }
    return arr;
}

Json matrix_json(const BitMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Each action fills a JSON document and a plain-text rendering of the same
// values, so the two output modes cannot drift apart.
struct Output {
    Json doc = Json::object();
    std::vector<std::string> lines;

    void kv(const std::string& key, double v) {
        doc[key] = v;
        lines.push_back(key + " = " + fmt_num(v));
    }
    void kv(const std::string& key, std::uint64_t v) {
        doc[key] = v;
        lines.push_back(key + " = " + std::to_string(v));
    }
    void kv(const std::string& key, bool v) {
        doc[key] = v;
        lines.push_back(key + " = " + (v ? "true" : "false"));
    }
    void kv(const std::string& key, const std::string& v) {
        doc[key] = v;
        lines.push_back(key + " = " + v);
    }
    void raw(const std::string& key, const Json& v, const std::string& text) {
        doc[key] = v;
        lines.push_back(text);
    }
};

struct Globals {
    std::string output = "text";
    int threads = 0;
    int cap = kDefaultEnumCap;
    int exit_code = 0;

    EvalOptions eval_options() const { return {cap, resolve_threads(threads)}; }
};

void emit(const Globals& g, const Output& o, std::ostream& out) {
    if (g.output == "json") {
        out << o.doc.dump(2) << '\n';
    } else {
        for (const auto& line : o.lines) out << line << '\n';
    }
}

CircuitMatrix load_circuit(const std::string& path) {
    return CircuitMatrix::parse(read_file(path));
}

Hypergraph load_graph(const std::string& path) { return Hypergraph::parse(read_file(path)); }

IsingInstance load_ising(const std::string& path) { return IsingInstance::parse(read_file(path)); }

std::vector<double> parse_weights(const std::string& csv) {
    std::vector<double> out;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

Json edges_json(const Hypergraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        Json edge = Json::array();
        for (int v : e) edge.push_back(v + 1);
        edges.push_back(std::move(edge));
    }
    return edges;
}

void add_circuit_commands(CLI::App& app, Globals& g, std::ostream& out) {
    auto* circuit = app.add_subcommand("circuit", "inspect and validate circuit matrices");
    circuit->require_subcommand(1);

    {
        auto* cmd = circuit->add_subcommand("validate", "check column constraints");
        auto path = std::make_shared<std::string>();
        auto restricted = std::make_shared<bool>(false);
        cmd->add_option("file", *path, "circuit matrix file")->required();
        cmd->add_flag("--graph-restricted", *restricted,
                      "also require one Y and at most one X per column");
        cmd->callback([&, path, restricted] {
            CircuitMatrix c = load_circuit(*path);
            ValidationReport rep = validate(c, *restricted);
            Output o;
            o.kv("valid", rep.valid);
            if (*restricted) o.kv("graph_restricted", rep.graph_restricted_ok);
            Json issues = Json::array();
            for (const auto& issue : rep.issues) {
                issues.push_back({{"column", issue.column}, {"reason", issue.reason}});
                o.lines.push_back("column " + std::to_string(issue.column) + ": " + issue.reason);
            }
            o.doc["issues"] = std::move(issues);
            emit(g, o, out);
            bool ok = rep.valid && (!*restricted || rep.graph_restricted_ok);
            if (!ok) g.exit_code = 2;
        });
    }
    {
        auto* cmd = circuit->add_subcommand("show", "list gates as Pauli strings");
        auto path = std::make_shared<std::string>();
        auto lambda = std::make_shared<double>(0.0);
        auto form = std::make_shared<std::string>("edge");
        cmd->add_option("file", *path)->required();
        cmd->add_option("--lambda", *lambda, "also report the rotation angle at this lambda");
        cmd->add_option("--form", *form)->check(CLI::IsMember({"paper", "edge"}));
        cmd->callback([&, path, lambda, form] {
            CircuitMatrix c = load_circuit(*path);
            Output o;
            o.kv("qubits", static_cast<std::uint64_t>(c.qubits()));
            Json gates = Json::array();
            for (std::size_t k = 0; k < c.gates(); ++k) {
                Json gate = {{"index", k}, {"pauli_string", c.column_pauli(k).str()}};
                std::string line = "gate " + std::to_string(k) + ": " + c.column_pauli(k).str();
                if (*lambda > 0) {
                    double theta = gate_angle(*lambda, gate_form_from_string(*form));
                    gate["angle"] = theta;
                    line += "  angle=" + fmt_num(theta);
                }
                gates.push_back(std::move(gate));
                o.lines.push_back(std::move(line));
            }
            o.doc["gates"] = std::move(gates);
            emit(g, o, out);
        });
    }
    {
        auto* cmd = circuit->add_subcommand("angle", "rotation angle realized at a given lambda");
        auto lambda = std::make_shared<double>();
        auto form = std::make_shared<std::string>("paper");
        cmd->add_option("--lambda", *lambda)->required();
        cmd->add_option("--form", *form)->check(CLI::IsMember({"paper", "edge"}));
        cmd->callback([&, lambda, form] {
            Output o;
            o.kv("lambda", *lambda);
            o.kv("form", *form);
            o.kv("theta", gate_angle(*lambda, gate_form_from_string(*form)));
            emit(g, o, out);
        });
    }
}

void add_graph_commands(CLI::App& app, Globals& g, std::ostream& out) {
    auto* graph = app.add_subcommand("graph", "map between graphs and circuits");
    graph->require_subcommand(1);

    {
        auto* cmd = graph->add_subcommand("to-circuit", "lift a graph to a circuit matrix");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path)->required();
        cmd->callback([&, path] {
            Hypergraph gr = load_graph(*path);
            CircuitMatrix c = lift_to_circuit(gr, canonical_lift_choice(gr));
            Output o;
            o.doc["qubits"] = c.qubits();
            o.doc["gates"] = c.gates();
            o.doc["h"] = matrix_json(c.h());
            o.lines.push_back(c.str());
            emit(g, o, out);
        });
    }
    {
        auto* cmd = graph->add_subcommand("from-circuit", "read the graph off a circuit matrix");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path)->required();
        cmd->callback([&, path] {
            Hypergraph gr = graph_from_circuit(load_circuit(*path));
            Output o;
            o.doc["vertices"] = gr.vertex_count;
            o.doc["edges"] = edges_json(gr);
            o.lines.push_back(gr.str());
            emit(g, o, out);
        });
    }
    {
        auto* cmd = graph->add_subcommand("euler-check",
                                          "polynomial check that all kernel phases vanish");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path, "circuit matrix file")->required();
        cmd->callback([&, path] {
            Output o;
            o.kv("euler_condition", euler_condition_poly(load_circuit(*path)));
            emit(g, o, out);
        });
    }
    {
        auto* cmd = graph->add_subcommand("euler-search", "search lifts for the Euler condition");
        auto path = std::make_shared<std::string>();
        auto strategy = std::make_shared<std::string>("exhaustive");
        auto budget = std::make_shared<std::uint64_t>(std::uint64_t(1) << 20);
        auto z_cap = std::make_shared<int>(2);
        auto seed = std::make_shared<std::uint64_t>(0);
        cmd->add_option("file", *path, "graph file")->required();
        cmd->add_option("--strategy", *strategy)
            ->check(CLI::IsMember({"exhaustive", "randomized"}));
        cmd->add_option("--budget", *budget, "max lifts tested");
        cmd->add_option("--z-cap", *z_cap, "exhaustive mode: per-column Z-mask size cap");
        cmd->add_option("--seed", *seed, "randomized mode seed");
        cmd->callback([&, path, strategy, budget, z_cap, seed] {
            EulerSearchOptions opts;
            opts.strategy = (*strategy == "exhaustive") ? SearchStrategy::Exhaustive
                                                        : SearchStrategy::Randomized;
            opts.budget = *budget;
            opts.z_cap = *z_cap;
            opts.seed = *seed;
            EulerSearchResult res = find_euler_circuit(load_graph(*path), opts);
            Output o;
            const char* status = res.status == EulerSearchResult::Status::Found ? "found"
                                 : res.status == EulerSearchResult::Status::ProvedAbsent
                                     ? "absent"
                                     : "budget-exhausted";
            o.kv("status", std::string(status));
            o.kv("trials", res.trials);
            if (res.circuit) {
                o.doc["h"] = matrix_json(res.circuit->h());
                o.doc["qubits"] = res.circuit->qubits();
                o.lines.push_back(res.circuit->str());
            }
            emit(g, o, out);
        });
    }
}

void add_eval_commands(CLI::App& app, Globals& g, std::ostream& out) {
    auto* eval = app.add_subcommand("eval", "exact enumerator evaluations");
    eval->require_subcommand(1);

    {
        auto* cmd = eval->add_subcommand("qwgt", "quadratically signed weight enumerator");
        auto a_path = std::make_shared<std::string>();
        auto b_path = std::make_shared<std::string>();
        auto w_bits = std::make_shared<std::string>();
        auto x = std::make_shared<double>(1.0);
        auto y = std::make_shared<double>(1.0);
        auto table = std::make_shared<bool>(false);
        cmd->add_option("--a", *a_path, "constraint matrix file")->required();
        auto* bopt = cmd->add_option("--b", *b_path, "quadratic form matrix file");
        cmd->add_option("--w", *w_bits, "diagonal form as a bitstring")->excludes(bopt);
        cmd->add_option("--x", *x);
        cmd->add_option("--y", *y);
        cmd->add_flag("--table", *table, "also emit the exact coefficient table");
        cmd->callback([&, a_path, b_path, w_bits, x, y, table] {
            QwgtInstance inst;
            inst.a = BitMatrix::parse(read_file(*a_path));
            if (!b_path->empty()) {
                inst.b = BitMatrix::parse(read_file(*b_path));
            } else if (!w_bits->empty()) {
                BitVector w = BitVector::from_string(*w_bits);
                inst.b = BitMatrix(w.size(), w.size());
                for (std::size_t i = 0; i < w.size(); ++i)
                    if (w.get(i)) inst.b.set(i, i, true);
            } else {
                inst.b = BitMatrix(inst.a.cols(), inst.a.cols());
            }
            inst.x = *x;
            inst.y = *y;
            SignedPolynomial tab = qwgt_table(inst, g.eval_options());
            Output o;
            o.kv("value", tab.evaluate_bivariate(inst.x, inst.y));
            if (*table) o.raw("coeffs", coeffs_json(tab), "coeffs = " + tab.str());
            emit(g, o, out);
        });
    }
    {
        auto* cmd = eval->add_subcommand("e", "generating function of even-degree subgraphs");
        auto path = std::make_shared<std::string>();
        auto lambda = std::make_shared<double>(1.0);
        cmd->add_option("file", *path, "graph file")->required();
        cmd->add_option("--lambda", *lambda);
        cmd->callback([&, path, lambda] {
            SignedPolynomial p = eulerian_genfunc(load_graph(*path), g.eval_options());
            Output o;
            o.raw("coeffs", coeffs_json(p), "coeffs = " + p.str());
            o.doc["value_at"] = {{"lambda", *lambda}, {"value", p.evaluate(*lambda)}};
            o.lines.push_back("value_at lambda=" + fmt_num(*lambda) + " = " +
                              fmt_num(p.evaluate(*lambda)));
            emit(g, o, out);
        });
    }
    {
        auto* cmd = eval->add_subcommand("eprime", "signed generating function of a circuit");
        auto path = std::make_shared<std::string>();
        auto lambda = std::make_shared<double>(1.0);
        cmd->add_option("file", *path, "circuit matrix file")->required();
        cmd->add_option("--lambda", *lambda);
        cmd->callback([&, path, lambda] {
            SignedPolynomial p = signed_genfunc(load_circuit(*path), g.eval_options());
            Output o;
            o.raw("coeffs", coeffs_json(p), "coeffs = " + p.str());
            o.doc["value_at"] = {{"lambda", *lambda}, {"value", p.evaluate(*lambda)}};
            o.lines.push_back("value_at lambda=" + fmt_num(*lambda) + " = " +
                              fmt_num(p.evaluate(*lambda)));
            emit(g, o, out);
        });
    }
    {
        auto* cmd = eval->add_subcommand("multi", "kernel sum with per-edge weights");
        auto path = std::make_shared<std::string>();
        auto weights = std::make_shared<std::string>();
        cmd->add_option("file", *path, "graph file")->required();
        cmd->add_option("--weights", *weights, "comma-separated per-edge weights")->required();
        cmd->callback([&, path, weights] {
            Output o;
            o.kv("value",
                 multivariate_genfunc(load_graph(*path), parse_weights(*weights),
                                      g.eval_options()));
            emit(g, o, out);
        });
    }
}

void add_ising_commands(CLI::App& app, Globals& g, std::ostream& out) {
    auto* ising = app.add_subcommand("ising", "partition function evaluators");
    ising->require_subcommand(1);

    auto add_single = [&](const std::string& name, const std::string& desc,
                          double (*fn)(const IsingInstance&, const EvalOptions&)) {
        auto* cmd = ising->add_subcommand(name, desc);
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path, "instance file")->required();
        cmd->callback([&, path, fn] {
            Output o;
            o.kv("z", fn(load_ising(*path), g.eval_options()));
            emit(g, o, out);
        });
    };
    add_single("direct", "direct spin enumeration", &partition_direct);
    add_single("vdw", "high-temperature (even-subgraph) expansion", &partition_vdw);
    add_single("qwgt", "weight-enumerator form", &partition_qwgt);

    {
        auto* cmd = ising->add_subcommand("all", "run every evaluator and compare");
        auto path = std::make_shared<std::string>();
        cmd->add_option("file", *path, "instance file")->required();
        cmd->callback([&, path] {
            IsingInstance inst = load_ising(*path);
            Output o;
            std::vector<double> values;
            double direct = partition_direct(inst, g.eval_options());
            double vdw = partition_vdw(inst, g.eval_options());
            o.kv("direct", direct);
            o.kv("vdw", vdw);
            values.push_back(direct);
            values.push_back(vdw);
            try {
                double qw = partition_qwgt(inst, g.eval_options());
                o.kv("qwgt", qw);
                values.push_back(qw);
            } catch (const NonUniformCoupling&) {
                o.doc["qwgt"] = nullptr;
                o.lines.push_back("qwgt = (skipped: mixed coupling magnitudes)");
            }
            double max_rel = 0.0;
            for (std::size_t i = 0; i < values.size(); ++i)
                for (std::size_t j = i + 1; j < values.size(); ++j) {
                    double denom = std::max(std::abs(values[i]), std::abs(values[j]));
                    if (denom > 0)
                        max_rel = std::max(max_rel, std::abs(values[i] - values[j]) / denom);
                }
            o.kv("max_relative_deviation", max_rel);
            emit(g, o, out);
        });
    }
}

void add_sim_commands(CLI::App& app, Globals& g, std::ostream& out) {
    auto* sim = app.add_subcommand("sim", "statevector simulation and estimation");
    sim->require_subcommand(1);

    auto add_amp = [&](const std::string& name, const std::string& desc, bool expansion) {
        auto* cmd = sim->add_subcommand(name, desc);
        auto path = std::make_shared<std::string>();
        auto lambda = std::make_shared<double>(0.5);
        auto form = std::make_shared<std::string>("edge");
        cmd->add_option("file", *path, "circuit matrix file")->required();
        cmd->add_option("--lambda", *lambda);
        cmd->add_option("--form", *form)->check(CLI::IsMember({"paper", "edge"}));
        cmd->callback([&, path, lambda, form, expansion] {
            CircuitMatrix c = load_circuit(*path);
            GateSpec spec = GateSpec::for_form(gate_form_from_string(*form), *lambda, c.gates());
            double amp = expansion ? amplitude_via_expansion(c, spec, g.eval_options())
                                   : amplitude_zero(c, spec);
            double norm = std::pow(spec.gamma(), double(c.gates()));
            Output o;
            o.kv("lambda", *lambda);
            o.kv("form", *form);
            o.kv("amplitude", amp);
            o.kv("normalization", norm);
            o.kv("kernel_sum", amp * norm);
            emit(g, o, out);
        });
    };
    add_amp("amplitude", "exact <0...0|U|0...0> by gate application", false);
    add_amp("expansion", "the same amplitude through the kernel expansion", true);

    {
        auto* cmd = sim->add_subcommand("hadamard", "simulated Hadamard-test estimate");
        auto path = std::make_shared<std::string>();
        auto lambda = std::make_shared<double>(0.5);
        auto form = std::make_shared<std::string>("edge");
        auto epsilon = std::make_shared<double>(0.05);
        auto delta = std::make_shared<double>(0.05);
        auto seed = std::make_shared<std::uint64_t>(0);
        cmd->add_option("file", *path, "circuit matrix file")->required();
        cmd->add_option("--lambda", *lambda);
        cmd->add_option("--form", *form)->check(CLI::IsMember({"paper", "edge"}));
        cmd->add_option("--epsilon", *epsilon);
        cmd->add_option("--delta", *delta);
        cmd->add_option("--seed", *seed);
        cmd->callback([&, path, lambda, form, epsilon, delta, seed] {
            CircuitMatrix c = load_circuit(*path);
            GateSpec spec = GateSpec::for_form(gate_form_from_string(*form), *lambda, c.gates());
            EstimateResult res = hadamard_test(c, spec, *epsilon, *delta, *seed);
            Output o;
            o.kv("estimate", res.estimate);
            o.kv("epsilon", res.epsilon);
            o.kv("delta", res.delta);
            o.kv("samples", res.samples);
            o.kv("seed", res.seed);
            o.kv("normalization", std::pow(spec.gamma(), double(c.gates())));
            emit(g, o, out);
        });
    }
    {
        auto* cmd = sim->add_subcommand("decision", "run the decision wrapper");
        auto path = std::make_shared<std::string>();
        auto lambda = std::make_shared<double>(0.5);
        auto form = std::make_shared<std::string>("edge");
        auto decision_qubit = std::make_shared<std::size_t>(0);
        cmd->add_option("file", *path, "circuit matrix file")->required();
        cmd->add_option("--lambda", *lambda);
        cmd->add_option("--form", *form)->check(CLI::IsMember({"paper", "edge"}));
        cmd->add_option("--decision-qubit", *decision_qubit);
        cmd->callback([&, path, lambda, form, decision_qubit] {
            CircuitMatrix c = load_circuit(*path);
            GateSpec spec = GateSpec::for_form(gate_form_from_string(*form), *lambda, c.gates());
            std::vector<GateOp> wrapped =
                decision_wrap(to_gate_sequence(c, spec), c.qubits(), *decision_qubit);
            DecisionResult res = run_decision(wrapped, c.qubits() + 1);
            Output o;
            o.kv("p_zero", res.p_zero);
            o.kv("p_one", res.p_one);
            o.kv("residual", res.residual);
            emit(g, o, out);
        });
    }
}

void add_corpus_commands(CLI::App& app, Globals& g, std::ostream& out) {
    auto* corpus_cmd = app.add_subcommand("corpus", "bundled example inputs");
    corpus_cmd->require_subcommand(1);

    auto extension = [](std::string_view kind) {
        if (kind == "graph") return ".graph";
        if (kind == "circuit") return ".h";
        return ".ising";
    };

    {
        auto* cmd = corpus_cmd->add_subcommand("list", "list fixture names");
        cmd->callback([&] {
            Output o;
            Json arr = Json::array();
            for (const Fixture& f : corpus()) {
                arr.push_back({{"name", std::string(f.name)}, {"kind", std::string(f.kind)}});
                o.lines.push_back(std::string(f.name) + " (" + std::string(f.kind) + ")");
            }
            o.doc["fixtures"] = std::move(arr);
            emit(g, o, out);
        });
    }
    {
        auto* cmd = corpus_cmd->add_subcommand("show", "print one fixture");
        auto name = std::make_shared<std::string>();
        cmd->add_option("name", *name)->required();
        cmd->callback([&, name] {
            const Fixture* f = find_fixture(*name);
            if (!f) throw ParseError("no fixture named '" + *name + "'");
            Output o;
            o.kv("name", std::string(f->name));
            o.kv("kind", std::string(f->kind));
            o.raw("contents", std::string(f->contents), std::string(f->contents));
            if (!f->expected.empty())
                o.raw("expected", Json::parse(f->expected), "expected: " + std::string(f->expected));
            emit(g, o, out);
        });
    }
    {
        auto* cmd = corpus_cmd->add_subcommand("write", "materialize all fixtures into a directory");
        auto dir = std::make_shared<std::string>();
        cmd->add_option("dir", *dir)->required();
        cmd->callback([&, dir, extension] {
            std::filesystem::create_directories(*dir);
            Output o;
            Json written = Json::array();
            for (const Fixture& f : corpus()) {
                std::filesystem::path p =
                    std::filesystem::path(*dir) / (std::string(f.name) + extension(f.kind));
                std::ofstream os(p);
                os << f.contents;
                written.push_back(p.string());
                o.lines.push_back("wrote " + p.string());
                if (!f.expected.empty()) {
                    std::filesystem::path pe =
                        std::filesystem::path(*dir) / (std::string(f.name) + ".expected.json");
                    std::ofstream ose(pe);
                    ose << f.expected << '\n';
                    written.push_back(pe.string());
                    o.lines.push_back("wrote " + pe.string());
                }
            }
            o.doc["written"] = std::move(written);
            emit(g, o, out);
        });
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact enumerators, Ising partition functions and circuit simulation "
                 "over the circuit/graph incidence correspondence"};
    app.name("eulerweft");
    app.fallthrough(true);
    app.require_subcommand(1);

    Globals globals;
    app.add_option("--output", globals.output, "output mode")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", globals.threads,
                   "worker threads (0 = EULERWEFT_THREADS or all cores)");
    app.add_option("--cap-override", globals.cap,
                   "raise the kernel enumeration cap (free GF(2) dimensions)");

    add_circuit_commands(app, globals, out);
    add_graph_commands(app, globals, out);
    add_eval_commands(app, globals, out);
    add_ising_commands(app, globals, out);
    add_sim_commands(app, globals, out);
    add_corpus_commands(app, globals, out);

    std::vector<std::string> argv = args;
    try {
        argv.insert(argv.begin(), "eulerweft");
        std::vector<const char*> cargs;
        cargs.reserve(argv.size());
        for (const auto& a : argv) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return globals.exit_code;
}

}  // namespace eulerweft
