// kqsym: k-balanced chromatic quasisymmetric functions from the command line.

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kqsym/chromatic.hpp"
#include "kqsym/orient.hpp"
#include "kqsym/verify.hpp"

namespace {

using namespace kqsym;
using nlohmann::json;

struct StageError : std::runtime_error {
    StageError(std::string stage, const std::string& what) : std::runtime_error(what), stage(std::move(stage)) {}
    std::string stage;
};

struct Config {
    std::string graph6;
    std::string edges_file;
    std::string generator;
    std::string positional;
    int k = 1;
    std::string basis = "L";
    std::string path = "orientations";
    std::string format = "text";
    std::size_t max_cycles = Limits{}.max_cycles;
    std::uint64_t max_nodes = Limits{}.max_nodes;
    std::vector<long long> evals;
    bool list = false;
    std::string suite = "all";
    verify::Options verify;

    Limits limits() const { return Limits{max_cycles, max_nodes}; }
    bool json() const { return format == "json"; }
};

Graph load_graph(const Config& cfg) {
    const int sources = !cfg.graph6.empty() + !cfg.edges_file.empty() + !cfg.generator.empty() + !cfg.positional.empty();
    if (sources != 1)
        throw StageError("input", "give exactly one of --graph6, --edges, --generator or a positional generator");
    try {
        if (!cfg.graph6.empty()) return from_graph6(cfg.graph6);
        if (!cfg.edges_file.empty()) {
            std::ifstream in(cfg.edges_file);
            if (!in) throw std::invalid_argument("cannot open '" + cfg.edges_file + "'");
            std::ostringstream text;
            text << in.rdbuf();
            return parse_edge_list(text.str());
        }
        return generate(cfg.generator.empty() ? cfg.positional : cfg.generator);
    } catch (const std::exception& e) {
        throw StageError("input", e.what());
    }
}

ComputationPath path_of(const Config& cfg) {
    return cfg.path == "colorings" ? ComputationPath::Colorings : ComputationPath::Orientations;
}

json rational_pair(const Rational& r) {
    // reuse the QSym serializer's big-integer handling via a constant polynomial
    const json terms = to_json(RationalPolynomial::constant(r))["terms"];
    if (terms.empty()) return json::array({0, 1});
    return json::array({terms[0][1], terms[0][2]});
}

int run_compute(const Config& cfg, const Graph& g) {
    QSym f = path_of(cfg) == ComputationPath::Colorings ? xk_via_colorings(g, cfg.k, cfg.limits())
                                                        : xk_via_orientations(g, cfg.k, cfg.limits());
    f = to_basis(f, cfg.basis == "M" ? Basis::Monomial : Basis::Fundamental);
    if (cfg.json())
        std::cout << to_json(f).dump() << '\n';
    else
        std::cout << to_string(f) << '\n';
    return 0;
}

int run_polynomial(const Config& cfg, const Graph& g) {
    const RationalPolynomial chi = chi_k(g, cfg.k, path_of(cfg), cfg.limits());
    if (cfg.json()) {
        json doc = to_json(chi);
        json evals = json::array();
        for (long long x : cfg.evals) {
            json row = json::array({x});
            for (auto& part : rational_pair(evaluate(chi, x))) row.push_back(part);
            evals.push_back(row);
        }
        doc["evaluations"] = evals;
        std::cout << doc.dump() << '\n';
        return 0;
    }
    std::cout << to_string(chi) << '\n';
    for (long long x : cfg.evals) std::cout << "χ(" << x << ") = " << to_string(evaluate(chi, x)) << '\n';
    return 0;
}

int run_orientations(const Config& cfg, const Graph& g) {
    if (!cfg.list) {
        const auto count = count_k_balanced_orientations(g, cfg.k, cfg.limits());
        if (cfg.json())
            std::cout << json{{"count", count}}.dump() << '\n';
        else
            std::cout << count << '\n';
        return 0;
    }
    const auto all = k_balanced_orientations(g, cfg.k, cfg.limits());
    if (cfg.json()) {
        json list = json::array();
        for (const auto& o : all) {
            json arcs = json::array();
            for (const auto& a : o.arcs()) arcs.push_back({a.first, a.second});
            list.push_back(arcs);
        }
        std::cout << json{{"count", all.size()}, {"orientations", list}}.dump() << '\n';
        return 0;
    }
    std::cout << all.size() << '\n';
    for (const auto& o : all) std::cout << to_string(o) << '\n';
    return 0;
}

int run_verify(const Config& cfg) {
    verify::Options opt = cfg.verify;
    opt.limits = cfg.limits();
    const auto checks = verify::run_suite(cfg.suite, opt);
    bool ok = true;
    if (cfg.json()) {
        json list = json::array();
        for (const auto& c : checks) {
            list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            ok = ok && c.passed;
        }
        std::cout << json{{"passed", ok}, {"checks", list}}.dump() << '\n';
    } else {
        for (const auto& c : checks) {
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << '\n';
            ok = ok && c.passed;
        }
    }
    return ok ? 0 : 1;
}

void add_graph_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("generator_spec", cfg.positional, "generator, e.g. cycle:4 or complete_bipartite:3,3");
    cmd->add_option("--graph6", cfg.graph6, "graph6 string");
    cmd->add_option("--edges", cfg.edges_file, "edge-list file: 'n m' header then 'i j' lines");
    cmd->add_option("--generator", cfg.generator, "named generator");
    cmd->add_option("--k", cfg.k, "balance parameter")->check(CLI::Range(1, std::numeric_limits<int>::max()));
}

void add_common_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-cycles", cfg.max_cycles, "abort when a graph has more simple cycles");
    cmd->add_option("--max-nodes", cfg.max_nodes, "orientation search node budget");
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"k-balanced chromatic quasisymmetric functions", "kqsym"};
    app.require_subcommand(1);
    app.failure_message([](const CLI::App*, const CLI::Error& e) {
        return "error [arguments]: " + std::string(e.what()) + "\n";
    });

    auto* compute = app.add_subcommand("compute", "print X^k_G");
    add_graph_options(compute, cfg);
    add_common_options(compute, cfg);
    compute->add_option("--basis", cfg.basis, "output basis")->check(CLI::IsMember({"M", "L"}));
    compute->add_option("--path", cfg.path, "computation path")->check(CLI::IsMember({"orientations", "colorings"}));

    auto* polynomial = app.add_subcommand("polynomial", "print chi^k_G and optional evaluations");
    add_graph_options(polynomial, cfg);
    add_common_options(polynomial, cfg);
    polynomial->add_option("--path", cfg.path, "computation path")
        ->check(CLI::IsMember({"orientations", "colorings"}));
    polynomial->add_option("--eval", cfg.evals, "evaluate at an integer (repeatable)");

    auto* orientations = app.add_subcommand("orientations", "count or list k-balanced orientations");
    add_graph_options(orientations, cfg);
    add_common_options(orientations, cfg);
    orientations->add_flag("--list", cfg.list, "print every orientation");

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    add_common_options(verify_cmd, cfg);
    std::string suites = "all";
    for (const auto& s : verify::suite_names()) suites += ", " + s;
    verify_cmd->add_option("--suite", cfg.suite, suites);
    verify_cmd->add_option("--max-n", cfg.verify.max_n, "largest corpus graph");
    verify_cmd->add_option("--max-lambda", cfg.verify.max_lambda, "largest lambda for evaluations");
    verify_cmd->add_option("--samples", cfg.verify.random_samples, "random graphs in the oracle suite");
    verify_cmd->add_option("--seed", cfg.verify.seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    std::string stage = "input";
    try {
        if (verify_cmd->parsed()) {
            stage = "verify";
            return run_verify(cfg);
        }
        const Graph g = load_graph(cfg);
        if (compute->parsed()) {
            stage = "compute";
            return run_compute(cfg, g);
        }
        if (polynomial->parsed()) {
            stage = "polynomial";
            return run_polynomial(cfg, g);
        }
        stage = "orientations";
        return run_orientations(cfg, g);
    } catch (const StageError& e) {
        std::cerr << "error [" << e.stage << "]: " << e.what() << '\n';
    } catch (const ResourceError& e) {
        std::cerr << "error [" << stage << ", budget]: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error [" << stage << "]: " << e.what() << '\n';
    }
    return 2;
}
