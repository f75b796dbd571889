#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kqsym/errors.hpp"
#include "kqsym/graph.hpp"

namespace kqsym::verify {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    int max_n = 5;
    int max_lambda = 4;
    int random_samples = 50;
    int random_n = 6;
    std::uint64_t seed = 20240601;
    Limits limits;
};

/// Connected representatives on 1..max_n vertices.
std::vector<Graph> corpus(int max_n);
/// Random labelled connected graphs on n vertices from a seeded generator.
std::vector<Graph> random_connected_graphs(int n, int count, std::uint64_t seed);
/// k = 1..floor(girth/2), or 1..3 for forests.
std::vector<int> valid_ks(const Graph& g);

std::vector<Check> oracle_equivalence(const Options& opt);
std::vector<Check> cycle_formula(const Options& opt);
std::vector<Check> cycle_symmetry(const Options& opt);
std::vector<Check> bipartite_formula(const Options& opt);
std::vector<Check> reciprocity(const Options& opt);
std::vector<Check> integrality(const Options& opt);
std::vector<Check> multiplicativity(const Options& opt);
std::vector<Check> girth_vanishing(const Options& opt);
std::vector<Check> l_positivity(const Options& opt);
std::vector<Check> basis_round_trip(const Options& opt);
std::vector<Check> order_reciprocity(const Options& opt);
std::vector<Check> p_partition_decomposition(const Options& opt);

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name; "all" runs every suite.
std::vector<Check> run_suite(const std::string& name, const Options& opt);

}  // namespace kqsym::verify
