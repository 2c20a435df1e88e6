#include "potcyc/fixtures.hpp"

#include "potcyc/errors.hpp"

namespace potcyc::fixtures {

namespace {

Fixture make_fixture(std::string name, const std::string& seq_text, int n,
                     const std::vector<Edge>& edges,
                     std::vector<std::vector<int>> cycles) {
    Fixture f;
    f.name = std::move(name);
    f.sequence = parse_sequence(seq_text);
    f.graph = SimpleGraph(n);
    for (auto [u, v] : edges) f.graph.add_edge(u, v);
    f.cycles = std::move(cycles);
    if (degree_sequence(f.graph) != f.sequence)
        throw internal_error("fixture " + f.name + " does not realize its sequence");
    return f;
}

std::vector<Fixture> build_figures() {
    std::vector<Fixture> out;
    out.push_back(make_fixture(
        "fig1", "4^4,3^2,2^2", 8,
        {{1, 2}, {1, 4}, {1, 5}, {1, 7}, {2, 3}, {2, 5}, {2, 8}, {3, 4}, {3, 6}, {3, 7},
         {4, 6}, {4, 8}, {5, 6}},
        {{1, 5, 2},
         {1, 7, 3, 2},
         {1, 7, 3, 2, 5},
         {1, 2, 8, 4, 3, 7},
         {1, 7, 3, 4, 8, 2, 5},
         {1, 7, 3, 6, 4, 8, 2, 5}}));
    out.push_back(make_fixture(
        "fig2", "4^5,3^2,2", 8,
        {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 8}, {4, 5},
         {4, 6}, {5, 7}, {6, 7}, {7, 8}},
        {{1, 2, 3},
         {4, 5, 7, 6},
         {1, 5, 2, 3, 4},
         {1, 4, 6, 7, 8, 3},
         {1, 4, 3, 8, 7, 6, 2},
         {3, 2, 5, 1, 4, 6, 7, 8}}));
    out.push_back(make_fixture(
        "fig3", "4^6,2^2", 8,
        {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 8}, {4, 5},
         {4, 6}, {5, 6}, {6, 7}, {6, 8}},
        {{4, 5, 6},
         {1, 4, 6, 5},
         {1, 4, 3, 2, 5},
         {1, 2, 7, 6, 8, 3},
         {4, 5, 2, 7, 6, 8, 3},
         {2, 5, 1, 4, 3, 8, 6, 7}}));
    out.push_back(make_fixture(
        "fig4", "6,4^5,2^2", 8,
        {{1, 2}, {1, 3}, {1, 4}, {1, 6}, {1, 7}, {1, 8}, {2, 3}, {2, 5}, {2, 6}, {3, 4},
         {3, 6}, {4, 5}, {4, 7}, {5, 6}, {5, 8}},
        {{1, 2, 3},
         {1, 8, 5, 6},
         {2, 5, 4, 3, 6},
         {4, 3, 6, 5, 8, 1},
         {4, 3, 6, 5, 8, 1, 7},
         {5, 2, 6, 3, 4, 7, 1, 8}}));
    return out;
}

std::vector<Fixture> build_seven_vertex() {
    std::vector<Fixture> out;
    // Frozen from the first pancyclic realization in canonical enumeration
    // order; a unit test re-runs the discovery and compares.
    out.push_back(make_fixture("base7a", "4^5,2^2", 7,
                               {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                {3, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 7}},
                               {{1, 2, 3},
                                {1, 2, 3, 4},
                                {1, 2, 4, 3, 5},
                                {1, 2, 4, 6, 7, 5},
                                {1, 2, 3, 4, 6, 7, 5}}));
    out.push_back(make_fixture("base7b", "6,4^4,2^2", 7,
                               {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3},
                                {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {5, 7}},
                               {{1, 2, 3},
                                {1, 2, 3, 4},
                                {1, 2, 3, 4, 6},
                                {1, 2, 4, 3, 5, 7},
                                {1, 6, 4, 2, 3, 5, 7}}));
    out.push_back(make_fixture("base7c", "4^4,3^2,2", 7,
                               {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                {3, 4}, {3, 6}, {4, 6}, {5, 7}, {6, 7}},
                               {{1, 2, 3},
                                {1, 2, 3, 4},
                                {1, 2, 3, 6, 4},
                                {1, 2, 3, 6, 7, 5},
                                {1, 2, 3, 4, 6, 7, 5}}));
    out.push_back(make_fixture("base7d", "4^3,3^2,2^2", 7,
                               {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                {3, 4}, {3, 6}, {5, 7}, {6, 7}},
                               {{1, 2, 3},
                                {1, 2, 3, 4},
                                {1, 3, 4, 2, 5},
                                {1, 2, 3, 6, 7, 5},
                                {1, 2, 4, 3, 6, 7, 5}}));
    return out;
}

} // namespace

const std::vector<Fixture>& figure_fixtures() {
    static const std::vector<Fixture> fixtures = build_figures();
    return fixtures;
}

const std::vector<Fixture>& seven_vertex_fixtures() {
    static const std::vector<Fixture> fixtures = build_seven_vertex();
    return fixtures;
}

const Fixture* fixture_for_sequence(const DegreeSequence& seq, int ell) {
    if (ell == 8) {
        for (const auto& f : figure_fixtures())
            if (f.sequence == seq) return &f;
    } else if (ell == 7) {
        for (const auto& f : seven_vertex_fixtures())
            if (f.sequence == seq) return &f;
    }
    return nullptr;
}

} // namespace potcyc::fixtures
