#pragma once

#include <optional>
#include <string>
#include <vector>

#include "potcyc/degree_sequence.hpp"
#include "potcyc/graph.hpp"

namespace potcyc::fixtures {

// A frozen pancyclic base graph. The figure fixtures carry the cycle lists
// from their captions; the discovered seven-vertex bases carry the cycles
// found when they were frozen. Vertex labels equal degree ranks.
struct Fixture {
    std::string name;
    DegreeSequence sequence;
    SimpleGraph graph;
    std::vector<std::vector<int>> cycles;   // one per length, ascending
};

// The four eight-vertex bases (fig1..fig4).
const std::vector<Fixture>& figure_fixtures();

// The four seven-vertex bases discovered by exhaustive search.
const std::vector<Fixture>& seven_vertex_fixtures();

// Looks up a base fixture on exactly `ell` vertices realizing `seq`.
const Fixture* fixture_for_sequence(const DegreeSequence& seq, int ell);

} // namespace potcyc::fixtures
