#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "potcyc/degree_sequence.hpp"

namespace potcyc {

// Unordered vertex pair, stored (min,max), 1-based labels.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

// Node / candidate limits for the exact searches. Exhausting a budget is an
// explicit error, never a silent negative answer.
struct SearchBudget {
    std::uint64_t node_limit = 50'000'000;        // cycle-search expansions
    std::uint64_t swap_limit = 500'000;           // candidate swaps examined
    std::uint64_t realization_limit = 300'000;    // realizations examined
};

// Labeled simple undirected graph on vertices 1..n, held as adjacency
// bitmasks. Value type: copies are independent.
class SimpleGraph {
public:
    static constexpr int max_vertices = 64;

    SimpleGraph() = default;
    explicit SimpleGraph(int vertex_count);

    int n() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    int degree(int v) const;
    std::uint64_t neighbors_mask(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<Edge> edges() const;

    bool operator==(const SimpleGraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    void check_vertex(int v, const char* what) const;
};

// Degrees in label order (index 0 = vertex 1).
std::vector<int> degrees_by_label(const SimpleGraph& g);

// Non-increasing degree sequence of g.
DegreeSequence degree_sequence(const SimpleGraph& g);

// Builds a realization by iterated laying-off: each round lays off the last
// term (smallest value, largest label among ties) and reattaches that vertex
// to the decremented positions. Vertex i ends with degree d_i. Requires a
// graphic input.
SimpleGraph realize(const DegreeSequence& seq);

// Alternative construction laying off the first term each round, which
// concentrates edges among the high-degree vertices. Used as a search seed.
SimpleGraph realize_top_first(const DegreeSequence& seq);

// Exact backtracking search for a cycle of length exactly `length`. Returns
// the vertex cycle (closed implicitly) or nullopt after exhaustive search.
// Vertices are explored in ascending label order, so the witness is
// deterministic. `within` restricts the search to a vertex subset.
std::optional<std::vector<int>> find_cycle_of_length(const SimpleGraph& g, int length,
                                                     const SearchBudget& budget = {});
std::optional<std::vector<int>> find_cycle_of_length(const SimpleGraph& g, int length,
                                                     const std::vector<int>& within,
                                                     const SearchBudget& budget = {});

// The set of cycle lengths present in g (optionally restricted to a vertex
// subset), with one witness per length.
struct CycleSpectrum {
    std::set<int> present;
    int ell_max = 0;
    std::optional<std::vector<int>> restricted_to;
    std::map<int, std::vector<int>> witness;

    bool covers(int lo, int hi) const;
};

CycleSpectrum cycle_spectrum(const SimpleGraph& g, int ell_max,
                             const SearchBudget& budget = {});
CycleSpectrum cycle_spectrum(const SimpleGraph& g, int ell_max,
                             const std::vector<int>& within,
                             const SearchBudget& budget = {});

// Degree-preserving edge exchange: removes two edges and adds two edges on
// the same four endpoints (same multiplicity per vertex). Each violated
// precondition is reported individually. remove == add is the identity.
SimpleGraph two_swap(const SimpleGraph& g, Edge remove1, Edge remove2, Edge add1, Edge add2);

struct SwapRecord {
    Edge removed1, removed2, added1, added2;
};

// Moves the structure induced on `witness` onto the |witness| vertices of
// highest degree (ties broken by label) through degree-preserving two-swaps.
// Each exchange hands one witness vertex's adjacencies to a higher-ranked
// outsider, so the witness set converges to the top-rank set.
struct HoistResult {
    SimpleGraph graph;
    std::vector<int> final_set;        // ascending labels
    std::vector<SwapRecord> swaps;
};
HoistResult hoist_subgraph(const SimpleGraph& g, const std::vector<int>& witness,
                           const SearchBudget& budget = {});

// `count` vertices ranked by (degree desc, label asc), ascending labels.
std::vector<int> top_rank_vertices(const SimpleGraph& g, int count);

// Edge-list text: header "n <count>", then one "u v" line per edge, 1-based,
// edges sorted. Round-trips through parse_edge_list.
std::string to_edge_list(const SimpleGraph& g);
SimpleGraph parse_edge_list(const std::string& text);

// DOT export with vertex labels x1..xn.
std::string to_dot(const SimpleGraph& g);

} // namespace potcyc
