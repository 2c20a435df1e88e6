#pragma once

#include <string>
#include <vector>

#include "potcyc/degree_sequence.hpp"
#include "potcyc/graph.hpp"

namespace potcyc::builder {

// One builder action. Reduce steps rewrite the sequence; base steps start a
// graph; attach steps add back a vertex (relabeling the previous graph into
// the parent's rank space); swap and hoist steps apply degree-preserving
// exchanges. Replaying the steps reproduces the output graph exactly.
struct TraceStep {
    std::string tag;       // L2.1, L2.3..L2.9, T1.1, T1.2-fastpath, search-fallback
    std::string kind;      // reduce | base | attach | swap | hoist | note
    std::string detail;
    std::string seq_before;
    std::string seq_after;
    int n = 0;                       // base: vertex count; attach: parent count
    std::vector<Edge> edges;         // base
    int vertex = 0;                  // attach: new vertex label
    std::vector<int> neighbors;      // attach: its neighbors (parent labels)
    std::vector<int> relabel;        // attach: child label i -> relabel[i-1]
    std::vector<SwapRecord> swaps;   // swap / hoist
};

struct BuildTrace {
    std::vector<TraceStep> steps;

    std::string to_text() const;
    std::string to_json() const;
};

// Re-executes the graph-level steps of a trace.
SimpleGraph replay_trace(const BuildTrace& trace);

struct BuildOptions {
    SearchBudget budget{};
};

struct BuildResult {
    SimpleGraph graph;   // vertex i has degree d_i
    BuildTrace trace;
};

// Constructs a realization containing every cycle length 3..ell for a
// graphic sequence meeting the degree condition d_{ell+1-i} >= i+1
// (1 <= i < ell/2). For even ell >= 8 the cycles lie on vertices 1..ell
// (the top-degree vertices); ell = 7 keeps the same placement. The four
// named eight-vertex base sequences and their seven-vertex counterparts are
// accepted directly even though they miss the degree condition.
BuildResult build_all_cycles(const DegreeSequence& seq, int ell,
                             const BuildOptions& options = {});

// Even engine: cycles 3..2m on the top-2m vertices. Requires m >= 4,
// n >= 2m, graphic, and d_{2m+1-i} >= i+1 for 1 <= i <= m-1.
BuildResult build_even(const DegreeSequence& seq, int m, const BuildOptions& options = {});

// Odd engine: cycles 3..2m+1 (no placement claim). Requires m >= 4,
// n >= 2m+1, graphic, and d_{2m+2-i} >= i+1 for 1 <= i <= m.
BuildResult build_odd(const DegreeSequence& seq, int m, const BuildOptions& options = {});

// Small cycle lengths 5..8.
BuildResult build_small(const DegreeSequence& seq, int ell, const BuildOptions& options = {});

// The tight n = 2m+1 staircase construction: requires d_i = m for
// 2 <= i <= m+2, d_{2m+1-i} = i+1 for 1 <= i <= m-2, and d_{2m+1} = 2 with
// d_1 >= m+1 or d_{2m+1} = 1 with d_1 = m. Produces cycles 3..2m on the
// top-2m vertices.
BuildResult build_special_2m1(const DegreeSequence& seq, int m,
                              const BuildOptions& options = {});

// Exhaustive search for a pancyclic realization on exactly n = ell vertices.
// Requires graphic input satisfying the degree condition at ell = n.
BuildResult base_pancyclic(const DegreeSequence& seq, const BuildOptions& options = {});

// Sequence-level reductions. Each validates the structural shape it needs,
// applies the corresponding decrement pattern, and checks the result is
// graphic (throwing internal_error otherwise, since that is guaranteed).
DegreeSequence reduce_omega(const DegreeSequence& seq, int m);
DegreeSequence reduce_rho(const DegreeSequence& seq, int m);
DegreeSequence reduce_omega2(const DegreeSequence& seq, int m);

} // namespace potcyc::builder
