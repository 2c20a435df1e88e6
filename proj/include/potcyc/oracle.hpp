#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "potcyc/degree_sequence.hpp"
#include "potcyc/graph.hpp"

namespace potcyc::oracle {

enum class Pruning {
    // Sound feasibility checks only (parity, residual demand vs slots).
    // Slower, but independent of the Erdos-Gallai test.
    basic,
    // Erdos-Gallai test on the residual demand sequence after each vertex.
    erdos_gallai,
};

struct OracleOptions {
    int max_n = 10;                       // desk-scale cap; exceeding it refuses
    Pruning pruning = Pruning::erdos_gallai;
    SearchBudget budget{};
};

// Decision record for a ground-truth verdict.
struct PotentialResult {
    DegreeSequence sequence;
    std::string property;                 // "graphic" | "potentially-Cl" | "potentially-3Cl"
    int ell = 0;
    bool verdict = false;
    std::optional<SimpleGraph> witness;
    std::uint64_t realizations_examined = 0;
    double wall_seconds = 0.0;
};

// Structured report: sequence, property, cycle length, verdict, witness edge
// list, counts, and wall time, as a JSON document.
std::string report_json(const PotentialResult& result);

// Enumerates every labeled simple graph whose vertex i has degree d_i, in a
// deterministic canonical order (vertex by vertex, neighbor sets ascending),
// duplicate-free. The visitor returns false to stop early. Returns the
// number of realizations visited. A non-graphic input yields none.
std::uint64_t for_each_realization(const DegreeSequence& seq,
                                   const std::function<bool(const SimpleGraph&)>& visit,
                                   const OracleOptions& options = {});

std::vector<SimpleGraph> enumerate_realizations(const DegreeSequence& seq,
                                                const OracleOptions& options = {});

std::uint64_t count_realizations(const DegreeSequence& seq, const OracleOptions& options = {});

// True iff some realization contains a cycle of length exactly ell.
PotentialResult is_potentially_cl(const DegreeSequence& seq, int ell,
                                  const OracleOptions& options = {});

// True iff some single realization contains cycles of every length 3..ell.
PotentialResult is_potentially_3cl(const DegreeSequence& seq, int ell,
                                   const OracleOptions& options = {});

// Enumerates non-increasing sequences with d_1 <= n-1 and even sum that pass
// is_graphic and the optional predicate, in ascending lexicographic order.
void for_each_graphic_sequence(int n,
                               const std::function<bool(const DegreeSequence&)>& predicate,
                               const std::function<void(const DegreeSequence&)>& yield,
                               const OracleOptions& options = {});

std::vector<DegreeSequence> enumerate_graphic_sequences(
    int n, const std::function<bool(const DegreeSequence&)>& predicate = {},
    const OracleOptions& options = {});

} // namespace potcyc::oracle
