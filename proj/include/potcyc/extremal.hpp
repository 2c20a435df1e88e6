#pragma once

#include <string>
#include <vector>

#include "potcyc/degree_sequence.hpp"

namespace potcyc::extremal {

// Potential number query: the least even degree sum that forces a C_ell
// subgraph in some realization, together with the winning max-branch.
struct PotentialNumberQuery {
    int ell = 0;
    int n = 0;
    long long value = 0;
    // "clique-corner": the 2n + ... branch, witnessed by a near-clique
    // corner sequence. "split-corner": the m(2n-m-1) branch, witnessed by a
    // split-graph sequence. Ties report clique-corner.
    std::string dominant_branch;
};

// sigma(C_ell, n) for ell >= 5 and n >= ell.
PotentialNumberQuery sigma_potential(int ell, int n);

// The sharpness sequence that misses the cycle-spectrum condition by exactly
// one at one index: ((n-1)^i,(2m-i-1)^{m-i},m^{m-i},i^{n-2m+i}) for ell = 2m,
// ((n-1)^i,(2m-i)^{m-i+1},(m+1)^{m-i},i^{n-2m+i-1}) for ell = 2m+1. The
// output is checked graphic; a failure aborts loudly.
DegreeSequence extremal_non_3cl_sequence(int ell, int i, int n);

// Lower-bound witnesses for sigma_potential: the near-clique corner sequence
// and the parity-appropriate split sequence, each with degree sum equal to
// its branch value.
std::vector<DegreeSequence> extremal_non_cl_sequences(int ell, int n);

// The proof polynomials f(k) (odd ell) / g(k) (even ell) bounding the degree
// sum of a graphic sequence that misses the condition at index k, 1 <= k <= m.
long long sum_bound(const DegreeSequence& seq, int ell, int k);

// CSV rows "ell,n,sigma,dominant_branch" for n in [n_lo, n_hi].
std::string sigma_table_csv(int ell, int n_lo, int n_hi);

} // namespace potcyc::extremal
