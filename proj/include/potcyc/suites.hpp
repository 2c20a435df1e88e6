#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "potcyc/builder.hpp"
#include "potcyc/degree_sequence.hpp"
#include "potcyc/graph.hpp"

namespace potcyc::suites {

struct SuiteReport {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> messages;   // first few failure descriptions
    double wall_seconds = 0.0;

    bool passed() const { return failures == 0; }
    std::string summary() const;
};

struct SuiteOptions {
    int nmax = 7;
    int lmax = 6;
    int threads = 1;
    SearchBudget budget{};
    std::string fixtures_dir;            // optional: cross-check shipped files
};

// Figure fixtures: captioned degree sequences and verbatim cycle lists.
SuiteReport run_fixtures(const SuiteOptions& options = {});

// is_graphic vs brute-force realization existence, every non-increasing
// sequence with d_1 <= n-1 and even sum, n <= nmax.
SuiteReport run_graphicality(const SuiteOptions& options = {});

// Residual-sequence equivalence: every graphic sequence, every position.
SuiteReport run_layoff(const SuiteOptions& options = {});

// Full builder sweep: every graphic sequence meeting the degree condition,
// ell in 5..lmax, n <= nmax; builds, re-verifies, and confirms against the
// brute-force oracle. The hook (when set) sees every successful build.
using BuildHook = std::function<void(const DegreeSequence&, int ell,
                                     const builder::BuildResult&)>;
SuiteReport run_posa_small(const SuiteOptions& options = {}, const BuildHook& hook = {});

// Potential-number check at desk scale for ell in {5,6}.
SuiteReport run_sigma_small(const SuiteOptions& options = {});

// Sharpness templates are graphic but not potentially cycle-complete.
SuiteReport run_sharpness(const SuiteOptions& options = {});

// Runs a suite by name: graphicality, layoff, posa-small, sigma-small,
// sharpness, fixtures.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

} // namespace potcyc::suites
