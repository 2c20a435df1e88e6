#pragma once

#include <string>
#include <vector>

namespace potcyc {

// A non-increasing sequence of nonnegative vertex degrees. All public
// indices are 1-based.
class DegreeSequence {
public:
    DegreeSequence() = default;
    // Sorts the terms non-increasing. Negative entries are rejected.
    explicit DegreeSequence(std::vector<int> terms);

    int n() const { return static_cast<int>(terms_.size()); }
    bool empty() const { return terms_.empty(); }

    // 1-based access, bounds-checked.
    int at(int i) const;
    int operator[](int i) const { return terms_[static_cast<std::size_t>(i - 1)]; }

    const std::vector<int>& terms() const { return terms_; }

    long long sum() const;
    bool even_sum() const { return sum() % 2 == 0; }

    // Canonical run-length form, runs in decreasing value order, e.g.
    // (4,4,4,4,3,3,2,2) -> "4^4,3^2,2^2". Runs of length one are bare.
    std::string render() const;

    bool operator==(const DegreeSequence&) const = default;
    auto operator<=>(const DegreeSequence&) const = default;

private:
    std::vector<int> terms_;
};

// Parses comma-separated degree items, each `d` or `d^y` with d >= 0 and
// y >= 1. Whitespace is ignored. The result is sorted non-increasing.
DegreeSequence parse_sequence(const std::string& text);

// max{i : d_i >= i}, 1-based; 0 when d_1 = 0. Requires a nonempty sequence.
int f_index(const DegreeSequence& seq);

// Graphicality test. Returns false immediately for odd sum or d_1 > n-1,
// otherwise evaluates the Erdos-Gallai inequalities for t = 1..f_index(seq).
bool is_graphic(const DegreeSequence& seq);

// Residual sequence: delete d_k and decrement the d_k largest remaining
// terms by one. Among equal values, the leftmost occurrences are
// decremented, which makes the operation deterministic. Requires
// 1 <= k <= n and d_k <= n-1.
DegreeSequence lay_off(const DegreeSequence& seq, int k);

// d_{ell+1-i} >= i+1 for every i = 1..ceil(ell/2)-1. Requires 3 <= ell <= n.
bool check_posa(const DegreeSequence& seq, int ell);

// d_ell >= ceil(ell/2). Requires 3 <= ell <= n.
bool check_dirac(const DegreeSequence& seq, int ell);

// 1-based position ell+1-i of the first violated constraint (scanning
// i = 1 upward), or 0 when the condition holds.
int posa_violation_index(const DegreeSequence& seq, int ell);

} // namespace potcyc
