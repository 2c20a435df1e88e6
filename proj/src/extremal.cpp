#include "potcyc/extremal.hpp"

#include "potcyc/errors.hpp"

namespace potcyc::extremal {

namespace {

int half_parameter(int ell) {
    return ell % 2 == 1 ? (ell - 1) / 2 : (ell - 2) / 2;
}

void check_range(int ell, int n) {
    if (ell < 5) throw precondition_error("sigma(C_ell, n) is defined here for ell >= 5");
    if (n < ell) throw precondition_error("need n >= ell");
}

void append_run(std::vector<int>& terms, long long value, long long count, const char* who) {
    if (count < 0) throw precondition_error(std::string(who) + ": negative run exponent");
    for (long long i = 0; i < count; ++i) terms.push_back(static_cast<int>(value));
}

} // namespace

PotentialNumberQuery sigma_potential(int ell, int n) {
    check_range(ell, n);
    const long long m = half_parameter(ell);
    long long clique_branch, split_branch;
    if (ell % 2 == 1) {
        clique_branch = 2LL * n + 4 * m * m - 6 * m;
        split_branch = m * (2LL * n - m - 1);
    } else {
        clique_branch = 2LL * n + 4 * m * m - 2 * m - 2;
        split_branch = m * (2LL * n - m - 1) + 2;
    }
    PotentialNumberQuery q;
    q.ell = ell;
    q.n = n;
    q.value = std::max(clique_branch, split_branch) + 2;
    q.dominant_branch = clique_branch >= split_branch ? "clique-corner" : "split-corner";
    return q;
}

DegreeSequence extremal_non_3cl_sequence(int ell, int i, int n) {
    check_range(ell, n);
    // The sharpness templates split ell as 2m or 2m+1, unlike the potential
    // number formulas which split it as 2m+1 or 2m+2.
    const int m = ell / 2;
    const int i_max = (ell + 1) / 2 - 1;
    if (i < 1 || i > i_max)
        throw precondition_error("sharpness index i must lie in 1.." + std::to_string(i_max));

    std::vector<int> terms;
    if (ell % 2 == 0) {
        append_run(terms, n - 1, i, "sharpness template");
        append_run(terms, 2 * m - i - 1, m - i, "sharpness template");
        append_run(terms, m, m - i, "sharpness template");
        append_run(terms, i, n - 2 * m + i, "sharpness template");
    } else {
        append_run(terms, n - 1, i, "sharpness template");
        append_run(terms, 2 * m - i, m - i + 1, "sharpness template");
        append_run(terms, m + 1, m - i, "sharpness template");
        append_run(terms, i, n - 2 * m + i - 1, "sharpness template");
    }
    DegreeSequence seq(std::move(terms));
    if (seq.n() != n) throw internal_error("sharpness template has wrong length");
    if (!is_graphic(seq))
        throw internal_error("sharpness template is not graphic: " + seq.render());
    return seq;
}

std::vector<DegreeSequence> extremal_non_cl_sequences(int ell, int n) {
    check_range(ell, n);
    const int m = half_parameter(ell);
    std::vector<DegreeSequence> out;

    std::vector<int> corner;
    append_run(corner, n - 1, 1, "corner template");
    append_run(corner, ell - 2, ell - 2, "corner template");
    append_run(corner, 1, n - ell + 1, "corner template");
    out.emplace_back(std::move(corner));

    std::vector<int> split;
    if (ell % 2 == 1) {
        append_run(split, n - 1, m, "split template");
        append_run(split, m, n - m, "split template");
    } else {
        append_run(split, n - 1, m, "split template");
        append_run(split, m + 1, 2, "split template");
        append_run(split, m, n - m - 2, "split template");
    }
    out.emplace_back(std::move(split));

    for (const auto& seq : out) {
        if (seq.n() != n) throw internal_error("corner template has wrong length");
        if (!is_graphic(seq))
            throw internal_error("corner template is not graphic: " + seq.render());
    }
    return out;
}

long long sum_bound(const DegreeSequence& seq, int ell, int k) {
    if (ell < 5) throw precondition_error("sum_bound is defined here for ell >= 5");
    const long long m = half_parameter(ell);
    if (k < 1 || k > m) throw precondition_error("sum_bound index k out of range 1..m");
    const long long n = seq.n();
    if (ell % 2 == 1) return 3LL * k * k + (2 * n - 8 * m - 3) * k + 4 * m * m + 2 * m;
    return 3LL * k * k + (2 * n - 8 * m - 7) * k + 4 * m * m + 6 * m + 2;
}

std::string sigma_table_csv(int ell, int n_lo, int n_hi) {
    if (n_lo > n_hi) throw precondition_error("empty n range");
    std::string out = "ell,n,sigma,dominant_branch\n";
    for (int n = n_lo; n <= n_hi; ++n) {
        auto q = sigma_potential(ell, n);
        out += std::to_string(q.ell) + "," + std::to_string(q.n) + "," +
               std::to_string(q.value) + "," + q.dominant_branch + "\n";
    }
    return out;
}

} // namespace potcyc::extremal
