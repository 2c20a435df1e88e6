#include "potcyc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>

#include "potcyc/errors.hpp"

namespace potcyc::oracle {

namespace {

class RealizationEnumerator {
public:
    RealizationEnumerator(const DegreeSequence& seq, const OracleOptions& options,
                          const std::function<bool(const SimpleGraph&)>& visit)
        : seq_(seq), options_(options), visit_(visit), graph_(seq.n()) {
        demand_.resize(static_cast<std::size_t>(seq.n()));
        for (int i = 1; i <= seq.n(); ++i) demand_[static_cast<std::size_t>(i - 1)] = seq[i];
    }

    std::uint64_t run() {
        if (seq_.n() > options_.max_n)
            throw cap_error("oracle cap exceeded: n = " + std::to_string(seq_.n()) +
                            " > " + std::to_string(options_.max_n));
        if (seq_.n() > 0 && seq_[1] > seq_.n() - 1) return 0;
        if (!seq_.even_sum()) return 0;
        assign_vertex(1);
        return count_;
    }

private:
    const DegreeSequence& seq_;
    const OracleOptions& options_;
    const std::function<bool(const SimpleGraph&)>& visit_;
    SimpleGraph graph_;
    std::vector<int> demand_;
    std::uint64_t count_ = 0;
    bool stop_ = false;

    bool residual_feasible(int next) const {
        const int n = seq_.n();
        long long total = 0;
        int remaining = n - next + 1;
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(remaining));
        for (int v = next; v <= n; ++v) {
            int d = demand_[static_cast<std::size_t>(v - 1)];
            if (d > remaining - 1) return false;
            total += d;
            rest.push_back(d);
        }
        if (total % 2 != 0) return false;
        if (options_.pruning == Pruning::erdos_gallai)
            return is_graphic(DegreeSequence(std::move(rest)));
        return true;
    }

    void assign_vertex(int u) {
        if (stop_) return;
        const int n = seq_.n();
        if (u > n) {
            ++count_;
            if (!visit_(graph_)) stop_ = true;
            return;
        }
        if (!residual_feasible(u)) return;
        choose(u, u + 1, demand_[static_cast<std::size_t>(u - 1)]);
    }

    // Picks `need` neighbors of u among vertices >= from, ascending.
    void choose(int u, int from, int need) {
        if (stop_) return;
        const int n = seq_.n();
        if (need == 0) {
            assign_vertex(u + 1);
            return;
        }
        if (n - from + 1 < need) return;
        for (int v = from; v <= n - need + 1; ++v) {
            if (demand_[static_cast<std::size_t>(v - 1)] == 0) continue;
            graph_.add_edge(u, v);
            demand_[static_cast<std::size_t>(u - 1)] -= 1;
            demand_[static_cast<std::size_t>(v - 1)] -= 1;
            choose(u, v + 1, need - 1);
            demand_[static_cast<std::size_t>(u - 1)] += 1;
            demand_[static_cast<std::size_t>(v - 1)] += 1;
            graph_.remove_edge(u, v);
            if (stop_) return;
        }
    }
};

} // namespace

std::uint64_t for_each_realization(const DegreeSequence& seq,
                                   const std::function<bool(const SimpleGraph&)>& visit,
                                   const OracleOptions& options) {
    return RealizationEnumerator(seq, options, visit).run();
}

std::vector<SimpleGraph> enumerate_realizations(const DegreeSequence& seq,
                                                const OracleOptions& options) {
    std::vector<SimpleGraph> out;
    for_each_realization(
        seq,
        [&](const SimpleGraph& g) {
            out.push_back(g);
            return true;
        },
        options);
    return out;
}

std::uint64_t count_realizations(const DegreeSequence& seq, const OracleOptions& options) {
    return for_each_realization(seq, [](const SimpleGraph&) { return true; }, options);
}

PotentialResult is_potentially_cl(const DegreeSequence& seq, int ell,
                                  const OracleOptions& options) {
    auto start = std::chrono::steady_clock::now();
    PotentialResult result;
    result.sequence = seq;
    result.property = "potentially-Cl";
    result.ell = ell;
    if (ell < 3 || ell > seq.n()) throw precondition_error("cycle length out of range");
    result.realizations_examined = for_each_realization(
        seq,
        [&](const SimpleGraph& g) {
            if (find_cycle_of_length(g, ell, options.budget)) {
                result.verdict = true;
                result.witness = g;
                return false;
            }
            return true;
        },
        options);
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

PotentialResult is_potentially_3cl(const DegreeSequence& seq, int ell,
                                   const OracleOptions& options) {
    auto start = std::chrono::steady_clock::now();
    PotentialResult result;
    result.sequence = seq;
    result.property = "potentially-3Cl";
    result.ell = ell;
    if (ell < 3 || ell > seq.n()) throw precondition_error("cycle length out of range");
    result.realizations_examined = for_each_realization(
        seq,
        [&](const SimpleGraph& g) {
            for (int r = 3; r <= ell; ++r)
                if (!find_cycle_of_length(g, r, options.budget)) return true;
            result.verdict = true;
            result.witness = g;
            return false;
        },
        options);
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string report_json(const PotentialResult& result) {
    nlohmann::json j;
    j["sequence"] = result.sequence.render();
    j["property"] = result.property;
    j["l"] = result.ell;
    j["verdict"] = result.verdict;
    if (result.witness) {
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : result.witness->edges()) edges.push_back({u, v});
        j["witness_n"] = result.witness->n();
        j["witness_edges"] = edges;
    }
    j["realizations_examined"] = result.realizations_examined;
    j["wall_seconds"] = result.wall_seconds;
    return j.dump(2) + "\n";
}

void for_each_graphic_sequence(int n,
                               const std::function<bool(const DegreeSequence&)>& predicate,
                               const std::function<void(const DegreeSequence&)>& yield,
                               const OracleOptions& options) {
    if (n > options.max_n)
        throw cap_error("oracle cap exceeded: n = " + std::to_string(n) + " > " +
                        std::to_string(options.max_n));
    if (n < 1) throw precondition_error("sequence length must be positive");
    std::vector<int> terms;
    terms.reserve(static_cast<std::size_t>(n));
    // Ascending lexicographic order: smaller leading degrees first. The
    // recursion emits terms non-increasing by construction.
    std::function<void(int, int)> rec = [&](int position, int upper) {
        if (position > n) {
            DegreeSequence seq(terms);
            if (!seq.even_sum() || !is_graphic(seq)) return;
            if (predicate && !predicate(seq)) return;
            yield(seq);
            return;
        }
        for (int d = 0; d <= upper; ++d) {
            terms.push_back(d);
            rec(position + 1, d);
            terms.pop_back();
        }
    };
    rec(1, n - 1);
}

std::vector<DegreeSequence> enumerate_graphic_sequences(
    int n, const std::function<bool(const DegreeSequence&)>& predicate,
    const OracleOptions& options) {
    std::vector<DegreeSequence> out;
    for_each_graphic_sequence(n, predicate, [&](const DegreeSequence& s) { out.push_back(s); },
                              options);
    return out;
}

} // namespace potcyc::oracle
