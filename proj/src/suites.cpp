#include "potcyc/suites.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <thread>

#include "potcyc/errors.hpp"
#include "potcyc/extremal.hpp"
#include "potcyc/fixtures.hpp"
#include "potcyc/oracle.hpp"

namespace potcyc::suites {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

class Collector {
public:
    explicit Collector(std::string name) : report_{} { report_.name = std::move(name); }

    void add_pass() { ++report_.cases; }

    void add_failure(const std::string& message) {
        ++report_.cases;
        ++report_.failures;
        if (report_.messages.size() < 12) report_.messages.push_back(message);
    }

    SuiteReport finish(const Timer& timer) {
        report_.wall_seconds = timer.seconds();
        return std::move(report_);
    }

private:
    SuiteReport report_;
};

// Runs fn(i) for i in [0, count) across the requested worker count.
// Failures are merged under a lock so reports stay deterministic enough to
// read; per-case outcomes do not depend on scheduling.
void parallel_cases(std::uint64_t count, int threads,
                    const std::function<std::vector<std::string>(std::uint64_t)>& fn,
                    Collector& collector, std::mutex& mutex) {
    int workers = std::max(1, threads);
    if (workers == 1) {
        for (std::uint64_t i = 0; i < count; ++i) {
            auto errors = fn(i);
            std::lock_guard<std::mutex> lock(mutex);
            if (errors.empty())
                collector.add_pass();
            else
                for (const auto& e : errors) collector.add_failure(e);
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::vector<std::vector<std::string>>> results(
        static_cast<std::size_t>(workers));
    std::vector<std::vector<std::uint64_t>> indices(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            while (true) {
                std::uint64_t i = next.fetch_add(1);
                if (i >= count) break;
                indices[static_cast<std::size_t>(w)].push_back(i);
                results[static_cast<std::size_t>(w)].push_back(fn(i));
            }
        });
    }
    for (auto& t : pool) t.join();
    // Merge in index order for stable messages.
    std::vector<std::pair<std::uint64_t, const std::vector<std::string>*>> merged;
    for (int w = 0; w < workers; ++w)
        for (std::size_t j = 0; j < indices[static_cast<std::size_t>(w)].size(); ++j)
            merged.emplace_back(indices[static_cast<std::size_t>(w)][j],
                                &results[static_cast<std::size_t>(w)][j]);
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::lock_guard<std::mutex> lock(mutex);
    for (const auto& [i, errors] : merged) {
        if (errors->empty())
            collector.add_pass();
        else
            for (const auto& e : *errors) collector.add_failure(e);
    }
}

std::vector<DegreeSequence> all_even_sequences(int n) {
    std::vector<DegreeSequence> out;
    std::vector<int> terms;
    std::function<void(int, int)> rec = [&](int position, int upper) {
        if (position > n) {
            DegreeSequence seq(terms);
            if (seq.even_sum()) out.push_back(seq);
            return;
        }
        for (int d = 0; d <= upper; ++d) {
            terms.push_back(d);
            rec(position + 1, d);
            terms.pop_back();
        }
    };
    rec(1, n - 1);
    return out;
}

bool cycle_in_graph(const SimpleGraph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) return false;
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

} // namespace

std::string SuiteReport::summary() const {
    std::string out = name + ": " + (passed() ? "pass" : "FAIL") + " (" +
                      std::to_string(cases) + " cases, " + std::to_string(failures) +
                      " failures, " + std::to_string(wall_seconds).substr(0, 6) + "s)";
    return out;
}

SuiteReport run_fixtures(const SuiteOptions& options) {
    Timer timer;
    Collector collector("fixtures");
    std::mutex mutex;
    for (const auto& f : fixtures::figure_fixtures()) {
        std::vector<std::string> errors;
        if (degree_sequence(f.graph) != f.sequence)
            errors.push_back(f.name + ": degree sequence mismatch");
        int expected_len = 3;
        for (const auto& cyc : f.cycles) {
            if (static_cast<int>(cyc.size()) != expected_len)
                errors.push_back(f.name + ": listed cycle has length " +
                                 std::to_string(cyc.size()) + ", expected " +
                                 std::to_string(expected_len));
            else if (!cycle_in_graph(f.graph, cyc))
                errors.push_back(f.name + ": listed cycle C_" + std::to_string(expected_len) +
                                 " is not a cycle of the graph");
            ++expected_len;
        }
        if (f.cycles.size() != 6)
            errors.push_back(f.name + ": expected six listed cycles");
        if (!options.fixtures_dir.empty()) {
            std::ifstream in(options.fixtures_dir + "/" + f.name + ".edges");
            if (!in) {
                errors.push_back(f.name + ": missing shipped edge list");
            } else {
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                try {
                    if (!(parse_edge_list(text) == f.graph))
                        errors.push_back(f.name + ": shipped edge list differs");
                } catch (const error& e) {
                    errors.push_back(f.name + ": shipped edge list unreadable: " + e.what());
                }
            }
        }
        std::lock_guard<std::mutex> lock(mutex);
        if (errors.empty())
            collector.add_pass();
        else
            for (const auto& e : errors) collector.add_failure(e);
    }
    return collector.finish(timer);
}

SuiteReport run_graphicality(const SuiteOptions& options) {
    Timer timer;
    Collector collector("graphicality");
    std::mutex mutex;
    for (int n = 1; n <= options.nmax; ++n) {
        auto sequences = all_even_sequences(n);
        parallel_cases(
            sequences.size(), options.threads,
            [&](std::uint64_t i) -> std::vector<std::string> {
                const auto& seq = sequences[static_cast<std::size_t>(i)];
                oracle::OracleOptions opts;
                opts.max_n = options.nmax;
                opts.pruning = oracle::Pruning::basic;
                opts.budget = options.budget;
                bool exists = false;
                oracle::for_each_realization(
                    seq,
                    [&](const SimpleGraph&) {
                        exists = true;
                        return false;
                    },
                    opts);
                if (exists != is_graphic(seq))
                    return {"graphicality disagreement on " + seq.render()};
                return {};
            },
            collector, mutex);
    }
    return collector.finish(timer);
}

SuiteReport run_layoff(const SuiteOptions& options) {
    Timer timer;
    Collector collector("layoff");
    std::mutex mutex;
    oracle::OracleOptions opts;
    opts.max_n = options.nmax;
    for (int n = 2; n <= options.nmax; ++n) {
        for (const auto& seq : oracle::enumerate_graphic_sequences(n, {}, opts)) {
            std::vector<std::string> errors;
            for (int k = 1; k <= n; ++k) {
                if (!is_graphic(lay_off(seq, k)))
                    errors.push_back("residual of " + seq.render() + " at k=" +
                                     std::to_string(k) + " is not graphic");
            }
            std::lock_guard<std::mutex> lock(mutex);
            if (errors.empty())
                collector.add_pass();
            else
                for (const auto& e : errors) collector.add_failure(e);
        }
    }
    return collector.finish(timer);
}

SuiteReport run_posa_small(const SuiteOptions& options, const BuildHook& hook) {
    Timer timer;
    Collector collector("posa-small");
    std::mutex mutex;
    for (int ell = 5; ell <= std::min(options.lmax, 8); ++ell) {
        for (int n = ell; n <= options.nmax; ++n) {
            oracle::OracleOptions opts;
            opts.max_n = options.nmax;
            opts.budget = options.budget;
            auto sequences = oracle::enumerate_graphic_sequences(
                n, [&](const DegreeSequence& s) { return check_posa(s, ell); }, opts);
            parallel_cases(
                sequences.size(), options.threads,
                [&](std::uint64_t i) -> std::vector<std::string> {
                    const auto& seq = sequences[static_cast<std::size_t>(i)];
                    std::vector<std::string> errors;
                    try {
                        builder::BuildOptions bopts;
                        bopts.budget = options.budget;
                        auto result = builder::build_all_cycles(seq, ell, bopts);
                        if (degree_sequence(result.graph) != seq)
                            errors.push_back("build of " + seq.render() +
                                             " returned the wrong degree sequence");
                        auto spec = cycle_spectrum(result.graph, ell, options.budget);
                        if (!spec.covers(3, ell))
                            errors.push_back("build of " + seq.render() +
                                             " misses a cycle length");
                        auto verdict = oracle::is_potentially_3cl(seq, ell, opts);
                        if (!verdict.verdict)
                            errors.push_back("oracle refutes " + seq.render() + " at ell=" +
                                             std::to_string(ell));
                        if (errors.empty() && hook) hook(seq, ell, result);
                    } catch (const error& e) {
                        errors.push_back("build of " + seq.render() + " failed: " + e.what());
                    }
                    return errors;
                },
                collector, mutex);
        }
    }
    return collector.finish(timer);
}

SuiteReport run_sigma_small(const SuiteOptions& options) {
    Timer timer;
    Collector collector("sigma-small");
    std::mutex mutex;
    for (int ell = 5; ell <= std::min(options.lmax, 6); ++ell) {
        for (int n = ell; n <= options.nmax; ++n) {
            auto query = extremal::sigma_potential(ell, n);
            oracle::OracleOptions opts;
            opts.max_n = options.nmax;
            opts.budget = options.budget;
            auto sequences = oracle::enumerate_graphic_sequences(
                n, [&](const DegreeSequence& s) { return s.sum() >= query.value; }, opts);
            parallel_cases(
                sequences.size(), options.threads,
                [&](std::uint64_t i) -> std::vector<std::string> {
                    const auto& seq = sequences[static_cast<std::size_t>(i)];
                    auto verdict = oracle::is_potentially_cl(seq, ell, opts);
                    if (!verdict.verdict)
                        return {"sum " + std::to_string(seq.sum()) + " >= " +
                                std::to_string(query.value) + " but " + seq.render() +
                                " is not potentially cycle-" + std::to_string(ell)};
                    return {};
                },
                collector, mutex);

            // At least one witness two below the bound must be refuted.
            bool refuted = false;
            std::vector<std::string> errors;
            for (const auto& witness : extremal::extremal_non_cl_sequences(ell, n)) {
                if (witness.sum() != query.value - 2) continue;
                auto verdict = oracle::is_potentially_cl(witness, ell, opts);
                if (verdict.verdict)
                    errors.push_back("witness " + witness.render() +
                                     " unexpectedly admits a cycle of length " +
                                     std::to_string(ell));
                else
                    refuted = true;
            }
            if (!refuted)
                errors.push_back("no extremal witness with sum sigma-2 was refuted for ell=" +
                                 std::to_string(ell) + ", n=" + std::to_string(n));
            std::lock_guard<std::mutex> lock(mutex);
            if (errors.empty())
                collector.add_pass();
            else
                for (const auto& e : errors) collector.add_failure(e);
        }
    }
    return collector.finish(timer);
}

SuiteReport run_sharpness(const SuiteOptions& options) {
    Timer timer;
    Collector collector("sharpness");
    std::mutex mutex;
    for (int ell = 6; ell <= std::min(options.lmax, 7); ++ell) {
        const int i_max = (ell + 1) / 2 - 1;
        for (int i = 1; i <= i_max; ++i) {
            for (int n = ell; n <= options.nmax; ++n) {
                std::vector<std::string> errors;
                try {
                    auto seq = extremal::extremal_non_3cl_sequence(ell, i, n);
                    if (!is_graphic(seq))
                        errors.push_back("template not graphic: " + seq.render());
                    if (check_posa(seq, ell))
                        errors.push_back("template unexpectedly meets the degree condition: " +
                                         seq.render());
                    if (posa_violation_index(seq, ell) != ell + 1 - i)
                        errors.push_back("template fails at the wrong index: " + seq.render());
                    oracle::OracleOptions opts;
                    opts.max_n = options.nmax;
                    opts.budget = options.budget;
                    auto verdict = oracle::is_potentially_3cl(seq, ell, opts);
                    if (verdict.verdict)
                        errors.push_back("template " + seq.render() +
                                         " unexpectedly has a full cycle spectrum");
                } catch (const precondition_error&) {
                    continue; // template undefined for this (i, n)
                } catch (const error& e) {
                    errors.push_back(std::string("sharpness case raised: ") + e.what());
                }
                std::lock_guard<std::mutex> lock(mutex);
                if (errors.empty())
                    collector.add_pass();
                else
                    for (const auto& e : errors) collector.add_failure(e);
            }
        }
    }
    return collector.finish(timer);
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "fixtures") return run_fixtures(options);
    if (name == "graphicality") return run_graphicality(options);
    if (name == "layoff") return run_layoff(options);
    if (name == "posa-small") return run_posa_small(options);
    if (name == "sigma-small") return run_sigma_small(options);
    if (name == "sharpness") return run_sharpness(options);
    throw precondition_error("unknown suite '" + name + "'");
}

} // namespace potcyc::suites
