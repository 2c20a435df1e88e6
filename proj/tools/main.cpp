#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "potcyc/builder.hpp"
#include "potcyc/errors.hpp"
#include "potcyc/extremal.hpp"
#include "potcyc/oracle.hpp"
#include "potcyc/suites.hpp"

namespace {

using namespace potcyc;

constexpr int exit_ok = 0;
constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

struct Common {
    std::string format = "text";
    std::string out_dir;
    std::uint64_t budget_nodes = 0;
    int threads = 1;
};

SearchBudget budget_from(const Common& common) {
    SearchBudget budget;
    if (common.budget_nodes > 0) {
        budget.node_limit = common.budget_nodes;
        budget.swap_limit = common.budget_nodes;
        budget.realization_limit = common.budget_nodes;
    }
    return budget;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw precondition_error("cannot write " + path);
    out << content;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_check(const std::string& seq_text, int ell, const Common& common) {
    auto start = std::chrono::steady_clock::now();
    auto seq = parse_sequence(seq_text);
    const bool graphic = is_graphic(seq);
    nlohmann::json report;
    report["command"] = "check";
    report["sequence"] = seq.render();
    report["n"] = seq.n();
    report["graphic"] = graphic;
    report["f_index"] = f_index(seq);
    if (ell > 0) {
        if (ell < 3 || ell > seq.n())
            throw precondition_error("need 3 <= l <= n");
        report["l"] = ell;
        report["posa"] = check_posa(seq, ell);
        report["dirac"] = check_dirac(seq, ell);
        int idx = posa_violation_index(seq, ell);
        if (idx > 0) report["posa_fails_at"] = "d_" + std::to_string(idx);
    }
    report["wall_seconds"] = seconds_since(start);
    if (common.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "sequence: " << seq.render() << "\n";
        std::cout << "graphic: " << (graphic ? "true" : "false") << "\n";
        std::cout << "f_index: " << report["f_index"].get<int>() << "\n";
        if (ell > 0) {
            std::cout << "posa(l=" << ell << "): "
                      << (report["posa"].get<bool>() ? "true" : "false");
            if (report.contains("posa_fails_at"))
                std::cout << " (fails at " << report["posa_fails_at"].get<std::string>() << ")";
            std::cout << "\n";
            std::cout << "dirac(l=" << ell << "): "
                      << (report["dirac"].get<bool>() ? "true" : "false") << "\n";
        }
    }
    return graphic ? exit_ok : exit_false;
}

int cmd_build(const std::string& seq_text, int ell, const Common& common) {
    auto start = std::chrono::steady_clock::now();
    auto seq = parse_sequence(seq_text);
    builder::BuildOptions options;
    options.budget = budget_from(common);

    builder::BuildResult result{SimpleGraph(0), {}};
    try {
        result = builder::build_all_cycles(seq, ell, options);
    } catch (const precondition_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return exit_false;
    }

    auto spectrum = cycle_spectrum(result.graph, ell, options.budget);
    nlohmann::json report;
    report["command"] = "build";
    report["sequence"] = seq.render();
    report["l"] = ell;
    report["spectrum"] = std::vector<int>(spectrum.present.begin(), spectrum.present.end());
    report["trace_steps"] = result.trace.steps.size();

    if (!common.out_dir.empty()) {
        std::filesystem::create_directories(common.out_dir);
        const std::string edges_path = common.out_dir + "/witness.edges";
        const std::string dot_path = common.out_dir + "/witness.dot";
        const std::string trace_path = common.out_dir + "/trace.txt";
        const std::string trace_json_path = common.out_dir + "/trace.json";
        write_file(edges_path, to_edge_list(result.graph));
        write_file(dot_path, to_dot(result.graph));
        write_file(trace_path, result.trace.to_text());
        write_file(trace_json_path, result.trace.to_json());
        // Emitted witnesses must round-trip to the identical graph.
        std::ifstream in(edges_path, std::ios::binary);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (!(parse_edge_list(text) == result.graph))
            throw internal_error("witness edge list failed to round-trip");
        report["witness"] = edges_path;
        report["dot"] = dot_path;
        report["trace"] = trace_path;
        report["trace_json"] = trace_json_path;
    }
    report["wall_seconds"] = seconds_since(start);

    if (common.format == "json") {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "sequence: " << seq.render() << "\n";
        std::cout << "spectrum:";
        for (int r : spectrum.present) std::cout << " " << r;
        std::cout << "\n";
        std::cout << "trace steps: " << result.trace.steps.size() << "\n";
        if (report.contains("witness"))
            std::cout << "witness: " << report["witness"].get<std::string>() << "\n";
    }
    return spectrum.covers(3, ell) ? exit_ok : exit_internal;
}

int cmd_sigma(int ell, const std::string& n_spec, const Common& common) {
    int n_lo = 0, n_hi = 0;
    auto dots = n_spec.find("..");
    if (dots == std::string::npos) {
        n_lo = n_hi = std::stoi(n_spec);
    } else {
        n_lo = std::stoi(n_spec.substr(0, dots));
        n_hi = std::stoi(n_spec.substr(dots + 2));
    }
    if (n_lo > n_hi) throw precondition_error("empty n range");

    if (n_lo == n_hi && common.format != "csv") {
        auto q = extremal::sigma_potential(ell, n_lo);
        if (common.format == "json") {
            nlohmann::json report{{"command", "sigma"},
                                  {"l", q.ell},
                                  {"n", q.n},
                                  {"sigma", q.value},
                                  {"dominant_branch", q.dominant_branch}};
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << "sigma(C_" << ell << ", " << n_lo << ") = " << q.value << " ["
                      << q.dominant_branch << "]\n";
        }
        return exit_ok;
    }
    std::string csv = extremal::sigma_table_csv(ell, n_lo, n_hi);
    if (!common.out_dir.empty()) {
        std::filesystem::create_directories(common.out_dir);
        write_file(common.out_dir + "/sigma.csv", csv);
        std::cout << "wrote " << common.out_dir << "/sigma.csv\n";
    } else {
        std::cout << csv;
    }
    return exit_ok;
}

int cmd_verify(const std::string& suite, int nmax, int lmax, const std::string& fixtures_dir,
               const Common& common) {
    suites::SuiteOptions options;
    options.nmax = nmax;
    options.lmax = lmax;
    options.threads = common.threads;
    options.budget = budget_from(common);
    options.fixtures_dir = fixtures_dir;
    auto report = suites::run_suite(suite, options);
    if (common.format == "json") {
        nlohmann::json j{{"command", "verify"},
                         {"suite", report.name},
                         {"cases", report.cases},
                         {"failures", report.failures},
                         {"messages", report.messages},
                         {"wall_seconds", report.wall_seconds}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report.summary() << "\n";
        for (const auto& m : report.messages) std::cout << "  " << m << "\n";
    }
    return report.passed() ? exit_ok : exit_false;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-sequence cycle-spectrum toolkit"};
    app.require_subcommand(1);
    Common common;

    std::string seq_text;
    int ell = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "text or json")->default_str("text");
        cmd->add_option("--out", common.out_dir, "output directory");
        cmd->add_option("--budget", common.budget_nodes, "search budget override");
        cmd->add_option("--threads", common.threads, "worker threads for sweeps");
    };

    auto* check = app.add_subcommand("check", "degree-sequence predicates");
    check->add_option("sequence", seq_text, "run-length degree sequence")->required();
    check->add_option("--l", ell, "cycle length bound");
    add_common(check);

    auto* build = app.add_subcommand("build", "construct a realization with cycles 3..l");
    build->add_option("sequence", seq_text, "run-length degree sequence")->required();
    build->add_option("--l", ell, "cycle length bound")->required();
    add_common(build);

    std::string n_spec;
    auto* sigma = app.add_subcommand("sigma", "potential-number values");
    sigma->add_option("--l", ell, "cycle length")->required();
    sigma->add_option("--n", n_spec, "vertex count or range a..b")->required();
    add_common(sigma);

    std::string suite_name, fixtures_dir;
    int nmax = 7, lmax = 6;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_name,
                       "graphicality | layoff | posa-small | sigma-small | sharpness | fixtures")
        ->required();
    verify->add_option("--nmax", nmax, "largest sequence length");
    verify->add_option("--lmax", lmax, "largest cycle length");
    verify->add_option("--fixtures", fixtures_dir, "directory with shipped fixture files");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(seq_text, ell, common);
        if (build->parsed()) return cmd_build(seq_text, ell, common);
        if (sigma->parsed()) return cmd_sigma(ell, n_spec, common);
        if (verify->parsed()) return cmd_verify(suite_name, nmax, lmax, fixtures_dir, common);
    } catch (const internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return exit_internal;
    } catch (const cap_error& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return exit_usage;
    } catch (const budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return exit_usage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
