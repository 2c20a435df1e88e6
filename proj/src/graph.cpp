#include "potcyc/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "potcyc/errors.hpp"

namespace potcyc {

Edge make_edge(int u, int v) {
    if (u == v) throw precondition_error("self-loop edge (" + std::to_string(u) + ")");
    return {std::min(u, v), std::max(u, v)};
}

SimpleGraph::SimpleGraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw precondition_error("negative vertex count");
    if (vertex_count > max_vertices)
        throw precondition_error("vertex count " + std::to_string(vertex_count) +
                                 " exceeds the supported limit of " +
                                 std::to_string(max_vertices));
    adj_.assign(static_cast<std::size_t>(vertex_count), 0);
}

void SimpleGraph::check_vertex(int v, const char* what) const {
    if (v < 1 || v > n_)
        throw precondition_error(std::string(what) + ": vertex " + std::to_string(v) +
                                 " out of range 1.." + std::to_string(n_));
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (std::uint64_t m : adj_) total += std::popcount(m);
    return total / 2;
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u, "has_edge");
    check_vertex(v, "has_edge");
    if (u == v) return false;
    return (adj_[static_cast<std::size_t>(u - 1)] >> (v - 1)) & 1;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw precondition_error("add_edge: self-loop at " + std::to_string(u));
    if (has_edge(u, v))
        throw precondition_error("add_edge: duplicate edge " + std::to_string(u) + "-" +
                                 std::to_string(v));
    adj_[static_cast<std::size_t>(u - 1)] |= 1ULL << (v - 1);
    adj_[static_cast<std::size_t>(v - 1)] |= 1ULL << (u - 1);
}

void SimpleGraph::remove_edge(int u, int v) {
    check_vertex(u, "remove_edge");
    check_vertex(v, "remove_edge");
    if (!has_edge(u, v))
        throw precondition_error("remove_edge: missing edge " + std::to_string(u) + "-" +
                                 std::to_string(v));
    adj_[static_cast<std::size_t>(u - 1)] &= ~(1ULL << (v - 1));
    adj_[static_cast<std::size_t>(v - 1)] &= ~(1ULL << (u - 1));
}

int SimpleGraph::degree(int v) const {
    check_vertex(v, "degree");
    return std::popcount(adj_[static_cast<std::size_t>(v - 1)]);
}

std::uint64_t SimpleGraph::neighbors_mask(int v) const {
    check_vertex(v, "neighbors_mask");
    return adj_[static_cast<std::size_t>(v - 1)];
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::uint64_t m = neighbors_mask(v);
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u) {
        std::uint64_t m = adj_[static_cast<std::size_t>(u - 1)] >> u; // bits for v > u
        while (m) {
            int v = u + 1 + std::countr_zero(m);
            out.emplace_back(u, v);
            m &= m - 1;
        }
    }
    return out;
}

std::vector<int> degrees_by_label(const SimpleGraph& g) {
    std::vector<int> out(static_cast<std::size_t>(g.n()));
    for (int v = 1; v <= g.n(); ++v) out[static_cast<std::size_t>(v - 1)] = g.degree(v);
    return out;
}

DegreeSequence degree_sequence(const SimpleGraph& g) {
    return DegreeSequence(degrees_by_label(g));
}

namespace {

struct RankedVertex {
    int label;
    int residual;
};

SimpleGraph realize_impl(const DegreeSequence& seq, bool from_top) {
    if (!is_graphic(seq)) throw precondition_error("realize: sequence is not graphic");
    const int n = seq.n();
    SimpleGraph g(n);
    std::vector<RankedVertex> items;
    items.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) items.push_back({i, seq[i]});

    while (!items.empty()) {
        // Keep (residual desc, label asc); the initial order has that shape
        // and stable_sort preserves it across rounds.
        std::stable_sort(items.begin(), items.end(),
                         [](const RankedVertex& a, const RankedVertex& b) {
                             return a.residual > b.residual;
                         });
        std::size_t pick = from_top ? 0 : items.size() - 1;
        RankedVertex chosen = items[pick];
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
        if (chosen.residual > static_cast<int>(items.size()))
            throw internal_error("realize: residual demand exceeds remaining vertices");
        for (int i = 0; i < chosen.residual; ++i) {
            g.add_edge(chosen.label, items[static_cast<std::size_t>(i)].label);
            items[static_cast<std::size_t>(i)].residual -= 1;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) != seq[v]) throw internal_error("realize: degree mismatch");
    return g;
}

std::uint64_t mask_of(const std::vector<int>& vertices, int n) {
    std::uint64_t m = 0;
    for (int v : vertices) {
        if (v < 1 || v > n) throw precondition_error("vertex subset entry out of range");
        m |= 1ULL << (v - 1);
    }
    return m;
}

std::uint64_t full_mask(int n) {
    return n == 64 ? ~0ULL : (1ULL << n) - 1;
}

// Iteratively drops vertices with fewer than two neighbors inside the set;
// cycle vertices always survive.
std::uint64_t two_core(const SimpleGraph& g, std::uint64_t allowed) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::uint64_t m = allowed;
        while (m) {
            int v = std::countr_zero(m) + 1;
            m &= m - 1;
            if (std::popcount(g.neighbors_mask(v) & allowed) < 2) {
                allowed &= ~(1ULL << (v - 1));
                changed = true;
            }
        }
    }
    return allowed;
}

class CycleSearch {
public:
    CycleSearch(const SimpleGraph& g, int length, std::uint64_t allowed,
                const SearchBudget& budget)
        : g_(g), length_(length), allowed_(allowed), budget_(budget) {}

    std::optional<std::vector<int>> run() {
        std::uint64_t core = two_core(g_, allowed_);
        if (std::popcount(core) < length_) return std::nullopt;
        std::uint64_t starts = core;
        while (starts) {
            int s = std::countr_zero(starts) + 1;
            starts &= starts - 1;
            start_ = s;
            // Only labels >= s may appear, so each cycle is found once,
            // rooted at its minimum vertex.
            scope_ = core & ~(full_mask(s - 1));
            if (std::popcount(scope_) < length_) continue;
            compute_dist();
            path_.assign(1, s);
            if (extend(s, 1ULL << (s - 1))) return path_;
        }
        return std::nullopt;
    }

private:
    const SimpleGraph& g_;
    int length_;
    std::uint64_t allowed_;
    SearchBudget budget_;
    std::uint64_t nodes_ = 0;

    int start_ = 0;
    std::uint64_t scope_ = 0;
    std::vector<int> path_;
    std::array<int, SimpleGraph::max_vertices + 1> dist_{};

    void compute_dist() {
        dist_.fill(-1);
        dist_[static_cast<std::size_t>(start_)] = 0;
        std::vector<int> frontier{start_};
        int d = 0;
        while (!frontier.empty()) {
            ++d;
            std::vector<int> next;
            for (int v : frontier) {
                std::uint64_t m = g_.neighbors_mask(v) & scope_;
                while (m) {
                    int w = std::countr_zero(m) + 1;
                    m &= m - 1;
                    if (dist_[static_cast<std::size_t>(w)] < 0) {
                        dist_[static_cast<std::size_t>(w)] = d;
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    bool extend(int v, std::uint64_t used) {
        if (++nodes_ > budget_.node_limit)
            throw budget_error("cycle search budget exhausted (length " +
                               std::to_string(length_) + ")");
        const int depth = static_cast<int>(path_.size());
        if (depth == length_) return g_.has_edge(v, start_);
        const int remaining = length_ - depth;
        std::uint64_t cand = g_.neighbors_mask(v) & scope_ & ~used;
        while (cand) {
            int w = std::countr_zero(cand) + 1;
            cand &= cand - 1;
            int dw = dist_[static_cast<std::size_t>(w)];
            if (dw < 0 || dw > remaining - 1 + 1) continue; // must close in `remaining` steps
            path_.push_back(w);
            if (extend(w, used | (1ULL << (w - 1)))) return true;
            path_.pop_back();
        }
        return false;
    }
};

} // namespace

SimpleGraph realize(const DegreeSequence& seq) { return realize_impl(seq, false); }
SimpleGraph realize_top_first(const DegreeSequence& seq) { return realize_impl(seq, true); }

std::optional<std::vector<int>> find_cycle_of_length(const SimpleGraph& g, int length,
                                                     const SearchBudget& budget) {
    if (length < 3 || length > g.n())
        throw precondition_error("cycle length " + std::to_string(length) + " out of range");
    return CycleSearch(g, length, full_mask(g.n()), budget).run();
}

std::optional<std::vector<int>> find_cycle_of_length(const SimpleGraph& g, int length,
                                                     const std::vector<int>& within,
                                                     const SearchBudget& budget) {
    std::uint64_t allowed = mask_of(within, g.n());
    if (length < 3 || length > std::popcount(allowed))
        throw precondition_error("cycle length " + std::to_string(length) + " out of range");
    return CycleSearch(g, length, allowed, budget).run();
}

bool CycleSpectrum::covers(int lo, int hi) const {
    for (int r = lo; r <= hi; ++r)
        if (!present.contains(r)) return false;
    return true;
}

namespace {

CycleSpectrum spectrum_impl(const SimpleGraph& g, int ell_max,
                            std::optional<std::vector<int>> within,
                            const SearchBudget& budget) {
    CycleSpectrum spec;
    spec.ell_max = ell_max;
    spec.restricted_to = within;
    int limit = within ? static_cast<int>(within->size()) : g.n();
    if (ell_max > limit)
        throw precondition_error("spectrum bound exceeds available vertices");
    for (int r = 3; r <= ell_max; ++r) {
        auto cycle = within ? find_cycle_of_length(g, r, *within, budget)
                            : find_cycle_of_length(g, r, budget);
        if (cycle) {
            spec.present.insert(r);
            spec.witness[r] = *cycle;
        }
    }
    return spec;
}

} // namespace

CycleSpectrum cycle_spectrum(const SimpleGraph& g, int ell_max, const SearchBudget& budget) {
    return spectrum_impl(g, ell_max, std::nullopt, budget);
}

CycleSpectrum cycle_spectrum(const SimpleGraph& g, int ell_max,
                             const std::vector<int>& within, const SearchBudget& budget) {
    return spectrum_impl(g, ell_max, within, budget);
}

SimpleGraph two_swap(const SimpleGraph& g, Edge remove1, Edge remove2, Edge add1, Edge add2) {
    auto r1 = make_edge(remove1.first, remove1.second);
    auto r2 = make_edge(remove2.first, remove2.second);
    auto a1 = make_edge(add1.first, add1.second);
    auto a2 = make_edge(add2.first, add2.second);
    if (r1 == r2) throw precondition_error("two_swap: removed edges must be distinct");
    if (a1 == a2) throw precondition_error("two_swap: added edges must be distinct");
    if (!g.has_edge(r1.first, r1.second))
        throw precondition_error("two_swap: removed edge " + std::to_string(r1.first) + "-" +
                                 std::to_string(r1.second) + " not present");
    if (!g.has_edge(r2.first, r2.second))
        throw precondition_error("two_swap: removed edge " + std::to_string(r2.first) + "-" +
                                 std::to_string(r2.second) + " not present");

    std::array<int, 4> removed_ends{r1.first, r1.second, r2.first, r2.second};
    std::array<int, 4> added_ends{a1.first, a1.second, a2.first, a2.second};
    std::sort(removed_ends.begin(), removed_ends.end());
    std::sort(added_ends.begin(), added_ends.end());
    if (removed_ends != added_ends)
        throw precondition_error("two_swap: added edges must touch the same four endpoints "
                                 "with the same multiplicity per vertex");

    SimpleGraph out = g;
    out.remove_edge(r1.first, r1.second);
    out.remove_edge(r2.first, r2.second);
    for (auto e : {a1, a2}) {
        if (out.has_edge(e.first, e.second))
            throw precondition_error("two_swap: added edge " + std::to_string(e.first) + "-" +
                                     std::to_string(e.second) + " already present");
        out.add_edge(e.first, e.second);
    }
    return out;
}

std::vector<int> top_rank_vertices(const SimpleGraph& g, int count) {
    if (count < 0 || count > g.n()) throw precondition_error("top_rank_vertices: bad count");
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    for (int v = 1; v <= g.n(); ++v) order[static_cast<std::size_t>(v - 1)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    order.resize(static_cast<std::size_t>(count));
    std::sort(order.begin(), order.end());
    return order;
}

HoistResult hoist_subgraph(const SimpleGraph& g, const std::vector<int>& witness,
                           const SearchBudget& budget) {
    HoistResult result{g, {}, {}};
    std::uint64_t have = mask_of(witness, g.n());
    if (std::popcount(have) != static_cast<int>(witness.size()))
        throw precondition_error("hoist_subgraph: duplicate witness vertices");
    std::uint64_t want = mask_of(top_rank_vertices(g, static_cast<int>(witness.size())), g.n());

    while (have != want) {
        // Worst-ranked witness vertex outside the target, best-ranked target
        // vertex outside the witness. Targets always rank at least as high.
        auto rank_less = [&](int a, int b) {
            int da = result.graph.degree(a), db = result.graph.degree(b);
            if (da != db) return da > db;
            return a < b;
        };
        int out_v = 0, in_v = 0;
        std::uint64_t m = have & ~want;
        while (m) {
            int v = std::countr_zero(m) + 1;
            m &= m - 1;
            if (out_v == 0 || rank_less(out_v, v)) out_v = v;
        }
        m = want & ~have;
        while (m) {
            int v = std::countr_zero(m) + 1;
            m &= m - 1;
            if (in_v == 0 || rank_less(v, in_v)) in_v = v;
        }
        if (result.graph.degree(in_v) < result.graph.degree(out_v))
            throw internal_error("hoist_subgraph: target vertex ranks below witness vertex");

        // Hand out_v's adjacencies to in_v: pair the neighbors out_v has
        // exclusively with neighbors in_v has exclusively and exchange them.
        std::uint64_t nw = result.graph.neighbors_mask(out_v);
        std::uint64_t nu = result.graph.neighbors_mask(in_v);
        std::uint64_t only_w = nw & ~nu & ~(1ULL << (in_v - 1));
        std::uint64_t only_u = nu & ~nw & ~(1ULL << (out_v - 1));
        if (std::popcount(only_w) > std::popcount(only_u))
            throw internal_error("hoist_subgraph: exchange pairing impossible");
        while (only_w) {
            int a = std::countr_zero(only_w) + 1;
            only_w &= only_w - 1;
            int b = std::countr_zero(only_u) + 1;
            only_u &= only_u - 1;
            SwapRecord rec{make_edge(out_v, a), make_edge(in_v, b), make_edge(in_v, a),
                           make_edge(out_v, b)};
            result.graph = two_swap(result.graph, rec.removed1, rec.removed2, rec.added1,
                                    rec.added2);
            result.swaps.push_back(rec);
            if (result.swaps.size() > budget.swap_limit)
                throw budget_error("hoist_subgraph: swap budget exhausted");
        }
        have = (have & ~(1ULL << (out_v - 1))) | (1ULL << (in_v - 1));
    }

    while (have) {
        int v = std::countr_zero(have) + 1;
        have &= have - 1;
        result.final_set.push_back(v);
    }
    return result;
}

std::string to_edge_list(const SimpleGraph& g) {
    std::string out = "n " + std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

SimpleGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    int n = -1;
    if (!(in >> tag >> n) || tag != "n" || n < 0)
        throw precondition_error("edge list must start with a 'n <count>' header");
    SimpleGraph g(n);
    int u, v;
    while (in >> u >> v) g.add_edge(u, v);
    if (!in.eof() && in.fail()) {
        in.clear();
        std::string rest;
        in >> rest;
        if (!rest.empty()) throw precondition_error("malformed edge list near '" + rest + "'");
    }
    return g;
}

std::string to_dot(const SimpleGraph& g) {
    std::string out = "graph G {\n";
    for (int v = 1; v <= g.n(); ++v) out += "  x" + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  x" + std::to_string(u) + " -- x" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

} // namespace potcyc
