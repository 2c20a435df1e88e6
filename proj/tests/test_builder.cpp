#include <doctest.h>

#include "naive_cycles.hpp"
#include "potcyc/builder.hpp"
#include "potcyc/errors.hpp"
#include "potcyc/oracle.hpp"

using namespace potcyc;
using builder::BuildResult;

namespace {

bool has_tag(const builder::BuildTrace& trace, const std::string& tag) {
    for (const auto& s : trace.steps)
        if (s.tag == tag) return true;
    return false;
}

void check_build(const DegreeSequence& seq, int ell, const BuildResult& result,
                 bool placed = false) {
    CHECK(degree_sequence(result.graph) == seq);
    CHECK(cycle_spectrum(result.graph, ell).covers(3, ell));
    if (placed) {
        std::vector<int> top;
        for (int i = 1; i <= ell; ++i) top.push_back(i);
        CHECK(cycle_spectrum(result.graph, ell, top).covers(3, ell));
    }
    CHECK(builder::replay_trace(result.trace) == result.graph);
}

} // namespace

TEST_CASE("build_all_cycles on the small named cases") {
    auto r1 = builder::build_all_cycles(parse_sequence("4^6,3,2,1"), 8);
    check_build(parse_sequence("4^6,3,2,1"), 8, r1, true);

    auto r2 = builder::build_all_cycles(parse_sequence("3^4,2^2"), 5);
    check_build(parse_sequence("3^4,2^2"), 5, r2);
    CHECK(oracle::is_potentially_3cl(parse_sequence("3^4,2^2"), 5).verdict);

    auto r3 = builder::build_all_cycles(parse_sequence("5^6"), 6);
    check_build(parse_sequence("5^6"), 6, r3);
    CHECK(r3.graph.edge_count() == 15);
}

TEST_CASE("the four frozen eight-vertex bases build despite missing the condition") {
    for (const char* text : {"4^4,3^2,2^2", "4^5,3^2,2", "4^6,2^2", "6,4^5,2^2"}) {
        auto seq = parse_sequence(text);
        CHECK_FALSE(check_posa(seq, 8));
        auto result = builder::build_all_cycles(seq, 8);
        check_build(seq, 8, result, true);
    }
}

TEST_CASE("build refusal names the violated index") {
    CHECK_THROWS_WITH_AS(builder::build_all_cycles(parse_sequence("6,4,4,3,3,1,1"), 6),
                         doctest::Contains("d_6"), precondition_error);
    CHECK_THROWS_AS(builder::build_all_cycles(parse_sequence("3,3,1,1"), 5),
                    precondition_error);
    CHECK_THROWS_AS(builder::build_all_cycles(parse_sequence("2^6"), 4), precondition_error);
    CHECK_THROWS_AS(builder::build_all_cycles(parse_sequence("2^4"), 5), precondition_error);
}

TEST_CASE("base_pancyclic") {
    auto triangle = builder::base_pancyclic(parse_sequence("2,2,2"));
    CHECK(triangle.graph.edge_count() == 3);

    // Exhibited by the first figure even though the condition fails at d_7.
    auto fig1_like = builder::base_pancyclic(parse_sequence("4^4,3^2,2^2"));
    CHECK(testutil::naive_cycle_lengths(fig1_like.graph) ==
          std::set<int>{3, 4, 5, 6, 7, 8});

    auto fig4_like = builder::base_pancyclic(parse_sequence("6,4^5,2^2"));
    CHECK(testutil::naive_cycle_lengths(fig4_like.graph) ==
          std::set<int>{3, 4, 5, 6, 7, 8});

    // A plain even cycle has no shorter cycles; refused, not misreported.
    CHECK_THROWS_AS(builder::base_pancyclic(parse_sequence("2^4")), precondition_error);
    CHECK_THROWS_AS(builder::base_pancyclic(parse_sequence("0,0,0")), precondition_error);
}

TEST_CASE("even engine: half-degree search branch with placement") {
    auto seq = parse_sequence("5^12");
    auto result = builder::build_even(seq, 5);
    check_build(seq, 10, result, true);
    CHECK(has_tag(result.trace, "search-fallback"));
}

TEST_CASE("even engine: tail-shift reduction chain") {
    auto seq = parse_sequence("6,5^6,4^3,2^2");
    auto result = builder::build_even(seq, 5);
    check_build(seq, 10, result, true);
    CHECK(has_tag(result.trace, "L2.3"));
}

TEST_CASE("even engine: middle-window reduction chain") {
    auto seq = parse_sequence("5^7,4^4,3,2");
    auto result = builder::build_even(seq, 5);
    check_build(seq, 10, result, true);
    CHECK(has_tag(result.trace, "L2.4"));
    CHECK(has_tag(result.trace, "L2.3"));
}

TEST_CASE("even engine: double lay-off, both window cases") {
    auto tight = parse_sequence("5^8,4^2,2^2"); // p = 0, d_{2m} = m-1
    auto r1 = builder::build_even(tight, 5);
    check_build(tight, 10, r1, true);
    CHECK(has_tag(r1.trace, "L2.5"));

    auto headed = parse_sequence("6,5^7,4^3,3"); // p = 1
    auto r2 = builder::build_even(headed, 5);
    check_build(headed, 10, r2, true);
    CHECK(has_tag(r2.trace, "L2.5"));
}

TEST_CASE("staircase construction at n = 2m+1") {
    auto wide = parse_sequence("7,5^6,4,3,2,2"); // tail 2, wide head
    auto r1 = builder::build_special_2m1(wide, 5);
    check_build(wide, 10, r1, true);

    auto via_all = builder::build_all_cycles(wide, 10);
    CHECK(has_tag(via_all.trace, "L2.6"));
    check_build(wide, 10, via_all, true);

    auto tight2 = parse_sequence("8,7^8,6,5,4,3,2,2"); // tail 2, head m+1
    REQUIRE(is_graphic(tight2));
    auto r2 = builder::build_special_2m1(tight2, 7);
    check_build(tight2, 14, r2, true);

    auto tight1 = parse_sequence("7^9,6,5,4,3,2,1"); // tail 1, head m
    REQUIRE(is_graphic(tight1));
    auto r3 = builder::build_special_2m1(tight1, 7);
    check_build(tight1, 14, r3, true);

    CHECK_THROWS_AS(builder::build_special_2m1(parse_sequence("5^12"), 5),
                    precondition_error);
}

TEST_CASE("odd engine: half-degree fast path") {
    auto seq = parse_sequence("5^10");
    auto result = builder::build_odd(seq, 4);
    check_build(seq, 9, result);
    CHECK(has_tag(result.trace, "T1.2-fastpath"));
}

TEST_CASE("odd engine: lay off the flat block and rethread") {
    auto seq = parse_sequence("5^6,4^3,2");
    REQUIRE(is_graphic(seq));
    auto result = builder::build_odd(seq, 4);
    check_build(seq, 9, result);
    CHECK(has_tag(result.trace, "L2.9"));
}

TEST_CASE("odd engine: lay off the last term when the head is tall") {
    auto seq = parse_sequence("7,6^5,5^4,4,1");
    REQUIRE(is_graphic(seq));
    REQUIRE(check_posa(seq, 9));
    auto result = builder::build_all_cycles(seq, 9);
    check_build(seq, 9, result);
}

TEST_CASE("builds are deterministic byte for byte") {
    const std::pair<const char*, int> cases[] = {
        {"5^8,4^2,2^2", 10}, {"4^6,3,2,1", 8}, {"5^10", 9}, {"7,5^6,4,3,2,2", 10}};
    for (auto [text, ell] : cases) {
        auto seq = parse_sequence(text);
        auto a = builder::build_all_cycles(seq, ell);
        auto b = builder::build_all_cycles(seq, ell);
        CHECK(a.trace.to_text() == b.trace.to_text());
        CHECK(to_edge_list(a.graph) == to_edge_list(b.graph));
    }
}

TEST_CASE("trace serialization carries the reductions") {
    auto result = builder::build_even(parse_sequence("5^7,4^4,3,2"), 5);
    auto text = result.trace.to_text();
    CHECK(text.find("kind=reduce") != std::string::npos);
    CHECK(text.find("kind=base") != std::string::npos);
    CHECK(text.find("kind=attach") != std::string::npos);
    auto json = result.trace.to_json();
    CHECK(json.find("\"tag\"") != std::string::npos);
}

TEST_CASE("sequence reductions match their defining patterns") {
    // Tail-shift with an empty head prefix: only position n-1 drops.
    auto omega = builder::reduce_omega(parse_sequence("6,5^6,4,4,3,2,1"), 5);
    CHECK(omega == parse_sequence("6,5^6,4,4,3,1"));

    // Middle-window at p = 0, n = 2m+3: window m+4..2m plus 2m+2, 2m+3.
    auto rho = builder::reduce_rho(parse_sequence("5^7,4^4,2,1"), 5);
    CHECK(rho == parse_sequence("5^7,4,3^2,1,0"));

    // Double lay-off equals two chained residual sequences when d_r = m.
    auto seq = parse_sequence("5^9,3^2,1");
    auto omega2 = builder::reduce_omega2(seq, 5);
    auto once = lay_off(seq, 7);
    auto twice = lay_off(once, 9);
    CHECK(omega2 == twice);

    CHECK_THROWS_AS(builder::reduce_omega(parse_sequence("5^10"), 5), precondition_error);
    CHECK_THROWS_AS(builder::reduce_rho(parse_sequence("5^12"), 5), precondition_error);
}

TEST_CASE("the double lay-off claim check refuses to proceed when violated") {
    auto seq = parse_sequence("6,5^5,2^4,1");
    REQUIRE(is_graphic(seq));
    CHECK_THROWS_AS(builder::reduce_omega2(seq, 5), internal_error);
}

TEST_CASE("every small graphic sequence meeting the condition builds, n <= 7") {
    oracle::OracleOptions opts;
    opts.max_n = 7;
    for (int ell = 5; ell <= 7; ++ell) {
        for (int n = ell; n <= 7; ++n) {
            auto seqs = oracle::enumerate_graphic_sequences(
                n, [&](const DegreeSequence& s) { return check_posa(s, ell); }, opts);
            for (const auto& seq : seqs) {
                auto result = builder::build_all_cycles(seq, ell);
                CHECK(degree_sequence(result.graph) == seq);
                auto lengths = testutil::naive_cycle_lengths(result.graph);
                for (int r = 3; r <= ell; ++r) CHECK(lengths.contains(r));
            }
        }
    }
}

TEST_CASE("search budgets fail loudly instead of degrading") {
    builder::BuildOptions tiny;
    tiny.budget.node_limit = 10;
    tiny.budget.swap_limit = 2;
    tiny.budget.realization_limit = 1;
    CHECK_THROWS_AS(builder::build_all_cycles(parse_sequence("5^12"), 10, tiny),
                    budget_error);
}
