#include <doctest.h>

#include "naive_cycles.hpp"
#include "potcyc/errors.hpp"
#include "potcyc/oracle.hpp"

using namespace potcyc;

TEST_CASE("realization counts for forced shapes") {
    CHECK(oracle::count_realizations(parse_sequence("2,2,2")) == 1);
    CHECK(oracle::count_realizations(parse_sequence("1^4")) == 3);
    CHECK(oracle::count_realizations(parse_sequence("2^4")) == 3);
    CHECK(oracle::count_realizations(parse_sequence("3,3,1,1")) == 0);
    CHECK(oracle::count_realizations(parse_sequence("2,1")) == 0);
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
    auto seq = parse_sequence("3,2,2,2,1");
    auto first = oracle::enumerate_realizations(seq);
    auto second = oracle::enumerate_realizations(seq);
    CHECK(first == second);
    for (std::size_t i = 0; i < first.size(); ++i)
        for (std::size_t j = i + 1; j < first.size(); ++j) CHECK_FALSE(first[i] == first[j]);
    for (const auto& g : first) CHECK(degree_sequence(g) == seq);
}

TEST_CASE("both pruning modes agree on realization counts, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        oracle::OracleOptions eg;
        eg.max_n = 6;
        oracle::OracleOptions basic;
        basic.max_n = 6;
        basic.pruning = oracle::Pruning::basic;
        for (const auto& seq : oracle::enumerate_graphic_sequences(n, {}, eg))
            CHECK(oracle::count_realizations(seq, eg) ==
                  oracle::count_realizations(seq, basic));
    }
}

TEST_CASE("graphicality coincides with realization existence, n <= 6") {
    std::vector<int> terms;
    std::function<void(int, int)> rec;
    for (int n = 1; n <= 6; ++n) {
        rec = [&](int position, int upper) {
            if (position > n) {
                DegreeSequence seq(terms);
                bool exists = oracle::count_realizations(seq) > 0;
                CHECK(exists == is_graphic(seq));
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
}

TEST_CASE("is_potentially_cl") {
    auto no = oracle::is_potentially_cl(parse_sequence("4,4,2,2,2"), 5);
    CHECK_FALSE(no.verdict);
    CHECK(no.realizations_examined == oracle::count_realizations(parse_sequence("4,4,2,2,2")));
    CHECK_FALSE(no.witness.has_value());

    auto yes = oracle::is_potentially_cl(parse_sequence("2^5"), 5);
    CHECK(yes.verdict);
    REQUIRE(yes.witness.has_value());
    CHECK(degree_sequence(*yes.witness) == parse_sequence("2^5"));
    CHECK(testutil::naive_cycle_lengths(*yes.witness).contains(5));

    CHECK(oracle::is_potentially_cl(parse_sequence("4^4,3^2,2^2"), 8).verdict);
}

TEST_CASE("is_potentially_3cl") {
    CHECK_FALSE(oracle::is_potentially_3cl(parse_sequence("6,4,4,3,3,1,1"), 6).verdict);
    auto yes = oracle::is_potentially_3cl(parse_sequence("4^4,3^2,2^2"), 8);
    CHECK(yes.verdict);
    REQUIRE(yes.witness.has_value());
    auto lengths = testutil::naive_cycle_lengths(*yes.witness);
    for (int r = 3; r <= 8; ++r) CHECK(lengths.contains(r));
    CHECK(oracle::is_potentially_3cl(parse_sequence("2,2,2"), 3).verdict);
}

TEST_CASE("graphic sequence enumeration order and contents") {
    auto all = oracle::enumerate_graphic_sequences(3);
    REQUIRE(all.size() == 4);
    CHECK(all[0] == parse_sequence("0^3"));
    CHECK(all[1] == parse_sequence("1^2,0"));
    CHECK(all[2] == parse_sequence("2,1^2"));
    CHECK(all[3] == parse_sequence("2^3"));
}

TEST_CASE("high-sum sequences at n = 5 are all potentially five-cyclic") {
    auto rich = oracle::enumerate_graphic_sequences(
        5, [](const DegreeSequence& s) { return s.sum() >= 16; });
    CHECK(!rich.empty());
    for (const auto& seq : rich) CHECK(oracle::is_potentially_cl(seq, 5).verdict);
}

TEST_CASE("verdicts serialize to a structured report") {
    auto result = oracle::is_potentially_3cl(parse_sequence("4^4,3^2,2^2"), 8);
    auto report = oracle::report_json(result);
    CHECK(report.find("\"property\": \"potentially-3Cl\"") != std::string::npos);
    CHECK(report.find("\"verdict\": true") != std::string::npos);
    CHECK(report.find("\"witness_edges\"") != std::string::npos);
    CHECK(report.find("\"realizations_examined\"") != std::string::npos);
    CHECK(report.find("\"wall_seconds\"") != std::string::npos);

    auto refusal = oracle::is_potentially_cl(parse_sequence("4,4,2,2,2"), 5);
    auto refusal_report = oracle::report_json(refusal);
    CHECK(refusal_report.find("\"verdict\": false") != std::string::npos);
    CHECK(refusal_report.find("witness_edges") == std::string::npos);
}

TEST_CASE("oracle caps refuse instead of truncating") {
    std::vector<int> terms(11, 2);
    CHECK_THROWS_AS(oracle::count_realizations(DegreeSequence(terms)), cap_error);
    CHECK_THROWS_AS(oracle::enumerate_graphic_sequences(11), cap_error);
}
