#include <doctest.h>

#include <functional>
#include <random>

#include "potcyc/degree_sequence.hpp"
#include "potcyc/errors.hpp"

using namespace potcyc;

namespace {

DegreeSequence seq(std::initializer_list<int> terms) { return DegreeSequence(terms); }

// Full-range reference form of the inequality test, compared against the
// cutoff implementation.
bool erdos_gallai_all_t(const DegreeSequence& s) {
    const int n = s.n();
    if (n == 0) return true;
    if (s[1] > n - 1) return false;
    if (!s.even_sum()) return false;
    for (int t = 1; t <= n - 1; ++t) {
        long long lhs = 0;
        for (int i = 1; i <= t; ++i) lhs += s[i];
        long long rhs = static_cast<long long>(t) * (t - 1);
        for (int i = t + 1; i <= n; ++i) rhs += std::min(t, s[i]);
        if (lhs > rhs) return false;
    }
    return true;
}

template <typename Fn>
void for_all_sequences(int n, Fn&& fn) {
    std::vector<int> terms;
    std::function<void(int, int)> rec = [&](int position, int upper) {
        if (position > n) {
            fn(DegreeSequence(terms));
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

} // namespace

TEST_CASE("parse_sequence expands run-length items") {
    CHECK(parse_sequence("4^4,3^2,2^2") == seq({4, 4, 4, 4, 3, 3, 2, 2}));
    CHECK(parse_sequence("0") == seq({0}));
    CHECK(parse_sequence("2,4,3") == seq({4, 3, 2}));
    CHECK(parse_sequence(" 2 , 4 ,3 ") == seq({4, 3, 2}));
}

TEST_CASE("parse_sequence rejects malformed input") {
    CHECK_THROWS_AS(parse_sequence(""), precondition_error);
    CHECK_THROWS_AS(parse_sequence("  "), precondition_error);
    CHECK_THROWS_AS(parse_sequence("1,,2"), precondition_error);
    CHECK_THROWS_AS(parse_sequence("x"), precondition_error);
    CHECK_THROWS_AS(parse_sequence("-1"), precondition_error);
    CHECK_THROWS_AS(parse_sequence("3^0"), precondition_error);
    CHECK_THROWS_AS(parse_sequence("3^-2"), precondition_error);
    CHECK_THROWS_AS(parse_sequence("3^"), precondition_error);
    CHECK_THROWS_AS(parse_sequence("^2"), precondition_error);
}

TEST_CASE("render emits canonical run-length form") {
    CHECK(seq({4, 4, 4, 4, 3, 3, 2, 2}).render() == "4^4,3^2,2^2");
    CHECK(seq({5}).render() == "5");
    CHECK(seq({1, 1, 0}).render() == "1^2,0");
}

TEST_CASE("parse is idempotent through render") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> len(1, 12);
    std::uniform_int_distribution<int> val(0, 9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> terms;
        int n = len(rng);
        for (int i = 0; i < n; ++i) terms.push_back(val(rng));
        DegreeSequence s(terms);
        CHECK(parse_sequence(s.render()) == s);
    }
}

TEST_CASE("f_index") {
    CHECK(f_index(seq({4, 4, 4, 4, 3, 3, 2, 2})) == 4);
    CHECK(f_index(seq({0, 0, 0})) == 0);
    CHECK(f_index(seq({4, 4, 4, 4, 4})) == 4);
    CHECK_THROWS_AS(f_index(DegreeSequence{}), precondition_error);
}

TEST_CASE("is_graphic basics") {
    CHECK(is_graphic(seq({4, 4, 4, 4, 3, 3, 2, 2})));
    CHECK(is_graphic(seq({1, 1})));
    CHECK_FALSE(is_graphic(seq({3, 3, 1, 1})));
    CHECK_FALSE(is_graphic(seq({2, 1})));       // odd sum
    CHECK_FALSE(is_graphic(seq({3, 1})));       // d1 > n-1
    CHECK(is_graphic(seq({0, 0, 0})));
}

TEST_CASE("cutoff inequality test agrees with the full range, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for_all_sequences(n, [&](const DegreeSequence& s) {
            CHECK(is_graphic(s) == erdos_gallai_all_t(s));
        });
    }
}

TEST_CASE("lay_off removes a term and spreads the decrement") {
    CHECK(lay_off(seq({3, 3, 2, 2, 2}), 1) == seq({2, 2, 1, 1}));
    CHECK(lay_off(seq({2, 2, 2}), 3) == seq({1, 1}));
    CHECK(lay_off(seq({4, 4, 4, 4, 3, 3, 2, 2}), 8) == seq({4, 4, 3, 3, 3, 3, 2}));
    CHECK_THROWS_AS(lay_off(seq({3, 1}), 1), precondition_error);
    CHECK_THROWS_AS(lay_off(seq({2, 2, 2}), 0), precondition_error);
    CHECK_THROWS_AS(lay_off(seq({2, 2, 2}), 4), precondition_error);
}

TEST_CASE("laying off preserves graphicality in both directions, n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for_all_sequences(n, [&](const DegreeSequence& s) {
            bool graphic = is_graphic(s);
            for (int k = 1; k <= n; ++k) {
                if (s[k] > n - 1) continue;
                try {
                    auto residual = lay_off(s, k);
                    CHECK(is_graphic(residual) == graphic);
                } catch (const precondition_error&) {
                    // The decrement would underflow: only possible when the
                    // sequence was not graphic to begin with.
                    CHECK_FALSE(graphic);
                }
            }
        });
    }
}

TEST_CASE("check_posa") {
    CHECK(check_posa(seq({4, 3, 3, 3, 2}), 5));
    CHECK(check_posa(seq({4, 4, 4, 4, 4, 4, 3, 2}), 8));
    CHECK_FALSE(check_posa(seq({5, 5, 3, 3, 2, 2}), 6));
    CHECK(posa_violation_index(seq({5, 5, 3, 3, 2, 2}), 6) == 5);
    CHECK(posa_violation_index(seq({6, 4, 4, 3, 3, 1, 1}), 6) == 6);
    CHECK(check_posa(seq({2, 2, 2}), 3));   // vacuous bound
    CHECK_THROWS_AS(check_posa(seq({2, 2, 2}), 4), precondition_error);
    CHECK_THROWS_AS(check_posa(seq({2, 2, 2}), 2), precondition_error);
}

TEST_CASE("check_dirac") {
    CHECK(check_dirac(seq({3, 3, 3, 3, 3, 3}), 6));
    CHECK_FALSE(check_dirac(seq({4, 3, 3, 3, 2}), 5));
    CHECK_THROWS_AS(check_dirac(seq({2, 2}), 3), precondition_error);
}

TEST_CASE("half-degree condition implies the tail condition, n <= 7") {
    for (int n = 5; n <= 7; ++n) {
        for_all_sequences(n, [&](const DegreeSequence& s) {
            for (int ell = 5; ell <= n; ++ell)
                if (check_dirac(s, ell)) CHECK(check_posa(s, ell));
        });
    }
}
