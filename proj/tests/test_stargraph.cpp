#include "fibtype/stargraph.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fibtype;

namespace {
int count_type(const StarGraph& g, EdgeType t) {
    int c = 0;
    for (const auto& e : g.edges) c += (e.type == t);
    return c;
}
}  // namespace

TEST_CASE("star graph of P_n(m,k): 2n vertices, n edges of each type") {
    for (int n : {5, 8, 10, 12}) {
        StarGraph g = build_star_graph(n, 1, 2);
        CHECK(g.vertex_count() == 2 * n);
        CHECK(g.edges.size() == size_t(3 * n));
        CHECK(count_type(g, EdgeType::X) == n);
        CHECK(count_type(g, EdgeType::Y) == n);
        CHECK(count_type(g, EdgeType::Z) == n);
        // 3-regular
        auto inc = g.incidence();
        for (const auto& v : inc) CHECK(v.size() == 3);
    }
}

TEST_CASE("typed edge rules") {
    // P_10(7,1): A=1, so Z edges join x_i^- to x_{i+1}^-
    StarGraph g = build_star_graph(10, 7, 1);
    for (const auto& e : g.edges) {
        if (e.type != EdgeType::Z) continue;
        int i = e.u - 10, j = e.v - 10;
        REQUIRE(i >= 0);
        REQUIRE(j >= 0);
        CHECK((mod(j - i, 10) == 1 || mod(i - j, 10) == 1));
    }
    // P_5(1,2): B=1, so Y edges join x_i to x_{i+1}
    StarGraph h = build_star_graph(5, 1, 2);
    for (const auto& e : h.edges) {
        if (e.type != EdgeType::Y) continue;
        CHECK(e.u < 5);
        CHECK(e.v < 5);
        CHECK((mod(e.v - e.u, 5) == 1 || mod(e.u - e.v, 5) == 1));
    }
    // non-cyclically-reduced defining words are rejected (k = 0 wraps around)
    CHECK_THROWS_AS(build_star_graph(5, 1, 0), std::invalid_argument);
}

TEST_CASE("girth") {
    CHECK(girth(build_star_graph(8, 1, 2)) == 4);   // 4A = 0 mod 8
    CHECK(girth(build_star_graph(9, 1, 2)) >= 5);
    CHECK(girth(build_star_graph(12, 6, 1)) >= 6);  // H(12,6) is T(6)
    // doubled Y edges when 2B = 0: girth 2
    CHECK(girth(build_star_graph(8, 5, 1)) == 2);
    // a forest: single relator x_0 over n=2 gives two disjoint edges
    StarGraph f = build_star_graph(CyclicPresentation(2, Word(2, {{0, 1}})));
    CHECK(girth(f) == kInfiniteGirth);
}

TEST_CASE("pieces") {
    // T(5) presentations have max piece length 1
    for (auto [n, m, k] : {std::tuple{9, 1, 2}, {10, 7, 1}, {11, 4, 1}, {5, 1, 2}}) {
        REQUIRE(is_T5(n, m, k));
        PieceReport rep = pieces(fib_presentation(n, m, k));
        CHECK(rep.max_length == 1);
    }
    // P_2(x_0 x_1): the two relators are rotations of each other
    PieceReport p2 = pieces(CyclicPresentation(2, Word(2, {{0, 1}, {1, 1}})));
    CHECK(p2.max_length == 2);
    // relators of length 1 admit no pieces
    PieceReport p1 = pieces(CyclicPresentation(2, Word(2, {{0, 1}})));
    CHECK(p1.pieces.empty());
    CHECK(p1.max_length == 0);
}

TEST_CASE("small cancellation profile") {
    auto p9 = small_cancellation_profile(fib_presentation(9, 1, 2));
    CHECK(p9.t >= 5);  // F(2,9) is T(5)
    CHECK(p9.c == 3);  // length-3 relator, pieces of length 1
    auto p11 = small_cancellation_profile(fib_presentation(11, 4, 1));
    CHECK(p11.t >= 6);  // H(11,4) is T(6)
    auto p8 = small_cancellation_profile(fib_presentation(8, 4, 1));
    CHECK(p8.t >= 6);  // H(8,4) is T(6)

    // no relator decomposes into pieces at all: C(p) holds vacuously
    auto p1 = small_cancellation_profile(CyclicPresentation(2, Word(2, {{0, 1}})));
    CHECK(p1.c_infinite);
}

TEST_CASE("short cycles of the order-p star graphs") {
    SECTION("P_24(1,8): only pure-Z cycles of lengths 3 and 6") {
        auto cs = short_cycles(build_star_graph(24, 1, 8), 7);
        REQUIRE(!cs.empty());
        for (const auto& c : cs) {
            CHECK(c.beta == 0);
            CHECK(c.alpha == c.length);
            CHECK((c.length == 3 || c.length == 6));
            CHECK(!c.has_xx);
        }
        CHECK(std::any_of(cs.begin(), cs.end(), [](auto& c) { return c.length == 3; }));
        CHECK(std::any_of(cs.begin(), cs.end(), [](auto& c) { return c.length == 6; }));
    }
    SECTION("P_36(1,9): only Z^4") {
        auto cs = short_cycles(build_star_graph(36, 1, 9), 7);
        REQUIRE(!cs.empty());
        for (const auto& c : cs) {
            CHECK(c.length == 4);
            CHECK(c.alpha == 4);
            CHECK(c.type_word == "ZZZZ");
        }
    }
    SECTION("P_40(1,8): only Z^5") {
        auto cs = short_cycles(build_star_graph(40, 1, 8), 7);
        REQUIRE(!cs.empty());
        for (const auto& c : cs) {
            CHECK(c.length == 5);
            CHECK(c.alpha == 5);
        }
    }
    SECTION("budget") {
        CHECK_THROWS_AS(short_cycles(build_star_graph(9, 1, 2), 13), std::invalid_argument);
    }
}

TEST_CASE("pure cycles have length divisible by the additive order") {
    for (auto [n, m, k] : {std::tuple{24, 1, 8}, {30, 1, 10}, {32, 3, 8}, {18, 13, 1}}) {
        StarGraph g = build_star_graph(n, m, k);
        FibParams p = derive(n, m, k);
        for (const auto& c : short_cycles(g, 7)) {
            if (c.alpha == c.length) CHECK(c.length % additive_order(p.A, n) == 0);
            if (c.beta == c.length) CHECK(c.length % additive_order(p.B, n) == 0);
        }
    }
}

TEST_CASE("interior vertex census") {
    CHECK(interior_vertex_census(24, 1, 8, 3).pass);
    CHECK(interior_vertex_census(32, 1, 8, 4).pass);
    CHECK(interior_vertex_census(40, 3, 8, 5).pass);
    CHECK_THROWS_AS(interior_vertex_census(24, 1, 8, 4), std::invalid_argument);
    CHECK_THROWS_AS(interior_vertex_census(20, 1, 5, 4), std::invalid_argument);  // n <= 7p
    CHECK_THROWS_AS(interior_vertex_census(24, 2, 8, 3), std::invalid_argument);  // gcd 2
}

TEST_CASE("T(5) congruence test") {
    CHECK(is_T5(5, 1, 2));
    CHECK_FALSE(is_T5(8, 1, 2));  // 4A = 0
    CHECK(is_T5(10, 7, 1));
    CHECK_THROWS_AS(is_T5(6, 0, 1), std::invalid_argument);
}

TEST_CASE("T(6) congruence profile") {
    CHECK(is_T6_generic(11, 4, 1));
    CHECK(is_T6_generic(12, 6, 1));
    for (int n : {8, 9, 13, 17, 20})
        CHECK_FALSE(is_T6_generic(n, 1, 2));  // A - 2B = 0 always for F(2,n)

    // the half-shift groups are T(6) yet fail the hyperbolicity test
    for (int n : {8, 12, 14, 16, 20}) {
        int m = n / 2 + 2;
        FibParams p = derive(n, m, 1);
        CHECK(is_T6_profile(n, p.A, p.B));
        CHECK_FALSE(is_T6_generic(n, m, 1));
        CHECK(girth(build_star_graph(n, m, 1)) >= 6);
    }
}
