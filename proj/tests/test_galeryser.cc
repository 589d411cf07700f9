#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bgseq/galeryser.hh>

#include "oracle.hh"

#include <random>

using namespace bgseq;

TEST_CASE("gale_ryser examples")
{
    auto v = gale_ryser(DegreeSequence{ 2, 2 }, DegreeSequence{ 2, 2 });
    CHECK(v.graphic);
    CHECK(v.sums_equal);
    CHECK_FALSE(v.failing_k);

    v = gale_ryser(DegreeSequence{ 4, 4, 1, 1 }, DegreeSequence{ 4, 4, 1, 1 });
    CHECK_FALSE(v.graphic);
    CHECK(v.sums_equal);
    CHECK(v.failing_k == 2);

    CHECK(gale_ryser(DegreeSequence{ 3, 2, 2, 1 }, DegreeSequence{ 3, 3, 1, 1 }).graphic);

    v = gale_ryser(DegreeSequence{ 3, 1 }, DegreeSequence{ 2, 1 });
    CHECK_FALSE(v.graphic);
    CHECK_FALSE(v.sums_equal);
    CHECK_FALSE(v.failing_k);
}

TEST_CASE("gale_ryser handles zero entries")
{
    CHECK(gale_ryser(DegreeSequence{ 0 }, DegreeSequence{ 0, 0 }).graphic);
    CHECK(gale_ryser(DegreeSequence{ 2, 0 }, DegreeSequence{ 1, 1, 0 }).graphic);
    CHECK(gale_ryser(DegreeSequence{ 3, 0 }, DegreeSequence{ 1, 1, 1, 0 }).graphic);
    CHECK(gale_ryser(DegreeSequence{ 2, 0 }, DegreeSequence{ 2, 0 }).failing_k == 1);
}

TEST_CASE("gale_ryser matches existence of a 0/1 matrix on tiny pairs")
{
    for (Int m = 1 ; m <= 4 ; ++m)
        for (Int n = 1 ; n <= 4 ; ++n)
            for (auto & e : oracle::all_decreasing(0, n, m))
                for (auto & f : oracle::all_decreasing(0, m, n)) {
                    if (oracle::sum(e) != oracle::sum(f))
                        continue;
                    CAPTURE(m);
                    CAPTURE(n);
                    REQUIRE(gale_ryser(DegreeSequence(e), DegreeSequence(f)).graphic == oracle::bipartite_exists(e, f));
                }
}

TEST_CASE("zz_check examples")
{
    CHECK(zz_check(DegreeSequence{ 3, 2, 2, 1 }, DegreeSequence{ 3, 3, 1, 1 }).graphic);
    auto v = zz_check(DegreeSequence{ 4, 4, 1, 1 }, DegreeSequence{ 4, 4, 1, 1 });
    CHECK_FALSE(v.graphic);
    CHECK(v.failing_k == 2);
    CHECK(zz_check(DegreeSequence{ 5, 5, 5 }, DegreeSequence{ 3, 3, 3, 3, 3 }).graphic);
    CHECK(zz_check(DegreeSequence{ 0, 0 }, DegreeSequence{ 0 }).graphic);
    CHECK(zz_check(DegreeSequence{ 2, 2, 0 }, DegreeSequence{ 2, 2, 0, 0 }).graphic);
    CHECK(zz_check(DegreeSequence{ 3, 0 }, DegreeSequence{ 1, 1, 1 }).graphic);
}

TEST_CASE("zz_check agrees with gale_ryser, including zeros")
{
    for (Int m = 1 ; m <= 4 ; ++m)
        for (Int n = 1 ; n <= 4 ; ++n)
            for (auto & e : oracle::all_decreasing(0, 4, m))
                for (auto & f : oracle::all_decreasing(0, 4, n)) {
                    DegreeSequence x(e), y(f);
                    auto full = gale_ryser(x, y);
                    auto zz = zz_check(x, y);
                    REQUIRE(full.graphic == zz.graphic);
                    REQUIRE(full.sums_equal == zz.sums_equal);
                    REQUIRE(full.graphic == oracle::gale_ryser(e, f));
                }
}

TEST_CASE("gale_ryser is symmetric and its failing_k is a genuine, smallest violation")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0 ; trial < 20000 ; ++trial) {
        auto e = oracle::random_sequence(rng, 12, 12);
        auto f = oracle::random_sequence_with_sum(rng, std::uniform_int_distribution<Int>(1, 12)(rng), oracle::sum(e), 12);
        if (f.empty())
            continue;
        DegreeSequence x(e), y(f);
        auto forward = gale_ryser(x, y);
        REQUIRE(forward.graphic == gale_ryser(y, x).graphic);
        if (! forward.graphic) {
            REQUIRE(forward.failing_k);
            REQUIRE(*forward.failing_k == oracle::first_violation(e, f));
        }
    }
}

TEST_CASE("last_index_shortcut")
{
    CHECK(last_index_shortcut(DegreeSequence{ 3, 3, 1, 1 }, 4));
    CHECK_FALSE(last_index_shortcut(DegreeSequence{ 5, 1 }, 4));

    DegreeSequence y{ 4, 4, 1, 1 };
    CHECK(last_index_shortcut(y, 4));
    CHECK(min_cap_sum(y, 4) == 10);
    CHECK_FALSE(gale_ryser(y, y).graphic);

    std::mt19937_64 rng(99);
    for (int trial = 0 ; trial < 20000 ; ++trial) {
        auto e = oracle::random_sequence(rng, 10, 10);
        auto f = oracle::random_sequence_with_sum(rng, std::uniform_int_distribution<Int>(1, 10)(rng), oracle::sum(e), 15);
        if (f.empty())
            continue;
        DegreeSequence y_seq(f);
        auto m = static_cast<Int>(e.size());
        REQUIRE(last_index_shortcut(y_seq, m) == (oracle::sum(e) <= oracle::min_cap(f, m)));
    }
}

TEST_CASE("realize examples")
{
    auto g = realize(DegreeSequence{ 2, 1 }, DegreeSequence{ 2, 1 });
    CHECK(g.edges == std::vector<Edge>{ { 1, 1 }, { 1, 2 }, { 2, 1 } });

    g = realize(DegreeSequence{ 3 }, DegreeSequence{ 1, 1, 1 });
    CHECK(g.edges == std::vector<Edge>{ { 1, 1 }, { 1, 2 }, { 1, 3 } });

    g = realize(DegreeSequence{ 2, 2 }, DegreeSequence{ 2, 2 });
    CHECK(g.edges == std::vector<Edge>{ { 1, 1 }, { 1, 2 }, { 2, 1 }, { 2, 2 } });

    CHECK_THROWS_AS(realize(DegreeSequence{ 4, 4, 1, 1 }, DegreeSequence{ 4, 4, 1, 1 }), Error);
    CHECK_THROWS_AS(realize(DegreeSequence{ 2 }, DegreeSequence{ 1 }), Error);
}

TEST_CASE("audit rejects broken realizations")
{
    BipartiteRealization g{ DegreeSequence{ 1 }, DegreeSequence{ 1 }, { { 1, 1 } } };
    CHECK(audit(g));
    g.edges.push_back({ 1, 1 });
    CHECK_FALSE(audit(g));
    g.edges = { { 1, 2 } };
    CHECK_FALSE(audit(g));
    g.edges = {};
    CHECK_FALSE(audit(g));
}

TEST_CASE("realize succeeds whenever gale_ryser passes")
{
    for (Int m = 1 ; m <= 4 ; ++m)
        for (Int n = 1 ; n <= 4 ; ++n)
            for (auto & e : oracle::all_decreasing(0, n, m))
                for (auto & f : oracle::all_decreasing(0, m, n)) {
                    DegreeSequence x(e), y(f);
                    if (gale_ryser(x, y).graphic)
                        REQUIRE(audit(realize(x, y)));
                    else
                        REQUIRE_THROWS_AS(realize(x, y), Error);
                }
}
