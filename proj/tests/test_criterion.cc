#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bgseq/criterion.hh>
#include <bgseq/galeryser.hh>

#include "oracle.hh"

using namespace bgseq;

namespace
{
    auto kind_of(auto && f) -> ErrorKind
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        FAIL("expected an Error");
        return ErrorKind::Overflow;
    }

    auto squares(const DegreeSequence & f) -> Int
    {
        Int total = 0;
        for (auto v : f)
            total += v * v;
        return total;
    }
}

TEST_CASE("decompose examples")
{
    CHECK(decompose(ClassParams{ 4, 1, 4, 1, 4, 4, 10 }) == CanonicalDecomposition{ 2, 2, 0, 0 });
    CHECK(decompose(ClassParams{ 2, 1, 2, 1, 3, 3, 4 }) == CanonicalDecomposition{ 1, 1, 0, 0 });
    CHECK(decompose(ClassParams{ 3, 1, 3, 1, 4, 4, 8 }) == CanonicalDecomposition{ 2, 2, 0, 0 });
    // r = 3 = n here; only r <= m - 1 holds in general.
    CHECK(decompose(ClassParams{ 2, 1, 3, 1, 4, 3, 7 }) == CanonicalDecomposition{ 3, 2, 0, 0 });
}

TEST_CASE("decompose errors")
{
    CHECK(kind_of([] { decompose(ClassParams{ 3, 3, 2, 1, 4, 7, 12 }); }) == ErrorKind::DegenerateClass);
    CHECK(kind_of([] { decompose(ClassParams{ 2, 1, 2, 1, 3, 3, 3 }); }) == ErrorKind::EmptyClass);
    CHECK(kind_of([] { decompose(ClassParams{ 1, 2, 2, 1, 3, 3, 3 }); }) == ErrorKind::InvalidParams);
}

TEST_CASE("canonical_pair examples")
{
    auto pair = canonical_pair(ClassParams{ 4, 1, 4, 1, 4, 4, 10 });
    CHECK(pair.left == DegreeSequence{ 4, 4, 1, 1 });
    CHECK(pair.right == DegreeSequence{ 4, 4, 1, 1 });

    pair = canonical_pair(ClassParams{ 2, 1, 2, 1, 3, 3, 4 });
    CHECK(pair.left == DegreeSequence{ 2, 1, 1 });
    CHECK(pair.right == DegreeSequence{ 2, 1, 1 });

    pair = canonical_pair(ClassParams{ 3, 1, 3, 1, 4, 4, 8 });
    CHECK(pair.left == DegreeSequence{ 3, 3, 1, 1 });
    CHECK(pair.right == DegreeSequence{ 3, 3, 1, 1 });

    pair = canonical_pair(ClassParams{ 5, 2, 4, 0, 6, 5, 16 });
    CHECK(pair.left == DegreeSequence{ 5, 3, 2, 2, 2, 2 });
    CHECK(pair.right == DegreeSequence{ 4, 4, 4, 4, 0 });
}

TEST_CASE("theorem_main examples")
{
    auto report = theorem_main(ClassParams{ 2, 1, 2, 1, 3, 3, 4 });
    CHECK(report.verdict == Verdict::AllGraphic);
    CHECK(report.branch == Branch::GeneralInequality);
    CHECK(report.lhs == 4);
    CHECK(report.rhs == 5);
    CHECK(report.min_term == 0);
    CHECK(report.min_term_argument == MinTermArgument::RMinusPMinusD);

    report = theorem_main(ClassParams{ 4, 1, 4, 1, 4, 4, 10 });
    CHECK(report.verdict == Verdict::NotAllGraphic);
    CHECK(report.lhs == 16);
    CHECK(report.rhs == 14);
    CHECK(report.min_term == 0);
    CHECK(report.min_term_argument == MinTermArgument::Zero);
    REQUIRE(report.canonical);
    CHECK(report.canonical->left == DegreeSequence{ 4, 4, 1, 1 });

    report = theorem_main(ClassParams{ 3, 3, 2, 1, 4, 7, 12 });
    CHECK(report.verdict == Verdict::AllGraphic);
    CHECK(report.branch == Branch::DegenerateEqualExtremes);
    CHECK_FALSE(report.lhs);

    report = theorem_main(ClassParams{ 2, 1, 2, 1, 3, 3, 3 });
    CHECK(report.verdict == Verdict::VacuousEmptyClass);
    CHECK_FALSE(report.branch);
    CHECK_FALSE(report.decomposition);

    CHECK(kind_of([] { theorem_main(ClassParams{ 3, 4, 2, 1, 4, 7, 12 }); }) == ErrorKind::InvalidParams);
}

TEST_CASE("theorem_main matches the naive all-pairs check on a small grid, zero minima included")
{
    int classes = 0;
    for (Int a = 1 ; a <= 4 ; ++a)
        for (Int b = 0 ; b <= a ; ++b)
            for (Int c = 1 ; c <= 4 ; ++c)
                for (Int d = 0 ; d <= c ; ++d)
                    for (Int m = c ; m <= 5 ; ++m)
                        for (Int n = a ; n <= 5 ; ++n) {
                            auto range = s_range(a, b, c, d, m, n);
                            for (auto S = range.lo ; S <= range.hi ; ++S) {
                                ClassParams p{ a, b, c, d, m, n, S };
                                auto report = theorem_main(p);
                                if (! class_nonempty(p)) {
                                    REQUIRE(report.verdict == Verdict::VacuousEmptyClass);
                                    continue;
                                }
                                ++classes;
                                CAPTURE(to_string(p));
                                REQUIRE((report.verdict == Verdict::AllGraphic) == oracle::all_graphic(a, b, c, d, m, n, S));
                                if (report.branch == Branch::GeneralInequality)
                                    REQUIRE((report.verdict == Verdict::AllGraphic) == (*report.lhs <= *report.rhs));
                            }
                        }
    CHECK(classes > 1000);
}

TEST_CASE("min_term is deterministic and the combined candidate is the sum of the others plus one")
{
    for (Int r = 0 ; r <= 5 ; ++r)
        for (Int s = 0 ; s <= 5 ; ++s)
            for (Int p = 0 ; p <= 3 ; ++p)
                for (Int q = 0 ; q <= 3 ; ++q)
                    for (Int b = 0 ; b <= 3 ; ++b)
                        for (Int d = 0 ; d <= 3 ; ++d) {
                            CanonicalDecomposition dec{ r, s, p, q };
                            auto term = min_term(dec, b, d);
                            Int x = r - p - d, y = s - q - b, z = r + s - p - q - b - d + 1;
                            REQUIRE(z == x + y + 1);
                            REQUIRE(term.value == std::min({ x, y, z, Int{0} }));
                            auto expected = x == term.value ? MinTermArgument::RMinusPMinusD
                                : y == term.value ? MinTermArgument::SMinusQMinusB
                                : z == term.value ? MinTermArgument::Combined : MinTermArgument::Zero;
                            REQUIRE(term.argument == expected);
                        }
}

TEST_CASE("dominates_prefix")
{
    CHECK(dominates_prefix(DegreeSequence{ 3, 2, 2, 1 }, DegreeSequence{ 3, 3, 1, 1 }));
    CHECK(dominates_prefix(DegreeSequence{ 4, 4, 1, 1 }, DegreeSequence{ 4, 4, 1, 1 }));
    CHECK_FALSE(dominates_prefix(DegreeSequence{ 3, 3, 1, 1 }, DegreeSequence{ 3, 2, 2, 1 }));
    CHECK(kind_of([] { dominates_prefix(DegreeSequence{ 1 }, DegreeSequence{ 1, 0 }); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("smooth_step examples")
{
    CHECK(smooth_step(DegreeSequence{ 3, 2, 2, 1 }, 3, 1) == DegreeSequence{ 3, 3, 1, 1 });
    CHECK(smooth_step(DegreeSequence{ 3, 2, 1 }, 3, 1) == std::nullopt);
    CHECK(smooth_step(DegreeSequence{ 4, 3, 3, 3, 1 }, 4, 1) == DegreeSequence{ 4, 4, 3, 2, 1 });
    CHECK(smooth_step(DegreeSequence{ 3, 1 }, 3, 1) == std::nullopt);

    CHECK(kind_of([] { smooth_step(DegreeSequence{ 3, 2, 1 }, 4, 1); }) == ErrorKind::BadExtremes);
    CHECK(kind_of([] { smooth_step(DegreeSequence{ 3, 2, 1 }, 3, 0); }) == ErrorKind::BadExtremes);
    CHECK(kind_of([] { smooth_step(DegreeSequence{ 2, 2 }, 2, 2); }) == ErrorKind::BadExtremes);
    CHECK(kind_of([] { smooth_step(DegreeSequence{ 2 }, 2, 2); }) == ErrorKind::BadExtremes);
}

TEST_CASE("smooth_to_canonical examples")
{
    int steps = 0;
    auto count = [&] (const DegreeSequence &) { ++steps; };

    CHECK(smooth_to_canonical(DegreeSequence{ 3, 2, 2, 1 }, count) == DegreeSequence{ 3, 3, 1, 1 });
    CHECK(steps == 1);

    steps = 0;
    CHECK(smooth_to_canonical(DegreeSequence{ 3, 3, 1, 1 }, count) == DegreeSequence{ 3, 3, 1, 1 });
    CHECK(steps == 0);

    steps = 0;
    CHECK(smooth_to_canonical(DegreeSequence{ 4, 3, 3, 3, 1 }, count) == DegreeSequence{ 4, 4, 4, 1, 1 });
    CHECK(steps == 2);
    CHECK(canonical_sequence(4, 1, 5, 14) == DegreeSequence{ 4, 4, 4, 1, 1 });
}

TEST_CASE("smoothing steps keep extremes and sum, raise squares, and never raise min-cap sums")
{
    for (Int length = 2 ; length <= 6 ; ++length)
        for (auto & raw : oracle::all_decreasing(0, 6, length)) {
            if (raw.front() == raw.back())
                continue;
            DegreeSequence f(raw);
            auto previous = f;
            auto result = smooth_to_canonical(f, [&] (const DegreeSequence & next) {
                REQUIRE(next.length() == previous.length());
                REQUIRE(next.sum() == previous.sum());
                REQUIRE(next.front() == previous.front());
                REQUIRE(next.back() == previous.back());
                REQUIRE(squares(next) > squares(previous));
                for (Int k = 0 ; k <= next.front() + 1 ; ++k)
                    REQUIRE(min_cap_sum(next, k) <= min_cap_sum(previous, k));
                previous = next;
            });
            REQUIRE(result == canonical_sequence(f.front(), f.back(), f.length(), f.sum()));
        }
}

TEST_CASE("symmetric_sufficient")
{
    CHECK(symmetric_sufficient(2, 1, 3));
    CHECK_FALSE(symmetric_sufficient(4, 1, 4));
    CHECK(symmetric_sufficient(3, 2, 5));
    CHECK(kind_of([] { symmetric_sufficient(4, 1, 3); }) == ErrorKind::HypothesisViolation);
    CHECK(kind_of([] { symmetric_sufficient(0, 1, 3); }) == ErrorKind::HypothesisViolation);

    // (3,2,5): every symmetric pair over S in [10, 15] is graphic.
    for (Int S = 10 ; S <= 15 ; ++S)
        for (auto & e : oracle::side_members(3, 2, 5, S))
            CHECK(oracle::gale_ryser(e, e));
}
