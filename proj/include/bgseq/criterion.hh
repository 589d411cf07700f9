#ifndef BGSEQ_CRITERION_HH
#define BGSEQ_CRITERION_HH 1

#include <bgseq/seqcore.hh>

#include <functional>
#include <optional>
#include <string>

namespace bgseq
{
    /**
     * For a > b and c > d:
     *   r = floor((S - mb) / (a - b)),  q = S - ar - b(m - r),
     *   s = floor((S - nd) / (c - d)),  p = S - cs - d(n - s).
     * On a nonempty class 1 <= r <= m - 1, 0 <= q < a - b, and symmetrically
     * 1 <= s <= n - 1, 0 <= p < c - d.
     */
    struct CanonicalDecomposition
    {
        Int r, s, p, q;

        auto operator==(const CanonicalDecomposition &) const -> bool = default;
    };

    /// E = (a^r, b+q, b^(m-r-1)), F = (c^s, d+p, d^(n-s-1)).
    struct CanonicalPair
    {
        DegreeSequence left;
        DegreeSequence right;

        auto operator==(const CanonicalPair &) const -> bool = default;
    };

    enum class Verdict
    {
        AllGraphic,
        NotAllGraphic,
        VacuousEmptyClass
    };

    enum class Branch
    {
        DegenerateEqualExtremes,
        GeneralInequality
    };

    /// The four candidates of the min-term, in the order they are tried.
    enum class MinTermArgument
    {
        RMinusPMinusD,
        SMinusQMinusB,
        Combined,
        Zero
    };

    auto to_string(Verdict verdict) -> std::string;
    auto to_string(Branch branch) -> std::string;
    auto to_string(MinTermArgument argument) -> std::string;

    struct CriterionReport
    {
        ClassParams params;
        Verdict verdict;
        /// Absent for an empty class.
        std::optional<Branch> branch;
        /// lhs = ar + cs, rhs = S + rs + min_term. General branch only.
        std::optional<Int> lhs, rhs, min_term;
        std::optional<MinTermArgument> min_term_argument;
        std::optional<CanonicalDecomposition> decomposition;
        std::optional<CanonicalPair> canonical;
    };

    auto decompose(const ClassParams & params) -> CanonicalDecomposition;

    auto canonical_pair(const ClassParams & params) -> CanonicalPair;

    /// The canonical sequence (max^r, min+q, min^(length-r-1)) for one side.
    /// Requires max > min and side_nonempty(max, min, length, sum).
    auto canonical_sequence(Int max, Int min, Int length, Int sum) -> DegreeSequence;

    struct MinTerm
    {
        Int value;
        MinTermArgument argument;
    };

    /// min{r-p-d, s-q-b, r+s-p-q-b-d+1, 0}, first attaining candidate wins.
    auto min_term(const CanonicalDecomposition & decomposition, Int b, Int d) -> MinTerm;

    /// Decides whether every pair of P(a,b,c,d,m,n,S) is bipartite graphic
    /// from the seven parameters alone. Throws InvalidParams.
    auto theorem_main(const ClassParams & params) -> CriterionReport;

    /// Every prefix sum of e is at most the matching prefix sum of E.
    auto dominates_prefix(const DegreeSequence & e, const DegreeSequence & E) -> bool;

    /**
     * One smoothing move on a decreasing f with f_1 = c > d = f_last. With C
     * the last index holding c and D the first holding d, raises f_{C+1} and
     * lowers f_{D-1} by one. Returns nullopt when D - C <= 2, where f is
     * already the canonical sequence for its length and sum.
     */
    auto smooth_step(const DegreeSequence & f, Int c, Int d) -> std::optional<DegreeSequence>;

    /// Iterates smooth_step to its fixpoint. `on_step`, if given, sees every
    /// intermediate sequence after it is produced.
    auto smooth_to_canonical(const DegreeSequence & f,
            const std::function<auto (const DegreeSequence &) -> void> & on_step = {}) -> DegreeSequence;

    /// 4mb >= (a+b)^2 - 1. Throws HypothesisViolation unless m >= a >= b >= 0.
    auto symmetric_sufficient(Int a, Int b, Int m) -> bool;
}

#endif
