#ifndef BGSEQ_GALERYSER_HH
#define BGSEQ_GALERYSER_HH 1

#include <bgseq/seqcore.hh>

#include <optional>
#include <utility>
#include <vector>

namespace bgseq
{
    struct PairVerdict
    {
        bool graphic = false;
        /// Smallest k at which the dominance inequality fails. Absent when the
        /// pair is graphic or the sums differ.
        std::optional<Int> failing_k;
        bool sums_equal = false;

        auto operator==(const PairVerdict &) const -> bool = default;
    };

    /// Full Gale-Ryser test: equal sums and, for k = 1..length(e),
    /// e_1 + ... + e_k <= min_cap_sum(f, k). O(m + n).
    auto gale_ryser(const DegreeSequence & e, const DegreeSequence & f) -> PairVerdict;

    /// Zverovich-Zverovich refinement: the dominance inequality is only tested
    /// at the block boundaries of x. Zero entries are stripped first.
    auto zz_check(const DegreeSequence & x, const DegreeSequence & y) -> PairVerdict;

    /// y_1 <= m. When sum(x) = sum(y) and length(x) = m this is exactly the
    /// dominance inequality at k = m.
    auto last_index_shortcut(const DegreeSequence & y, Int m) -> bool;

    using Edge = std::pair<Int, Int>;

    struct BipartiteRealization
    {
        DegreeSequence left_degrees;
        DegreeSequence right_degrees;
        /// 1-based (left, right) pairs.
        std::vector<Edge> edges;
    };

    /// Builds a simple bipartite graph with the given degrees. Left vertices
    /// are processed in order; each joins the right vertices of largest
    /// residual demand, ties to the smallest index. Throws NotGraphic.
    auto realize(const DegreeSequence & e, const DegreeSequence & f) -> BipartiteRealization;

    /// Degree audit: every edge in range, no duplicates, and each vertex has
    /// exactly its prescribed degree.
    auto audit(const BipartiteRealization & g) -> bool;
}

#endif
