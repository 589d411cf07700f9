#include <bgseq/galeryser.hh>

#include <algorithm>
#include <numeric>
#include <set>

using std::vector;

namespace bgseq
{
    namespace
    {
        // conjugate_prefix[k] = sum_i min(k, f_i) for k = 0..limit.
        auto conjugate_prefix(const DegreeSequence & f, Int limit) -> vector<Int>
        {
            auto top = std::min(limit, f.front());
            vector<Int> at_least(static_cast<std::size_t>(top) + 2, 0);
            for (auto v : f)
                ++at_least[static_cast<std::size_t>(std::min(v, top + 1))];
            // at_least[j] currently counts entries equal to j (top + 1 meaning "more").
            for (Int j = top ; j >= 1 ; --j)
                at_least[j] += at_least[j + 1];

            vector<Int> prefix(static_cast<std::size_t>(limit) + 1, 0);
            for (Int k = 1 ; k <= limit ; ++k)
                prefix[k] = k <= top ? prefix[k - 1] + at_least[k] : f.sum();
            return prefix;
        }
    }

    auto gale_ryser(const DegreeSequence & e, const DegreeSequence & f) -> PairVerdict
    {
        if (e.sum() != f.sum())
            return PairVerdict{ false, std::nullopt, false };

        auto caps = conjugate_prefix(f, e.length());
        Int prefix = 0;
        for (Int k = 1 ; k <= e.length() ; ++k) {
            prefix += e[k - 1];
            if (prefix > caps[k])
                return PairVerdict{ false, k, true };
        }
        return PairVerdict{ true, std::nullopt, true };
    }

    namespace
    {
        auto strip_zeros(const DegreeSequence & x) -> std::optional<DegreeSequence>
        {
            auto positive = std::find(x.begin(), x.end(), 0);
            if (positive == x.begin())
                return std::nullopt;
            return DegreeSequence(vector<Int>(x.begin(), positive));
        }
    }

    auto zz_check(const DegreeSequence & x_raw, const DegreeSequence & y_raw) -> PairVerdict
    {
        if (x_raw.sum() != y_raw.sum())
            return PairVerdict{ false, std::nullopt, false };

        auto x = strip_zeros(x_raw);
        auto y = strip_zeros(y_raw);
        if (! x || ! y)
            return PairVerdict{ true, std::nullopt, true };

        auto blocks = to_blocks(*x);
        Int k = 0, prefix = 0;
        for (auto & [value, multiplicity] : blocks.blocks) {
            k += multiplicity;
            prefix += value * multiplicity;
            if (prefix > min_cap_sum(*y, k))
                return PairVerdict{ false, k, true };
        }
        return PairVerdict{ true, std::nullopt, true };
    }

    auto last_index_shortcut(const DegreeSequence & y, Int m) -> bool
    {
        return y.front() <= m;
    }

    auto realize(const DegreeSequence & e, const DegreeSequence & f) -> BipartiteRealization
    {
        auto verdict = gale_ryser(e, f);
        if (! verdict.graphic)
            throw Error(ErrorKind::NotGraphic, "pair " + to_string(e) + ", " + to_string(f) + " is not bipartite graphic"
                    + (verdict.sums_equal ? " (fails at k=" + std::to_string(*verdict.failing_k) + ")" : " (sums differ)"));

        vector<Int> residual(f.begin(), f.end());
        vector<std::size_t> order(f.size());
        vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(e.sum()));

        for (std::size_t i = 0 ; i < e.size() ; ++i) {
            std::iota(order.begin(), order.end(), 0);
            auto need = static_cast<std::size_t>(e[i]);
            std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(need), order.end(),
                    [&] (std::size_t u, std::size_t v) {
                        return residual[u] != residual[v] ? residual[u] > residual[v] : u < v;
                    });
            for (std::size_t j = 0 ; j < need ; ++j) {
                auto v = order[j];
                if (residual[v] == 0)
                    throw Error(ErrorKind::NotGraphic, "greedy realization ran out of right-side demand at left vertex "
                            + std::to_string(i + 1));
                --residual[v];
                edges.emplace_back(static_cast<Int>(i + 1), static_cast<Int>(v + 1));
            }
        }

        std::sort(edges.begin(), edges.end());
        BipartiteRealization result{ e, f, std::move(edges) };
        if (! audit(result))
            throw Error(ErrorKind::NotGraphic, "realization failed its degree audit");
        return result;
    }

    auto audit(const BipartiteRealization & g) -> bool
    {
        vector<Int> left(g.left_degrees.size(), 0), right(g.right_degrees.size(), 0);
        std::set<Edge> seen;
        for (auto & [u, v] : g.edges) {
            if (u < 1 || u > g.left_degrees.length() || v < 1 || v > g.right_degrees.length())
                return false;
            if (! seen.insert({ u, v }).second)
                return false;
            ++left[u - 1];
            ++right[v - 1];
        }
        return std::equal(left.begin(), left.end(), g.left_degrees.begin())
            && std::equal(right.begin(), right.end(), g.right_degrees.begin());
    }
}
