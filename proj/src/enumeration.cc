#include <bgseq/enumeration.hh>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <thread>

using std::uint64_t;
using std::vector;

namespace bgseq
{
    SequenceEnumerator::SequenceEnumerator(Int A, Int B, Int L, Int S) :
        _max(A),
        _min(B),
        _length(L),
        _sum(S)
    {
        if (! side_nonempty(A, B, L, S))
            return;

        _done = false;
        _current.assign(static_cast<std::size_t>(L), B);
        _current.front() = A;
        if (L > 2)
            fill_from(1, A, S - A - B);
    }

    // Greedy fill of middle positions [position, L-2] with the largest entries
    // allowed by `cap`, leaving room for at least B in every later slot.
    auto SequenceEnumerator::fill_from(std::size_t position, Int cap, Int remaining) -> void
    {
        auto last_middle = static_cast<std::size_t>(_length - 2);
        for (auto i = position ; i <= last_middle ; ++i) {
            auto slots_after = static_cast<Int>(last_middle - i);
            auto x = std::min(cap, remaining - _min * slots_after);
            _current[i] = x;
            remaining -= x;
            cap = x;
        }
    }

    auto SequenceEnumerator::current() const -> DegreeSequence
    {
        return DegreeSequence(_current);
    }

    auto SequenceEnumerator::advance() -> void
    {
        if (_done)
            return;
        if (_length <= 2) {
            _done = true;
            return;
        }

        auto last_middle = static_cast<std::size_t>(_length - 2);
        Int suffix = 0;
        for (auto i = last_middle ; i >= 1 ; --i) {
            suffix += _current[i];
            auto slots_after = static_cast<Int>(last_middle - i);
            auto lowered = _current[i] - 1;
            if (lowered >= _min && suffix - lowered <= lowered * slots_after) {
                _current[i] = lowered;
                fill_from(i + 1, lowered, suffix - lowered);
                return;
            }
        }
        _done = true;
    }

    auto enum_sequences(Int A, Int B, Int L, Int S) -> SequenceEnumerator
    {
        return SequenceEnumerator{ A, B, L, S };
    }

    auto collect_sequences(Int A, Int B, Int L, Int S) -> vector<DegreeSequence>
    {
        vector<DegreeSequence> result;
        for (auto e = enum_sequences(A, B, L, S) ; ! e.done() ; e.advance())
            result.push_back(e.current());
        return result;
    }

    ClassEnumerator::ClassEnumerator(const ClassParams & params) :
        _params(params)
    {
    }

    auto ClassEnumerator::for_each(const std::function<auto (const DegreeSequence &, const DegreeSequence &) -> bool> & visit) const
        -> void
    {
        auto rights = collect_sequences(_params.c, _params.d, _params.n, _params.S);
        if (rights.empty())
            return;
        for (auto e = enum_sequences(_params.a, _params.b, _params.m, _params.S) ; ! e.done() ; e.advance()) {
            auto left = e.current();
            for (auto & right : rights)
                if (! visit(left, right))
                    return;
        }
    }

    auto enum_class(const ClassParams & params) -> ClassEnumerator
    {
        return ClassEnumerator{ params };
    }

    auto to_string(OracleVerdict verdict) -> std::string
    {
        switch (verdict) {
            case OracleVerdict::AllGraphic:      return "AllGraphic";
            case OracleVerdict::FoundNonGraphic: return "FoundNonGraphic";
            case OracleVerdict::Empty:           return "Empty";
        }
        return "?";
    }

    auto budget_from_environment() -> uint64_t
    {
        auto raw = std::getenv("BGSEQ_ORACLE_BUDGET");
        if (! raw)
            return default_oracle_budget;
        uint64_t value = 0;
        auto end = raw + std::strlen(raw);
        auto [ptr, ec] = std::from_chars(raw, end, value);
        if (ec != std::errc{} || ptr != end)
            return default_oracle_budget;
        return value;
    }

    namespace
    {
        constexpr uint64_t spot_check_stride = 1000;

        struct ChunkResult
        {
            std::optional<std::size_t> left_index, right_index;
            uint64_t pairs_checked = 0;
            std::exception_ptr error;
        };

        auto scan_chunk(const vector<DegreeSequence> & lefts, const vector<DegreeSequence> & rights,
                std::size_t begin, std::size_t end) -> ChunkResult
        {
            ChunkResult result;
            try {
                for (auto i = begin ; i < end ; ++i) {
                    for (std::size_t j = 0 ; j < rights.size() ; ++j) {
                        auto global = static_cast<uint64_t>(i) * rights.size() + j;
                        auto graphic = zz_check(lefts[i], rights[j]).graphic;
                        ++result.pairs_checked;
                        if (global % spot_check_stride == 0 && gale_ryser(lefts[i], rights[j]).graphic != graphic)
                            throw std::logic_error("zz_check and gale_ryser disagree on " + to_string(lefts[i])
                                    + ", " + to_string(rights[j]));
                        if (! graphic) {
                            result.left_index = i;
                            result.right_index = j;
                            return result;
                        }
                    }
                }
            }
            catch (...) {
                result.error = std::current_exception();
            }
            return result;
        }
    }

    auto brute_force_all_graphic(const ClassParams & params, const OracleOptions & options) -> ClassWitness
    {
        auto count = count_class(params);
        if (count == 0)
            return ClassWitness{ OracleVerdict::Empty, std::nullopt, 0 };
        if (! options.force && count > options.budget)
            throw Error(ErrorKind::BudgetExceeded, "class " + to_string(params) + " has " + std::to_string(count)
                    + " pairs, above the oracle budget of " + std::to_string(options.budget)
                    + " (raise BGSEQ_ORACLE_BUDGET or force)");

        auto lefts = collect_sequences(params.a, params.b, params.m, params.S);
        auto rights = collect_sequences(params.c, params.d, params.n, params.S);

        auto workers = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(lefts.size(), 1));
        auto chunk = (lefts.size() + workers - 1) / workers;
        vector<ChunkResult> results(workers);

        if (workers == 1)
            results[0] = scan_chunk(lefts, rights, 0, lefts.size());
        else {
            vector<std::jthread> threads;
            for (std::size_t w = 0 ; w < workers ; ++w) {
                auto begin = std::min(lefts.size(), w * chunk), end = std::min(lefts.size(), (w + 1) * chunk);
                threads.emplace_back([&, w, begin, end] { results[w] = scan_chunk(lefts, rights, begin, end); });
            }
        }

        ClassWitness witness{ OracleVerdict::AllGraphic, std::nullopt, 0 };
        for (auto & result : results) {
            if (result.error)
                std::rethrow_exception(result.error);
            witness.pairs_checked += result.pairs_checked;
        }

        // Chunks are contiguous in enumeration order, so the first failing
        // chunk holds the enumeration-order-first witness.
        for (auto & result : results) {
            if (result.left_index) {
                auto & left = lefts[*result.left_index];
                auto & right = rights[*result.right_index];
                auto verdict = gale_ryser(left, right);
                if (verdict.graphic || ! verdict.failing_k)
                    throw std::logic_error("zz_check rejected a pair that gale_ryser accepts: " + to_string(left)
                            + ", " + to_string(right));
                witness.verdict = OracleVerdict::FoundNonGraphic;
                witness.witness = NonGraphicWitness{ left, right, *verdict.failing_k };
                break;
            }
        }
        return witness;
    }

    namespace
    {
        constexpr uint64_t saturated = std::numeric_limits<uint64_t>::max();

        auto saturating_add(uint64_t x, uint64_t y) -> uint64_t
        {
            return x > saturated - y ? saturated : x + y;
        }

        auto saturating_mul(uint64_t x, uint64_t y) -> uint64_t
        {
            uint64_t result;
            return __builtin_mul_overflow(x, y, &result) ? saturated : result;
        }

        // Partitions of `total` with at most `parts` parts, each at most `largest`.
        auto count_in_box(Int total, Int parts, Int largest) -> uint64_t
        {
            auto area = checked_mul(parts, largest);
            if (total < 0 || total > area)
                return 0;
            total = std::min(total, area - total);
            if (total == 0)
                return 1;
            parts = std::min(parts, total);
            largest = std::min(largest, total);

            auto size = static_cast<std::size_t>(total) + 1;

            // Only one of the two constraints binds: count partitions with
            // bounded part size, conjugating if the part count is what binds.
            if (parts == total || largest == total) {
                auto bound = parts == total ? largest : parts;
                vector<uint64_t> ways(size, 0);
                ways[0] = 1;
                for (Int v = 1 ; v <= bound ; ++v)
                    for (auto s = static_cast<std::size_t>(v) ; s < size ; ++s)
                        ways[s] = saturating_add(ways[s], ways[s - static_cast<std::size_t>(v)]);
                return ways[total];
            }

            // ways[j][s]: partitions of s into exactly j parts drawn from the
            // values seen so far.
            vector<vector<uint64_t>> ways(static_cast<std::size_t>(parts) + 1, vector<uint64_t>(size, 0));
            ways[0][0] = 1;
            for (Int v = 1 ; v <= largest ; ++v)
                for (std::size_t j = 1 ; j < ways.size() ; ++j)
                    for (auto s = static_cast<std::size_t>(v) ; s < size ; ++s)
                        ways[j][s] = saturating_add(ways[j][s], ways[j - 1][s - static_cast<std::size_t>(v)]);

            uint64_t result = 0;
            for (auto & row : ways)
                result = saturating_add(result, row[total]);
            return result;
        }
    }

    auto count_sequences(Int A, Int B, Int L, Int S) -> uint64_t
    {
        if (! side_nonempty(A, B, L, S))
            return 0;
        if (L <= 2)
            return 1;
        auto slots = L - 2;
        return count_in_box(S - A - B - checked_mul(B, slots), slots, A - B);
    }

    auto count_class(const ClassParams & params) -> uint64_t
    {
        auto left = count_sequences(params.a, params.b, params.m, params.S);
        if (left == 0)
            return 0;
        return saturating_mul(left, count_sequences(params.c, params.d, params.n, params.S));
    }
}
