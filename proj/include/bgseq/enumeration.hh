#ifndef BGSEQ_ENUMERATION_HH
#define BGSEQ_ENUMERATION_HH 1

#include <bgseq/galeryser.hh>
#include <bgseq/seqcore.hh>

#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <vector>

namespace bgseq
{
    /**
     * Streams every decreasing sequence of length L with first entry A, last
     * entry B and sum S exactly once, largest first in lexicographic order.
     * Single consumer; copies are independent.
     */
    class SequenceEnumerator
    {
        private:
            Int _max, _min, _length, _sum;
            std::vector<Int> _current;
            bool _done = true;

            auto fill_from(std::size_t position, Int cap, Int remaining) -> void;

        public:
            SequenceEnumerator(Int A, Int B, Int L, Int S);

            auto done() const noexcept -> bool
            {
                return _done;
            }

            /// The current sequence; only valid while ! done().
            auto current() const -> DegreeSequence;
            auto current_entries() const noexcept -> const std::vector<Int> &
            {
                return _current;
            }

            auto advance() -> void;

            class Iterator
            {
                private:
                    SequenceEnumerator * _owner = nullptr;

                public:
                    using iterator_category = std::input_iterator_tag;
                    using value_type = DegreeSequence;
                    using difference_type = std::ptrdiff_t;

                    Iterator() = default;
                    explicit Iterator(SequenceEnumerator * owner) : _owner(owner && ! owner->done() ? owner : nullptr) {}

                    auto operator*() const -> DegreeSequence
                    {
                        return _owner->current();
                    }

                    auto operator++() -> Iterator &
                    {
                        _owner->advance();
                        if (_owner->done())
                            _owner = nullptr;
                        return *this;
                    }

                    auto operator++(int) -> void
                    {
                        ++*this;
                    }

                    auto operator==(const Iterator & other) const -> bool
                    {
                        return _owner == other._owner;
                    }
            };

            auto begin() -> Iterator
            {
                return Iterator{ this };
            }

            auto end() -> Iterator
            {
                return Iterator{};
            }
    };

    auto enum_sequences(Int A, Int B, Int L, Int S) -> SequenceEnumerator;

    /// Convenience: all members of enum_sequences, in order.
    auto collect_sequences(Int A, Int B, Int L, Int S) -> std::vector<DegreeSequence>;

    /**
     * The class P(a,b,c,d,m,n,S) as a stream of pairs, left-major: the right
     * side is materialised once, the left side streamed. The visitor returns
     * false to stop early.
     */
    class ClassEnumerator
    {
        private:
            ClassParams _params;

        public:
            explicit ClassEnumerator(const ClassParams & params);

            auto for_each(const std::function<auto (const DegreeSequence &, const DegreeSequence &) -> bool> & visit) const
                -> void;
    };

    auto enum_class(const ClassParams & params) -> ClassEnumerator;

    enum class OracleVerdict
    {
        AllGraphic,
        FoundNonGraphic,
        Empty
    };

    auto to_string(OracleVerdict verdict) -> std::string;

    struct NonGraphicWitness
    {
        DegreeSequence left;
        DegreeSequence right;
        Int failing_k;
    };

    struct ClassWitness
    {
        OracleVerdict verdict;
        std::optional<NonGraphicWitness> witness;
        std::uint64_t pairs_checked = 0;
    };

    inline constexpr std::uint64_t default_oracle_budget = 10'000'000;

    struct OracleOptions
    {
        std::uint64_t budget = default_oracle_budget;
        /// Ignore the budget.
        bool force = false;
        unsigned workers = 1;
    };

    /// Budget from BGSEQ_ORACLE_BUDGET if set and parseable, else the default.
    auto budget_from_environment() -> std::uint64_t;

    /**
     * Exhaustive check that every pair of the class is graphic, using
     * zz_check, with gale_ryser cross-checked on every 1000th pair. Reports
     * the first non-graphic pair in enumeration order, however many workers
     * are used. Throws BudgetExceeded when count_class exceeds the budget.
     */
    auto brute_force_all_graphic(const ClassParams & params, const OracleOptions & options = {}) -> ClassWitness;

    /// Number of decreasing sequences of length L, first entry A, last entry
    /// B, sum S, by partition counting. Saturates at UINT64_MAX.
    auto count_sequences(Int A, Int B, Int L, Int S) -> std::uint64_t;

    /// |P(a,b,c,d,m,n,S)| without enumerating. Saturates at UINT64_MAX.
    auto count_class(const ClassParams & params) -> std::uint64_t;
}

#endif
