#ifndef BGSEQ_SEQCORE_HH
#define BGSEQ_SEQCORE_HH 1

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgseq
{
    using Int = std::int64_t;

    /// Largest accepted value for any of a, c, m, n, S. Keeps every product
    /// formed by the criterion below 2^62.
    inline constexpr Int input_bound = Int{1} << 20;

    enum class ErrorKind
    {
        EmptyInput,
        NegativeEntry,
        NotDecreasing,
        InvalidParams,
        DegenerateClass,
        EmptyClass,
        LengthMismatch,
        BadExtremes,
        HypothesisViolation,
        NotGraphic,
        BudgetExceeded,
        Overflow
    };

    auto to_string(ErrorKind kind) -> std::string;

    class Error : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            Error(ErrorKind kind, const std::string & message);

            auto kind() const noexcept -> ErrorKind
            {
                return _kind;
            }
    };

    auto checked_add(Int x, Int y) -> Int;
    auto checked_mul(Int x, Int y) -> Int;

    /**
     * A finite, non-strictly decreasing sequence of nonnegative integers.
     * Construction validates; an instance always satisfies the invariants.
     */
    class DegreeSequence
    {
        private:
            std::vector<Int> _entries;
            Int _sum = 0;

        public:
            explicit DegreeSequence(std::vector<Int> entries);
            DegreeSequence(std::initializer_list<Int> entries);

            auto size() const noexcept -> std::size_t
            {
                return _entries.size();
            }

            auto length() const noexcept -> Int
            {
                return static_cast<Int>(_entries.size());
            }

            auto operator[](std::size_t i) const -> Int
            {
                return _entries[i];
            }

            auto front() const -> Int
            {
                return _entries.front();
            }

            auto back() const -> Int
            {
                return _entries.back();
            }

            auto sum() const noexcept -> Int
            {
                return _sum;
            }

            auto entries() const noexcept -> std::span<const Int>
            {
                return _entries;
            }

            auto begin() const noexcept
            {
                return _entries.begin();
            }

            auto end() const noexcept
            {
                return _entries.end();
            }

            auto operator==(const DegreeSequence &) const -> bool = default;
    };

    auto to_string(const DegreeSequence & seq) -> std::string;

    enum class ValidationMode
    {
        Strict,
        Lenient
    };

    struct ValidatedSequence
    {
        DegreeSequence sequence;
        bool sorted = false;
    };

    /// Strict rejects unsorted input; lenient sorts descending and sets `sorted`.
    auto validate_sequence(std::span<const Int> raw, ValidationMode mode) -> ValidatedSequence;

    /// Sum over i of min(k, f_i), the k-th partial sum of the conjugate of f.
    auto min_cap_sum(const DegreeSequence & f, Int k) -> Int;

    struct Block
    {
        Int value;
        Int multiplicity;

        auto operator==(const Block &) const -> bool = default;
    };

    struct BlockForm
    {
        std::vector<Block> blocks;

        auto expand() const -> DegreeSequence;
        /// Cumulative block ends l_1, l_1 + l_2, ..., i.e. the strong indices.
        auto boundaries() const -> std::vector<Int>;

        auto operator==(const BlockForm &) const -> bool = default;
    };

    auto to_blocks(const DegreeSequence & x) -> BlockForm;

    struct ClassParams
    {
        Int a, b, c, d, m, n, S;

        auto operator==(const ClassParams &) const -> bool = default;
    };

    auto to_string(const ClassParams & params) -> std::string;

    /// Names the first violated hypothesis, or nullopt if the parameters are
    /// admissible: a >= b >= 0, c >= d >= 0, n >= a, m >= c, m, n >= 1, the
    /// S range, and the input bound.
    auto find_violation(const ClassParams & params) -> std::optional<std::string>;

    /// The S-independent part of find_violation, used when sweeping S.
    auto find_shape_violation(Int a, Int b, Int c, Int d, Int m, Int n) -> std::optional<std::string>;

    /// Throws Error(InvalidParams) naming the violated hypothesis.
    auto require_valid(const ClassParams & params) -> void;

    /// Whether some decreasing sequence of the given length has first entry
    /// exactly `max`, last entry exactly `min` and the given sum.
    auto side_nonempty(Int max, Int min, Int length, Int sum) -> bool;

    /// Exact nonemptiness of P(a,b,c,d,m,n,S). Tighter than the S range when
    /// a > b or c > d.
    auto class_nonempty(const ClassParams & params) -> bool;

    struct SRange
    {
        Int lo, hi;

        auto empty() const noexcept -> bool
        {
            return lo > hi;
        }

        auto contains(Int s) const noexcept -> bool
        {
            return lo <= s && s <= hi;
        }

        auto operator==(const SRange &) const -> bool = default;
    };

    /// [max(mb, nd), min(ma, nc)].
    auto s_range(Int a, Int b, Int c, Int d, Int m, Int n) -> SRange;
}

#endif
