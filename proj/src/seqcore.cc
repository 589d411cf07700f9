#include <bgseq/seqcore.hh>

#include <algorithm>
#include <functional>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace bgseq
{
    auto to_string(ErrorKind kind) -> string
    {
        switch (kind) {
            case ErrorKind::EmptyInput:          return "EmptyInput";
            case ErrorKind::NegativeEntry:       return "NegativeEntry";
            case ErrorKind::NotDecreasing:       return "NotDecreasing";
            case ErrorKind::InvalidParams:       return "InvalidParams";
            case ErrorKind::DegenerateClass:     return "DegenerateClass";
            case ErrorKind::EmptyClass:          return "EmptyClass";
            case ErrorKind::LengthMismatch:      return "LengthMismatch";
            case ErrorKind::BadExtremes:         return "BadExtremes";
            case ErrorKind::HypothesisViolation: return "HypothesisViolation";
            case ErrorKind::NotGraphic:          return "NotGraphic";
            case ErrorKind::BudgetExceeded:      return "BudgetExceeded";
            case ErrorKind::Overflow:            return "Overflow";
        }
        return "Unknown";
    }

    Error::Error(ErrorKind kind, const string & message) :
        std::runtime_error(message),
        _kind(kind)
    {
    }

    auto checked_add(Int x, Int y) -> Int
    {
        Int result;
        if (__builtin_add_overflow(x, y, &result))
            throw Error(ErrorKind::Overflow, "integer overflow in " + std::to_string(x) + " + " + std::to_string(y));
        return result;
    }

    auto checked_mul(Int x, Int y) -> Int
    {
        Int result;
        if (__builtin_mul_overflow(x, y, &result))
            throw Error(ErrorKind::Overflow, "integer overflow in " + std::to_string(x) + " * " + std::to_string(y));
        return result;
    }

    namespace
    {
        auto check_entries(const vector<Int> & entries) -> Int
        {
            if (entries.empty())
                throw Error(ErrorKind::EmptyInput, "degree sequence must be nonempty");

            Int sum = 0;
            for (std::size_t i = 0 ; i < entries.size() ; ++i) {
                if (entries[i] < 0)
                    throw Error(ErrorKind::NegativeEntry, "entry " + std::to_string(i + 1) + " is negative ("
                            + std::to_string(entries[i]) + ")");
                if (i > 0 && entries[i - 1] < entries[i])
                    throw Error(ErrorKind::NotDecreasing, "entries " + std::to_string(i) + " and " + std::to_string(i + 1)
                            + " are out of order (" + std::to_string(entries[i - 1]) + " < " + std::to_string(entries[i]) + ")");
                sum = checked_add(sum, entries[i]);
            }
            return sum;
        }
    }

    DegreeSequence::DegreeSequence(vector<Int> entries) :
        _entries(std::move(entries))
    {
        _sum = check_entries(_entries);
    }

    DegreeSequence::DegreeSequence(std::initializer_list<Int> entries) :
        DegreeSequence(vector<Int>(entries))
    {
    }

    auto to_string(const DegreeSequence & seq) -> string
    {
        std::ostringstream out;
        out << "(";
        for (std::size_t i = 0 ; i < seq.size() ; ++i)
            out << (i == 0 ? "" : ",") << seq[i];
        out << ")";
        return out.str();
    }

    auto validate_sequence(std::span<const Int> raw, ValidationMode mode) -> ValidatedSequence
    {
        vector<Int> entries(raw.begin(), raw.end());
        bool sorted = false;
        if (mode == ValidationMode::Lenient && ! std::is_sorted(entries.begin(), entries.end(), std::greater<>{})) {
            std::sort(entries.begin(), entries.end(), std::greater<>{});
            sorted = true;
        }

        // Negative entries are reported before ordering problems, whatever the mode.
        for (std::size_t i = 0 ; i < raw.size() ; ++i)
            if (raw[i] < 0)
                throw Error(ErrorKind::NegativeEntry, "entry " + std::to_string(i + 1) + " is negative ("
                        + std::to_string(raw[i]) + ")");

        return ValidatedSequence{ DegreeSequence(std::move(entries)), sorted };
    }

    auto min_cap_sum(const DegreeSequence & f, Int k) -> Int
    {
        if (k <= 0)
            return 0;
        if (k >= f.front())
            return f.sum();

        Int total = 0;
        for (auto v : f)
            total += std::min(k, v);
        return total;
    }

    auto BlockForm::expand() const -> DegreeSequence
    {
        vector<Int> entries;
        for (auto & [value, multiplicity] : blocks)
            entries.insert(entries.end(), static_cast<std::size_t>(multiplicity), value);
        return DegreeSequence(std::move(entries));
    }

    auto BlockForm::boundaries() const -> vector<Int>
    {
        vector<Int> result;
        result.reserve(blocks.size());
        Int position = 0;
        for (auto & block : blocks) {
            position += block.multiplicity;
            result.push_back(position);
        }
        return result;
    }

    auto to_blocks(const DegreeSequence & x) -> BlockForm
    {
        BlockForm result;
        for (auto v : x) {
            if (! result.blocks.empty() && result.blocks.back().value == v)
                ++result.blocks.back().multiplicity;
            else
                result.blocks.push_back(Block{ v, 1 });
        }
        return result;
    }

    auto to_string(const ClassParams & p) -> string
    {
        std::ostringstream out;
        out << "(a=" << p.a << ",b=" << p.b << ",c=" << p.c << ",d=" << p.d
            << ",m=" << p.m << ",n=" << p.n << ",S=" << p.S << ")";
        return out.str();
    }

    auto find_shape_violation(Int a, Int b, Int c, Int d, Int m, Int n) -> optional<string>
    {
        if (b < 0)
            return "requires b ≥ 0";
        if (d < 0)
            return "requires d ≥ 0";
        if (a < b)
            return "requires a ≥ b";
        if (c < d)
            return "requires c ≥ d";
        if (m < 1)
            return "requires m ≥ 1";
        if (n < 1)
            return "requires n ≥ 1";
        if (a > input_bound || c > input_bound || m > input_bound || n > input_bound)
            return "requires a, c, m, n ≤ 2^20";
        if (n < a)
            return "requires n ≥ a";
        if (m < c)
            return "requires m ≥ c";
        return std::nullopt;
    }

    auto find_violation(const ClassParams & p) -> optional<string>
    {
        if (auto shape = find_shape_violation(p.a, p.b, p.c, p.d, p.m, p.n))
            return shape;
        if (p.S < 0 || p.S > input_bound)
            return "requires 0 ≤ S ≤ 2^20";
        auto range = s_range(p.a, p.b, p.c, p.d, p.m, p.n);
        if (p.S < range.lo)
            return "requires max(mb, nd) ≤ S";
        if (p.S > range.hi)
            return "requires S ≤ min(ma, nc)";
        return std::nullopt;
    }

    auto require_valid(const ClassParams & params) -> void
    {
        if (auto violation = find_violation(params))
            throw Error(ErrorKind::InvalidParams, *violation + " " + to_string(params));
    }

    auto side_nonempty(Int max, Int min, Int length, Int sum) -> bool
    {
        if (length < 1 || min < 0 || max < min)
            return false;
        if (length == 1)
            return max == min && max == sum;
        auto lowest = checked_add(max, checked_mul(min, length - 1));
        auto highest = checked_add(checked_mul(max, length - 1), min);
        return lowest <= sum && sum <= highest;
    }

    auto class_nonempty(const ClassParams & p) -> bool
    {
        return side_nonempty(p.a, p.b, p.m, p.S) && side_nonempty(p.c, p.d, p.n, p.S);
    }

    auto s_range(Int a, Int b, Int c, Int d, Int m, Int n) -> SRange
    {
        return SRange{
            std::max(checked_mul(m, b), checked_mul(n, d)),
            std::min(checked_mul(m, a), checked_mul(n, c))
        };
    }
}
