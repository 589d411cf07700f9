#include <bgseq/criterion.hh>

#include <algorithm>
#include <array>

using std::optional;
using std::string;
using std::vector;

namespace bgseq
{
    auto to_string(Verdict verdict) -> string
    {
        switch (verdict) {
            case Verdict::AllGraphic:        return "AllGraphic";
            case Verdict::NotAllGraphic:     return "NotAllGraphic";
            case Verdict::VacuousEmptyClass: return "VacuousEmptyClass";
        }
        return "?";
    }

    auto to_string(Branch branch) -> string
    {
        switch (branch) {
            case Branch::DegenerateEqualExtremes: return "DegenerateEqualExtremes";
            case Branch::GeneralInequality:       return "GeneralInequality";
        }
        return "?";
    }

    auto to_string(MinTermArgument argument) -> string
    {
        switch (argument) {
            case MinTermArgument::RMinusPMinusD: return "r-p-d";
            case MinTermArgument::SMinusQMinusB: return "s-q-b";
            case MinTermArgument::Combined:      return "r+s-p-q-b-d+1";
            case MinTermArgument::Zero:          return "0";
        }
        return "?";
    }

    namespace
    {
        auto check_decomposable(const ClassParams & params) -> void
        {
            require_valid(params);
            if (params.a == params.b || params.c == params.d)
                throw Error(ErrorKind::DegenerateClass, "canonical decomposition requires a > b and c > d " + to_string(params));
            if (! class_nonempty(params))
                throw Error(ErrorKind::EmptyClass, "class " + to_string(params) + " is empty");
        }

        struct SideSplit
        {
            Int count, excess;
        };

        // count = floor((sum - length*min) / (max - min)), excess is what is left
        // over after count entries at max and the rest at min.
        auto split_side(Int max, Int min, Int length, Int sum) -> SideSplit
        {
            auto count = (sum - checked_mul(length, min)) / (max - min);
            auto excess = sum - checked_mul(max, count) - checked_mul(min, length - count);
            return SideSplit{ count, excess };
        }

        auto build_side(Int max, Int min, Int length, SideSplit split) -> DegreeSequence
        {
            vector<Int> entries;
            entries.reserve(static_cast<std::size_t>(length));
            entries.insert(entries.end(), static_cast<std::size_t>(split.count), max);
            if (split.count < length)
                entries.push_back(min + split.excess);
            while (static_cast<Int>(entries.size()) < length)
                entries.push_back(min);
            return DegreeSequence(std::move(entries));
        }

        auto assert_range(bool ok, const string & what, const ClassParams & params) -> void
        {
            if (! ok)
                throw std::logic_error("decomposition bound " + what + " violated for " + to_string(params));
        }
    }

    auto decompose(const ClassParams & params) -> CanonicalDecomposition
    {
        check_decomposable(params);
        auto & [a, b, c, d, m, n, S] = params;

        auto left = split_side(a, b, m, S);
        auto right = split_side(c, d, n, S);
        CanonicalDecomposition result{ left.count, right.count, right.excess, left.excess };

        assert_range(1 <= result.r && result.r <= m - 1, "1 <= r <= m-1", params);
        assert_range(1 <= result.s && result.s <= n - 1, "1 <= s <= n-1", params);
        assert_range(0 <= result.q && result.q < a - b, "0 <= q < a-b", params);
        assert_range(0 <= result.p && result.p < c - d, "0 <= p < c-d", params);
        return result;
    }

    auto canonical_pair(const ClassParams & params) -> CanonicalPair
    {
        auto dec = decompose(params);
        auto & [a, b, c, d, m, n, S] = params;

        CanonicalPair result{
            build_side(a, b, m, SideSplit{ dec.r, dec.q }),
            build_side(c, d, n, SideSplit{ dec.s, dec.p })
        };

        auto member = [&] (const DegreeSequence & x, Int max, Int min, Int length) {
            return x.length() == length && x.sum() == S && x.front() == max && x.back() == min;
        };
        if (! member(result.left, a, b, m) || ! member(result.right, c, d, n))
            throw std::logic_error("canonical pair " + to_string(result.left) + ", " + to_string(result.right)
                    + " is not a member of " + to_string(params));
        return result;
    }

    auto canonical_sequence(Int max, Int min, Int length, Int sum) -> DegreeSequence
    {
        if (max <= min)
            throw Error(ErrorKind::DegenerateClass, "canonical sequence requires max > min");
        if (! side_nonempty(max, min, length, sum))
            throw Error(ErrorKind::EmptyClass, "no decreasing sequence of length " + std::to_string(length) + " with max "
                    + std::to_string(max) + ", min " + std::to_string(min) + " and sum " + std::to_string(sum));
        return build_side(max, min, length, split_side(max, min, length, sum));
    }

    auto min_term(const CanonicalDecomposition & dec, Int b, Int d) -> MinTerm
    {
        auto & [r, s, p, q] = dec;
        const std::array<MinTerm, 4> candidates{ {
            { r - p - d, MinTermArgument::RMinusPMinusD },
            { s - q - b, MinTermArgument::SMinusQMinusB },
            { r + s - p - q - b - d + 1, MinTermArgument::Combined },
            { 0, MinTermArgument::Zero }
        } };

        auto best = candidates[0];
        for (auto & candidate : candidates)
            if (candidate.value < best.value)
                best = candidate;
        return best;
    }

    auto theorem_main(const ClassParams & params) -> CriterionReport
    {
        require_valid(params);

        CriterionReport report{ params, Verdict::VacuousEmptyClass, std::nullopt, std::nullopt, std::nullopt,
            std::nullopt, std::nullopt, std::nullopt, std::nullopt };

        if (! class_nonempty(params))
            return report;

        auto & [a, b, c, d, m, n, S] = params;
        if (a == b || c == d) {
            report.verdict = Verdict::AllGraphic;
            report.branch = Branch::DegenerateEqualExtremes;
            return report;
        }

        auto dec = decompose(params);
        auto term = min_term(dec, b, d);
        auto lhs = checked_add(checked_mul(a, dec.r), checked_mul(c, dec.s));
        auto rhs = checked_add(checked_add(S, checked_mul(dec.r, dec.s)), term.value);

        report.branch = Branch::GeneralInequality;
        report.verdict = lhs <= rhs ? Verdict::AllGraphic : Verdict::NotAllGraphic;
        report.lhs = lhs;
        report.rhs = rhs;
        report.min_term = term.value;
        report.min_term_argument = term.argument;
        report.decomposition = dec;
        report.canonical = canonical_pair(params);
        return report;
    }

    auto dominates_prefix(const DegreeSequence & e, const DegreeSequence & E) -> bool
    {
        if (e.size() != E.size())
            throw Error(ErrorKind::LengthMismatch, "prefix dominance needs equal lengths, got "
                    + std::to_string(e.size()) + " and " + std::to_string(E.size()));

        Int lhs = 0, rhs = 0;
        for (std::size_t i = 0 ; i < e.size() ; ++i) {
            lhs += e[i];
            rhs += E[i];
            if (lhs > rhs)
                return false;
        }
        return true;
    }

    auto smooth_step(const DegreeSequence & f, Int c, Int d) -> optional<DegreeSequence>
    {
        if (f.size() < 2 || f.front() != c || f.back() != d || c <= d)
            throw Error(ErrorKind::BadExtremes, "smoothing needs length >= 2 and f_1 = c > d = f_last, got "
                    + to_string(f) + " with c=" + std::to_string(c) + ", d=" + std::to_string(d));

        // 0-based: last_c is C - 1, first_d is D - 1.
        auto last_c = static_cast<std::size_t>(std::upper_bound(f.begin(), f.end(), c, std::greater<>{}) - f.begin()) - 1;
        auto first_d = static_cast<std::size_t>(std::lower_bound(f.begin(), f.end(), d, std::greater<>{}) - f.begin());
        if (first_d - last_c <= 2)
            return std::nullopt;

        vector<Int> next(f.begin(), f.end());
        ++next[last_c + 1];
        --next[first_d - 1];
        return DegreeSequence(std::move(next));
    }

    auto smooth_to_canonical(const DegreeSequence & f,
            const std::function<auto (const DegreeSequence &) -> void> & on_step) -> DegreeSequence
    {
        auto c = f.front(), d = f.back();
        auto current = f;
        while (auto next = smooth_step(current, c, d)) {
            current = std::move(*next);
            if (on_step)
                on_step(current);
        }
        return current;
    }

    auto symmetric_sufficient(Int a, Int b, Int m) -> bool
    {
        if (b < 0 || a < b || m < a)
            throw Error(ErrorKind::HypothesisViolation, "symmetric condition requires m ≥ a ≥ b ≥ 0, got a="
                    + std::to_string(a) + ", b=" + std::to_string(b) + ", m=" + std::to_string(m));
        if (m > input_bound)
            throw Error(ErrorKind::HypothesisViolation, "symmetric condition requires m ≤ 2^20");
        auto sum = a + b;
        return checked_mul(4, checked_mul(m, b)) >= checked_mul(sum, sum) - 1;
    }
}
