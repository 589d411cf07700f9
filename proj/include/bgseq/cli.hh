#ifndef BGSEQ_CLI_HH
#define BGSEQ_CLI_HH 1

#include <bgseq/criterion.hh>
#include <bgseq/seqcore.hh>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bgseq::cli
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int negative = 1;
        inline constexpr int invalid_input = 2;
        inline constexpr int disagreement = 3;
        inline constexpr int vacuous = 4;
    }

    /// Exit code of check-class for a given verdict.
    auto exit_code_for(Verdict verdict) -> int;

    /// Parses "4^2,1^2,3" style lists. Throws std::invalid_argument naming the
    /// offending token.
    auto parse_sequence_list(std::string_view text) -> std::vector<Int>;

    struct SweepRow
    {
        Int a = 0, b = 0, c = 0, d = 0, m = 0, n = 0, S = 0;
        bool nonempty = false;
        std::optional<Int> r{}, s{}, p{}, q{};
        std::optional<Int> lhs{}, rhs{};
        std::string verdict{};
        std::optional<bool> oracle_agrees{};

        auto operator==(const SweepRow &) const -> bool = default;
    };

    auto make_sweep_row(const CriterionReport & report) -> SweepRow;

    /// "vacuous" for empty classes, otherwise the verdict name.
    auto sweep_verdict_name(Verdict verdict) -> std::string;

    auto csv_header(bool with_oracle) -> std::string;
    auto to_csv(const SweepRow & row, bool with_oracle) -> std::string;
    auto from_csv(std::string_view line, bool with_oracle) -> SweepRow;

    /// One JSON object, no trailing newline. Absent optionals are omitted.
    auto to_json_line(const SweepRow & row) -> std::string;
    auto from_json_line(std::string_view line) -> SweepRow;

    /// Runs the command line (args excludes the program name). Data goes to
    /// `out`, diagnostics to `err`. Returns the process exit code.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
