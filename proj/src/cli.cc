#include <bgseq/cli.hh>
#include <bgseq/enumeration.hh>
#include <bgseq/galeryser.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <ostream>
#include <sstream>
#include <thread>

using nlohmann::json;
using std::optional;
using std::ostream;
using std::string;
using std::string_view;
using std::vector;

namespace bgseq::cli
{
    auto exit_code_for(Verdict verdict) -> int
    {
        switch (verdict) {
            case Verdict::AllGraphic:        return exit_code::ok;
            case Verdict::NotAllGraphic:     return exit_code::negative;
            case Verdict::VacuousEmptyClass: return exit_code::vacuous;
        }
        return exit_code::invalid_input;
    }

    namespace
    {
        auto parse_int(string_view token, string_view context) -> Int
        {
            Int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
                throw std::invalid_argument("cannot parse '" + string(token) + "' as an integer in " + string(context));
            return value;
        }

        auto trim(string_view text) -> string_view
        {
            auto first = text.find_first_not_of(" \t");
            if (first == string_view::npos)
                return {};
            auto last = text.find_last_not_of(" \t");
            return text.substr(first, last - first + 1);
        }

        auto split(string_view text, char separator) -> vector<string_view>
        {
            vector<string_view> parts;
            std::size_t start = 0;
            while (true) {
                auto pos = text.find(separator, start);
                parts.push_back(text.substr(start, pos == string_view::npos ? string_view::npos : pos - start));
                if (pos == string_view::npos)
                    break;
                start = pos + 1;
            }
            return parts;
        }
    }

    auto parse_sequence_list(string_view text) -> vector<Int>
    {
        vector<Int> result;
        if (trim(text).empty())
            throw std::invalid_argument("empty sequence");

        for (auto raw : split(text, ',')) {
            auto token = trim(raw);
            auto caret = token.find('^');
            if (caret == string_view::npos) {
                result.push_back(parse_int(token, text));
                continue;
            }
            auto value = parse_int(trim(token.substr(0, caret)), text);
            auto count = parse_int(trim(token.substr(caret + 1)), text);
            if (count < 1 || count > input_bound)
                throw std::invalid_argument("repeat count in '" + string(token) + "' must be between 1 and 2^20");
            result.insert(result.end(), static_cast<std::size_t>(count), value);
        }
        return result;
    }

    auto sweep_verdict_name(Verdict verdict) -> string
    {
        return verdict == Verdict::VacuousEmptyClass ? "vacuous" : to_string(verdict);
    }

    auto make_sweep_row(const CriterionReport & report) -> SweepRow
    {
        auto & p = report.params;
        SweepRow row{ p.a, p.b, p.c, p.d, p.m, p.n, p.S };
        row.nonempty = report.verdict != Verdict::VacuousEmptyClass;
        if (report.decomposition) {
            row.r = report.decomposition->r;
            row.s = report.decomposition->s;
            row.p = report.decomposition->p;
            row.q = report.decomposition->q;
        }
        row.lhs = report.lhs;
        row.rhs = report.rhs;
        row.verdict = sweep_verdict_name(report.verdict);
        return row;
    }

    auto csv_header(bool with_oracle) -> string
    {
        return string("a,b,c,d,m,n,S,nonempty,r,s,p,q,lhs,rhs,verdict") + (with_oracle ? ",oracle_agrees" : "");
    }

    namespace
    {
        auto cell(const optional<Int> & value) -> string
        {
            return value ? std::to_string(*value) : string{};
        }

        auto optional_cell(string_view text, string_view context) -> optional<Int>
        {
            if (text.empty())
                return std::nullopt;
            return parse_int(text, context);
        }

        auto bool_cell(string_view text, string_view context) -> bool
        {
            if (text == "true")
                return true;
            if (text == "false")
                return false;
            throw std::invalid_argument("expected true or false, got '" + string(text) + "' in " + string(context));
        }
    }

    auto to_csv(const SweepRow & row, bool with_oracle) -> string
    {
        std::ostringstream out;
        out << row.a << ',' << row.b << ',' << row.c << ',' << row.d << ',' << row.m << ',' << row.n << ',' << row.S
            << ',' << (row.nonempty ? "true" : "false")
            << ',' << cell(row.r) << ',' << cell(row.s) << ',' << cell(row.p) << ',' << cell(row.q)
            << ',' << cell(row.lhs) << ',' << cell(row.rhs) << ',' << row.verdict;
        if (with_oracle)
            out << ',' << (row.oracle_agrees ? (*row.oracle_agrees ? "true" : "false") : "");
        return out.str();
    }

    auto from_csv(string_view line, bool with_oracle) -> SweepRow
    {
        auto cells = split(line, ',');
        if (cells.size() != (with_oracle ? 16u : 15u))
            throw std::invalid_argument("wrong number of CSV cells in '" + string(line) + "'");

        SweepRow row{
            parse_int(cells[0], line), parse_int(cells[1], line), parse_int(cells[2], line), parse_int(cells[3], line),
            parse_int(cells[4], line), parse_int(cells[5], line), parse_int(cells[6], line)
        };
        row.nonempty = bool_cell(cells[7], line);
        row.r = optional_cell(cells[8], line);
        row.s = optional_cell(cells[9], line);
        row.p = optional_cell(cells[10], line);
        row.q = optional_cell(cells[11], line);
        row.lhs = optional_cell(cells[12], line);
        row.rhs = optional_cell(cells[13], line);
        row.verdict = string(cells[14]);
        if (with_oracle && ! cells[15].empty())
            row.oracle_agrees = bool_cell(cells[15], line);
        return row;
    }

    auto to_json_line(const SweepRow & row) -> string
    {
        // ordered_json keeps the schema's field order on output.
        nlohmann::ordered_json j;
        j["a"] = row.a;
        j["b"] = row.b;
        j["c"] = row.c;
        j["d"] = row.d;
        j["m"] = row.m;
        j["n"] = row.n;
        j["S"] = row.S;
        j["nonempty"] = row.nonempty;
        auto put = [&] (const char * key, const optional<Int> & value) {
            if (value)
                j[key] = *value;
        };
        put("r", row.r);
        put("s", row.s);
        put("p", row.p);
        put("q", row.q);
        put("lhs", row.lhs);
        put("rhs", row.rhs);
        j["verdict"] = row.verdict;
        if (row.oracle_agrees)
            j["oracle_agrees"] = *row.oracle_agrees;
        return j.dump();
    }

    auto from_json_line(string_view line) -> SweepRow
    {
        auto j = json::parse(line);
        SweepRow row{
            j.at("a").get<Int>(), j.at("b").get<Int>(), j.at("c").get<Int>(), j.at("d").get<Int>(),
            j.at("m").get<Int>(), j.at("n").get<Int>(), j.at("S").get<Int>()
        };
        row.nonempty = j.at("nonempty").get<bool>();
        auto get = [&] (const char * key) -> optional<Int> {
            if (j.contains(key))
                return j.at(key).get<Int>();
            return std::nullopt;
        };
        row.r = get("r");
        row.s = get("s");
        row.p = get("p");
        row.q = get("q");
        row.lhs = get("lhs");
        row.rhs = get("rhs");
        row.verdict = j.at("verdict").get<string>();
        if (j.contains("oracle_agrees"))
            row.oracle_agrees = j.at("oracle_agrees").get<bool>();
        return row;
    }

    namespace
    {
        struct ClassFlags
        {
            Int a = 0, b = 0, c = 0, d = 0, m = 0, n = 0, S = 0;

            auto params() const -> ClassParams
            {
                return ClassParams{ a, b, c, d, m, n, S };
            }
        };

        auto add_shape_flags(CLI::App & cmd, ClassFlags & flags) -> void
        {
            cmd.add_option("-a", flags.a, "Largest entry of the left sequences")->required();
            cmd.add_option("-b", flags.b, "Smallest entry of the left sequences")->required();
            cmd.add_option("-c", flags.c, "Largest entry of the right sequences")->required();
            cmd.add_option("-d", flags.d, "Smallest entry of the right sequences")->required();
            cmd.add_option("-m", flags.m, "Length of the left sequences")->required();
            cmd.add_option("-n", flags.n, "Length of the right sequences")->required();
        }

        struct OracleFlags
        {
            unsigned threads = 1;
            bool force = false;

            auto options() const -> OracleOptions
            {
                return OracleOptions{ budget_from_environment(), force, std::max(threads, 1u) };
            }
        };

        auto add_oracle_flags(CLI::App & cmd, OracleFlags & flags) -> void
        {
            cmd.add_option("--threads", flags.threads, "Worker threads for the exhaustive check");
            cmd.add_flag("--force", flags.force, "Run the exhaustive check even above the pair budget");
        }

        auto to_json(const DegreeSequence & seq) -> json
        {
            return json(vector<Int>(seq.begin(), seq.end()));
        }

        auto report_json(const CriterionReport & report) -> json
        {
            auto & p = report.params;
            json j;
            j["params"] = { { "a", p.a }, { "b", p.b }, { "c", p.c }, { "d", p.d }, { "m", p.m }, { "n", p.n }, { "S", p.S } };
            j["verdict"] = to_string(report.verdict);
            j["branch"] = report.branch ? json(to_string(*report.branch)) : json(nullptr);
            if (report.lhs) {
                j["lhs"] = *report.lhs;
                j["rhs"] = *report.rhs;
                j["min_term"] = *report.min_term;
                j["min_term_argument"] = to_string(*report.min_term_argument);
            }
            if (report.decomposition) {
                auto & dec = *report.decomposition;
                j["decomposition"] = { { "r", dec.r }, { "s", dec.s }, { "p", dec.p }, { "q", dec.q } };
            }
            if (report.canonical)
                j["canonical"] = { { "E", to_json(report.canonical->left) }, { "F", to_json(report.canonical->right) } };
            return j;
        }

        auto print_report(ostream & out, const CriterionReport & report) -> void
        {
            out << "class " << to_string(report.params) << "\n";
            out << "verdict: " << to_string(report.verdict) << "\n";
            if (report.branch)
                out << "branch: " << to_string(*report.branch) << "\n";
            if (report.decomposition) {
                auto & dec = *report.decomposition;
                out << "r=" << dec.r << " s=" << dec.s << " p=" << dec.p << " q=" << dec.q << "\n";
            }
            if (report.lhs)
                out << "lhs=" << *report.lhs << " rhs=" << *report.rhs << " min_term=" << *report.min_term
                    << " (" << to_string(*report.min_term_argument) << ")\n";
            if (report.canonical)
                out << "canonical E=" << to_string(report.canonical->left) << " F=" << to_string(report.canonical->right) << "\n";
        }

        auto oracle_agrees(Verdict verdict, OracleVerdict oracle) -> bool
        {
            switch (verdict) {
                case Verdict::AllGraphic:        return oracle == OracleVerdict::AllGraphic;
                case Verdict::NotAllGraphic:     return oracle == OracleVerdict::FoundNonGraphic;
                case Verdict::VacuousEmptyClass: return oracle == OracleVerdict::Empty;
            }
            return false;
        }

        auto witness_json(const ClassWitness & witness, bool agrees) -> json
        {
            json j{ { "verdict", to_string(witness.verdict) }, { "pairs_checked", witness.pairs_checked }, { "agrees", agrees } };
            if (witness.witness)
                j["witness"] = { { "left", to_json(witness.witness->left) }, { "right", to_json(witness.witness->right) },
                    { "failing_k", witness.witness->failing_k } };
            return j;
        }

        auto print_witness(ostream & out, const ClassWitness & witness, bool agrees) -> void
        {
            out << "oracle: " << to_string(witness.verdict) << " (" << witness.pairs_checked << " pairs checked), "
                << (agrees ? "agrees" : "DISAGREES") << "\n";
            if (witness.witness)
                out << "witness: left=" << to_string(witness.witness->left) << " right=" << to_string(witness.witness->right)
                    << " failing k=" << witness.witness->failing_k << "\n";
        }

        auto read_sequence(const string & text, const char * side, bool strict, ostream & err) -> DegreeSequence
        {
            vector<Int> raw;
            try {
                raw = parse_sequence_list(text);
            }
            catch (const std::invalid_argument & e) {
                throw std::invalid_argument(string("--") + side + ": " + e.what());
            }
            try {
                auto validated = validate_sequence(raw, strict ? ValidationMode::Strict : ValidationMode::Lenient);
                if (validated.sorted)
                    err << "note: --" << side << " sorted into decreasing order " << to_string(validated.sequence) << "\n";
                return validated.sequence;
            }
            catch (const Error & e) {
                throw std::invalid_argument(string("--") + side + ": " + e.what());
            }
        }

        struct PairFlags
        {
            string left, right;
            bool strict = false, json = false;
        };

        auto add_pair_flags(CLI::App & cmd, PairFlags & flags) -> void
        {
            cmd.add_option("--left", flags.left, "Left degree sequence, e.g. 4^2,1^2")->required();
            cmd.add_option("--right", flags.right, "Right degree sequence")->required();
            cmd.add_flag("--strict", flags.strict, "Reject sequences that are not already decreasing");
            cmd.add_flag("--json", flags.json, "Emit JSON");
        }

        auto edges_json(const BipartiteRealization & g) -> json
        {
            json edges = json::array();
            for (auto & [u, v] : g.edges)
                edges.push_back({ u, v });
            return edges;
        }

        auto print_edges(ostream & out, const BipartiteRealization & g) -> void
        {
            for (auto & [u, v] : g.edges)
                out << u << " " << v << "\n";
        }

        auto cmd_check_pair(const PairFlags & flags, bool with_realization, ostream & out, ostream & err) -> int
        {
            auto left = read_sequence(flags.left, "left", flags.strict, err);
            auto right = read_sequence(flags.right, "right", flags.strict, err);
            auto verdict = gale_ryser(left, right);
            optional<BipartiteRealization> graph;
            if (verdict.graphic && with_realization)
                graph = realize(left, right);

            if (flags.json) {
                json j{ { "left", to_json(left) }, { "right", to_json(right) }, { "graphic", verdict.graphic },
                    { "sums_equal", verdict.sums_equal } };
                if (verdict.failing_k)
                    j["failing_k"] = *verdict.failing_k;
                if (graph)
                    j["edges"] = edges_json(*graph);
                out << j.dump() << "\n";
            }
            else {
                if (verdict.graphic)
                    out << "graphic\n";
                else if (! verdict.sums_equal)
                    out << "not graphic, sums differ (" << left.sum() << " vs " << right.sum() << ")\n";
                else
                    out << "not graphic, failing k=" << *verdict.failing_k << "\n";
                if (graph)
                    print_edges(out, *graph);
            }
            return verdict.graphic ? exit_code::ok : exit_code::negative;
        }

        auto cmd_check_class(const ClassFlags & flags, bool as_json, bool verify, const OracleFlags & oracle_flags,
                ostream & out, ostream & err) -> int
        {
            auto report = theorem_main(flags.params());
            auto code = exit_code_for(report.verdict);

            optional<ClassWitness> witness;
            bool agrees = true;
            if (verify) {
                witness = brute_force_all_graphic(report.params, oracle_flags.options());
                agrees = oracle_agrees(report.verdict, witness->verdict);
            }

            if (as_json) {
                auto j = report_json(report);
                if (witness)
                    j["oracle"] = witness_json(*witness, agrees);
                out << j.dump() << "\n";
            }
            else {
                print_report(out, report);
                if (witness)
                    print_witness(out, *witness, agrees);
            }

            if (! agrees) {
                err << "error: criterion says " << to_string(report.verdict) << " but the exhaustive check says "
                    << to_string(witness->verdict) << " for " << to_string(report.params) << "\n";
                return exit_code::disagreement;
            }
            return code;
        }

        auto cmd_canonical(const ClassFlags & flags, bool as_json, ostream & out) -> int
        {
            auto params = flags.params();
            require_valid(params);
            if (! class_nonempty(params)) {
                if (as_json)
                    out << json{ { "verdict", to_string(Verdict::VacuousEmptyClass) } }.dump() << "\n";
                else
                    out << "class " << to_string(params) << " is empty\n";
                return exit_code::vacuous;
            }

            auto dec = decompose(params);
            auto pair = canonical_pair(params);
            if (as_json)
                out << json{ { "r", dec.r }, { "s", dec.s }, { "p", dec.p }, { "q", dec.q },
                    { "E", to_json(pair.left) }, { "F", to_json(pair.right) } }.dump() << "\n";
            else
                out << "r=" << dec.r << " s=" << dec.s << " p=" << dec.p << " q=" << dec.q << "\n"
                    << "E=" << to_string(pair.left) << "\n"
                    << "F=" << to_string(pair.right) << "\n";
            return exit_code::ok;
        }

        auto cmd_sweep(const ClassFlags & flags, const string & format, bool verify, const OracleFlags & oracle_flags,
                ostream & out, ostream & err) -> int
        {
            if (auto violation = find_shape_violation(flags.a, flags.b, flags.c, flags.d, flags.m, flags.n))
                throw Error(ErrorKind::InvalidParams, *violation);
            auto range = s_range(flags.a, flags.b, flags.c, flags.d, flags.m, flags.n);
            if (! range.empty() && range.hi > input_bound)
                throw Error(ErrorKind::InvalidParams, "requires S ≤ 2^20 across the sweep (min(ma, nc) = "
                        + std::to_string(range.hi) + ")");

            auto count = range.empty() ? std::size_t{ 0 } : static_cast<std::size_t>(range.hi - range.lo + 1);
            vector<SweepRow> rows(count);
            vector<std::exception_ptr> errors(count);
            std::atomic<std::size_t> next{ 0 };

            auto work = [&] {
                OracleOptions options = oracle_flags.options();
                options.workers = 1;
                for (std::size_t i ; (i = next++) < count ; ) {
                    try {
                        auto params = flags.params();
                        params.S = range.lo + static_cast<Int>(i);
                        auto report = theorem_main(params);
                        rows[i] = make_sweep_row(report);
                        if (verify)
                            rows[i].oracle_agrees = oracle_agrees(report.verdict,
                                    brute_force_all_graphic(params, options).verdict);
                    }
                    catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            };

            {
                auto workers = std::clamp<std::size_t>(oracle_flags.threads, 1, std::max<std::size_t>(count, 1));
                vector<std::jthread> pool;
                for (std::size_t w = 1 ; w < workers ; ++w)
                    pool.emplace_back(work);
                work();
            }

            for (auto & e : errors)
                if (e)
                    std::rethrow_exception(e);

            bool csv = format == "csv";
            if (csv)
                out << csv_header(verify) << "\n";
            bool all_agree = true;
            for (auto & row : rows) {
                out << (csv ? to_csv(row, verify) : to_json_line(row)) << "\n";
                if (row.oracle_agrees && ! *row.oracle_agrees) {
                    all_agree = false;
                    err << "error: criterion and exhaustive check disagree at S=" << row.S << "\n";
                }
            }
            return all_agree ? exit_code::ok : exit_code::disagreement;
        }

        auto cmd_symmetric(Int a, Int b, Int m, bool full, bool as_json, ostream & out) -> int
        {
            auto holds = symmetric_sufficient(a, b, m);

            vector<Int> failing, vacuous;
            if (full) {
                for (auto S = m * b ; S <= m * a ; ++S) {
                    auto report = theorem_main(ClassParams{ a, b, a, b, m, m, S });
                    if (report.verdict == Verdict::NotAllGraphic)
                        failing.push_back(S);
                    else if (report.verdict == Verdict::VacuousEmptyClass)
                        vacuous.push_back(S);
                }
            }

            auto lhs = 4 * m * b, rhs = (a + b) * (a + b) - 1;
            if (as_json) {
                json j{ { "a", a }, { "b", b }, { "m", m }, { "holds", holds }, { "lhs", lhs }, { "rhs", rhs } };
                if (full) {
                    j["not_all_graphic"] = failing;
                    j["vacuous"] = vacuous;
                }
                out << j.dump() << "\n";
            }
            else {
                out << "4mb >= (a+b)^2 - 1: " << (holds ? "holds" : "fails") << " (" << lhs << (holds ? " >= " : " < ")
                    << rhs << ")\n";
                if (full) {
                    out << "NotAllGraphic S:";
                    for (auto S : failing)
                        out << " " << S;
                    out << (failing.empty() ? " none\n" : "\n");
                }
            }

            if (holds && ! failing.empty())
                return exit_code::disagreement;
            return holds ? exit_code::ok : exit_code::negative;
        }
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "Bipartite graphicality of degree-sequence pairs and parameter classes", "bgseq" };
        app.require_subcommand(1);

        PairFlags pair_flags;
        bool with_realization = false;
        auto check_pair = app.add_subcommand("check-pair", "Gale-Ryser test for one pair of sequences");
        add_pair_flags(*check_pair, pair_flags);
        check_pair->add_flag("--realize", with_realization, "Also print a realizing edge list");

        PairFlags realize_flags;
        auto realize_cmd = app.add_subcommand("realize", "Print a bipartite graph with the given degrees");
        add_pair_flags(*realize_cmd, realize_flags);

        ClassFlags class_flags;
        bool class_json = false, verify = false;
        OracleFlags class_oracle;
        auto check_class = app.add_subcommand("check-class", "Decide whether every pair in P(a,b,c,d,m,n,S) is graphic");
        add_shape_flags(*check_class, class_flags);
        check_class->add_option("-S", class_flags.S, "Common sum")->required();
        check_class->add_flag("--json", class_json, "Emit JSON");
        check_class->add_flag("--verify", verify, "Cross-check against exhaustive enumeration");
        add_oracle_flags(*check_class, class_oracle);

        ClassFlags canonical_flags;
        bool canonical_json = false;
        auto canonical = app.add_subcommand("canonical", "Print the canonical pair (E, F) of a class");
        add_shape_flags(*canonical, canonical_flags);
        canonical->add_option("-S", canonical_flags.S, "Common sum")->required();
        canonical->add_flag("--json", canonical_json, "Emit JSON");

        ClassFlags sweep_flags;
        string format = "csv";
        bool sweep_verify = false;
        OracleFlags sweep_oracle;
        auto sweep = app.add_subcommand("sweep", "Evaluate the criterion for every S in the admissible range");
        add_shape_flags(*sweep, sweep_flags);
        sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({ "csv", "json" }));
        sweep->add_flag("--verify", sweep_verify, "Add an oracle_agrees column from exhaustive enumeration");
        add_oracle_flags(*sweep, sweep_oracle);

        Int sym_a = 0, sym_b = 0, sym_m = 0;
        bool full = false, sym_json = false;
        auto symmetric = app.add_subcommand("symmetric", "Sufficient condition for symmetric pairs");
        symmetric->add_option("-a", sym_a, "Largest entry")->required();
        symmetric->add_option("-b", sym_b, "Smallest entry")->required();
        symmetric->add_option("-m", sym_m, "Length")->required();
        symmetric->add_flag("--full", full, "Also evaluate the class criterion for every S in [mb, ma]");
        symmetric->add_flag("--json", sym_json, "Emit JSON");

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_code::ok;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return exit_code::ok;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << "\n";
            return exit_code::invalid_input;
        }

        try {
            if (check_pair->parsed())
                return cmd_check_pair(pair_flags, with_realization, out, err);
            if (realize_cmd->parsed())
                return cmd_check_pair(realize_flags, true, out, err);
            if (check_class->parsed())
                return cmd_check_class(class_flags, class_json, verify, class_oracle, out, err);
            if (canonical->parsed())
                return cmd_canonical(canonical_flags, canonical_json, out);
            if (sweep->parsed())
                return cmd_sweep(sweep_flags, format, sweep_verify, sweep_oracle, out, err);
            if (symmetric->parsed())
                return cmd_symmetric(sym_a, sym_b, sym_m, full, sym_json, out);
        }
        catch (const Error & e) {
            err << "error: " << e.what() << "\n";
            return exit_code::invalid_input;
        }
        catch (const std::invalid_argument & e) {
            err << "error: " << e.what() << "\n";
            return exit_code::invalid_input;
        }
        return exit_code::invalid_input;
    }
}
