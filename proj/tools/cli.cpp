#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "schurlab/bialternant.hpp"
#include "schurlab/identity.hpp"
#include "schurlab/json_io.hpp"
#include "schurlab/partition.hpp"
#include "schurlab/render.hpp"
#include "schurlab/schur.hpp"
#include "schurlab/symplectic_orthogonal.hpp"

namespace schurlab::cli {

namespace {

GeneralizedPartition parse_partition(const std::string& text, const char* flag) {
    if (text.empty()) return GeneralizedPartition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            parts.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "'" + item + "' is not an integer");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return GeneralizedPartition(std::move(parts));
    } catch (const std::exception& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

struct ComputeArgs {
    std::string family;
    std::string lambda_text;
    std::string mu_text;
    bool mu_given = false;
    std::size_t nvars = 1;
    std::string method = "auto";
    std::string format = "text";
};

int run_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
    const GeneralizedPartition la = parse_partition(a.lambda_text, "--lambda");
    const GeneralizedPartition mu = parse_partition(a.mu_text, "--mu");
    const std::size_t N = a.nvars;
    const std::string method = a.method == "auto" ? "jt" : a.method;

    const bool skew = a.family.rfind("skew-", 0) == 0 || a.family == "sstar";
    if (skew && !a.mu_given) {
        err << "error: --mu is required for family '" << a.family << "'\n";
        return 2;
    }
    if (!skew && a.mu_given) {
        err << "error: --mu is only meaningful for skew families and sstar\n";
        return 2;
    }

    try {
        if (a.family == "sstar") {
            const RationalFn value = sstar(la, mu, N);
            if (a.format == "json")
                out << to_json(value).dump() << "\n";
            else
                out << to_text(value) << "\n";
            return 0;
        }

        LaurentPoly value(N);
        if (a.family == "s") {
            if (method == "jt")
                value = schur_jt(la, N);
            else if (method == "gt")
                value = skew_schur_gt(la, GeneralizedPartition(), N);
            else
                value = schur_bialt(la, N);
        } else if (a.family == "sp" || a.family == "o") {
            const bool is_sp = a.family == "sp";
            if (method == "jt") {
                value = is_sp ? sp_jt(la, N) : o_jt(la, N);
            } else if (method == "gt") {
                const GeneralizedPartition norm = la.normalized();
                if (norm.length() > N) throw LengthMismatch("--lambda has more parts than --nvars");
                const GeneralizedPartition padded = norm.padded(N);
                value = is_sp ? skew_sp_gt(padded, GeneralizedPartition(), N)
                              : skew_o_gt(padded, GeneralizedPartition(), N);
            } else {
                value = is_sp ? sp_bialt(la, N) : o_bialt(la, N);
            }
        } else if (a.family == "skew-s") {
            if (method == "bialternant") {
                err << "error: --method bialternant is not defined for skew families\n";
                return 2;
            }
            value = method == "gt" ? skew_schur_gt(la, mu, N) : skew_schur_jt(la, mu, N);
        } else if (a.family == "skew-sp" || a.family == "skew-o") {
            if (method == "bialternant") {
                err << "error: --method bialternant is not defined for skew families\n";
                return 2;
            }
            const bool is_sp = a.family == "skew-sp";
            if (method == "gt")
                value = is_sp ? skew_sp_gt(la, mu, N) : skew_o_gt(la, mu, N);
            else
                value = is_sp ? skew_sp_jt(la, mu, N) : skew_o_jt(la, mu, N);
        } else {
            err << "error: unknown family '" << a.family << "'\n";
            return 2;
        }

        if (a.format == "json")
            out << to_json(value).dump() << "\n";
        else
            out << to_text(value) << "\n";
        return 0;
    } catch (const LengthMismatch& e) {
        err << "error: length mismatch between --lambda, --mu and --nvars: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedArity& e) {
        err << "error: --nvars unsupported for this method: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Schur / symplectic / orthogonal symmetric function calculator"};
    app.name("schurlab");
    app.require_subcommand(1);

    ComputeArgs c;
    CLI::App* compute = app.add_subcommand("compute", "evaluate one function");
    compute->add_option("family", c.family, "s | sp | o | skew-s | skew-sp | skew-o | sstar")
        ->required()
        ->check(CLI::IsMember({"s", "sp", "o", "skew-s", "skew-sp", "skew-o", "sstar"}));
    compute->add_option("--lambda", c.lambda_text,
                        "comma-separated parts; trailing zeros are significant");
    auto* mu_opt = compute->add_option("--mu", c.mu_text, "bottom partition for skew families");
    compute->add_option("--nvars", c.nvars, "number of variables")->required();
    compute->add_option("--method", c.method, "auto | jt | gt | bialternant")
        ->check(CLI::IsMember({"auto", "jt", "gt", "bialternant"}));
    compute->add_option("--format", c.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string suite;
    SuiteBounds bounds;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite,
                       "equivalence | branching | cauchy | specialization | remarks")
        ->required();
    verify->add_option("--max-weight", bounds.max_weight, "largest partition weight in the grid");
    verify->add_option("--max-nvars", bounds.max_nvars, "largest variable count in the grid");
    verify->add_option("--degree", bounds.degree, "series truncation degree");

    std::string expand_family;
    std::size_t expand_nvars = 1;
    long long expand_degree = 4;
    std::string expand_format = "text";
    CLI::App* expand = app.add_subcommand(
        "expand", "expand the Cauchy pairing of a family as a truncated series");
    expand->add_option("family", expand_family, "s | sp | o")
        ->required()
        ->check(CLI::IsMember({"s", "sp", "o"}));
    expand->add_option("--nvars", expand_nvars, "number of variables in each alphabet")->required();
    expand->add_option("--degree", expand_degree, "total y-degree cap")->required();
    expand->add_option("--format", expand_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) {
            c.mu_given = mu_opt->count() > 0;
            return run_compute(c, out, err);
        }
        if (verify->parsed()) {
            const auto reports = run_suite(suite, bounds);
            bool all_passed = true;
            for (const auto& r : reports) {
                out << to_json(r).dump() << "\n";
                all_passed = all_passed && r.passed;
            }
            err << (all_passed ? "all " : "FAILURES among ") << reports.size() << " checks\n";
            return all_passed ? 0 : 1;
        }
        if (expand->parsed()) {
            const Family fam = expand_family == "s"    ? Family::schur
                               : expand_family == "sp" ? Family::sp
                                                       : Family::o;
            const CheckReport r = check_cauchy(fam, expand_nvars, expand_degree);
            std::vector<std::string> names;
            for (std::size_t i = 1; i <= expand_nvars; ++i) names.push_back("x" + std::to_string(i));
            for (std::size_t j = 1; j <= expand_nvars; ++j) names.push_back("y" + std::to_string(j));
            if (expand_format == "json")
                out << to_json(r.lhs.num()).dump() << "\n";
            else
                out << to_text(r.lhs.num(), names) << "\n";
            return 0;
        }
    } catch (const UnknownSuite& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand given\n";
    return 2;
}

} // namespace schurlab::cli
