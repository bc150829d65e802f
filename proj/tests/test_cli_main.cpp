#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "schurlab/json_io.hpp"
#include "schurlab/partition.hpp"
#include "schurlab/symplectic_orthogonal.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = schurlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("compute sp in one variable") {
    const CliResult r = run({"compute", "sp", "--lambda", "1", "--nvars", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "x1 + x1^-1\n");
}

TEST_CASE("skew length discipline through the command line") {
    // consistent lengths: 1 + 1 == 2
    const CliResult ok =
        run({"compute", "skew-sp", "--lambda", "3,1", "--mu", "2", "--nvars", "1", "--method", "gt"});
    CHECK(ok.code == 0);

    const CliResult bad =
        run({"compute", "skew-sp", "--lambda", "3,1", "--mu", "2", "--nvars", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("length mismatch") != std::string::npos);
    CHECK(bad.err.find("--lambda") != std::string::npos);
}

TEST_CASE("trailing zeros on the command line are significant") {
    const CliResult a =
        run({"compute", "skew-sp", "--lambda", "2,1,1", "--mu", "1", "--nvars", "2"});
    const CliResult b =
        run({"compute", "skew-sp", "--lambda", "2,1,1,0", "--mu", "1,0", "--nvars", "2"});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out != b.out);
}

TEST_CASE("jt and gt print identical canonical output") {
    using schurlab::GeneralizedPartition;
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"2,1", ""}, {"2,1", "1"}, {"3,1,0", "1"}, {"1,1", "1"}};
    for (const auto& [lambda, mu] : cases) {
        for (const std::string family : {"skew-s"}) {
            std::vector<std::string> base = {"compute", family, "--lambda", lambda,
                                             "--mu",    mu,     "--nvars",  "2"};
            auto jt = base;
            jt.push_back("--method");
            jt.push_back("jt");
            auto gt = base;
            gt.push_back("--method");
            gt.push_back("gt");
            const CliResult a = run(jt);
            const CliResult b = run(gt);
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
        }
    }
    // skew symplectic and orthogonal routes, with the strict length rule
    for (const std::string family : {"skew-sp", "skew-o"}) {
        const CliResult a = run({"compute", family, "--lambda", "2,1,0", "--mu", "1", "--nvars",
                                 "2", "--method", "jt"});
        const CliResult b = run({"compute", family, "--lambda", "2,1,0", "--mu", "1", "--nvars",
                                 "2", "--method", "gt"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("json output re-parses to the in-memory value") {
    const CliResult r = run({"compute", "skew-o", "--lambda", "2,1,0", "--mu", "1", "--nvars", "2",
                             "--format", "json"});
    CHECK(r.code == 0);
    const auto parsed = schurlab::laurent_from_json(nlohmann::json::parse(r.out));
    const auto direct = schurlab::skew_o_jt(schurlab::GeneralizedPartition({2, 1, 0}),
                                            schurlab::GeneralizedPartition({1}), 2);
    CHECK(parsed == direct);
}

TEST_CASE("verify emits one json report per line and exits zero") {
    const CliResult r = run({"verify", "specialization", "--max-weight", "3"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.at("passed").get<bool>());
        ++count;
    }
    CHECK(count > 0);
}

TEST_CASE("usage errors") {
    CHECK(run({"compute", "bogus", "--nvars", "1"}).code == 2);
    CHECK(run({"compute", "s", "--lambda", "1"}).code == 2);          // missing --nvars
    CHECK(run({"compute", "skew-s", "--lambda", "1", "--nvars", "1"}).code == 2); // missing --mu
    CHECK(run({"compute", "s", "--lambda", "1", "--mu", "1", "--nvars", "1"}).code == 2);
    CHECK(run({"verify", "bogus-suite"}).code == 2);
    CHECK(run({"compute", "o", "--lambda", "1", "--nvars", "1", "--method", "bialternant"}).code ==
          2);
    CHECK(run({"compute", "s", "--lambda", "x", "--nvars", "1"}).code == 2);
    CHECK(run({"compute", "s", "--lambda", "1,2", "--nvars", "2"}).code == 2); // not decreasing
}

TEST_CASE("expand prints the truncated pairing series") {
    const CliResult r = run({"expand", "s", "--nvars", "1", "--degree", "3"});
    CHECK(r.code == 0);
    // geometric: 1 + x1 y1 + x1^2 y1^2 + x1^3 y1^3
    CHECK(r.out == "x1^3*y1^3 + x1^2*y1^2 + x1*y1 + 1\n");
}

TEST_CASE("sstar through the command line") {
    const CliResult r = run({"compute", "sstar", "--lambda", "2,1", "--mu", "1", "--nvars", "1"});
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
    const CliResult bad = run({"compute", "sstar", "--lambda", "2,1", "--mu", "1", "--nvars", "2"});
    CHECK(bad.code == 2);
}
