#include "doctest.h"

#include "helpers.hpp"
#include "qtoda/coefficients.hpp"
#include "qtoda/run.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace qtoda;
using nlohmann::json;
using th::rat;
using th::rats;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome exec(const RunConfig& cfg) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("fb at the smallest rank emits the known series") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::FB;
    cfg.n = 1;
    cfg.order = 1;
    cfg.q = rat("3/7");
    cfg.s = rats({"2"});
    const Outcome r = exec(cfg);
    CHECK(r.code == 0);
    CHECK(r.err.empty());

    const json doc = json::parse(r.out);
    CHECK(doc["variant"] == "B");
    CHECK(doc["n"] == 1);
    CHECK(doc["order"] == 1);
    REQUIRE(doc["terms"].size() == 2);
    CHECK(doc["terms"][0]["exponent"] == json::array({-1}));
    CHECK(doc["terms"][0]["coefficient"] == "21/25");
    CHECK(doc["terms"][1]["exponent"] == json::array({0}));
    CHECK(doc["terms"][1]["coefficient"] == "1");
}

TEST_CASE("repeated runs are byte-identical") {
    RunConfig verify;
    verify.command = RunConfig::Command::Verify;
    verify.n = 2;
    verify.order = 2;
    verify.points = 2;
    verify.seed = 5;
    verify.checks = {"eigen-A", "branching"};
    const Outcome v1 = exec(verify);
    const Outcome v2 = exec(verify);
    CHECK(v1.code == 0);
    CHECK(v1.out == v2.out);
    CHECK(!v1.out.empty());

    RunConfig fb;
    fb.command = RunConfig::Command::FB;
    fb.n = 2;
    fb.order = 3;
    fb.seed = 12;
    const Outcome f1 = exec(fb);
    const Outcome f2 = exec(fb);
    CHECK(f1.code == 0);
    CHECK(f1.out == f2.out);
}

TEST_CASE("JSON and CSV agree on the emitted series") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::FA;
    cfg.n = 2;
    cfg.order = 3;
    cfg.q = rat("3/7");
    cfg.s = rats({"2", "5"});
    const Outcome as_json = exec(cfg);
    cfg.format = RunConfig::Format::Csv;
    const Outcome as_csv = exec(cfg);
    REQUIRE(as_json.code == 0);
    REQUIRE(as_csv.code == 0);

    std::vector<std::pair<std::vector<long>, std::string>> from_json;
    const json doc = json::parse(as_json.out);
    for (const json& t : doc["terms"])
        from_json.emplace_back(t["exponent"].get<std::vector<long>>(),
                               t["coefficient"].get<std::string>());

    std::vector<std::pair<std::vector<long>, std::string>> from_csv;
    std::istringstream lines(as_csv.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "exponent_1,exponent_2,coefficient");
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string field;
        std::vector<long> exp;
        REQUIRE(std::getline(fields, field, ','));
        exp.push_back(std::stol(field));
        REQUIRE(std::getline(fields, field, ','));
        exp.push_back(std::stol(field));
        REQUIRE(std::getline(fields, field, ','));
        from_csv.emplace_back(std::move(exp), field);
    }
    CHECK(from_json == from_csv);
    CHECK(from_json.size() == 4); // one term per degree through order 3
}

TEST_CASE("branch coefficient table in both formats") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::BranchCoeffs;
    cfg.n = 2;
    cfg.order = 2;
    cfg.q = rat("3/7");
    cfg.s = rats({"2", "5"});
    const Outcome r = exec(cfg);
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["n"] == 2);
    CHECK(doc["params"]["q"] == "3/7");
    // Tuples weighted by (2, 1) with total weight <= 2.
    REQUIRE(doc["rows"].size() == 4);
    CHECK(doc["rows"][0]["theta"] == json::array({0, 0}));
    CHECK(doc["rows"][0]["value"] == "1");

    // Every tabulated value matches a direct evaluation.
    const ParamPoint p = ParamPoint::make(rat("3/7"), rats({"2", "5"}), 2);
    for (const json& row : doc["rows"]) {
        const ThetaVector theta = row["theta"].get<ThetaVector>();
        CHECK(row["value"] == e_branch(theta, p).str());
    }

    cfg.format = RunConfig::Format::Csv;
    const Outcome c = exec(cfg);
    REQUIRE(c.code == 0);
    std::istringstream lines(c.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "theta_1,theta_2,value");
    int rows = 0;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 4);
}

TEST_CASE("verify CSV carries the report header") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::Verify;
    cfg.n = 1;
    cfg.order = 1;
    cfg.points = 1;
    cfg.seed = 8;
    cfg.checks = {"eigen-B"};
    cfg.format = RunConfig::Format::Csv;
    const Outcome r = exec(cfg);
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "check,n,order,params,seed,pass,firstFailure,trustedDegree");
    REQUIRE(std::getline(lines, line));
    CHECK(line.rfind("eigen-B,1,1,", 0) == 0);
    CHECK(line.find(",true,") != std::string::npos);
}

TEST_CASE("exit codes distinguish failure classes") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::FB;
    cfg.n = 1;
    cfg.order = 2;
    cfg.q = rat("1"); // q = 1 is never generic
    cfg.s = rats({"2"});
    Outcome r = exec(cfg);
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error:", 0) == 0);
    CHECK(r.out.empty());

    cfg.q = rat("3/7");
    cfg.s = rats({"2", "5"}); // wrong length for n = 1
    CHECK(exec(cfg).code == 3);

    cfg.s = rats({"2"});
    cfg.n = 0;
    CHECK(exec(cfg).code == 3);
    cfg.n = 1;
    cfg.order = -1;
    CHECK(exec(cfg).code == 3);

    RunConfig verify;
    verify.command = RunConfig::Command::Verify;
    verify.q = rat("3/7"); // verify refuses explicit parameters
    r = exec(verify);
    CHECK(r.code == 3);
    CHECK(r.err.find("--seed") != std::string::npos);

    verify.q.reset();
    verify.checks = {"no-such-check"};
    CHECK(exec(verify).code == 3);
}

TEST_CASE("one-sided parameters are completed from the seed") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::FB;
    cfg.n = 2;
    cfg.order = 2;
    cfg.q = rat("3/7");
    cfg.seed = 4;
    const Outcome with_q = exec(cfg);
    CHECK(with_q.code == 0);

    cfg.q.reset();
    cfg.s = rats({"2", "5"});
    const Outcome with_s = exec(cfg);
    CHECK(with_s.code == 0);
    // Drawn q completes the fixed s into a generic pair; output stays stable.
    CHECK(exec(cfg).out == with_s.out);
}
