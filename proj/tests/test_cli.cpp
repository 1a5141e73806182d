#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "avgroups/abgroup.hpp"
#include "avgroups/cli.hpp"
#include "avgroups/error.hpp"
#include "avgroups/json_io.hpp"
#include "avgroups/polygon.hpp"

using namespace avgroups;
using Json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::main(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
    args.insert(args.begin(), {"--format", "json"});
    Run r = run(std::move(args));
    CHECK(r.code == expected_code);
    return Json::parse(r.out);
}

} // namespace

TEST_CASE("classify in JSON") {
    Json j = run_json({"classify", "--poly", "9,-2,1", "--q", "9"});
    CHECK(j["total_count"] == 2);
    CHECK(j["groups"] == Json::array({"Z/8", "Z/2 + Z/4"}));
    CHECK(j["truncated"] == false);
    CHECK(j["per_prime"]["2"]["newton"]["vertices"] == Json::parse(R"([[0,"3/1"],[2,"0/1"]])"));
    for (const auto& label : j["groups"]) CHECK(group_label(parse_group_label(label.get<std::string>())) == label.get<std::string>());

    Json symbolic = run_json({"classify", "--poly", "t^2 - 2*t + 9", "--q", "9"});
    CHECK(symbolic["groups"] == j["groups"]);

    Json truncated = run_json({"classify", "--poly", "9,-2,1", "--q", "9", "--limit", "1"});
    CHECK(truncated["groups"].size() == 1);
    CHECK(truncated["truncated"] == true);
    CHECK(truncated["total_count"] == 2);
}

TEST_CASE("classify output is byte-identical across runs") {
    const std::vector<std::string> args{"--format", "json", "classify", "--poly", "(t^2-2*t+9)*(t^2+t+9)", "--q", "9"};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Run ta = run({"classify", "--poly", "9,-2,1", "--q", "9"}), tb = run({"classify", "--poly", "9,-2,1", "--q", "9"});
    CHECK(ta.out == tb.out);
}

TEST_CASE("elliptic, check and validate") {
    CHECK(run_json({"elliptic", "--q", "9", "--b", "6"})["groups"] == Json::array({"Z/2 + Z/2"}));
    Run text = run({"elliptic", "--q", "9", "--b", "6"});
    CHECK(text.code == 0);
    CHECK(text.out.find("Z/2 + Z/2") != std::string::npos);

    Run ok = run({"check", "--poly", "9,-2,1", "--q", "9", "--group", "Z/8"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("true") != std::string::npos);
    Run no = run({"check", "--poly", "8,-1,1", "--group", "Z/2 + Z/4"});
    CHECK(no.code == 1);
    CHECK(run({"--format", "json", "check", "--poly", "8,-1,1", "--group", "Z/2 + Z/4"}).code == 1);

    CHECK(run({"validate", "--poly", "9,-2,1", "--q", "9"}).code == 0);
    Json bad = run_json({"validate", "--poly", "5,-5,1", "--q", "5"}, 1);
    CHECK(bad["verdict"] == "rejected");
}

TEST_CASE("error codes and exit statuses") {
    Run sq = run({"classify", "--poly", "9,-6,1", "--q", "9"});
    CHECK(sq.code == 2);
    CHECK(sq.err.find("main theorem requires no multiple roots") != std::string::npos);

    auto code = [](std::vector<std::string> args) {
        args.insert(args.begin(), {"--format", "json"});
        std::ostringstream out, err;
        int rc = cli::main(args, out, err);
        CHECK(rc == 2);
        return Json::parse(out.str())["error"]["code"].get<std::string>();
    };
    CHECK(code({"classify", "--poly", "9,-6,1", "--q", "9"}) == "not_squarefree");
    CHECK(code({"classify", "--poly", "9,,1", "--q", "9"}) == "malformed_polynomial");
    CHECK(code({"witness", "--poly", "9,-2,1", "--group", "Z/8", "--prime", "4"}) == "not_prime");
    CHECK(code({"check", "--poly", "9,-2,1", "--group", "Z/4"}) == "wrong_order");
    CHECK(code({"check", "--poly", "9,-2,1", "--group", "Z/"}) == "malformed_group");
    CHECK(code({"conjecture", "--factors", "t+3;t^2-2*t+9", "--prime", "2"}) == "factors_not_nested");

    CHECK(run({}).code == 2);
    CHECK(run({"classify", "--poly", "9,-2,1"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--format", "yaml", "classify", "--poly", "9,-2,1", "--q", "9"}).code == 2);
}

TEST_CASE("exit codes do not depend on the output format") {
    const std::vector<std::vector<std::string>> cases{
        {"check", "--poly", "9,-2,1", "--group", "Z/8"},
        {"check", "--poly", "8,-1,1", "--group", "Z/2 + Z/4"},
        {"check", "--poly", "9,-2,1", "--group", "Z/4"},
        {"validate", "--poly", "5,-5,1", "--q", "5"},
        {"elliptic", "--q", "9", "--b", "7"},
    };
    for (const auto& c : cases) {
        std::vector<std::string> j = c;
        j.insert(j.begin(), {"--format", "json"});
        CHECK(run(c).code == run(j).code);
    }
}

TEST_CASE("witness, conjecture and oracle") {
    Json w = run_json({"witness", "--poly", "t^2+8", "--shifted", "--group", "Z/2 + Z/4", "--prime", "2"});
    CHECK(w["verified"] == true);
    CHECK(w["matrix"]["rows"] == Json::parse(R"([["0/1","-4/1"],["2/1","0/1"]])"));
    CHECK(w["elementary_divisors"] == Json::array({1, 2}));

    Json wf = run_json({"witness", "--poly", "9,-2,1", "--group", "Z/8", "--prime", "2"});
    CHECK(wf["verified"] == true);

    Json c = run_json({"conjecture", "--factors", "(t^2-2*t+9)*(t+3)", "--factors", "t+3", "--prime", "2"});
    CHECK(c["conjectural"] == true);
    CHECK(c["groups"].size() == 5);
    for (const auto& g : c["groups"]) CHECK(g != "Z/8 + Z/16");

    Json o = run_json({"oracle", "--poly", "9,-2,1", "--prime", "2", "--check-stability"});
    CHECK(o["equal"] == true);
    CHECK(o["stable"] == true);
    CHECK(o["achievable"] == o["criterion"]);

    Json os = run_json({"oracle", "--poly", "t^2+t+8", "--shifted", "--prime", "2", "--bound", "5"});
    CHECK(os["achievable"] == Json::array({"Z/8"}));
}

TEST_CASE("oracle budget override from the environment") {
    ::setenv(cli::kBudgetEnv, "16", 1);
    Run r = run({"--format", "json", "oracle", "--poly", "9,-2,1", "--prime", "2"});
    ::unsetenv(cli::kBudgetEnv);
    CHECK(r.code == 2);
    CHECK(Json::parse(r.out)["error"]["code"] == "budget_exceeded");
}

TEST_CASE("fixtures subcommand") {
    Run r = run({"fixtures"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("JSON encodings round trip") {
    namespace jio = avgroups::json;
    CHECK(jio::rational_string(mpq_class(3)) == "3/1");
    CHECK(jio::rational_string(mpq_class(-3, 2)) == "-3/2");
    CHECK(jio::parse_rational("6/4") == mpq_class(3, 2));
    CHECK(jio::parse_rational("-5") == -5);
    CHECK_THROWS_AS(jio::parse_rational("1/0"), Error);
    CHECK_THROWS_AS(jio::parse_rational("x"), Error);

    CHECK(jio::integer(mpz_class(42)) == 42);
    const mpz_class big("123456789012345678901234567890");
    CHECK(jio::integer(big) == "123456789012345678901234567890");

    for (const char* label : {"0", "Z/8", "Z/2 + Z/4 + Z/3", "Z/1024 + Z/1024 + Z/9 + Z/125"}) {
        GroupType g = parse_group_label(label);
        Json j = jio::group(g);
        CHECK(j["label"] == label);
        CHECK(jio::parse_group(j) == g);
        CHECK(jio::parse_group(Json::parse(j.dump())) == g);
    }
    Json tampered = jio::group(parse_group_label("Z/8"));
    tampered["order"] = 9;
    CHECK_THROWS_AS(jio::parse_group(tampered), Error);

    ConvexPolygon p = newton_polygon(IntPoly{-32, 8, -4, 1}, 2);
    CHECK(jio::parse_polygon(Json::parse(jio::polygon(p).dump())) == p);
    CHECK(jio::polygon(p)["vertices"] == Json::parse(R"([[0,"5/1"],[1,"3/1"],[3,"0/1"]])"));
}
