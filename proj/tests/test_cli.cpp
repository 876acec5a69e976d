#include <doctest.h>

#include <string>
#include <vector>

#include <json.hpp>

#include "support/subprocess.hpp"

using mmsflow::testing::CommandResult;
using mmsflow::testing::run_command;
using mmsflow::testing::TempDir;
using nlohmann::json;

namespace {

std::string cli() { return MMSFLOW_CLI_PATH; }

const char* kPartyListDocument = R"({
  "candidates": ["a1", "a2", "a3", "b1", "b2"],
  "ballots": [[0, 1, 2], [0, 1, 2], [0, 1, 2], [0, 1, 2], [3, 4], [3, 4]],
  "k": 3
})";

const char* kConcentratedDocument = R"({
  "candidates": ["a", "b"],
  "ballots": [[0], [0], [0], [1]]
})";

}  // namespace

TEST_CASE("winners on the party-list file") {
    TempDir dir;
    const std::string file = dir.write("party.json", kPartyListDocument);
    const CommandResult result = run_command(cli() + " winners " + file);
    REQUIRE(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["k"] == 3);
    CHECK(report["winners"] == json({"a1", "a2", "b1"}));
    CHECK(report["winner_indices"] == json({0, 1, 3}));
    CHECK(report["round_values"] == json({"4/1", "2/1", "2/1"}));
    CHECK(report["round_ties"][1] == json({"a2", "a3", "b1", "b2"}));
    CHECK(report["flow_solves"].get<long long>() > 0);

    SUBCASE("--k overrides the file and k=|C| lists everyone") {
        const CommandResult all = run_command(cli() + " winners --k 5 " + file);
        REQUIRE(all.exit_code == 0);
        CHECK(json::parse(all.output)["winners"].size() == 5);
    }
    SUBCASE("repeated runs are byte-identical") {
        const CommandResult again = run_command(cli() + " winners " + file);
        CHECK(again.exit_code == 0);
        CHECK(again.output == result.output);
    }
    SUBCASE("the report bytes are frozen") {
        const std::string expected = R"({
  "k": 3,
  "winners": [
    "a1",
    "a2",
    "b1"
  ],
  "winner_indices": [
    0,
    1,
    3
  ],
  "round_values": [
    "4/1",
    "2/1",
    "2/1"
  ],
  "round_ties": [
    [
      "a1",
      "a2",
      "a3"
    ],
    [
      "a2",
      "a3",
      "b1",
      "b2"
    ],
    [
      "b1",
      "b2"
    ]
  ],
  "flow_solves": 14
}
)";
        CHECK(result.output == expected);
    }
}

TEST_CASE("maximin subcommand") {
    TempDir dir;
    const std::string file = dir.write("e1.json", kConcentratedDocument);

    SUBCASE("whole candidate set") {
        const CommandResult result = run_command(cli() + " maximin --subset a,b " + file);
        REQUIRE(result.exit_code == 0);
        const json report = json::parse(result.output);
        CHECK(report["value"] == "1/1");
        CHECK(report["survivors"] == json({"b"}));
        CHECK(report["iterations"] == 2);
    }
    SUBCASE("single well supported candidate") {
        const std::string seven = dir.write("seven.json",
            R"({"candidates":["c"],"ballots":[[0],[0],[0],[0],[0],[0],[0]]})");
        const CommandResult result = run_command(cli() + " maximin --subset c " + seven);
        REQUIRE(result.exit_code == 0);
        CHECK(json::parse(result.output)["value"] == "7/1");
    }
    SUBCASE("subset nobody approves") {
        const std::string lonely =
            dir.write("lonely.json", R"({"candidates":["a","b"],"ballots":[[0]]})");
        const CommandResult result = run_command(cli() + " maximin --subset b " + lonely);
        REQUIRE(result.exit_code == 0);
        CHECK(json::parse(result.output)["value"] == "0/1");
    }
    SUBCASE("unknown name exits 3") {
        const CommandResult result = run_command(cli() + " maximin --subset a,zz " + file);
        CHECK(result.exit_code == 3);
    }
}

TEST_CASE("error exit codes") {
    TempDir dir;
    SUBCASE("malformed document exits 2") {
        const std::string file = dir.write("bad.json", "{nope");
        CHECK(run_command(cli() + " winners --k 1 " + file).exit_code == 2);
    }
    SUBCASE("missing file exits 2") {
        CHECK(run_command(cli() + " winners --k 1 /nonexistent/x.json").exit_code == 2);
    }
    SUBCASE("out-of-range ballot index exits 3") {
        const std::string file =
            dir.write("range.json", R"({"candidates":["a"],"ballots":[[1]]})");
        CHECK(run_command(cli() + " winners --k 1 " + file).exit_code == 3);
    }
    SUBCASE("missing k exits 3") {
        const std::string file = dir.write("nok.json", kConcentratedDocument);
        CHECK(run_command(cli() + " winners " + file).exit_code == 3);
    }
    SUBCASE("k beyond the candidates exits 3") {
        const std::string file = dir.write("bigk.json", kConcentratedDocument);
        CHECK(run_command(cli() + " winners --k 3 " + file).exit_code == 3);
    }
}

TEST_CASE("verify oracle mode") {
    TempDir dir;
    const std::string file = dir.write("e1.json", kConcentratedDocument);
    const CommandResult result = run_command(cli() + " verify --mode oracle --k 2 " + file);
    REQUIRE(result.exit_code == 0);
    const json report = json::parse(result.output);
    CHECK(report["pass"] == true);
    CHECK(report["rounds"].size() == 2);
    for (const json& round : report["rounds"]) {
        CHECK(round["flow_value"] == round["oracle_value"]);
        CHECK(round["match"] == true);
    }
}

TEST_CASE("verify pjr mode") {
    TempDir dir;
    SUBCASE("party-list example passes") {
        const std::string file = dir.write("party.json", kPartyListDocument);
        const CommandResult result = run_command(cli() + " verify --mode pjr " + file);
        REQUIRE(result.exit_code == 0);
        CHECK(json::parse(result.output)["pass"] == true);
    }
    SUBCASE("thirteen voters exceed the checker bound") {
        std::string doc = R"({"candidates":["a"],"ballots":[)";
        for (int i = 0; i < 13; ++i) {
            doc += i ? ",[0]" : "[0]";
        }
        doc += R"(],"k":1})";
        const std::string file = dir.write("big.json", doc);
        CHECK(run_command(cli() + " verify --mode pjr " + file).exit_code == 4);
    }
}

TEST_CASE("verify oracle mode refuses committees beyond the oracle bound") {
    TempDir dir;
    std::string names = "\"c0\"";
    std::string ballot = "0";
    for (int c = 1; c < 21; ++c) {
        names += ",\"c" + std::to_string(c) + "\"";
        ballot += "," + std::to_string(c);
    }
    const std::string file = dir.write("wide.json",
        R"({"candidates":[)" + names + R"(],"ballots":[[)" + ballot + R"(]],"k":21})");
    CHECK(run_command(cli() + " verify --mode oracle " + file).exit_code == 4);
}

TEST_CASE("verify dhondt mode") {
    TempDir dir;
    SUBCASE("party-list example matches the apportionment") {
        const std::string file = dir.write("party.json", kPartyListDocument);
        const CommandResult result = run_command(cli() + " verify --mode dhondt " + file);
        REQUIRE(result.exit_code == 0);
        const json report = json::parse(result.output);
        CHECK(report["mms_seats"] == json({2, 1}));
        CHECK(report["dhondt_seats"] == json({2, 1}));
        CHECK(report["cross_party_ties"] == true);
        CHECK(report["pass"] == true);
    }
    SUBCASE("overlapping ballots are not a party list") {
        const std::string file = dir.write("overlap.json",
            R"({"candidates":["a","b"],"ballots":[[0,1],[0]],"k":1})");
        CHECK(run_command(cli() + " verify --mode dhondt " + file).exit_code == 3);
    }
    SUBCASE("a party short of candidates honestly fails the comparison") {
        // Apportionment gives the first party two seats but it fields only
        // one candidate, so the committee cannot mirror it.
        const std::string file = dir.write("short.json",
            R"({"candidates":["a1","b1","b2"],"ballots":[[0],[0],[0],[0],[1,2],[1,2]],"k":3})");
        const CommandResult result = run_command(cli() + " verify --mode dhondt " + file);
        CHECK(result.exit_code == 5);
        const json report = json::parse(result.output);
        CHECK(report["pass"] == false);
        CHECK(report["dhondt_seats"] == json({2, 1}));
        CHECK(report["mms_seats"] == json({1, 2}));
    }
}
