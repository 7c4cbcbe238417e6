#include "chibound/canonical.hpp"
#include "chibound/graph.hpp"
#include "chibound/graph_io.hpp"
#include "chibound/search.hpp"
#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace chibound;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "chibound");
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, const std::string& input = "", int expected_code = 0)
{
    args.insert(args.begin(), {"--format", "json", "--deterministic"});
    const auto r = run_cli(args, input);
    CHECK(r.code == expected_code);
    return json::parse(r.out);
}

std::filesystem::path temp_dir()
{
    auto dir = std::filesystem::temp_directory_path() / "chibound_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

void check_schema(const json& j)
{
    REQUIRE(j.is_object());
    for (const char* key : {"command", "params", "rows", "violations", "stats"})
        CHECK(j.contains(key));
    CHECK(j["rows"].is_array());
    CHECK(j["violations"].is_array());
}

} // namespace

TEST_CASE("stats examples")
{
    const auto c5 = run_json({"stats", "--input", "-"}, "Dhc\n");
    check_schema(c5);
    REQUIRE(c5["rows"].size() == 1);
    CHECK(c5["rows"][0]["omega"] == 2);
    CHECK(c5["rows"][0]["alpha"] == 2);
    CHECK(c5["rows"][0]["chi"] == 3);
    CHECK(c5["rows"][0]["three_k1_free"] == true);

    const auto path = temp_dir() / "k4.g6";
    std::ofstream(path) << emit_graph6(named::complete(4)) << '\n';
    const auto k4 = run_json({"stats", "--input", path.string()});
    CHECK(k4["rows"][0]["omega"] == 4);
    CHECK(k4["rows"][0]["chi"] == 4);

    const auto empty = run_json({"stats"}, "");
    CHECK(empty["rows"].empty());

    const auto edges = run_json({"stats", "--input-format", "edgelist"}, "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    CHECK(edges["rows"][0]["chi"] == 3);
}

TEST_CASE("stats parse error policies")
{
    CHECK(run_cli({"stats"}, "Dhc\nB!\n").code == 2);
    const auto skipped = run_json({"stats", "--on-parse-error", "skip"}, "Dhc\nB!\nBw\n");
    CHECK(skipped["rows"].size() == 2);
    CHECK(skipped["stats"]["parse_errors"] == 1);
    CHECK(run_cli({"stats", "--input", "/nonexistent/x.g6"}).code == 2);
}

TEST_CASE("deterministic reports are byte identical")
{
    const auto a = run_cli({"--format", "json", "--deterministic", "verify-bounds", "--max-n", "6"});
    const auto b = run_cli({"--format", "json", "--deterministic", "--jobs", "3", "verify-bounds", "--max-n", "6"});
    CHECK(a.out == b.out);
    const auto timed = run_json({"table1"});
    CHECK_FALSE(timed["stats"].contains("timestamp"));
    const auto r = run_cli({"--format", "json", "table1"});
    CHECK(json::parse(r.out)["stats"].contains("timestamp"));
}

TEST_CASE("verify-bounds examples")
{
    const auto j = run_json({"verify-bounds", "--max-n", "8"});
    check_schema(j);
    CHECK(j["violations"].empty());
    CHECK(j["stats"]["violations"]["table1"]["proven_range"] == 0);
    CHECK(j["stats"]["graphs"] == 582);
    bool saw_c5_row = false;
    for (const auto& row : j["rows"])
        if (row["n"] == 5 && row["omega"] == 2) {
            CHECK(row["table1_min_slack"] == 0);
            saw_c5_row = true;
        }
    CHECK(saw_c5_row);

    const auto one = run_json({"verify-bounds", "--n", "1"});
    CHECK(one["rows"].size() == 1);
    CHECK(run_cli({"verify-bounds", "--n", "12"}).code == 2);
    CHECK(run_cli({"verify-bounds", "--n", "3", "--max-n", "4"}).code == 2);
}

TEST_CASE("verify-ramsey examples")
{
    const auto six = run_json({"verify-ramsey", "--k", "3", "--n", "6"});
    CHECK(six["rows"][0]["count"] == 0);
    CHECK(six["rows"][0]["consistent"] == true);
    const auto five = run_json({"verify-ramsey", "--k", "3", "--n", "5"});
    CHECK(five["rows"][0]["count"] == 1);
    const auto nine = run_json({"verify-ramsey", "--k", "4", "--n", "9"});
    CHECK(nine["rows"][0]["count"] == 0);
    CHECK(nine["rows"][0]["consistent"] == true);
    CHECK(run_cli({"verify-ramsey", "--n", "5"}).code == 2);
}

TEST_CASE("verify-ramsey reports a config inconsistency with exit 1")
{
    const auto path = temp_dir() / "wrong.toml";
    std::ofstream(path) << "[values]\n4 = 8\n";
    const auto j = run_json({"--ramsey-config", path.string(), "verify-ramsey", "--k", "4", "--max-n", "8"}, "", 1);
    CHECK(j["violations"].size() == 1);
    CHECK(j["violations"][0]["n"] == 8);
}

TEST_CASE("lemma examples")
{
    const auto c5 = run_json({"lemma"}, "Dhc\n");
    REQUIRE(c5["rows"].size() == 1);
    const auto& row = c5["rows"][0];
    CHECK(row["r"] == 1);
    CHECK(row["s"] == 2);
    CHECK(row["t"] == 0);
    CHECK(row["k"] == 0);
    CHECK(row["II"] == "holds");
    CHECK(row["III"] == "holds");
    CHECK(row["identities"].is_array());

    const auto k3 = run_json({"lemma"}, "Bw\n");
    CHECK(k3["rows"][0]["r"] == 3);

    const auto petersen = run_json({"lemma"}, emit_graph6(named::petersen()) + "\n");
    CHECK(petersen["rows"][0]["status"] == "skipped");
    CHECK(petersen["stats"]["skipped"] == 1);
}

TEST_CASE("table1 rows")
{
    const auto j = run_json({"table1"});
    REQUIRE(j["rows"].size() == 10);
    CHECK(j["rows"][1]["omega_plus_1"] == 4);
    CHECK(j["rows"][1]["chi_bound"] == 4);
    CHECK(j["rows"][5]["omega_plus_1"] == 8);
    CHECK(j["rows"][5]["chi_bound"] == 14);
    CHECK(j["rows"][5]["formula_value"] == 15);
    CHECK(j["rows"][5]["strengthened"] == true);
    CHECK(j["rows"][9]["chi_bound"] == 30);
    CHECK(j["rows"][9]["strengthened"] == false);

    const auto csv = run_cli({"--format", "csv", "table1"});
    CHECK(csv.out.rfind("omega_plus_1,omega,chi_bound", 0) == 0);
    const auto text = run_cli({"table1"});
    CHECK(text.out.find("# table1") == 0);
}

TEST_CASE("search writes the witness and its sidecar")
{
    const auto path = temp_dir() / "c5.g6";
    std::filesystem::remove(path);
    const auto j = run_json({"search", "--n", "5", "--k", "3", "--output", path.string()});
    CHECK(j["rows"][0]["result"] == "witness");
    std::ifstream f(path);
    std::string line;
    std::getline(f, line);
    CHECK(line == canonical_form(named::cycle(5)).bytes);
    std::ifstream side(path.string() + ".json");
    const auto meta = json::parse(side);
    CHECK(meta["k"] == 3);
    CHECK(meta["seed"] == kDefaultSearchSeed);
    CHECK(meta["provenance"] == "searched");
}

TEST_CASE("search for 13 vertices with k = 5")
{
    const auto path = temp_dir() / "r35.g6";
    const auto j = run_json({"search", "--n", "13", "--k", "5", "--output", path.string()});
    std::ifstream f(path);
    std::string line;
    std::getline(f, line);
    CHECK(verify_witness(parse_graph6(line), 5));
}

TEST_CASE("search exhaustion and bad flags")
{
    const auto path = temp_dir() / "none.g6";
    std::filesystem::remove(path);
    const auto j = run_json({"search", "--n", "6", "--k", "3", "--max-iterations", "2000", "--restarts", "2",
                             "--output", path.string()},
                            "", 3);
    CHECK(j["rows"][0]["result"] == "exhausted");
    CHECK_FALSE(std::filesystem::exists(path));

    CHECK(run_cli({"search", "--n", "5", "--k", "9"}).code == 2);
    CHECK(run_cli({"search", "--n", "5", "--k", "3", "--cooling", "1.5"}).code == 2);
    CHECK(run_cli({"search", "--n", "abc", "--k", "3"}).code == 2);
    CHECK(run_cli({"--format", "xml", "table1"}).code == 2);
    CHECK(run_cli({"--jobs", "0", "table1"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("enumerate writes graph6 lines")
{
    const auto path = temp_dir() / "tf5.g6";
    const auto j = run_json({"enumerate", "--n", "5", "--output", path.string()});
    CHECK(j["rows"][0]["count"] == 14);
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    const auto stream = read_graph_stream(buf, "tf5");
    CHECK(stream.records.size() == 14);

    const auto r = run_cli({"--deterministic", "enumerate", "--n", "8", "--k", "4"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    CHECK(read_graph_stream(lines, "out").records.size() == 3);
    CHECK(r.err.find("count") != std::string::npos);
}
