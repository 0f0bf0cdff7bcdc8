#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pipeline.hpp"

using namespace jforge::cli;

namespace {

const std::string kSchedule = JFORGE_SCHEDULE_DIR "/jordanian_gl3.schedule";

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "jforge");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("jforge_test_" + name);
}

nlohmann::json strip_timing(nlohmann::json j) {
    for (auto& c : j["checks"]) c.erase("ms");
    return j;
}

}  // namespace

TEST(Cli, QybeMatrices) {
    EXPECT_EQ(invoke({"qybe", "--matrix", "rj3"}).code, 0);
    EXPECT_EQ(invoke({"qybe", "--matrix", "rq2"}).code, 0);
    const Outcome o = invoke({"qybe", "--matrix", "rq3", "--format", "json"});
    EXPECT_EQ(o.code, 0);
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j["checks"][0]["name"], "qybe:rq3");
    EXPECT_EQ(j["schema_version"], 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"qybe", "--matrix", "rx9"}).code, 2);
    EXPECT_EQ(invoke({"relations", "--max-degree", "2"}).code, 2);
    EXPECT_EQ(invoke({"hopf", "--set", "m"}).code, 2);
    EXPECT_EQ(invoke({"hopf", "--check", "nonsense"}).code, 2);
    EXPECT_EQ(invoke({"contract"}).code, 2);
    EXPECT_EQ(invoke({"contract", "--schedule", "/nonexistent.schedule"}).code, 2);
}

TEST(Cli, ContractShippedSchedule) {
    const Outcome o = invoke({"contract", "--schedule", kSchedule});
    EXPECT_EQ(o.code, 0) << o.out;
    EXPECT_NE(o.out.find("PASS  contract:rj3"), std::string::npos);
    EXPECT_NE(o.out.find("schedule: "), std::string::npos);
}

TEST(Cli, ContractGPrimeIsExploratory) {
    const Outcome o = invoke({"contract", "--schedule", kSchedule, "--contraction-matrix", "gprime"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("no target asserted"), std::string::npos);
}

TEST(Cli, ContractDivergentSchedule) {
    const auto path = temp_path("divergent.schedule");
    std::ofstream(path) << "eta = 1/eps\nr = 2\ns = 1\np = p\nq = p\n";
    const Outcome o = invoke({"contract", "--schedule", path.string()});
    EXPECT_EQ(o.code, 1);
    EXPECT_NE(o.out.find("pole of order"), std::string::npos);
}

TEST(Cli, RelationsConventions) {
    const Outcome plain = invoke({"relations", "--convention", "plain"});
    const Outcome transposed = invoke({"relations", "--convention", "transposed"});
    EXPECT_NE(transposed.out.find("FAIL  relations:derive"), std::string::npos);
    EXPECT_NE(plain.out.find("PASS  relations:containment"), std::string::npos);
    // only the [f,y]_p relation fails, so the command reports failure
    EXPECT_EQ(plain.code, 1);
    EXPECT_NE(plain.out.find("26/27"), std::string::npos);
    const Outcome autoc = invoke({"relations"});
    EXPECT_NE(autoc.out.find("chosen: plain"), std::string::npos);
    EXPECT_NE(autoc.out.find("PASS  relations:confluence"), std::string::npos);
}

TEST(Cli, HopfDefault) {
    const Outcome o = invoke({"hopf"});
    EXPECT_EQ(o.code, 0) << o.out;
}

TEST(Cli, HopfEqualParameters) {
    const Outcome o = invoke({"hopf", "--set", "m=n", "--check", "centrality"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("central: true"), std::string::npos);
}

TEST(Cli, HopfNoBraiding) {
    const Outcome o = invoke({"hopf", "--check", "coaction", "--no-braiding"});
    EXPECT_EQ(o.code, 1);
    EXPECT_NE(o.out.find("FAIL  hopf:coaction-unbraided"), std::string::npos);
}

TEST(Cli, AllWritesJsonAndIsDeterministic) {
    const auto p1 = temp_path("r1.json"), p2 = temp_path("r2.json");
    const Outcome a = invoke({"all", "--format", "json", "--output", p1.string()});
    const Outcome b = invoke({"all", "--format", "json", "--output", p2.string()});
    EXPECT_EQ(a.code, b.code);
    std::ifstream f1(p1), f2(p2);
    const auto j1 = nlohmann::json::parse(f1), j2 = nlohmann::json::parse(f2);
    EXPECT_EQ(strip_timing(j1), strip_timing(j2));
    EXPECT_EQ(j1["convention"], "plain");
    EXPECT_EQ(j1["schedule_hash"].get<std::string>().size(), 64u);
    for (const auto& c : j1["checks"]) EXPECT_FALSE(c["anchor"].get<std::string>().empty());
    // the only failing check is the printed-relation table
    for (const auto& c : j1["checks"]) EXPECT_EQ(c["pass"].get<bool>(), c["name"] != "relations:printed") << c["name"];
    EXPECT_EQ(a.code, 1);
}

TEST(Cli, AllIsolatesBrokenSchedule) {
    const auto path = temp_path("broken.schedule");
    std::ofstream(path) << "eta = 1/eps\nr = (\n";
    const Outcome o = invoke({"all", "--schedule", path.string()});
    EXPECT_EQ(o.code, 1);
    EXPECT_NE(o.out.find("FAIL  contract:schedule"), std::string::npos);
    EXPECT_NE(o.out.find("PASS  relations:containment"), std::string::npos);
    EXPECT_NE(o.out.find("PASS  hopf:antipode-quotient"), std::string::npos);
}

TEST(Cli, SetParsing) {
    const auto b = parse_assignments({"m=n", "p = 1"});
    EXPECT_EQ(b.size(), 2u);
    EXPECT_THROW(parse_assignments({"=3"}), UsageError);
    EXPECT_THROW(parse_assignments({"m=(("}), UsageError);
}

TEST(Cli, Sha256) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
