#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "antipow/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = antipow::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generate prints prefixes") {
    auto r = run({"generate", "sierpinski", "--length", "10"});
    CHECK(r.code == 0);
    CHECK(r.out == "ababbbabab\n");
    r = run({"generate", "paperfolding", "--instructions", "(+)", "--length", "32"});
    CHECK(r.out == "00100110001101100010011100110110\n");
    r = run({"generate", "thue-morse", "--length", "8", "--format", "json"});
    CHECK(r.out == "{\"word\":\"01101001\"}\n");
    r = run({"generate", "paperfolding", "--instructions", "bad", "--length", "4"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
    CHECK(run({"generate", "fibonacci", "--length", "4"}).code == 2);
    CHECK(run({"generate", "sierpinski", "--length", "0"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("complexity tables") {
    auto r = run({"complexity", "sierpinski", "--max-n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,value\n1,2\n2,2\n3,3\n");

    r = run({"complexity", "thue-morse", "--max-n", "100"});
    std::istringstream rows(r.out);
    std::string line;
    std::getline(rows, line);
    CHECK(line == "n,value");
    while (std::getline(rows, line)) CHECK(std::stoi(line.substr(line.find(',') + 1)) <= 3);

    r = run({"complexity", "paperfolding", "--instructions", "(+)", "--kind", "factor", "--max-n", "10"});
    CHECK(r.out.find("\n7,28\n") != std::string::npos);
    CHECK(run({"complexity", "sierpinski", "--max-n", "30", "--length", "10"}).code == 2);
    CHECK(run({"complexity", "sierpinski", "--max-n", "3", "--kind", "weird"}).code == 2);
}

TEST_CASE("scan") {
    auto r = run({"scan", "sierpinski", "--length", "19683", "--order", "11", "--kind", "antipower", "--avoidance"});
    CHECK(r.code == 0);
    CHECK(r.out == "none found: avoidance verified\n");

    r = run({"scan", "paperfolding", "--instructions", "(+)", "--length", "16384", "--order", "4", "--kind",
             "abelian-antipower"});
    CHECK(r.code == 0);
    const auto hit = nlohmann::json::parse(r.out);
    CHECK(hit["m"] == 4);
    CHECK(hit["kind"] == "abelian_antipower");

    CHECK(run({"scan", "sierpinski", "--length", "100", "--order", "1", "--kind", "antipower"}).code == 2);
    r = run({"scan", "sierpinski", "--length", "100", "--order", "2", "--kind", "antipower", "--avoidance"});
    CHECK(r.code == 1);
    r = run({"scan", "thue-morse", "--length", "64", "--order", "5", "--kind", "abelian-antipower"});
    CHECK(r.out == "none\n");
}

TEST_CASE("construct") {
    for (auto [text, m] : {std::pair{"(+)", "2"}, std::pair{"(-+)", "3"}}) {
        auto r = run({"construct", "--instructions", text, "--order", m});
        CHECK(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["verified"] == true);
        CHECK(j["instructions"] == text);
        CHECK(j["start"].is_string());
        CHECK(j["cell_width"].is_string());
    }
    CHECK(run({"construct", "--instructions", "(+)", "--order", "1"}).code == 2);
    CHECK(run({"construct", "--instructions", "(+", "--order", "2"}).code == 2);
}

TEST_CASE("delta") {
    CHECK(run({"delta", "--instructions", "(+)", "--l", "0", "--d", "2", "--m", "2"}).out == "(0,1)\n");
    CHECK(run({"delta", "--instructions", "(+)", "--l", "0", "--n", "14"}).out == "2\n");

    auto r = run({"delta", "--l", "0", "--d", "2", "--m", "2", "--combine", "--l2", "0", "--d2", "2", "--r", "2"});
    CHECK(r.code == 1);
    CHECK(r.out.find("(ii)") != std::string::npos);

    r = run({"delta", "--l", "0", "--d", "2", "--m", "2", "--combine", "--l2", "6", "--d2", "2", "--r", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "precheck: ok\ncombined: l=96 d=34\ndelta: (1,1)\n");

    r = run({"delta", "--l", "0", "--d", "2", "--m", "2", "--format", "json"});
    CHECK(r.out == "{\"l\":\"0\",\"d\":\"2\",\"m\":2,\"delta\":[0,1]}\n");
    CHECK(run({"delta", "--l", "x", "--d", "2", "--m", "2"}).code == 2);
    CHECK(run({"delta", "--l", "0"}).code == 2);
}

TEST_CASE("output file and determinism") {
    const auto path = std::filesystem::temp_directory_path() / "antipow_cli_test.txt";
    auto r = run({"generate", "sierpinski", "--length", "10", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "ababbbabab");
    std::filesystem::remove(path);

    const std::vector<std::string> cmd{"construct", "--instructions", "+-(-)", "--order", "3"};
    CHECK(run(cmd).out == run(cmd).out);
}
