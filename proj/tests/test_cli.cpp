#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

std::string cliPath() {
    if (const char* env = std::getenv("RUNCOUNT_CLI")) return env;
    return "build/runcount";
}

struct RunResult {
    int exitCode = -1;
    std::string output; // stdout + stderr interleaved
};

RunResult run(const std::string& args) {
    const std::string command = cliPath() + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("recipe tables and sequences") {
    const RunResult pk = run("recipe pk --N 9");
    CHECK(pk.exitCode == 0);
    CHECK(contains(pk.output, "7: 64 + 1824*t + 2880*t^2 + 272*t^3"));
    CHECK(contains(pk.output, "9: 256 + 31616*t + 185856*t^2 + 137216*t^3 + 7936*t^4"));

    const RunResult a = run("recipe gz2014 --N 12 --format seq");
    CHECK(a.exitCode == 0);
    CHECK(a.output ==
          "1,1,2,4,13,50,229,1238,7614,52706,405581,3432022,31684445\n");

    const RunResult c = run("recipe allOddPV --N 12 --format seq");
    CHECK(c.exitCode == 0);
    CHECK(c.output == "1,1,2,2,8,14,84,204,1632,5104,51040,195040,2340480\n");

    const RunResult csv = run("recipe udr --N 4 --format csv");
    CHECK(csv.exitCode == 0);
    CHECK(contains(csv.output, "4,0,1,7,11,5"));

    CHECK(run("recipe nonesuch").exitCode == 1);
    CHECK(run("recipe pk --N 65").exitCode == 1);
    CHECK(run("recipe pk --hom word").exitCode == 1);
    CHECK(run("recipe").exitCode == 1);
    CHECK(run("recipe list").exitCode == 0);
}

TEST_CASE("recipe documents") {
    const RunResult doc =
        run("recipe --file fixtures/alleven_doc.json --N 12 --format seq");
    CHECK(doc.exitCode == 0);
    CHECK(doc.output ==
          "1,1,2,6,8,40,84,588,1632,14688,51040,561440,2340480\n");
    CHECK(run("recipe pk --file fixtures/alleven_doc.json").exitCode == 1);
    CHECK(run("recipe --file fixtures/missing.json").exitCode == 1);
}

TEST_CASE("compute over network files") {
    const RunResult series = run("compute fixtures/sec23.json --hom perm --N 12 --format seq");
    CHECK(series.exitCode == 0);
    CHECK(series.output == "1,0,0,0,0,9,0,0,0,0,18056,0,0\n");

    const RunResult polyLines = run("compute fixtures/sec23.json --hom perm --N 5");
    CHECK(contains(polyLines.output, "5: 9"));

    const RunResult overridden =
        run("compute fixtures/sec23.json --N 5 --start 1 --end 2");
    CHECK(overridden.exitCode == 0);
    CHECK(contains(overridden.output, "2: 1"));

    const RunResult invalid = run("compute fixtures/invalid_twopath.json --N 6");
    CHECK(invalid.exitCode == 1);
    CHECK(contains(invalid.output, "composition (1,2)"));
    CHECK(contains(invalid.output, "1->2->4"));

    CHECK(run("compute fixtures/sec23.json --start 0,1").exitCode == 1);
    CHECK(run("compute fixtures/sec23.json --end 7").exitCode == 1);
    CHECK(run("compute fixtures/nope.json").exitCode == 1);
    CHECK(run("compute fixtures/sec23.json --hom euler").exitCode == 1);
}

TEST_CASE("oracle statistics and predicates") {
    const RunResult udr = run("oracle stat udr 4");
    CHECK(udr.exitCode == 0);
    CHECK(udr.output == "t + 7*t^2 + 11*t^3 + 5*t^4\n");

    const RunResult empty = run("oracle stat des 0");
    CHECK(empty.exitCode == 0);
    CHECK(empty.output == "1\n");

    const RunResult csvRow = run("oracle stat rpk 4 --format csv");
    CHECK(csvRow.output == "4,1,18,5\n");

    const RunResult total = run("oracle stat des 5 --format seq");
    CHECK(total.output == "120\n");

    const RunResult pred = run("oracle pred allPVEven 8");
    CHECK(pred.exitCode == 0);
    CHECK(pred.output == "1632\n");

    const RunResult runs = run("oracle pred incRunsBelow 4 --m 3");
    CHECK(runs.output == "17\n");

    CHECK(run("oracle stat des 10").exitCode == 1);      // default cap is 9
    CHECK(run("oracle stat des 10 --cap 10").exitCode == 0);
    CHECK(run("oracle stat des 11 --cap 11").exitCode == 1);
    CHECK(run("oracle pred allPVEven 13").exitCode == 1);
    CHECK(run("oracle stat nonesuch 3").exitCode == 1);
    CHECK(run("oracle pred nonesuch 3").exitCode == 1);
    CHECK(run("oracle").exitCode == 1);
}

TEST_CASE("check suites and the mismatch exit code") {
    const RunResult tables = run("check tables");
    CHECK(tables.exitCode == 0);
    CHECK(contains(tables.output, "tables: 11/11 checks passed"));

    const RunResult oracle = run("check oracle --cap 5");
    CHECK(oracle.exitCode == 0);
    CHECK(contains(oracle.output, "oracle: 14/14 checks passed"));

    const RunResult identities = run("check identities --N 8");
    CHECK(identities.exitCode == 0);

    const RunResult bijections = run("check bijections --N 6");
    CHECK(bijections.exitCode == 0);

    CHECK(run("check nonesuch").exitCode == 1);
    CHECK(run("check bijections --N 11").exitCode == 1);

    SUBCASE("a corrupted golden directory is reported with exit 2") {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "runcount_golden_test";
        fs::remove_all(dir);
        fs::create_directories(dir);
        for (const fs::directory_entry& entry : fs::directory_iterator("data/golden"))
            fs::copy_file(entry.path(), dir / entry.path().filename());
        std::ofstream(dir / "pk.csv") << "0,1\n1,2\n"; // wrong value, short table
        const RunResult bad = run("check tables --data " + dir.string());
        CHECK(bad.exitCode == 2);
        CHECK(contains(bad.output, "FAIL table pk"));
        fs::remove_all(dir);
    }
}
