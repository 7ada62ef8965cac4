#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string g_bin;
const fs::path kGoldenDir = GCLASS_GOLDEN_DIR;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        g_bin + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t k = 0;
    while ((k = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, k);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(bool(in), "missing file: ", path.string());
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

fs::path temp_file(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("gclass_cli_" + name);
    std::error_code ec;
    fs::remove(p, ec);
    return p;
}

} // namespace

TEST_CASE("check classifies the worked example") {
    const auto r = run_cli("check 66");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("G number: 66 = 29 + 37") != std::string::npos);
}

TEST_CASE("check reports non-G numbers with exit code 2") {
    const auto r = run_cli("check 98");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("not a G number") != std::string::npos);
}

TEST_CASE("check rejects odd input with exit code 1") {
    CHECK(run_cli("check 7").exit_code == 1);
    CHECK(run_cli("check 2").exit_code == 1);
}

TEST_CASE("check 4 prints the special case") {
    const auto r = run_cli("check 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("2 + 2") != std::string::npos);
}

TEST_CASE("check json carries the full record") {
    const auto r = run_cli("check 66 --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("schema_version") == 1);
    CHECK(doc.at("kind") == "record");
    CHECK(doc.at("payload").at("record").at("p1") == 29);
    CHECK(doc.at("payload").at("record").at("g_value") == 1073);
    CHECK(doc.at("payload").at("record").at("k1") == 37);
    CHECK(doc.at("payload").at("decomposition").at("first") == 29);
    CHECK(doc.at("payload").at("decomposition").at("second") == 37);
}

TEST_CASE("check csv emits the stable row") {
    const auto r = run_cli("check 66 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,two_n,p1,g_value,k1,is_g,witness_p\n33,66,29,1073,37,true,29\n");
}

TEST_CASE("cli output is byte-identical across runs") {
    CHECK(run_cli("check 66").out == run_cli("check 66").out);
    CHECK(run_cli("scan --to 130").out == run_cli("scan --to 130").out);
    CHECK(run_cli("verify --claims L3 --to 500").out ==
          run_cli("verify --claims L3 --to 500").out);
}

TEST_CASE("table matches the golden renderings") {
    CHECK(run_cli("table 33").out == slurp(kGoldenDir / "table_33.txt"));
    CHECK(run_cli("table 33 --format csv").out == slurp(kGoldenDir / "table_33.csv"));
}

TEST_CASE("table 13 highlights the prime-n row") {
    const auto r = run_cli("table 13");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("<- p1") != std::string::npos);
    CHECK(r.out.find("p1 = 13  (witness p = 13)") != std::string::npos);
}

TEST_CASE("table json carries rows and the attained maximum") {
    const auto r = run_cli("table 33 --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("kind") == "table");
    CHECK(doc.at("payload").at("p1") == 29);
    CHECK(doc.at("payload").at("witness_p") == 29);
    CHECK(doc.at("payload").at("rows").size() == 10);
    CHECK(doc.at("payload").at("rows").back().at("g_val") == 1085);
}

TEST_CASE("density json is the summary object") {
    const auto r = run_cli("density --to 130 --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("g_count") == 111);
    CHECK(doc.at("total_even") == 128);
    CHECK(doc.at("g_density") == doctest::Approx(111.0 / 128.0));
}

TEST_CASE("table 3 prints a single data row") {
    const auto r = run_cli("table 3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "p,g_val,f_val\n3,9,3\n");
}

TEST_CASE("scan summary surfaces the non-G list") {
    const auto r = run_cli("scan --to 130");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("49 55 58 68 74 82 87 94 112 121 128 130") != std::string::npos);
    CHECK(r.out.find("g_count") != std::string::npos);
}

TEST_CASE("scan caps the printed non-G list via --max-violations") {
    const auto r = run_cli("scan --to 130 --max-violations 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("22 28 32 38 ...") != std::string::npos);
    CHECK(r.out.find("non_g_total   17") != std::string::npos);
}

TEST_CASE("scan json round-trips through the documented schema") {
    const auto r = run_cli("scan --to 130 --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("kind") == "scan");
    CHECK(doc.at("payload").at("summary").at("g_count") == 111);
    CHECK(doc.at("payload").at("records").size() == 128);
}

TEST_CASE("scan --out csv matches the golden file") {
    const auto out = temp_file("scan130.csv");
    const auto r = run_cli("scan --to 130 --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(out) == slurp(kGoldenDir / "scan_3_130.csv"));
    fs::remove(out);
}

TEST_CASE("scan to an unwritable path exits 3") {
    const auto r = run_cli("scan --to 130 --out /nonexistent_dir_gclass/x.csv");
    CHECK(r.exit_code == 3);
}

TEST_CASE("verify passes the desk-scale claims") {
    const auto r = run_cli("verify --claims L3,L5,T1,T2 --to 2000");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("T2") != std::string::npos);
}

TEST_CASE("verify runs every claim by default and honors json") {
    const auto r = run_cli("verify --to 500 --format json --seed 1");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    const auto& reports = doc.at("payload").at("reports");
    CHECK(reports.size() == 7);
    for (const auto& rep : reports)
        CHECK(rep.at("passed") == true);
}

TEST_CASE("verify rejects unknown claims") {
    CHECK(run_cli("verify --claims BOGUS --to 100").exit_code == 1);
}

TEST_CASE("density prints three decimals") {
    CHECK(run_cli("density --to 3").out == "1.000\n");
    CHECK(run_cli("density --to 130").out == "0.867\n");
}

TEST_CASE("table limit env var caps the sieve") {
    // popen goes through sh, so an env prefix works directly.
    FILE* pipe = popen(("GCLASS_TABLE_LIMIT=10 " + g_bin + " check 66 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t k = 0;
    while ((k = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, k);
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 1);
    CHECK(out.find("cap") != std::string::npos);
}

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--" && i + 1 < argc)
            g_bin = argv[i + 1];
    if (g_bin.empty()) {
        std::fprintf(stderr, "usage: test_cli [doctest args] -- <gclass binary>\n");
        return 2;
    }
    doctest::Context ctx(argc, argv);
    return ctx.run();
}
