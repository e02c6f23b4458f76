#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "motivic/error.hpp"
#include "motivic/product.hpp"
#include "motivic/table.hpp"

using namespace motivic;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("motivic-table-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const char* name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const std::string& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << content;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("table construction covers all basis pairs up to the degree bound") {
    ConstantsTable t = constants_table(1);
    CHECK(t.max_p == 1);
    CHECK(t.entries.size() == 4);
    OpBasis unit_b;
    OpBasis q0(SeqE{1}, Seq{});
    CHECK(t.entries.at({q0, q0}).is_zero());
    CHECK(t.entries.at({unit_b, q0}) == q_i(0));
    CHECK(t.entries.at({q0, unit_b}) == q_i(0));
    CHECK(t.entries.at({unit_b, unit_b}) == op_unit());

    ConstantsTable t4 = constants_table(4);
    CHECK(t4.entries.size() == 49);
    for (const auto& [key, value] : t4.entries)
        CHECK(value == qp_mul_basis(key.first.e(), key.first.r(), key.second.e(), key.second.r()));
}

TEST_CASE("save and load round-trip") {
    TempDir dir;
    ConstantsTable t = constants_table(4);
    std::string path = dir.file("t4.txt");
    save_table(t, path);
    ConstantsTable back = load_table(path);
    CHECK(back == t);

    std::string again = dir.file("t4-again.txt");
    save_table(t, again);
    CHECK(slurp(path) == slurp(again));
}

TEST_CASE("file format") {
    TempDir dir;
    std::string path = dir.file("t3.txt");
    save_table(constants_table(3), path);
    auto lines = lines_of(slurp(path));
    REQUIRE(!lines.empty());
    CHECK(lines[0] == "motivic-milnor-constants v1 maxp=3");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CAPTURE(lines[i]);
        CHECK(lines[i].find(" := ") != std::string::npos);
        CHECK(lines[i].find('*') != std::string::npos);
        CHECK(lines[i].find('|') != std::string::npos);
    }
    CHECK(slurp(path).find("\r") == std::string::npos);
}

TEST_CASE("version and header validation") {
    TempDir dir;
    std::string path = dir.file("bad.txt");
    spit(path, "motivic-milnor-constants v2 maxp=1\n");
    CHECK_THROWS_AS(load_table(path), VersionMismatch);
    spit(path, "something else entirely\n");
    CHECK_THROWS_AS(load_table(path), VersionMismatch);
    spit(path, "");
    CHECK_THROWS_AS(load_table(path), VersionMismatch);
    spit(path, "motivic-milnor-constants v1 maxp=banana\n");
    CHECK_THROWS_AS(load_table(path), VersionMismatch);
}

TEST_CASE("spot check catches a tampered stored product") {
    TempDir dir;
    std::string path = dir.file("t4.txt");
    save_table(constants_table(4), path);
    auto lines = lines_of(slurp(path));
    REQUIRE(lines.size() == 50);

    auto rejoin = [](const std::vector<std::string>& ls) {
        std::string out;
        for (const auto& l : ls) out += l + "\n";
        return out;
    };

    /* entry index 0 (line 1) is always recomputed */
    auto tampered = lines;
    std::size_t sep = tampered[1].find(" := ");
    REQUIRE(sep != std::string::npos);
    std::string value = tampered[1].substr(sep + 4);
    tampered[1] = tampered[1].substr(0, sep + 4) + (value == "0" ? "1" : "0");
    std::string bad = dir.file("tampered.txt");
    spit(bad, rejoin(tampered));
    CHECK_THROWS_AS(load_table(bad), CorruptTable);

    /* an entry off the 1% sample loads without recomputation; the table
       differs, which is the documented trade-off of spot checking */
    auto sneaky = lines;
    sep = sneaky[30].find(" := ");
    REQUIRE(sep != std::string::npos);
    sneaky[30] = sneaky[30].substr(0, sep + 4) + "tau^9 Q(1)";
    std::string off_sample = dir.file("off-sample.txt");
    spit(off_sample, rejoin(sneaky));
    ConstantsTable loaded = load_table(off_sample);
    CHECK(loaded != constants_table(4));
}

TEST_CASE("malformed entries are corrupt, missing files are io failures") {
    TempDir dir;
    std::string path = dir.file("t1.txt");
    save_table(constants_table(1), path);
    std::string content = slurp(path);

    spit(path, content + "()|()*()|() := 1\n");
    CHECK_THROWS_AS(load_table(path), CorruptTable);

    spit(path, content + "garbage line\n");
    CHECK_THROWS_AS(load_table(path), CorruptTable);

    CHECK_THROWS_AS(load_table(dir.file("does-not-exist.txt")), IOFailure);
    CHECK_THROWS_AS(save_table(constants_table(1), "/nonexistent-dir/t.txt"), IOFailure);
}
