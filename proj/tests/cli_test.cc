#include "anyon/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

using namespace anyon;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_file(const std::string &name) {
    return std::string(ANYON_TEST_DATA_DIR) + "/" + name;
}

bool contains(const std::string &text, const std::string &needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"bogus"}).code, kExitUsage);
    EXPECT_EQ(run({"model", "smatrix", "--builtin", "toric", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(run({"model", "smatrix"}).code, kExitUsage);
    EXPECT_EQ(run({"model", "smatrix", "--builtin", "toric", "--file", data_file("toric.json")}).code, kExitUsage);
}

TEST(cli, model_smatrix_csv) {
    Result r = run({"model", "smatrix", "--builtin", "toric", "--format", "csv"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "label,1,e,m,eps");
    int rows = 0;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string cell;
        std::getline(cells, cell, ',');
        int entries = 0;
        while (std::getline(cells, cell, ',')) {
            EXPECT_TRUE(cell.rfind("0.5", 0) == 0 || cell.rfind("-0.5", 0) == 0) << cell;
            entries++;
        }
        EXPECT_EQ(entries, 4);
        rows++;
    }
    EXPECT_EQ(rows, 4);
}

TEST(cli, model_commands) {
    Result v = run({"model", "verlinde", "--builtin", "toric"});
    EXPECT_EQ(v.code, kExitOk);
    EXPECT_TRUE(contains(v.out, "PASS, max deviation < 1e-12"));
    EXPECT_EQ(run({"model", "validate", "--builtin", "dz3"}).code, kExitOk);
    EXPECT_EQ(run({"model", "show", "--builtin", "center:z4"}).code, kExitOk);
    EXPECT_EQ(run({"model", "tmatrix", "--builtin", "toric", "--format", "json"}).code, kExitOk);
    EXPECT_EQ(run({"model", "show", "--file", data_file("toric.json")}).code, kExitOk);
}

TEST(cli, model_validation_failure) {
    Result r = run({"model", "validate", "--file", data_file("broken_dual.json")});
    EXPECT_EQ(r.code, kExitCheckFailed);
    EXPECT_TRUE(contains(r.out, "dual_pairing"));
    EXPECT_TRUE(contains(r.out, "'e'"));
}

TEST(cli, model_parse_failures) {
    Result r = run({"model", "validate", "--file", data_file("unknown_field.json")});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_TRUE(contains(r.err, "braid"));
    EXPECT_EQ(run({"model", "show", "--file", data_file("missing.json")}).code, kExitUsage);
    Result b = run({"model", "show", "--builtin", "nope"});
    EXPECT_EQ(b.code, kExitUsage);
    for (const char *name : {"toric", "dz3", "center:zN"}) {
        EXPECT_TRUE(contains(b.err, name)) << name;
    }
}

TEST(cli, center) {
    Result check = run({"center", "--n", "2", "--boundary", "smooth", "--check"});
    EXPECT_EQ(check.code, kExitOk);
    EXPECT_TRUE(contains(check.out, "PASS"));
    EXPECT_TRUE(contains(check.out, "R[m,e] = -1"));
    EXPECT_TRUE(contains(check.out, "R[e,m] = 1"));
    EXPECT_TRUE(contains(check.out, "R[eps,eps] = -1"));

    Result z3 = run({"center", "--n", "3", "--boundary", "smooth"});
    EXPECT_EQ(z3.code, kExitOk);
    EXPECT_TRUE(contains(z3.out, "R[m1,e1] = exp(2pi i 1/3)"));
    EXPECT_TRUE(contains(z3.out, "R[m2,e2] = exp(2pi i 1/3)"));
    EXPECT_TRUE(contains(z3.out, "R[m1,e2] = exp(2pi i 2/3)"));
    EXPECT_TRUE(contains(z3.out, "R[m2,e1] = exp(2pi i 2/3)"));

    EXPECT_EQ(run({"center", "--n", "3", "--boundary", "rough", "--check"}).code, kExitOk);
    Result one = run({"center", "--n", "1"});
    EXPECT_EQ(one.code, kExitOk);
    EXPECT_TRUE(contains(one.out, "R[1,1] = 1"));
    EXPECT_EQ(run({"center", "--n", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"center", "--n", "13"}).code, kExitUsage);
    EXPECT_EQ(run({"center", "--n", "2", "--boundary", "diagonal"}).code, kExitUsage);
}

TEST(cli, simulate) {
    Result r = run({"simulate", "r-phase", "--cell", "3", "--path", "1"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "phase/pi: 1.000000000000"));
    Result f = run({"simulate", "f-phase", "--cell", "3"});
    EXPECT_EQ(f.code, kExitOk);
    EXPECT_TRUE(contains(f.out, "phase/pi: 0.000000000000"));
    EXPECT_TRUE(contains(f.out, "F: 1.000000000000+0.000000000000i"));
    Result h = run({"simulate", "half-braid", "--cell", "4", "--path", "2"});
    EXPECT_EQ(h.code, kExitOk);
    EXPECT_TRUE(contains(h.out, "fidelity[g+e] (initial): 1.000000000000"));
}

TEST(cli, simulate_rejects_unknown_selectors) {
    Result c = run({"simulate", "r-phase", "--cell", "5", "--path", "1"});
    EXPECT_EQ(c.code, kExitUsage);
    EXPECT_TRUE(contains(c.err, "3, 4"));
    Result p = run({"simulate", "r-phase", "--cell", "3", "--path", "7"});
    EXPECT_EQ(p.code, kExitUsage);
    EXPECT_TRUE(contains(p.err, "valid paths: 1, 2"));
    EXPECT_EQ(run({"simulate", "teleport", "--cell", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"simulate", "f-phase", "--cell", "4"}).code, kExitUsage);
}

TEST(cli, measure_r) {
    Result r = run({"measure-r", "--model", "toric"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    for (const char *key : {"measured_r", "assembled_r", "s", "t", "reference", "verdict", "max_deviation"}) {
        EXPECT_TRUE(doc.contains(key)) << key;
    }
    EXPECT_EQ(doc["verdict"], "PASS");
    EXPECT_LT(doc["max_deviation"].get<double>(), 1e-10);
    EXPECT_EQ(doc.dump(2) + "\n", r.out);
    EXPECT_EQ(run({"measure-r", "--model", "dz3"}).code, kExitUsage);
}

TEST(cli, measure_r_corrupted_cell) {
    Result r = run({"measure-r", "--model", "toric", "--corrupt-cell"});
    EXPECT_EQ(r.code, kExitCheckFailed);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["verdict"], "FAIL");
    EXPECT_EQ(doc["worst_pair"], nlohmann::json::array({"m", "e"}));
}

TEST(cli, json_output_is_byte_identical) {
    for (auto args : std::vector<std::vector<std::string>>{
             {"measure-r", "--model", "toric"},
             {"simulate", "half-braid", "--cell", "3", "--path", "1", "--format", "json"},
             {"model", "show", "--builtin", "dz3", "--format", "json"},
             {"lattice", "--rows", "3", "--cols", "3"},
         }) {
        Result a = run(args);
        Result b = run(args);
        EXPECT_EQ(a.code, kExitOk) << args[0];
        EXPECT_EQ(a.out, b.out) << args[0];
    }
}

TEST(cli, lattice) {
    Result r = run({"lattice", "--rows", "2", "--cols", "3", "--left", "rough", "--right", "rough"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["n"], 6);
    EXPECT_EQ(doc["boundaries"]["left"], "rough");
    EXPECT_EQ(run({"lattice", "--rows", "5", "--cols", "5"}).code, kExitUsage);
}

TEST(cli, output_dir_override) {
    auto dir = std::filesystem::temp_directory_path() / "anyon_cli_test_out";
    std::filesystem::remove_all(dir);
    ::setenv("ANYON_OUTPUT_DIR", dir.c_str(), 1);
    Result r = run({"simulate", "r-phase", "--cell", "3", "--path", "1", "--format", "json", "--output",
                    "ignored/record.json"});
    ::unsetenv("ANYON_OUTPUT_DIR");
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::ifstream file(dir / "record.json");
    ASSERT_TRUE(file.good());
    std::stringstream written;
    written << file.rdbuf();
    EXPECT_EQ(nlohmann::json::parse(written.str()), nlohmann::json::parse(r.out));
    std::filesystem::remove_all(dir);
}
