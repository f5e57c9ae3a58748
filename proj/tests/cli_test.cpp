#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace hexdrop {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "hexdrop");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("hexdrop_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& text) {
        const auto p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }

    fs::path dir_;
};

TEST_F(CliTest, CentersPrintsNineteenLines) {
    const auto r = run({"centers", "--rings", "2", "--L0", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 19);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "0 0 0 0 0");
}

TEST_F(CliTest, ValidatePassesAtPinnedSeed) {
    const auto r = run({"validate", "--shape", "hexagon", "--n", "96000", "--seed", "42", "--depth", "2"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, ValidateJsonOutput) {
    const auto r = run({"validate", "--shape", "triangle", "--n", "5000", "--seed", "1", "--json"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.front(), '[');
}

TEST_F(CliTest, ValidateTooFewSamplesIsUsageError) {
    EXPECT_EQ(run({"validate", "--shape", "hexagon", "--n", "50", "--seed", "1"}).code, 2);
}

TEST_F(CliTest, GenWritesCsvAndSvg) {
    const auto cfg = write("net.cfg", "lattice L0=1\ncell m=0 n=0 sectors=3 nodes=2,2,2\ncell m=1 n=1 sectors=1 nodes=4\n");
    const auto csv = dir_ / "pts.csv";
    const auto svg = dir_ / "net.svg";
    const auto r = run({"gen", "--config", cfg.string(), "--seed", "9", "--out", csv.string(), "--svg", svg.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto text = slurp(csv);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 11);
    EXPECT_NE(slurp(svg).find("<svg"), std::string::npos);
}

TEST_F(CliTest, GenJsonToStdout) {
    const auto cfg = write("net.cfg", "lattice L0=1\ncell m=0 n=0 sectors=1 nodes=3\n");
    const auto r = run({"gen", "--config", cfg.string(), "--seed", "9", "--out", "-", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.front(), '[');
}

TEST_F(CliTest, GenIsByteIdenticalAcrossRunsAndThreads) {
    const auto csv1 = dir_ / "a.csv";
    const auto csv2 = dir_ / "b.csv";
    const std::string cfg = HEXDROP_TEST_DATA_DIR "/network19.cfg";
    ASSERT_EQ(run({"gen", "--config", cfg, "--seed", "5", "--out", csv1.string()}).code, 0);
    ASSERT_EQ(run({"gen", "--config", cfg, "--seed", "5", "--out", csv2.string(), "--threads", "8"}).code, 0);
    EXPECT_EQ(slurp(csv1), slurp(csv2));
}

TEST_F(CliTest, GenParityViolationExitsTwo) {
    const auto cfg = write("bad.cfg", "lattice L0=1\ncell m=2 n=1 sectors=1 nodes=5\n");
    const auto r = run({"gen", "--config", cfg.string(), "--seed", "1", "--out", (dir_ / "x.csv").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("ParityError"), std::string::npos) << r.err;
}

TEST_F(CliTest, GenBadSyntaxAndMissingFile) {
    const auto cfg = write("bad.cfg", "lattice L0=1\ncell m=0 n=0 sectors=1 nodes=5 bogus=1\n");
    const auto r = run({"gen", "--config", cfg.string(), "--seed", "1", "--out", (dir_ / "x.csv").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
    EXPECT_EQ(run({"gen", "--config", (dir_ / "none.cfg").string(), "--seed", "1", "--out", "-"}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"centers", "--rings", "2"}).code, 2);
    EXPECT_EQ(run({"validate", "--shape", "pentagon", "--n", "1000", "--seed", "1"}).code, 2);
    EXPECT_EQ(run({"validate", "--shape", "hexagon", "--n", "1000", "--seed", "1", "--depth", "3"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace hexdrop
