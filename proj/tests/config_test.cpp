#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hexdrop/config.hpp"
#include "hexdrop/errors.hpp"

namespace hexdrop {
namespace {

TEST(ParseConfig, MinimalConfig) {
    const auto cfg = parse_config("lattice L0=1.0\ncell m=0 n=0 sectors=1 nodes=100");
    EXPECT_EQ(cfg.L0, 1.0);
    ASSERT_EQ(cfg.cells.size(), 1u);
    EXPECT_EQ(cfg.cells[0].side, 1.0);  // L defaults to L0
    EXPECT_EQ(cfg.cells[0].sectors, 1);
    EXPECT_EQ(cfg.total_nodes(), 100u);
}

TEST(ParseConfig, CommentsBlankLinesAndCrlf) {
    const auto cfg = parse_config(
        "# header\r\n\r\n  lattice   L0=2.5  # pitch\r\ncell m=1 n=-1 L=1.25 sectors=3 nodes=1,2,3\r\n");
    EXPECT_EQ(cfg.L0, 2.5);
    ASSERT_EQ(cfg.cells.size(), 1u);
    EXPECT_EQ(cfg.cells[0].idx, (LatticeIndex{1, -1}));
    EXPECT_EQ(cfg.cells[0].side, 1.25);
    EXPECT_EQ(cfg.cells[0].nodes_per_sector, (std::vector<std::uint64_t>{1, 2, 3}));
}

TEST(ParseConfig, ParityViolation) {
    EXPECT_THROW(parse_config("lattice L0=1\ncell m=2 n=1 sectors=1 nodes=5"), ParityError);
}

TEST(ParseConfig, SemanticErrors) {
    EXPECT_THROW(parse_config("lattice L0=1\ncell m=0 n=0 sectors=3 nodes=10,20"), ConfigError);
    EXPECT_THROW(parse_config("lattice L0=1\ncell m=0 n=0 sectors=4 nodes=1,1,1,1"), ConfigError);
    EXPECT_THROW(parse_config("lattice L0=1\ncell m=0 n=0 L=2 sectors=1 nodes=1"), ConfigError);
    EXPECT_THROW(parse_config("lattice L0=1\ncell m=0 n=0 sectors=1 nodes=1\ncell m=0 n=0 sectors=1 nodes=2"),
                 ConfigError);
    EXPECT_THROW(parse_config("lattice L0=0"), ConfigError);
    EXPECT_THROW(parse_config("lattice L0=1\ncell m=0 n=0 L=-1 sectors=1 nodes=1"), ConfigError);
}

TEST(ParseConfig, SyntaxErrorsCarryLineNumbers) {
    const auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_config(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("lattice L0=1\n\ncell m=0 n=0 sectors=1 nodes=1 colour=red"), 3u);
    EXPECT_EQ(line_of("lattice L0=1\ncell m=0 sectors=1 nodes=1"), 2u);
    EXPECT_EQ(line_of("lattice L0=1\ncell m=0 n=0 sectors=1 nodes=1,x"), 2u);
    EXPECT_EQ(line_of("lattice L0=1\ncell m=0 n=0 n=0 sectors=1 nodes=1"), 2u);
    EXPECT_EQ(line_of("cell m=0 n=0 sectors=1 nodes=1"), 1u);
    EXPECT_EQ(line_of("lattice L0=1\nlattice L0=2"), 2u);
    EXPECT_EQ(line_of("# nothing"), 1u);
    EXPECT_EQ(line_of("lattice L0=abc"), 1u);
    EXPECT_EQ(line_of("lattice L0=1\nnode m=0"), 2u);
    EXPECT_EQ(line_of("lattice L0=1\ncell m=0 n=0 sectors=1 nodes=-3"), 2u);
    EXPECT_EQ(line_of("lattice L0=1\ncell m=0 n=0 sectors=1 nodes"), 2u);
}

TEST(ParseConfig, MissingFile) {
    EXPECT_THROW(load_config("/nonexistent/hexdrop.cfg"), IoError);
}

TEST(ParseConfig, BundledExample) {
    const auto cfg = load_config(HEXDROP_TEST_DATA_DIR "/network19.cfg");
    EXPECT_EQ(cfg.cells.size(), 19u);
    EXPECT_EQ(cfg.total_nodes(), 3920u);
}

// Property: serialize then parse is the identity on random valid configs.
TEST(SerializeConfig, RoundTripRandomConfigs) {
    std::mt19937_64 gen(4242);
    std::uniform_real_distribution<double> size(0.1, 1000.0);
    std::uniform_int_distribution<int> coord(-50, 50);
    std::uniform_int_distribution<std::uint64_t> count(0, 100000);
    const int sector_choices[] = {1, 3, 6};
    for (int trial = 0; trial < 200; ++trial) {
        NetworkConfig cfg;
        cfg.L0 = size(gen);
        std::set<LatticeIndex> used;
        const int ncells = trial % 12;
        while (static_cast<int>(cfg.cells.size()) < ncells) {
            CellSpec c;
            c.idx = {coord(gen), coord(gen)};
            if ((c.idx.m - c.idx.n) % 2 != 0) c.idx.n += 1;
            if (!used.insert(c.idx).second) continue;
            c.side = trial % 2 ? cfg.L0 : cfg.L0 * std::uniform_real_distribution<double>(0.01, 1.0)(gen);
            c.sectors = sector_choices[gen() % 3];
            c.nodes_per_sector.clear();
            for (int s = 0; s < c.sectors; ++s) c.nodes_per_sector.push_back(count(gen));
            cfg.cells.push_back(c);
        }
        const auto text = serialize_config(cfg);
        EXPECT_EQ(parse_config(text), cfg) << text;
        EXPECT_EQ(serialize_config(parse_config(text)), text);
    }
}

}  // namespace
}  // namespace hexdrop
