#pragma once

#include <cstdint>
#include <vector>

#include "hexdrop/geometry.hpp"
#include "hexdrop/random_stream.hpp"

namespace hexdrop {

/// One cell of a network: where it sits, how big it is, how it is sectored
/// and how many nodes each sector receives.
struct CellSpec {
    LatticeIndex idx;
    double side = 1.0;
    int sectors = 1;  // 1, 3 or 6
    std::vector<std::uint64_t> nodes_per_sector{0};

    std::uint64_t total_nodes() const noexcept;

    friend bool operator==(const CellSpec&, const CellSpec&) = default;
};

/// A whole network. Lattice pitch comes from L0; each cell may be smaller.
struct NetworkConfig {
    double L0 = 1.0;
    std::vector<CellSpec> cells;

    std::uint64_t total_nodes() const noexcept;

    friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

/// A generated node in absolute coordinates, tagged with its cell and sector.
struct LabeledPoint {
    int m = 0;
    int n = 0;
    int sector_id = 1;
    Point p;

    friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

/// Base shape sampled for a sectoring: 1 -> hexagon, 3 -> rhombus, 6 -> triangle.
/// Throws ConfigError for any other count.
ShapeKind sector_shape(int sectors);

/// Counterclockwise rotation (radians) taking the base shape onto sector
/// `sector_id`: (sector_id - 1) * 2pi / sectors. Sector 1 is unrotated.
double sector_angle(int sectors, int sector_id);

/// Throws ParityError / ConfigError / DomainError if the cell is not valid
/// inside a network with reference size L0.
void validate_cell(const CellSpec& spec, double L0);

/// Throws on any invalid cell or on duplicate lattice indices.
void validate_network(const NetworkConfig& cfg);

/// Sample every sector of one cell from `stream`, sector 1 first, rotating
/// each point into its sector and translating it to the cell center.
std::vector<LabeledPoint> generate_cell(const CellSpec& spec, double L0, RandomStream& stream);

/// Seed of the stream used for cell idx under master_seed.
std::uint64_t cell_seed(std::uint64_t master_seed, LatticeIndex idx) noexcept;

/// Generate all cells in config order. Each cell draws from its own stream
/// seeded by cell_seed, so the result depends only on (cfg, master_seed),
/// never on `threads`. threads == 0 uses the hardware concurrency.
std::vector<LabeledPoint> generate_network(const NetworkConfig& cfg, std::uint64_t master_seed,
                                           unsigned threads = 1);

}  // namespace hexdrop
