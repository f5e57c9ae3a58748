#include "hexdrop/network.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <set>
#include <string>
#include <thread>

#include "hexdrop/errors.hpp"
#include "hexdrop/samplers.hpp"

namespace hexdrop {

std::uint64_t CellSpec::total_nodes() const noexcept {
    std::uint64_t total = 0;
    for (auto n : nodes_per_sector) total += n;
    return total;
}

std::uint64_t NetworkConfig::total_nodes() const noexcept {
    std::uint64_t total = 0;
    for (const auto& c : cells) total += c.total_nodes();
    return total;
}

ShapeKind sector_shape(int sectors) {
    switch (sectors) {
        case 1: return ShapeKind::Hexagon;
        case 3: return ShapeKind::Rhombus;
        case 6: return ShapeKind::Triangle;
        default: throw ConfigError("sector count must be 1, 3 or 6, got " + std::to_string(sectors));
    }
}

double sector_angle(int sectors, int sector_id) {
    sector_shape(sectors);
    if (sector_id < 1 || sector_id > sectors) {
        throw ConfigError("sector id " + std::to_string(sector_id) + " out of range 1.." + std::to_string(sectors));
    }
    return (sector_id - 1) * (2.0 * std::numbers::pi / sectors);
}

void validate_cell(const CellSpec& spec, double L0) {
    const std::string where = "cell (m=" + std::to_string(spec.idx.m) + ", n=" + std::to_string(spec.idx.n) + ")";
    if (!on_lattice(spec.idx)) {
        throw ParityError(where + " is off the hex lattice: m and n must have equal parity");
    }
    sector_shape(spec.sectors);
    if (!(spec.side > 0.0) || !std::isfinite(spec.side)) {
        throw ConfigError(where + ": side length must be positive");
    }
    if (spec.side > L0) {
        throw ConfigError(where + ": side length " + std::to_string(spec.side) + " exceeds lattice size L0 = " +
                          std::to_string(L0));
    }
    if (spec.nodes_per_sector.size() != static_cast<std::size_t>(spec.sectors)) {
        throw ConfigError(where + ": " + std::to_string(spec.nodes_per_sector.size()) + " node counts given for " +
                          std::to_string(spec.sectors) + " sectors");
    }
}

void validate_network(const NetworkConfig& cfg) {
    if (!(cfg.L0 > 0.0) || !std::isfinite(cfg.L0)) {
        throw ConfigError("lattice size L0 must be positive");
    }
    std::set<LatticeIndex> seen;
    for (const auto& cell : cfg.cells) {
        validate_cell(cell, cfg.L0);
        if (!seen.insert(cell.idx).second) {
            throw ConfigError("duplicate cell (m=" + std::to_string(cell.idx.m) + ", n=" +
                              std::to_string(cell.idx.n) + ")");
        }
    }
}

std::vector<LabeledPoint> generate_cell(const CellSpec& spec, double L0, RandomStream& stream) {
    validate_cell(spec, L0);
    const Point center = cell_center(spec.idx, L0);
    const CellShape shape(sector_shape(spec.sectors), spec.side);

    std::vector<LabeledPoint> out;
    out.reserve(spec.total_nodes());
    for (int s = 1; s <= spec.sectors; ++s) {
        const double phi = sector_angle(spec.sectors, s);
        const auto count = spec.nodes_per_sector[static_cast<std::size_t>(s - 1)];
        for (std::uint64_t k = 0; k < count; ++k) {
            const Point local = rotate(sample_point(shape, stream), phi);
            out.push_back({spec.idx.m, spec.idx.n, s, local + center});
        }
    }
    return out;
}

std::uint64_t cell_seed(std::uint64_t master_seed, LatticeIndex idx) noexcept {
    return RandomStream::derive_seed(master_seed, idx.m, idx.n);
}

std::vector<LabeledPoint> generate_network(const NetworkConfig& cfg, std::uint64_t master_seed, unsigned threads) {
    validate_network(cfg);
    const std::size_t ncells = cfg.cells.size();
    std::vector<std::vector<LabeledPoint>> per_cell(ncells);

    const auto run_cell = [&](std::size_t i) {
        const auto& spec = cfg.cells[i];
        RandomStream stream(cell_seed(master_seed, spec.idx));
        per_cell[i] = generate_cell(spec, cfg.L0, stream);
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const auto workers = static_cast<unsigned>(std::min<std::size_t>(threads, ncells));
    if (workers <= 1) {
        for (std::size_t i = 0; i < ncells; ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < ncells; i = next++) {
                    try {
                        run_cell(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        pool.clear();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<LabeledPoint> out;
    out.reserve(cfg.total_nodes());
    for (auto& cell : per_cell) out.insert(out.end(), cell.begin(), cell.end());
    return out;
}

}  // namespace hexdrop
