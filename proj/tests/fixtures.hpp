#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "hexdrop/geometry.hpp"
#include "hexdrop/random_stream.hpp"
#include "hexdrop/samplers.hpp"

namespace hexdrop::testing {

// Replays a fixed list of variates; counts what was consumed.
class ScriptedStream {
public:
    explicit ScriptedStream(std::vector<double> values) : values_(std::move(values)) {}

    double next_unit() { return values_.at(pos_++); }
    std::size_t consumed() const { return pos_; }

private:
    std::vector<double> values_;
    std::size_t pos_ = 0;
};

// Seeds committed for the statistical tests.
inline constexpr std::uint64_t kPinnedSeeds[] = {11, 23, 42, 1009, 65537};

inline std::vector<Point> draw_inverse(const CellShape& shape, std::size_t n, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<Point> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_point(shape, rng));
    return out;
}

inline std::vector<Point> draw_rejection(const CellShape& shape, std::size_t n, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<Point> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_point_rejection(shape, rng));
    return out;
}

// Negative control: a correct sampler with x folded onto |x|. The result is
// still inside a hexagon but no longer uniform over it.
inline std::vector<Point> draw_biased(const CellShape& shape, std::size_t n, std::uint64_t seed) {
    auto pts = draw_inverse(shape, n, seed);
    for (auto& p : pts) p.x = std::abs(p.x);
    return pts;
}

inline std::vector<double> xs(const std::vector<Point>& pts) {
    std::vector<double> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p.x);
    return out;
}

inline std::vector<double> ys(const std::vector<Point>& pts) {
    std::vector<double> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p.y);
    return out;
}

}  // namespace hexdrop::testing
