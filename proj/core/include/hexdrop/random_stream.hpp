#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace hexdrop {

/// SplitMix64 finalizer: a bijective 64-bit mix with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Anything that hands out standard-uniform variates through next_unit().
template <typename S>
concept UnitSource = requires(S& s) {
    { s.next_unit() } -> std::convertible_to<double>;
};

/// Deterministic source of uniform variates on the open interval (0, 1).
///
/// Backed by a 64-bit Mersenne Twister whose state is expanded from the seed
/// through mix64, so nearby seeds give unrelated sequences. Each variate uses
/// the top 53 bits of one engine output, offset by half an ulp, so 0 and 1 are
/// never produced. Single owner; not for concurrent use.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    double next_unit();

    /// Number of variates drawn so far.
    std::uint64_t position() const noexcept { return position_; }

    std::uint64_t seed() const noexcept { return seed_; }

    /// Seed of an independent child stream identified by (a, b).
    static std::uint64_t derive_seed(std::uint64_t parent, std::int64_t a, std::int64_t b) noexcept;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::uint64_t position_ = 0;
};

}  // namespace hexdrop
