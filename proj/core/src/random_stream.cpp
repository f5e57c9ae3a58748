#include "hexdrop/random_stream.hpp"

#include <array>

namespace hexdrop {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed) {
    // Fill a seed_seq from a SplitMix64 walk so low-entropy seeds (0, 1, 2, ...)
    // still spread across the whole engine state.
    std::array<std::uint32_t, 16> words{};
    std::uint64_t z = seed;
    for (std::size_t i = 0; i < words.size(); i += 2) {
        const std::uint64_t v = mix64(z);
        z += 0x9e3779b97f4a7c15ULL;
        words[i] = static_cast<std::uint32_t>(v);
        words[i + 1] = static_cast<std::uint32_t>(v >> 32);
    }
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

std::uint64_t zigzag(std::int64_t v) noexcept {
    return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : seed_(seed), engine_(make_engine(seed)) {}

double RandomStream::next_unit() {
    ++position_;
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

std::uint64_t RandomStream::derive_seed(std::uint64_t parent, std::int64_t a, std::int64_t b) noexcept {
    std::uint64_t h = mix64(parent);
    h = mix64(h ^ zigzag(a));
    h = mix64(h ^ (zigzag(b) * 0xd6e8feb86659fd93ULL));
    return h;
}

}  // namespace hexdrop
