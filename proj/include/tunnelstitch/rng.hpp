#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "tunnelstitch/math3.hpp"

namespace tunnelstitch {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Stateless:
/// each (key, counter) block is an independent pure function, so draws keyed
/// by (seed, frame, channel) are reproducible under any evaluation order.
struct Philox4x32 {
    static constexpr std::uint32_t kM0 = 0xD2511F53u;
    static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kW0 = 0x9E3779B9u;
    static constexpr std::uint32_t kW1 = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
            const std::array<std::uint32_t, 4> next{
                static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                static_cast<std::uint32_t>(p1),
                static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                static_cast<std::uint32_t>(p0)};
            ctr = next;
            key[0] += kW0;
            key[1] += kW1;
        }
        return ctr;
    }
};

/// Two uniform doubles in [0,1) from one Philox block keyed by
/// (seed, stream, index). 53-bit mantissas from word pairs.
inline std::array<double, 2> uniform_pair(std::uint64_t seed, std::uint32_t stream,
                                          std::uint32_t index) {
    const auto w = Philox4x32::block(
        {stream, index, 0x74756e6eu, 0x736c7463u},
        {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
    const auto to_unit = [](std::uint32_t hi, std::uint32_t lo) {
        const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
        return static_cast<double>(bits) * 0x1.0p-53;
    };
    return {to_unit(w[0], w[1]), to_unit(w[2], w[3])};
}

/// Standard normal draw for (seed, stream, index) via Box-Muller.
inline double gaussian(std::uint64_t seed, std::uint32_t stream, std::uint32_t index) {
    const auto u = uniform_pair(seed, stream, index);
    // 1 - u[0] lies in (0, 1], keeping the log finite.
    return std::sqrt(-2.0 * std::log(1.0 - u[0])) * std::cos(kTwoPi * u[1]);
}

}  // namespace tunnelstitch
