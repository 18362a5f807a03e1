#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace zlq {

/**
 * Reproducible random streams.
 *
 * A stream is std::mt19937_64 seeded through std::seed_seq with the four
 * 32-bit halves of (master seed, stream index), low word first. Both the
 * engine and seed_seq are fully specified by the C++ standard, so a stream
 * produces the same numbers on every conforming platform. Bounded draws
 * and shuffles are done here rather than with the standard distributions,
 * whose algorithms are implementation-defined.
 */
using Stream = std::mt19937_64;

auto derive_stream(std::uint64_t master_seed, std::uint64_t index) -> Stream;

/// Uniform integer in [0, bound) by rejection; bound must be positive.
auto uniform_below(Stream & stream, std::uint64_t bound) -> std::uint64_t;

/// Fisher-Yates, drawing j uniformly from [0, i] for i = n-1 down to 1.
template <typename T_>
auto shuffle(std::span<T_> items, Stream & stream) -> void
{
    for (std::size_t i = items.size() ; i > 1 ; --i) {
        auto j = static_cast<std::size_t>(uniform_below(stream, i));
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

} // namespace zlq
