#include <zlq/rng.hpp>

#include <limits>
#include <stdexcept>

namespace zlq {

auto derive_stream(std::uint64_t master_seed, std::uint64_t index) -> Stream
{
    std::seed_seq seq{
        static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Stream{seq};
}

auto uniform_below(Stream & stream, std::uint64_t bound) -> std::uint64_t
{
    if (bound == 0)
        throw std::invalid_argument("uniform_below needs a positive bound");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t x = stream();
        if (x < limit)
            return x % bound;
    }
}

} // namespace zlq
