#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace zlq {

/// Just the bit operations the branch-and-bound needs. Indices start at 0.
class Bitset
{
public:
    static constexpr int npos = -1;

    Bitset() = default;
    explicit Bitset(int size) :
        size_(size),
        words_(static_cast<std::size_t>((size + 63) / 64), 0)
    {
    }

    auto size() const -> int { return size_; }

    auto set(int a) -> void { words_[a >> 6] |= word_bit(a); }
    auto reset(int a) -> void { words_[a >> 6] &= ~word_bit(a); }
    auto test(int a) const -> bool { return (words_[a >> 6] & word_bit(a)) != 0; }

    auto set_all() -> void
    {
        for (auto & w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    auto count() const -> int
    {
        int n = 0;
        for (auto w : words_)
            n += std::popcount(w);
        return n;
    }

    auto any() const -> bool
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    auto none() const -> bool { return ! any(); }

    auto first() const -> int
    {
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            if (words_[i])
                return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return npos;
    }

    auto operator&=(const Bitset & other) -> Bitset &
    {
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    auto operator|=(const Bitset & other) -> Bitset &
    {
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    /// this &= ~other
    auto subtract(const Bitset & other) -> Bitset &
    {
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    auto flip() -> void
    {
        for (auto & w : words_)
            w = ~w;
        trim();
    }

    template <typename F_>
    auto for_each(F_ && f) const -> void
    {
        for (std::size_t i = 0 ; i < words_.size() ; ++i)
            for (auto w = words_[i] ; w ; w &= w - 1)
                f(static_cast<int>(i * 64) + std::countr_zero(w));
    }

    auto operator==(const Bitset &) const -> bool = default;

private:
    static auto word_bit(int a) -> std::uint64_t { return std::uint64_t{1} << (a & 63); }

    auto trim() -> void
    {
        if (size_ % 64 && ! words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace zlq
