#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hamdiff {

/// Dynamically sized bitset with word-level set operations, used for
/// adjacency rows and candidate sets in the clique search.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    void set_all()
    {
        for (auto& w : words_)
            w = ~std::uint64_t{0};
        if (size_ % 64)
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    Bitset& operator&=(const Bitset& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    /// this &= ~other
    Bitset& and_not(const Bitset& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    /// Index of the lowest set bit, or size() when empty.
    std::size_t first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return size_;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (std::uint64_t w = words_[i]; w; w &= w - 1)
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }

    bool operator==(const Bitset&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hamdiff
