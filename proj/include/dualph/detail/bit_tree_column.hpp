#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace dualph::detail {

/// Dense Z2 column over [0, n) packed into 64-bit words, with a summary
/// hierarchy so the largest set index is found in O(log64 n).
class BitTreeColumn
{
public:
    explicit BitTreeColumn(std::size_t n)
    {
        std::size_t words = (n + 63) / 64;
        do {
            words = words == 0 ? 1 : words;
            levels_.emplace_back(words, 0);
            words = (words + 63) / 64;
        } while (levels_.back().size() > 1);
    }

    bool empty() const { return levels_.back()[0] == 0; }

    void toggle(std::size_t index)
    {
        std::size_t pos = index;
        auto& base = levels_[0][pos >> 6];
        bool const was_zero = base == 0;
        base ^= std::uint64_t{1} << (pos & 63);
        bool changed = was_zero != (base == 0);
        bool nonzero = base != 0;
        for (std::size_t level = 1; changed && level < levels_.size(); ++level) {
            pos >>= 6;
            auto& word = levels_[level][pos >> 6];
            bool const before = word == 0;
            auto const bit = std::uint64_t{1} << (pos & 63);
            word = nonzero ? (word | bit) : (word & ~bit);
            changed = before != (word == 0);
            nonzero = word != 0;
        }
    }

    void add(std::span<std::uint32_t const> entries)
    {
        for (auto entry : entries)
            toggle(entry);
    }

    /// Largest set index; undefined when empty().
    std::size_t max_index() const
    {
        std::size_t pos = 0;
        for (std::size_t level = levels_.size(); level-- > 0;) {
            auto const word = levels_[level][pos];
            pos = pos * 64 + static_cast<std::size_t>(63 - std::countl_zero(word));
        }
        return pos;
    }

    /// Moves the contents out in ascending order, leaving the column empty.
    void drain(std::vector<std::uint32_t>& out)
    {
        out.clear();
        while (!empty()) {
            auto const top = max_index();
            out.push_back(static_cast<std::uint32_t>(top));
            toggle(top);
        }
        std::reverse(out.begin(), out.end());
    }

private:
    std::vector<std::vector<std::uint64_t>> levels_;
};

} // namespace dualph::detail
