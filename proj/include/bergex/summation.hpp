#pragma once

#include <cstddef>
#include <span>

namespace bergex {

/// Pairwise (cascade) summation with a fixed split order, so the result depends
/// only on the input sequence and never on scheduling.
template <class T>
T pairwise_sum(std::span<const T> values)
{
    constexpr std::size_t leaf = 8;
    if (values.size() <= leaf) {
        T acc{};
        for (const T& v : values) acc += v;
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

} // namespace bergex
