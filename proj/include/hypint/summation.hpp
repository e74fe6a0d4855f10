#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace hypint {

/// Pairwise summation with a fixed split order, so the result depends only on
/// the input sequence and never on how it was produced.
template <class T>
T pairwise_sum(std::span<const T> xs) {
  constexpr std::size_t kLeaf = 16;
  if (xs.size() <= kLeaf) {
    T acc{};
    for (const T& x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace hypint
