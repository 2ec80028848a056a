#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace freiman {

// Rank over Q of an integer matrix, by fraction-free (Bareiss) elimination.
// Every stored entry is an exact minor of the input, so the arithmetic stays
// integral. Entries are capped at 2^62 so the cross products below cannot
// overflow __int128; for this library's matrices (monomial exponents, row
// sums equal to the degree) the minors stay far below the cap.
inline int exact_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("exact_rank: ragged matrix");

  constexpr __int128 kEntryCap = static_cast<__int128>(1) << 62;
  std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

  __int128 prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        __int128 num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        if (prev != 1 && num % prev != 0)
          throw std::logic_error("exact_rank: inexact division");
        num /= prev;
        if (num > kEntryCap || num < -kEntryCap)
          throw std::overflow_error("exact_rank: minor too large");
        a[i][j] = num;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace freiman
