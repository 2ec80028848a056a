#pragma once

#include <limits>
#include <stdexcept>

namespace freiman {

// exact C(n, k); throws std::overflow_error if the value exceeds int64
inline long long binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // divides exactly: r is C(n-k+i, i) after this step
    if (r > std::numeric_limits<long long>::max())
      throw std::overflow_error("binomial: value exceeds int64");
  }
  return static_cast<long long>(r);
}

}  // namespace freiman
