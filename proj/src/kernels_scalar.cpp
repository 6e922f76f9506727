#include <cstdlib>

#include "esa/kernels.hpp"

namespace esa::kernels::detail {

std::int64_t diff_l1_scalar(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::abs(int{a[i]} - int{b[i]});
  return total;
}

std::int64_t diff_summing_scalar(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  std::int64_t prefix = 0, hi = 0, lo = 0;
  for (std::size_t i = 0; i < n; ++i) {
    prefix += int{a[i]} - int{b[i]};
    if (prefix > hi) hi = prefix;
    if (prefix < lo) lo = prefix;
  }
  return hi > -lo ? hi : -lo;
}

}  // namespace esa::kernels::detail
