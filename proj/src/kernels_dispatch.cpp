#include <cstdlib>
#include <stdexcept>

#include "esa/errors.hpp"
#include "esa/kernels.hpp"

namespace esa::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    default: return "scalar";
  }
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(ESA_HAVE_AVX2_TU)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(ESA_HAVE_NEON_TU)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  static const Isa chosen = [] {
    if (const char* f = std::getenv("ESA_FORCE_SCALAR"); f && f[0] == '1') return Isa::scalar;
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
  }();
  return chosen;
}

namespace {

void check_inputs(std::span<const std::int8_t> a, std::span<const std::int8_t> b, Isa isa) {
  if (a.size() != b.size()) throw DomainError("kernel inputs differ in length");
  if (a.size() >= (std::size_t{1} << 24)) throw DomainError("kernel input too long");
  if (!isa_available(isa)) throw DomainError(std::string("instruction set not available: ") + std::string(isa_name(isa)));
}

}  // namespace

std::int64_t diff_l1(std::span<const std::int8_t> a, std::span<const std::int8_t> b, Isa isa) {
  check_inputs(a, b, isa);
  switch (isa) {
#if defined(ESA_HAVE_AVX2_TU)
    case Isa::avx2: return detail::diff_l1_avx2(a.data(), b.data(), a.size());
#endif
#if defined(ESA_HAVE_NEON_TU)
    case Isa::neon: return detail::diff_l1_neon(a.data(), b.data(), a.size());
#endif
    default: return detail::diff_l1_scalar(a.data(), b.data(), a.size());
  }
}

std::int64_t diff_summing(std::span<const std::int8_t> a, std::span<const std::int8_t> b, Isa isa) {
  check_inputs(a, b, isa);
  switch (isa) {
#if defined(ESA_HAVE_AVX2_TU)
    case Isa::avx2: return detail::diff_summing_avx2(a.data(), b.data(), a.size());
#endif
#if defined(ESA_HAVE_NEON_TU)
    case Isa::neon: return detail::diff_summing_neon(a.data(), b.data(), a.size());
#endif
    default: return detail::diff_summing_scalar(a.data(), b.data(), a.size());
  }
}

}  // namespace esa::kernels
