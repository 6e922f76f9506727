#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Dense norms of differences of small integer vectors. These carry the
// all-pairs distortion sweep; the run-length norms in sign_vector.hpp are
// the exact reference they are tested against.
//
// Preconditions for every variant: equal lengths, all entries in
// [-63, 63] (so differences fit in int8), length below 2^24.

namespace esa::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);
// Compiled in and supported by the running CPU.
bool isa_available(Isa isa);
// Widest available variant; ESA_FORCE_SCALAR=1 in the environment pins the
// scalar path.
Isa best_isa();

// sum_i |a_i - b_i|
std::int64_t diff_l1(std::span<const std::int8_t> a, std::span<const std::int8_t> b, Isa isa = best_isa());
// max_k |sum_{i<=k} (a_i - b_i)|
std::int64_t diff_summing(std::span<const std::int8_t> a, std::span<const std::int8_t> b, Isa isa = best_isa());

namespace detail {
std::int64_t diff_l1_scalar(const std::int8_t* a, const std::int8_t* b, std::size_t n);
std::int64_t diff_summing_scalar(const std::int8_t* a, const std::int8_t* b, std::size_t n);
std::int64_t diff_l1_avx2(const std::int8_t* a, const std::int8_t* b, std::size_t n);
std::int64_t diff_summing_avx2(const std::int8_t* a, const std::int8_t* b, std::size_t n);
std::int64_t diff_l1_neon(const std::int8_t* a, const std::int8_t* b, std::size_t n);
std::int64_t diff_summing_neon(const std::int8_t* a, const std::int8_t* b, std::size_t n);
}  // namespace detail

}  // namespace esa::kernels
