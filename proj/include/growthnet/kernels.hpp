// Hot inner-loop kernels with a scalar reference implementation and an
// AVX2 variant selected at runtime. Both kernels are exercised every
// simulation period: masked_inv_sum accumulates the team-density
// reciprocal distances, count_states tallies the four agent states.
//
// The AVX2 paths compute per-element results in double precision exactly
// like the scalar reference; only the accumulation order differs, so the
// variants agree to a few ulp (asserted by the equivalence tests).
#pragma once

#include <cstddef>
#include <cstdint>

namespace growthnet::kernels {

enum class Backend { Auto, Scalar, Avx2 };

// Force a backend (Auto = best the CPU supports). Not thread-safe with
// respect to concurrent kernel calls; set it once at startup or in tests.
void set_backend(Backend b);
Backend active_backend();
const char* backend_name(Backend b);
bool avx2_supported();

// Sum of 1/dist[i] over i where mask[i] != 0 and dist[i] > 0.
// Entries <= 0 encode self (0) and unreachable (-1) and contribute 0.
double masked_inv_sum(const std::int32_t* dist, const std::uint8_t* mask,
                      std::size_t n);

// Tallies of states[i] in {0,1,2,3} into out[4]. Values >= 4 are ignored.
void count_states(const std::uint8_t* states, std::size_t n,
                  std::size_t out[4]);

namespace detail {
double masked_inv_sum_scalar(const std::int32_t*, const std::uint8_t*, std::size_t);
void count_states_scalar(const std::uint8_t*, std::size_t, std::size_t[4]);
#if defined(__x86_64__) || defined(_M_X64)
double masked_inv_sum_avx2(const std::int32_t*, const std::uint8_t*, std::size_t);
void count_states_avx2(const std::uint8_t*, std::size_t, std::size_t[4]);
#endif
} // namespace detail

} // namespace growthnet::kernels
