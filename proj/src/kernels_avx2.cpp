// AVX2 kernel variants. This translation unit is compiled with -mavx2;
// callers must go through the dispatcher, which checks CPU support.
#include "growthnet/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cstring>

namespace growthnet::kernels::detail {

double masked_inv_sum_avx2(const std::int32_t* dist,
                           const std::uint8_t* mask, std::size_t n) {
    const __m256d ones = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i di = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dist + i));
        __m256d d = _mm256_cvtepi32_pd(di);

        std::uint32_t m4;
        std::memcpy(&m4, mask + i, 4);
        __m256i mwide = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(static_cast<int>(m4)));
        __m256d mask_on = _mm256_castsi256_pd(
            _mm256_cmpgt_epi64(mwide, _mm256_setzero_si256()));

        __m256d pos = _mm256_cmp_pd(d, zero, _CMP_GT_OQ);
        __m256d active = _mm256_and_pd(mask_on, pos);

        // Divide by 1 in inactive lanes to keep the FP environment clean,
        // then zero them out. Per-lane division matches the scalar result
        // bit for bit; only the accumulation order differs.
        __m256d safe = _mm256_blendv_pd(ones, d, active);
        __m256d q = _mm256_and_pd(_mm256_div_pd(ones, safe), active);
        acc = _mm256_add_pd(acc, q);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = ((lanes[0] + lanes[1]) + (lanes[2] + lanes[3]));
    for (; i < n; ++i)
        if (mask[i] && dist[i] > 0)
            sum += 1.0 / static_cast<double>(dist[i]);
    return sum;
}

void count_states_avx2(const std::uint8_t* states, std::size_t n,
                       std::size_t out[4]) {
    std::size_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    const __m256i v0 = _mm256_setzero_si256();
    const __m256i v1 = _mm256_set1_epi8(1);
    const __m256i v2 = _mm256_set1_epi8(2);
    const __m256i v3 = _mm256_set1_epi8(3);
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(states + i));
        c0 += std::popcount(static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(s, v0))));
        c1 += std::popcount(static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(s, v1))));
        c2 += std::popcount(static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(s, v2))));
        c3 += std::popcount(static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(s, v3))));
    }
    for (; i < n; ++i) {
        switch (states[i]) {
            case 0: ++c0; break;
            case 1: ++c1; break;
            case 2: ++c2; break;
            case 3: ++c3; break;
            default: break;
        }
    }
    out[0] = c0;
    out[1] = c1;
    out[2] = c2;
    out[3] = c3;
}

} // namespace growthnet::kernels::detail

#endif // x86_64
