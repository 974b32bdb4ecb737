// Scalar reference kernels. These define the semantics the SIMD variants
// are tested against.
#include "growthnet/kernels.hpp"

namespace growthnet::kernels::detail {

double masked_inv_sum_scalar(const std::int32_t* dist,
                             const std::uint8_t* mask, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (mask[i] && dist[i] > 0)
            sum += 1.0 / static_cast<double>(dist[i]);
    return sum;
}

void count_states_scalar(const std::uint8_t* states, std::size_t n,
                         std::size_t out[4]) {
    out[0] = out[1] = out[2] = out[3] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t s = states[i];
        if (s < 4) ++out[s];
    }
}

} // namespace growthnet::kernels::detail
