// Dispatch only; no intrinsics in this translation unit.
#include "growthnet/kernels.hpp"

namespace growthnet::kernels {

namespace {

Backend g_requested = Backend::Auto;

Backend resolve(Backend b) {
    if (b == Backend::Avx2 && !avx2_supported()) return Backend::Scalar;
    if (b == Backend::Auto)
        return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
    return b;
}

} // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

void set_backend(Backend b) { g_requested = b; }

Backend active_backend() { return resolve(g_requested); }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Auto: return "auto";
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "?";
}

double masked_inv_sum(const std::int32_t* dist, const std::uint8_t* mask,
                      std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::Avx2)
        return detail::masked_inv_sum_avx2(dist, mask, n);
#endif
    return detail::masked_inv_sum_scalar(dist, mask, n);
}

void count_states(const std::uint8_t* states, std::size_t n,
                  std::size_t out[4]) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::Avx2)
        return detail::count_states_avx2(states, n, out);
#endif
    detail::count_states_scalar(states, n, out);
}

} // namespace growthnet::kernels
