#include "hall/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "hall/base.hpp"

namespace hall::kern {

namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                 std::size_t n, std::uint32_t q) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % q;
}

void scale_scalar(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t q) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = (c * dst[i]) % q;
}

void matmul_scalar(std::uint32_t* C, const std::uint32_t* A, const std::uint32_t* B,
                   std::size_t m, std::size_t k, std::size_t n, std::uint32_t q) {
    // (q-1)^2 < 2^30, so up to 2 summands accumulate overflow-free; reduce in
    // chunks sized to keep the running sum below 2^31.
    const std::uint64_t per = std::uint64_t(q - 1) * (q - 1);
    const std::size_t chunk = per ? static_cast<std::size_t>((0x7FFFFFFFu - q) / per) : k + 1;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t acc = 0;
            std::size_t done = 0;
            while (done < k) {
                std::size_t stop = done + chunk < k ? done + chunk : k;
                for (std::size_t t = done; t < stop; ++t) acc += A[i * k + t] * B[t * n + j];
                acc %= q;
                done = stop;
            }
            C[i * n + j] = acc;
        }
    }
}

const Kernels scalar_table{axpy_scalar, scale_scalar, matmul_scalar, "scalar"};

std::atomic<const Kernels*> g_active{nullptr};

const Kernels* init_active() {
    Backend b = detect();
    const Kernels* t = &get(b);
    g_active.store(t, std::memory_order_relaxed);
    return t;
}

} // namespace

bool available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return avx2_kernels() != nullptr;
    }
    return false;
}

Backend detect() {
    if (const char* env = std::getenv("HALLCALC_KERNEL")) {
        std::string s(env);
        if (s == "scalar") return Backend::scalar;
        if (s == "avx2" && available(Backend::avx2)) return Backend::avx2;
    }
    return available(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

const Kernels& get(Backend b) {
    if (b == Backend::avx2) {
        const Kernels* t = avx2_kernels();
        if (!t) throw ContractError("avx2 kernels unavailable on this host");
        return *t;
    }
    return scalar_table;
}

const Kernels& active() {
    const Kernels* t = g_active.load(std::memory_order_relaxed);
    return t ? *t : *init_active();
}

void select(Backend b) {
    g_active.store(&get(b), std::memory_order_relaxed);
}

} // namespace hall::kern
