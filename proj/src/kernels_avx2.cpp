// AVX2 variants of the residue kernels. Compiled with -mavx2 on x86-64 and
// reachable only after a cpuid check; every other platform gets the scalar
// reference path.

#include "hall/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

namespace hall::kern {

namespace {

// Reduce eight signed-positive 32-bit lanes (< 2^31) mod q. The quotient is
// computed in double precision: |x*(1/q) - x/q| < 1 for x < 2^31, so floor is
// off by at most one in either direction; two conditional fixups restore it.
inline __m256i mod_epi32(__m256i x, __m256i vq, __m256d invq) {
    __m128i lo = _mm256_castsi256_si128(x);
    __m128i hi = _mm256_extracti128_si256(x, 1);
    __m256d dlo = _mm256_floor_pd(_mm256_mul_pd(_mm256_cvtepi32_pd(lo), invq));
    __m256d dhi = _mm256_floor_pd(_mm256_mul_pd(_mm256_cvtepi32_pd(hi), invq));
    __m256i quo = _mm256_set_m128i(_mm256_cvttpd_epi32(dhi), _mm256_cvttpd_epi32(dlo));
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(quo, vq));
    __m256i too_big = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(vq, _mm256_set1_epi32(1)));
    r = _mm256_sub_epi32(r, _mm256_and_si256(too_big, vq));
    __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
    r = _mm256_add_epi32(r, _mm256_and_si256(neg, vq));
    return r;
}

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
               std::size_t n, std::uint32_t q) {
    const __m256i vq = _mm256_set1_epi32(static_cast<int>(q));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256d invq = _mm256_set1_pd(1.0 / q);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i v = _mm256_add_epi32(d, _mm256_mullo_epi32(vc, s));
        v = mod_epi32(v, vq, invq);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    }
    for (; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % q;
}

void scale_avx2(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t q) {
    const __m256i vq = _mm256_set1_epi32(static_cast<int>(q));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256d invq = _mm256_set1_pd(1.0 / q);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i v = mod_epi32(_mm256_mullo_epi32(vc, d), vq, invq);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), v);
    }
    for (; i < n; ++i) dst[i] = (c * dst[i]) % q;
}

void matmul_avx2(std::uint32_t* C, const std::uint32_t* A, const std::uint32_t* B,
                 std::size_t m, std::size_t k, std::size_t n, std::uint32_t q) {
    const __m256i vq = _mm256_set1_epi32(static_cast<int>(q));
    const __m256d invq = _mm256_set1_pd(1.0 / q);
    const std::uint64_t per = std::uint64_t(q - 1) * (q - 1);
    const std::size_t chunk = per ? static_cast<std::size_t>((0x7FFFFFFFu - q) / per) : k + 1;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = 0;
        for (; j + 8 <= n; j += 8) {
            __m256i acc = _mm256_setzero_si256();
            std::size_t done = 0;
            while (done < k) {
                std::size_t stop = done + chunk < k ? done + chunk : k;
                for (std::size_t t = done; t < stop; ++t) {
                    __m256i a = _mm256_set1_epi32(static_cast<int>(A[i * k + t]));
                    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(B + t * n + j));
                    acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(a, b));
                }
                acc = mod_epi32(acc, vq, invq);
                done = stop;
            }
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(C + i * n + j), acc);
        }
        for (; j < n; ++j) {
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

const Kernels avx2_table{axpy_avx2, scale_avx2, matmul_avx2, "avx2"};

} // namespace

const Kernels* avx2_kernels() {
    return __builtin_cpu_supports("avx2") ? &avx2_table : nullptr;
}

} // namespace hall::kern

#else

namespace hall::kern {
const Kernels* avx2_kernels() { return nullptr; }
} // namespace hall::kern

#endif
