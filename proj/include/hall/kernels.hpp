#pragma once
// Residue-vector kernels: the arithmetic inner loops of all F_q linear
// algebra. A scalar reference implementation is always available; an AVX2
// variant is selected at run time on capable x86-64 hosts and is checked
// against the scalar path by the equivalence tests.
//
// Conventions: all inputs are residues in [0, q), q < 2^15, so products and
// short accumulations fit a 32-bit lane without overflow.

#include <cstddef>
#include <cstdint>

namespace hall::kern {

struct Kernels {
    // dst[i] <- (dst[i] + c*src[i]) mod q
    void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                 std::size_t n, std::uint32_t q);
    // dst[i] <- (c * dst[i]) mod q
    void (*scale)(std::uint32_t* dst, std::uint32_t c, std::size_t n, std::uint32_t q);
    // C(m x n) <- A(m x k) * B(k x n) mod q, row-major, C must not alias A or B
    void (*matmul)(std::uint32_t* C, const std::uint32_t* A, const std::uint32_t* B,
                   std::size_t m, std::size_t k, std::size_t n, std::uint32_t q);
    const char* name;
};

enum class Backend { scalar, avx2 };

bool available(Backend b);
Backend detect();                  // best backend for this host (env HALLCALC_KERNEL overrides)
const Kernels& get(Backend b);     // specific table, for equivalence tests
const Kernels& active();           // currently selected table
void select(Backend b);            // override, throws if unavailable

// Defined in kernels_avx2.cpp; null when compiled without x86-64 support.
const Kernels* avx2_kernels();

} // namespace hall::kern
