#include <doctest.h>

#include <random>

#include "hall/kernels.hpp"

using namespace hall;

namespace {

std::vector<std::uint32_t> random_residues(std::mt19937& rng, std::size_t n, std::uint32_t q) {
    std::vector<std::uint32_t> v(n);
    for (auto& e : v) e = rng() % q;
    return v;
}

} // namespace

TEST_CASE("scalar kernels: axpy and matmul basics") {
    const auto& K = kern::get(kern::Backend::scalar);
    std::vector<std::uint32_t> dst{1, 2, 0, 4};
    std::vector<std::uint32_t> src{3, 3, 1, 1};
    K.axpy(dst.data(), src.data(), 2, dst.size(), 5);
    CHECK(dst == std::vector<std::uint32_t>{2, 3, 2, 1});

    std::vector<std::uint32_t> A{1, 0, 0, 1}, B{2, 3, 4, 1}, C(4, 99);
    K.matmul(C.data(), A.data(), B.data(), 2, 2, 2, 5);
    CHECK(C == B);
}

TEST_CASE("simd variants agree with the scalar reference") {
    if (!kern::available(kern::Backend::avx2)) {
        MESSAGE("avx2 unavailable on this host; skipping equivalence");
        return;
    }
    const auto& S = kern::get(kern::Backend::scalar);
    const auto& V = kern::get(kern::Backend::avx2);
    std::mt19937 rng(7);
    for (std::uint32_t q : {2u, 3u, 5u, 7u, 13u, 251u, 32749u}) {
        for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{5}, std::size_t{8},
                              std::size_t{9}, std::size_t{16}, std::size_t{33}}) {
            auto dst1 = random_residues(rng, n, q);
            auto dst2 = dst1;
            auto src = random_residues(rng, n, q);
            std::uint32_t c = rng() % q;
            S.axpy(dst1.data(), src.data(), c, n, q);
            V.axpy(dst2.data(), src.data(), c, n, q);
            CHECK(dst1 == dst2);
            S.scale(dst1.data(), c, n, q);
            V.scale(dst2.data(), c, n, q);
            CHECK(dst1 == dst2);
        }
        // worst-case residues at q-1
        std::vector<std::uint32_t> hot(24, q - 1);
        auto hot2 = hot;
        S.axpy(hot.data(), hot.data(), q - 1, hot.size(), q);
        V.axpy(hot2.data(), hot2.data(), q - 1, hot2.size(), q);
        CHECK(hot == hot2);
        for (std::size_t m : {std::size_t{1}, std::size_t{3}, std::size_t{8}})
            for (std::size_t k : {std::size_t{1}, std::size_t{4}, std::size_t{9}})
                for (std::size_t n2 : {std::size_t{1}, std::size_t{8}, std::size_t{11}}) {
                    auto A = random_residues(rng, m * k, q);
                    auto B = random_residues(rng, k * n2, q);
                    std::vector<std::uint32_t> C1(m * n2), C2(m * n2);
                    S.matmul(C1.data(), A.data(), B.data(), m, k, n2, q);
                    V.matmul(C2.data(), A.data(), B.data(), m, k, n2, q);
                    CHECK(C1 == C2);
                }
    }
}

TEST_CASE("backend selection") {
    kern::select(kern::Backend::scalar);
    CHECK(std::string(kern::active().name) == "scalar");
    kern::select(kern::detect());
    CHECK(kern::available(kern::Backend::scalar));
}
