#pragma once
// Test-only reference oracles, independent of the library paths they check:
// brute-force counting by full enumeration, Gaussian-binomial recurrences,
// Krull-Schmidt multiset counts, and 4-term exact-sequence counting.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hall/complexes.hpp"
#include "hall/homalg.hpp"
#include "hall/quiverrep.hpp"

namespace oracles {

using namespace hall;
using quiverrep::Cat;
using quiverrep::Morphism;
using quiverrep::Representation;

inline Cat point_cat(std::uint32_t q) {
    return Cat{quiverrep::Quiver(1, {}), ffla::FieldOrder(q)};
}

inline Cat a2_cat(std::uint32_t q) {
    return Cat{quiverrep::Quiver(2, {{0, 1}}), ffla::FieldOrder(q)};
}

// Gaussian binomial via the Pascal-type recurrence, independent of the
// product formula in ffla.
inline Int gaussian_dp(std::uint32_t q, int n, int d) {
    if (d < 0 || d > n) return 0;
    std::map<std::pair<int, int>, Int> memo;
    std::function<Int(int, int)> rec = [&](int nn, int dd) -> Int {
        if (dd == 0 || dd == nn) return 1;
        auto it = memo.find({nn, dd});
        if (it != memo.end()) return it->second;
        Int v = rec(nn - 1, dd - 1) + int_pow(q, dd) * rec(nn - 1, dd);
        memo[{nn, dd}] = v;
        return v;
    };
    return rec(n, d);
}

// Counts d-dimensional subspaces of F_q^n by enumerating all spanning
// d-tuples of vectors and canonicalizing their row space.
inline Int brute_subspace_count(std::uint32_t q, int n, int d) {
    if (d == 0) return 1;
    std::uint64_t total = 1;
    for (int i = 0; i < n * d; ++i) total *= q;
    std::set<std::string> seen;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        ffla::FqMatrix M(d, n);
        std::uint64_t x = idx;
        for (auto& e : M.a) {
            e = x % q;
            x /= q;
        }
        auto R = ffla::rref(q, M);
        if (R.rank != static_cast<std::uint32_t>(d)) continue;
        std::string key;
        for (std::uint32_t e : R.mat.a) key += char('0' + e);
        seen.insert(key);
    }
    return Int(static_cast<unsigned long>(seen.size()));
}

// Krull-Schmidt count of iso classes for the A_2 quiver: multisets of the
// indecomposables S1, S2, P with componentwise dimension bounds.
inline int ks_class_count_a2(int cap1, int cap2, int total_cap) {
    int count = 0;
    for (int m3 = 0; m3 <= std::min(cap1, cap2); ++m3)
        for (int m1 = 0; m1 + m3 <= cap1; ++m1)
            for (int m2 = 0; m2 + m3 <= cap2; ++m2)
                if (m1 + m2 + 2 * m3 <= total_cap) ++count;
    return count;
}

// Enumerates every per-vertex matrix tuple of the right shape (not just a
// Hom-basis span) and keeps those that intertwine.
template <typename Visit>
void all_maps_scan(const Cat& cat, const Representation& M, const Representation& N,
                   Visit&& visit) {
    const std::uint32_t q = cat.q();
    std::vector<std::pair<int, int>> shapes;
    std::uint64_t total = 1;
    for (int v = 0; v < cat.n(); ++v) {
        shapes.emplace_back(N.dims[v], M.dims[v]);
        for (int e = 0; e < N.dims[v] * M.dims[v]; ++e) total *= q;
    }
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Morphism f;
        std::uint64_t x = idx;
        for (auto [r, c] : shapes) {
            ffla::FqMatrix m(r, c);
            for (auto& e : m.a) {
                e = x % q;
                x /= q;
            }
            f.push_back(std::move(m));
        }
        if (quiverrep::is_morphism(cat, M, N, f)) visit(f);
    }
}

inline int brute_hom_dim(const Cat& cat, const Representation& M, const Representation& N) {
    std::uint64_t count = 0;
    all_maps_scan(cat, M, N, [&](const Morphism&) { ++count; });
    int dim = 0;
    while (count > 1) {
        count /= cat.q();
        ++dim;
    }
    return dim;
}

inline Int brute_aut(const Cat& cat, const Representation& M) {
    Int count = 0;
    all_maps_scan(cat, M, M, [&](const Morphism& f) {
        for (std::size_t v = 0; v < f.size(); ++v)
            if (ffla::rank(cat.q(), f[v]) != f[v].rows) return;
        ++count;
    });
    return count;
}

// |V(M,B,A,N)|: exact sequences 0 -> M -> B -> A -> N -> 0 counted as triples
// of morphisms, then gamma = |V| / (a_A a_B).
inline Rat brute_gamma(const Cat& cat, const Representation& A, const Representation& B,
                       const Representation& M, const Representation& N) {
    Int v_count = 0;
    all_maps_scan(cat, M, B, [&](const Morphism& f) {
        if (!quiverrep::morphism_injective(cat, M, f)) return;
        all_maps_scan(cat, B, A, [&](const Morphism& g) {
            // Im f = Ker g: containment (g f = 0) plus dimension match
            for (std::size_t v = 0; v < g.size(); ++v) {
                if (!ffla::is_zero(ffla::mat_mul(cat.q(), g[v], f[v]))) return;
                std::uint32_t ker_g = g[v].cols - ffla::rank(cat.q(), g[v]);
                if (ker_g != static_cast<std::uint32_t>(M.dims[v])) return;
            }
            all_maps_scan(cat, A, N, [&](const Morphism& h) {
                if (!quiverrep::morphism_surjective(cat, N, h)) return;
                for (std::size_t v = 0; v < h.size(); ++v) {
                    if (!ffla::is_zero(ffla::mat_mul(cat.q(), h[v], g[v]))) return;
                    std::uint32_t ker_h = h[v].cols - ffla::rank(cat.q(), h[v]);
                    if (ker_h != ffla::rank(cat.q(), g[v])) return;
                }
                ++v_count;
            });
        });
    });
    return make_rat(v_count, brute_aut(cat, A) * brute_aut(cat, B));
}

// Random complexes that are acyclic by construction: shifted sums of
// identity pairs and inclusion/projection three-term pieces.
inline complexes::BoundedComplex random_acyclic(const homalg::HallContext& ctx,
                                                std::mt19937& rng, int max_total_dim = 3) {
    const Cat& cat = ctx.cat();
    std::vector<quiverrep::ClassId> ids;
    for (quiverrep::ClassId id = 1; id < ctx.class_count(); ++id)
        if (dim_total(ctx.dims(id)) <= max_total_dim) ids.push_back(id);
    complexes::BoundedComplex X;
    int pieces = 1 + int(rng() % 2);
    for (int p = 0; p < pieces; ++p) {
        int deg = int(rng() % 4) - 2;
        const Representation& C = ctx.rep(ids[rng() % ids.size()]);
        if (rng() % 2 == 0) {
            X = complexes::direct_sum(cat, X, complexes::make_K(cat, C, deg));
        } else {
            auto subs = quiverrep::subrep_enumerate(cat, C);
            const auto& sq = subs[rng() % subs.size()];
            // U >-> C ->> C/U across three degrees
            complexes::BoundedComplex piece;
            piece.components[deg - 1] = sq.sub;
            piece.components[deg] = C;
            piece.components[deg + 1] = sq.quot;
            Morphism incl;
            for (int v = 0; v < cat.n(); ++v)
                incl.push_back(ffla::transpose(sq.sub_basis[v]));
            piece.differentials[deg - 1] = incl;
            // projection onto the completed-basis coordinates
            Morphism proj;
            for (int v = 0; v < cat.n(); ++v) {
                ffla::FqMatrix T = ffla::complete_basis(cat.q(), sq.sub_basis[v]);
                auto inv = ffla::inverse(cat.q(), ffla::transpose(T));
                ffla::FqMatrix pr(sq.quot.dims[v], C.dims[v]);
                for (int i = 0; i < sq.quot.dims[v]; ++i)
                    for (int j = 0; j < C.dims[v]; ++j)
                        pr.at(i, j) = inv->at(sq.sub.dims[v] + i, j);
                proj.push_back(std::move(pr));
            }
            piece.differentials[deg] = proj;
            X = complexes::direct_sum(cat, X, piece);
        }
    }
    return X;
}

} // namespace oracles
