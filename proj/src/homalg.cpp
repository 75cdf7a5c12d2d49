#include "hall/homalg.hpp"

namespace hall::homalg {

using quiverrep::HomBasis;
using quiverrep::Morphism;

long additive_euler(const quiverrep::Quiver& Q, const DimVector& a, const DimVector& b) {
    if (static_cast<int>(a.size()) != Q.vertices || static_cast<int>(b.size()) != Q.vertices)
        throw ContractError("euler form: wrong dimension vector length");
    long e = 0;
    for (int v = 0; v < Q.vertices; ++v) e += long(a[v]) * b[v];
    for (auto [s, t] : Q.arrows) e -= long(a[s]) * b[t];
    return e;
}

EulerValue mult_euler(const Cat& cat, const DimVector& a, const DimVector& b) {
    return {cat.q(), additive_euler(cat.quiver, a, b)};
}

int ext1_dim(const Cat& cat, const Representation& M, const Representation& N) {
    int h = quiverrep::hom_basis(cat, M, N).dim;
    long e = additive_euler(cat.quiver, M.dims, N.dims);
    long x = h - e;
    if (x < 0) throw ConsistencyError("negative Ext^1 dimension: Euler form broke");
    return static_cast<int>(x);
}

namespace {

// Closed forms for the pairing of stalk/acyclic generators of K_0(C^b).
long pair_exponent(const quiverrep::Quiver& Q, const ComplexClassTerm& x,
                   const ComplexClassTerm& y) {
    long e = additive_euler(Q, x.alpha, y.alpha);
    const int m = x.degree, n = y.degree;
    if (x.kind == ComplexClassTerm::stalk && y.kind == ComplexClassTerm::stalk) {
        if (m == n) return e;
        if (m > n) return 0;
        return (n - m) % 2 == 0 ? e : -e;
    }
    if (x.kind == ComplexClassTerm::acyclic && y.kind == ComplexClassTerm::stalk)
        return n == m - 1 ? e : 0;
    if (x.kind == ComplexClassTerm::stalk && y.kind == ComplexClassTerm::acyclic)
        return m == n ? e : 0;
    return ((n == m) + (n == m - 1)) * e;
}

} // namespace

long complex_euler_exponent(const quiverrep::Quiver& Q,
                            std::span<const ComplexClassTerm> lhs,
                            std::span<const ComplexClassTerm> rhs) {
    long e = 0;
    for (const auto& x : lhs)
        for (const auto& y : rhs) e += pair_exponent(Q, x, y);
    return e;
}

EulerValue complex_euler(const Cat& cat, std::span<const ComplexClassTerm> lhs,
                         std::span<const ComplexClassTerm> rhs) {
    return {cat.q(), complex_euler_exponent(cat.quiver, lhs, rhs)};
}

long HallContext::euler(const DimVector& a, const DimVector& b) const {
    return additive_euler(cat().quiver, a, b);
}

int HallContext::hom_dim(ClassId A, ClassId B) const {
    std::scoped_lock lk(mu_);
    auto key = Pair{A, B};
    auto it = hom_memo_.find(key);
    if (it != hom_memo_.end()) return it->second;
    int d = quiverrep::hom_basis(cat(), rep(A), rep(B)).dim;
    hom_memo_[key] = d;
    return d;
}

int HallContext::ext1(ClassId A, ClassId B) const {
    long x = hom_dim(A, B) - euler(dims(A), dims(B));
    if (x < 0) throw ConsistencyError("negative Ext^1 dimension: Euler form broke");
    return static_cast<int>(x);
}

const std::map<HallContext::Pair, Int>& HallContext::hall_sweep(ClassId C) const {
    std::scoped_lock lk(mu_);
    auto it = hall_memo_.find(C);
    if (it != hall_memo_.end()) return it->second;
    std::map<Pair, Int> counts;
    for (const auto& sq : quiverrep::subrep_enumerate(cat(), rep(C))) {
        ClassId sub = quiverrep::canonical_id(table_, sq.sub);
        ClassId quot = quiverrep::canonical_id(table_, sq.quot);
        ++counts[{quot, sub}];
    }
    return hall_memo_[C] = std::move(counts);
}

Int HallContext::hall_number(ClassId A, ClassId B, ClassId C) const {
    if (dim_add(dims(A), dims(B)) != dims(C)) return 0;
    const auto& sweep = hall_sweep(C);
    auto it = sweep.find({A, B});
    return it == sweep.end() ? Int(0) : it->second;
}

Int HallContext::injection_count(ClassId B, ClassId C, ClassId A) const {
    if (dim_add(dims(A), dims(B)) != dims(C)) return 0;
    const auto& MB = rep(B);
    const auto& MC = rep(C);
    HomBasis H = quiverrep::hom_basis(cat(), MB, MC);
    Int count = 0;
    quiverrep::hom_space_scan(cat(), MB, MC, H, table_.guards.max_hom_enum,
                              [&](const Morphism& f) {
        if (!quiverrep::morphism_injective(cat(), MB, f)) return true;
        auto im = quiverrep::image_bases(cat(), MB, MC, f);
        Representation coker = quiverrep::quotient_by(cat(), MC, im);
        if (quiverrep::canonical_id(table_, coker) == A) ++count;
        return true;
    });
    return count;
}

Int HallContext::ext_count_with_middle(ClassId A, ClassId B, ClassId C) const {
    Int g = hall_number(A, B, C);
    if (g == 0) return 0;
    Int num = g * int_pow(q(), hom_dim(A, B)) * aut(A) * aut(B);
    return exact_div(num, aut(C), "homological formula for |Ext^1(A,B)_C|");
}

const std::map<HallContext::Pair, Int>& HallContext::gamma_sweep(ClassId A, ClassId B) const {
    std::scoped_lock lk(mu_);
    auto key = Pair{A, B};
    auto it = gamma_memo_.find(key);
    if (it != gamma_memo_.end()) return it->second;
    // S = { g in Hom(B,A) : Ker g = M, Coker g = N }, binned by (M,N)
    std::map<Pair, Int> counts;
    const auto& MB = rep(B);
    const auto& MA = rep(A);
    HomBasis H = quiverrep::hom_basis(cat(), MB, MA);
    quiverrep::hom_space_scan(cat(), MB, MA, H, table_.guards.max_hom_enum,
                              [&](const Morphism& g) {
        auto kerb = quiverrep::kernel_bases(cat(), MB, g);
        Representation ker = quiverrep::subrep_from_bases(cat(), MB, kerb);
        auto im = quiverrep::image_bases(cat(), MB, MA, g);
        Representation coker = quiverrep::quotient_by(cat(), MA, im);
        ++counts[{quiverrep::canonical_id(table_, ker), quiverrep::canonical_id(table_, coker)}];
        return true;
    });
    return gamma_memo_[key] = std::move(counts);
}

Rat HallContext::gamma(ClassId A, ClassId B, ClassId M, ClassId N) const {
    // exactness of 0 -> M -> B -> A -> N -> 0 forces the K_0 relation
    if (dim_sub(dim_add(dims(M), dims(A)), dim_add(dims(B), dims(N))) !=
        DimVector(dims(A).size(), 0))
        return Rat(0);
    if (!dim_leq(dims(M), dims(B)) || !dim_leq(dims(N), dims(A))) return Rat(0);
    const auto& sweep = gamma_sweep(A, B);
    auto it = sweep.find({M, N});
    if (it == sweep.end()) return Rat(0);
    return make_rat(it->second * aut(M) * aut(N), aut(A) * aut(B));
}

std::vector<std::pair<ClassId, Rat>> HallContext::same_degree_line(ClassId A, ClassId B) const {
    DimVector target = dim_add(dims(A), dims(B));
    if (!table_.in_bounds(target))
        throw BoundError("middle-term dimension vector outside the table bounds");
    std::vector<std::pair<ClassId, Rat>> line;
    for (ClassId C : table_.ids_with_dim(target)) {
        Int g = hall_number(A, B, C);
        if (g == 0) continue;
        // |Ext^1(A,B)_C| / |Hom(A,B)| = g^C_{AB} a_A a_B / a_C
        line.emplace_back(C, make_rat(g * aut(A) * aut(B), aut(C)));
    }
    return line;
}

std::vector<std::tuple<ClassId, ClassId, Rat>> HallContext::gamma_line(ClassId A,
                                                                       ClassId B) const {
    std::vector<std::tuple<ClassId, ClassId, Rat>> line;
    for (const auto& [mn, count] : gamma_sweep(A, B)) {
        auto [M, N] = mn;
        line.emplace_back(M, N, make_rat(count * aut(M) * aut(N), aut(A) * aut(B)));
    }
    return line;
}

} // namespace hall::homalg
