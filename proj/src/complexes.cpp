#include "hall/complexes.hpp"

#include <algorithm>

namespace hall::complexes {

using ffla::FqMatrix;

namespace {

int support_min(const BoundedComplex& X) {
    int l = 0;
    bool found = false;
    for (const auto& [d, comp] : X.components)
        if (dim_total(comp.dims) > 0) {
            if (!found || d < l) l = d;
            found = true;
        }
    return found ? l : 0;
}

int support_max(const BoundedComplex& X) {
    int r = 0;
    bool found = false;
    for (const auto& [d, comp] : X.components)
        if (dim_total(comp.dims) > 0) {
            if (!found || d > r) r = d;
            found = true;
        }
    return found ? r : 0;
}

bool is_zero_complex(const BoundedComplex& X) {
    for (const auto& [d, comp] : X.components)
        if (dim_total(comp.dims) > 0) return false;
    return true;
}

} // namespace

Representation component_at(const Cat& cat, const BoundedComplex& X, int degree) {
    auto it = X.components.find(degree);
    return it == X.components.end() ? quiverrep::zero_rep(cat) : it->second;
}

Morphism differential_at(const Cat& cat, const BoundedComplex& X, int degree) {
    auto it = X.differentials.find(degree);
    if (it != X.differentials.end()) return it->second;
    return quiverrep::zero_morphism(component_at(cat, X, degree),
                                    component_at(cat, X, degree + 1));
}

void validate(const Cat& cat, const BoundedComplex& X) {
    for (const auto& [d, comp] : X.components) quiverrep::validate_rep(cat, comp);
    for (const auto& [d, f] : X.differentials) {
        Representation from = component_at(cat, X, d);
        Representation to = component_at(cat, X, d + 1);
        if (f.size() != static_cast<std::size_t>(cat.n()))
            throw ContractError("differential at degree " + std::to_string(d) +
                                ": wrong vertex count");
        for (int v = 0; v < cat.n(); ++v)
            if (f[v].rows != static_cast<std::uint32_t>(to.dims[v]) ||
                f[v].cols != static_cast<std::uint32_t>(from.dims[v]))
                throw ContractError("differential at degree " + std::to_string(d) +
                                    ", vertex " + std::to_string(v + 1) + ": shape mismatch");
        if (!quiverrep::is_morphism(cat, from, to, f))
            throw ContractError("differential at degree " + std::to_string(d) +
                                " is not a representation morphism");
    }
    if (is_zero_complex(X)) return;
    const int l = support_min(X), r = support_max(X);
    for (int d = l; d < r; ++d) {
        Morphism d0 = differential_at(cat, X, d);
        Morphism d1 = differential_at(cat, X, d + 1);
        for (int v = 0; v < cat.n(); ++v) {
            FqMatrix comp = ffla::mat_mul(cat.q(), d1[v], d0[v]);
            if (!ffla::is_zero(comp))
                throw ContractError("d^2 != 0 at degree " + std::to_string(d) + ", vertex " +
                                    std::to_string(v + 1));
        }
    }
}

BoundedComplex make_stalk(const Cat& cat, const Representation& A, int m) {
    quiverrep::validate_rep(cat, A);
    BoundedComplex X;
    X.components[m] = A;
    return X;
}

BoundedComplex make_K(const Cat& cat, const Representation& A, int m) {
    quiverrep::validate_rep(cat, A);
    BoundedComplex X;
    X.components[m - 1] = A;
    X.components[m] = A;
    X.differentials[m - 1] = quiverrep::identity_morphism(A);
    return X;
}

BoundedComplex direct_sum(const Cat& cat, const BoundedComplex& X, const BoundedComplex& Y) {
    BoundedComplex S;
    std::vector<int> degs;
    for (const auto& [d, c] : X.components) degs.push_back(d);
    for (const auto& [d, c] : Y.components) degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (int d : degs)
        S.components[d] =
            quiverrep::direct_sum(cat, component_at(cat, X, d), component_at(cat, Y, d));
    for (int d : degs) {
        Representation xf = component_at(cat, X, d), xt = component_at(cat, X, d + 1);
        Representation yf = component_at(cat, Y, d), yt = component_at(cat, Y, d + 1);
        Morphism fx = differential_at(cat, X, d);
        Morphism fy = differential_at(cat, Y, d);
        Morphism f;
        bool nonzero = false;
        for (int v = 0; v < cat.n(); ++v) {
            FqMatrix m(xt.dims[v] + yt.dims[v], xf.dims[v] + yf.dims[v]);
            for (std::uint32_t i = 0; i < fx[v].rows; ++i)
                for (std::uint32_t j = 0; j < fx[v].cols; ++j) m.at(i, j) = fx[v].at(i, j);
            for (std::uint32_t i = 0; i < fy[v].rows; ++i)
                for (std::uint32_t j = 0; j < fy[v].cols; ++j)
                    m.at(fx[v].rows + i, fx[v].cols + j) = fy[v].at(i, j);
            if (!ffla::is_zero(m)) nonzero = true;
            f.push_back(std::move(m));
        }
        if (nonzero) S.differentials[d] = std::move(f);
    }
    return S;
}

int width(const BoundedComplex& X) {
    if (is_zero_complex(X)) return 0;
    return support_max(X) - support_min(X) + 1;
}

ImagesKernels images_kernels(const Cat& cat, const BoundedComplex& X) {
    validate(cat, X);
    ImagesKernels out;
    if (is_zero_complex(X)) return out;
    const int l = support_min(X), r = support_max(X);
    for (int d = l; d <= r; ++d) {
        Representation from = component_at(cat, X, d);
        Representation to = component_at(cat, X, d + 1);
        Morphism f = differential_at(cat, X, d);
        auto kb = quiverrep::kernel_bases(cat, from, f);
        out.kernels[d] = quiverrep::subrep_from_bases(cat, from, kb);
        auto ib = quiverrep::image_bases(cat, from, to, f);
        Representation im = quiverrep::subrep_from_bases(cat, to, ib);
        out.image_dims[d] = im.dims;
        out.images[d] = std::move(im);
    }
    return out;
}

namespace {

// H^d = Ker d^d / Im d^{d-1}, carried out inside the kernel subrepresentation.
Representation homology_at(const Cat& cat, const BoundedComplex& X, int d) {
    Representation comp = component_at(cat, X, d);
    Morphism dd = differential_at(cat, X, d);
    auto ker_bases = quiverrep::kernel_bases(cat, comp, dd);
    Representation ker = quiverrep::subrep_from_bases(cat, comp, ker_bases);

    Representation prev = component_at(cat, X, d - 1);
    Morphism dprev = differential_at(cat, X, d - 1);
    auto im_bases = quiverrep::image_bases(cat, prev, comp, dprev);

    // image vectors in kernel coordinates
    std::vector<FqMatrix> im_in_ker;
    for (int v = 0; v < cat.n(); ++v) {
        ffla::Rref kb = ffla::rref(cat.q(), ker_bases[v]);
        FqMatrix rows(im_bases[v].rows, kb.rank);
        for (std::uint32_t i = 0; i < im_bases[v].rows; ++i) {
            std::vector<std::uint32_t> vrow(im_bases[v].cols);
            for (std::uint32_t j = 0; j < im_bases[v].cols; ++j) vrow[j] = im_bases[v].at(i, j);
            auto coords = ffla::coordinates_in_rowspace(cat.q(), kb, std::move(vrow));
            if (!coords) throw ConsistencyError("image not contained in kernel");
            for (std::uint32_t j = 0; j < kb.rank; ++j) rows.at(i, j) = (*coords)[j];
        }
        im_in_ker.push_back(ffla::rref(cat.q(), std::move(rows)).mat);
    }
    return quiverrep::quotient_by(cat, ker, im_in_ker);
}

} // namespace

std::map<int, ClassId> homology(const HallContext& ctx, const BoundedComplex& X) {
    const Cat& cat = ctx.cat();
    validate(cat, X);
    std::map<int, ClassId> out;
    if (is_zero_complex(X)) return out;
    const int l = support_min(X), r = support_max(X);
    for (int d = l; d <= r; ++d) {
        Representation H = homology_at(cat, X, d);
        if (dim_total(H.dims) == 0) continue;
        out[d] = quiverrep::canonical_id(ctx.table(), H);
    }
    return out;
}

ReducedForm reduce_to_normal_form(const HallContext& ctx, const BoundedComplex& X,
                                  bool twisted) {
    const Cat& cat = ctx.cat();
    validate(cat, X);
    ReducedForm out;
    out.coeff = 1;
    if (is_zero_complex(X)) return out;
    const int l = support_min(X), r = support_max(X);

    long exponent = 0;
    for (int d = l; d < r; ++d) {
        Representation comp = component_at(cat, X, d);
        Representation next = component_at(cat, X, d + 1);
        Morphism dd = differential_at(cat, X, d);
        auto kb = quiverrep::kernel_bases(cat, comp, dd);
        auto ib = quiverrep::image_bases(cat, comp, next, dd);
        DimVector im_dims(cat.n()), ker_dims(cat.n());
        for (int v = 0; v < cat.n(); ++v) {
            im_dims[v] = ib[v].rows;
            ker_dims[v] = kb[v].rows;
        }
        exponent += ctx.euler(im_dims, ker_dims);
        if (!dim_is_zero(im_dims)) out.word.torus[d + 1] = im_dims;
    }
    for (int d = l; d <= r; ++d) {
        Representation H = homology_at(cat, X, d);
        if (dim_total(H.dims) == 0) continue;
        out.word.stalks[d] = quiverrep::canonical_id(ctx.table(), H);
    }
    out.coeff = ctx.qp(exponent);

    if (twisted) {
        // divide by the pairwise Euler pairings of the ordered word factors
        std::vector<homalg::ComplexClassTerm> terms;
        for (auto it = out.word.torus.rbegin(); it != out.word.torus.rend(); ++it)
            terms.push_back({homalg::ComplexClassTerm::acyclic, it->second, it->first});
        for (auto it = out.word.stalks.rbegin(); it != out.word.stalks.rend(); ++it)
            terms.push_back({homalg::ComplexClassTerm::stalk, ctx.dims(it->second), it->first});
        long pair_exp = 0;
        for (std::size_t i = 0; i < terms.size(); ++i)
            for (std::size_t j = i + 1; j < terms.size(); ++j)
                pair_exp += homalg::complex_euler_exponent(cat.quiver, {&terms[i], 1},
                                                           {&terms[j], 1});
        out.coeff *= ctx.qp(-pair_exp);
    }
    return out;
}

std::vector<std::pair<int, DimVector>> acyclic_decompose(const HallContext& ctx,
                                                         const BoundedComplex& K) {
    const Cat& cat = ctx.cat();
    validate(cat, K);
    if (!homology(ctx, K).empty()) throw ContractError("acyclic_decompose on a non-acyclic complex");
    std::vector<std::pair<int, DimVector>> out;
    if (is_zero_complex(K)) return out;
    const int l = support_min(K), r = support_max(K);
    for (int d = l; d < r; ++d) {
        Representation comp = component_at(cat, K, d);
        Representation next = component_at(cat, K, d + 1);
        auto ib = quiverrep::image_bases(cat, comp, next, differential_at(cat, K, d));
        DimVector im_dims(cat.n());
        for (int v = 0; v < cat.n(); ++v) im_dims[v] = ib[v].rows;
        if (!dim_is_zero(im_dims)) out.emplace_back(d + 1, im_dims);
    }
    return out;
}

int hom_complex(const Cat& cat, const BoundedComplex& X, const BoundedComplex& Y) {
    validate(cat, X);
    validate(cat, Y);
    if (is_zero_complex(X) || is_zero_complex(Y)) return 0;
    const std::uint32_t q = cat.q();
    const int lo = std::min(support_min(X), support_min(Y));
    const int hi = std::max(support_max(X), support_max(Y));
    // unknowns: entries of f^d_v : X^d_v -> Y^d_v
    std::map<std::pair<int, int>, int> offset;
    int vars = 0;
    for (int d = lo; d <= hi; ++d) {
        Representation xc = component_at(cat, X, d), yc = component_at(cat, Y, d);
        for (int v = 0; v < cat.n(); ++v) {
            offset[{d, v}] = vars;
            vars += xc.dims[v] * yc.dims[v];
        }
    }
    std::vector<std::vector<std::uint32_t>> rows;
    auto add_row = [&]() -> std::vector<std::uint32_t>& {
        rows.emplace_back(vars, 0);
        return rows.back();
    };
    for (int d = lo; d <= hi; ++d) {
        Representation xc = component_at(cat, X, d), yc = component_at(cat, Y, d);
        // intertwining within degree d
        for (std::size_t a = 0; a < cat.quiver.arrows.size(); ++a) {
            auto [s, t] = cat.quiver.arrows[a];
            const auto& Ma = xc.arrow_maps[a];
            const auto& Na = yc.arrow_maps[a];
            for (int i = 0; i < yc.dims[t]; ++i)
                for (int j = 0; j < xc.dims[s]; ++j) {
                    auto& row = add_row();
                    for (int k = 0; k < xc.dims[t]; ++k)
                        row[offset[{d, t}] + i * xc.dims[t] + k] = ffla::fq_add(
                            q, row[offset[{d, t}] + i * xc.dims[t] + k], Ma.at(k, j));
                    for (int l2 = 0; l2 < yc.dims[s]; ++l2)
                        row[offset[{d, s}] + l2 * xc.dims[s] + j] = ffla::fq_sub(
                            q, row[offset[{d, s}] + l2 * xc.dims[s] + j], Na.at(i, l2));
                }
        }
        // commuting with the differentials: f^{d+1} dX^d = dY^d f^d
        if (d == hi) continue;
        Representation xn = component_at(cat, X, d + 1), yn = component_at(cat, Y, d + 1);
        Morphism dx = differential_at(cat, X, d);
        Morphism dy = differential_at(cat, Y, d);
        for (int v = 0; v < cat.n(); ++v)
            for (int i = 0; i < yn.dims[v]; ++i)
                for (int j = 0; j < xc.dims[v]; ++j) {
                    auto& row = add_row();
                    for (int k = 0; k < xn.dims[v]; ++k)
                        row[offset[{d + 1, v}] + i * xn.dims[v] + k] = ffla::fq_add(
                            q, row[offset[{d + 1, v}] + i * xn.dims[v] + k], dx[v].at(k, j));
                    for (int l2 = 0; l2 < yc.dims[v]; ++l2)
                        row[offset[{d, v}] + l2 * xc.dims[v] + j] = ffla::fq_sub(
                            q, row[offset[{d, v}] + l2 * xc.dims[v] + j], dy[v].at(i, l2));
                }
    }
    FqMatrix A(static_cast<std::uint32_t>(rows.size()), vars);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < vars; ++j) A.at(static_cast<std::uint32_t>(i), j) = rows[i][j];
    return ffla::kernel_basis(q, A).rows;
}

} // namespace hall::complexes
