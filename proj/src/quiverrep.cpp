#include "hall/quiverrep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <queue>

namespace hall::quiverrep {

using ffla::FqMatrix;

Quiver::Quiver(int n, std::vector<std::pair<int, int>> arr) : vertices(n), arrows(std::move(arr)) {
    for (auto [s, t] : arrows)
        if (s < 0 || s >= n || t < 0 || t >= n)
            throw ContractError("arrow endpoint out of range");
    // Kahn's algorithm; a leftover vertex means an oriented cycle.
    std::vector<int> indeg(n, 0);
    for (auto [s, t] : arrows) ++indeg[t];
    std::deque<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop_front();
        topo_order.push_back(v);
        for (auto [s, t] : arrows)
            if (s == v && --indeg[t] == 0) ready.push_back(t);
    }
    if (static_cast<int>(topo_order.size()) != n)
        throw ContractError("quiver has an oriented cycle");
}

void validate_rep(const Cat& cat, const Representation& M) {
    if (static_cast<int>(M.dims.size()) != cat.n())
        throw ContractError("dimension vector length mismatch");
    for (int d : M.dims)
        if (d < 0) throw ContractError("negative dimension");
    if (M.arrow_maps.size() != cat.quiver.arrows.size())
        throw ContractError("arrow map count mismatch");
    for (std::size_t a = 0; a < M.arrow_maps.size(); ++a) {
        auto [s, t] = cat.quiver.arrows[a];
        const auto& m = M.arrow_maps[a];
        if (m.rows != static_cast<std::uint32_t>(M.dims[t]) ||
            m.cols != static_cast<std::uint32_t>(M.dims[s]))
            throw ContractError("arrow map shape mismatch at arrow " + std::to_string(a));
        for (std::uint32_t e : m.a)
            if (e >= cat.q()) throw ContractError("entry outside the field");
    }
}

Representation zero_rep(const Cat& cat) {
    Representation M;
    M.dims.assign(cat.n(), 0);
    for (auto [s, t] : cat.quiver.arrows) M.arrow_maps.emplace_back(0, 0);
    return M;
}

Representation simple_rep(const Cat& cat, int vertex) {
    Representation M;
    M.dims.assign(cat.n(), 0);
    M.dims[vertex] = 1;
    for (auto [s, t] : cat.quiver.arrows)
        M.arrow_maps.emplace_back(M.dims[t], M.dims[s]);
    return M;
}

namespace {

// All paths of an acyclic quiver, as arrow-index sequences, grouped by the
// requested endpoint. Generation order (BFS by length, arrows in quiver
// order) fixes the basis ordering.
struct PathBasis {
    std::vector<std::vector<std::vector<int>>> at; // per vertex: list of paths
    std::map<std::vector<int>, std::pair<int, int>> index; // path -> (vertex, pos)

    void add(int v, std::vector<int> p) {
        index[p] = {v, static_cast<int>(at[v].size())};
        at[v].push_back(std::move(p));
    }
};

PathBasis paths_from(const Quiver& Q, int start) {
    PathBasis pb;
    pb.at.resize(Q.vertices);
    std::deque<std::pair<int, std::vector<int>>> frontier;
    pb.add(start, {});
    frontier.push_back({start, {}});
    while (!frontier.empty()) {
        auto [v, p] = frontier.front();
        frontier.pop_front();
        for (std::size_t a = 0; a < Q.arrows.size(); ++a)
            if (Q.arrows[a].first == v) {
                auto ext = p;
                ext.push_back(static_cast<int>(a));
                pb.add(Q.arrows[a].second, ext);
                frontier.push_back({Q.arrows[a].second, std::move(ext)});
            }
    }
    return pb;
}

PathBasis paths_into(const Quiver& Q, int end) {
    PathBasis pb;
    pb.at.resize(Q.vertices);
    std::deque<std::pair<int, std::vector<int>>> frontier;
    pb.add(end, {});
    frontier.push_back({end, {}});
    while (!frontier.empty()) {
        auto [v, p] = frontier.front();
        frontier.pop_front();
        for (std::size_t a = 0; a < Q.arrows.size(); ++a)
            if (Q.arrows[a].second == v) {
                // prepend the arrow: the stored path runs source -> ... -> end
                std::vector<int> ext;
                ext.push_back(static_cast<int>(a));
                ext.insert(ext.end(), p.begin(), p.end());
                pb.add(Q.arrows[a].first, ext);
                frontier.push_back({Q.arrows[a].first, std::move(ext)});
            }
    }
    return pb;
}

} // namespace

Representation proj_rep(const Cat& cat, int vertex) {
    PathBasis pb = paths_from(cat.quiver, vertex);
    Representation M;
    for (auto& lst : pb.at) M.dims.push_back(static_cast<int>(lst.size()));
    for (std::size_t a = 0; a < cat.quiver.arrows.size(); ++a) {
        auto [s, t] = cat.quiver.arrows[a];
        FqMatrix m(M.dims[t], M.dims[s]);
        for (int j = 0; j < M.dims[s]; ++j) {
            auto ext = pb.at[s][j];
            ext.push_back(static_cast<int>(a));
            m.at(pb.index.at(ext).second, j) = 1;
        }
        M.arrow_maps.push_back(std::move(m));
    }
    return M;
}

Representation inj_rep(const Cat& cat, int vertex) {
    PathBasis pb = paths_into(cat.quiver, vertex);
    Representation M;
    for (auto& lst : pb.at) M.dims.push_back(static_cast<int>(lst.size()));
    for (std::size_t a = 0; a < cat.quiver.arrows.size(); ++a) {
        auto [s, t] = cat.quiver.arrows[a];
        // dual of precomposition with the arrow
        FqMatrix m(M.dims[t], M.dims[s]);
        for (int r = 0; r < M.dims[t]; ++r) {
            std::vector<int> pre;
            pre.push_back(static_cast<int>(a));
            pre.insert(pre.end(), pb.at[t][r].begin(), pb.at[t][r].end());
            m.at(r, pb.index.at(pre).second) = 1;
        }
        M.arrow_maps.push_back(std::move(m));
    }
    return M;
}

Representation direct_sum(const Cat& cat, const Representation& M, const Representation& N) {
    Representation S;
    S.dims = dim_add(M.dims, N.dims);
    for (std::size_t a = 0; a < cat.quiver.arrows.size(); ++a) {
        auto [s, t] = cat.quiver.arrows[a];
        FqMatrix m(S.dims[t], S.dims[s]);
        const auto& A = M.arrow_maps[a];
        const auto& B = N.arrow_maps[a];
        for (std::uint32_t i = 0; i < A.rows; ++i)
            for (std::uint32_t j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
        for (std::uint32_t i = 0; i < B.rows; ++i)
            for (std::uint32_t j = 0; j < B.cols; ++j)
                m.at(A.rows + i, A.cols + j) = B.at(i, j);
        S.arrow_maps.push_back(std::move(m));
    }
    return S;
}

Representation random_rep(const Cat& cat, const DimVector& dims, std::mt19937& rng) {
    Representation M;
    M.dims = dims;
    for (auto [s, t] : cat.quiver.arrows) {
        FqMatrix m(dims[t], dims[s]);
        for (auto& e : m.a) e = rng() % cat.q();
        M.arrow_maps.push_back(std::move(m));
    }
    return M;
}

Representation conjugate(const Cat& cat, const Representation& M,
                         const std::vector<ffla::FqMatrix>& g) {
    Representation R = M;
    for (std::size_t a = 0; a < cat.quiver.arrows.size(); ++a) {
        auto [s, t] = cat.quiver.arrows[a];
        auto ginv = ffla::inverse(cat.q(), g[s]);
        if (!ginv) throw ContractError("conjugating by a singular matrix");
        R.arrow_maps[a] = ffla::mat_mul(cat.q(), ffla::mat_mul(cat.q(), g[t], M.arrow_maps[a]), *ginv);
    }
    return R;
}

bool is_morphism(const Cat& cat, const Representation& M, const Representation& N,
                 const Morphism& f) {
    for (std::size_t a = 0; a < cat.quiver.arrows.size(); ++a) {
        auto [s, t] = cat.quiver.arrows[a];
        auto lhs = ffla::mat_mul(cat.q(), f[t], M.arrow_maps[a]);
        auto rhs = ffla::mat_mul(cat.q(), N.arrow_maps[a], f[s]);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

Morphism zero_morphism(const Representation& M, const Representation& N) {
    Morphism f;
    for (std::size_t v = 0; v < M.dims.size(); ++v)
        f.emplace_back(N.dims[v], M.dims[v]);
    return f;
}

Morphism identity_morphism(const Representation& M) {
    Morphism f;
    for (int d : M.dims) f.push_back(ffla::identity(d));
    return f;
}

bool morphism_injective(const Cat& cat, const Representation& M, const Morphism& f) {
    for (std::size_t v = 0; v < M.dims.size(); ++v)
        if (ffla::rank(cat.q(), f[v]) != static_cast<std::uint32_t>(M.dims[v])) return false;
    return true;
}

bool morphism_surjective(const Cat& cat, const Representation& N, const Morphism& f) {
    for (std::size_t v = 0; v < N.dims.size(); ++v)
        if (ffla::rank(cat.q(), f[v]) != static_cast<std::uint32_t>(N.dims[v])) return false;
    return true;
}

HomBasis hom_basis(const Cat& cat, const Representation& M, const Representation& N) {
    const std::uint32_t q = cat.q();
    const int n = cat.n();
    // unknowns: entries of f_v (dims_N[v] x dims_M[v]), row-major, vertex-major
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
    const int vars = offset[n];
    int eqs = 0;
    for (auto [s, t] : cat.quiver.arrows) eqs += N.dims[t] * M.dims[s];
    FqMatrix A(eqs, vars);
    int row = 0;
    for (std::size_t a = 0; a < cat.quiver.arrows.size(); ++a) {
        auto [s, t] = cat.quiver.arrows[a];
        const auto& Ma = M.arrow_maps[a];
        const auto& Na = N.arrow_maps[a];
        for (int i = 0; i < N.dims[t]; ++i)
            for (int j = 0; j < M.dims[s]; ++j) {
                // sum_k f_t[i,k] Ma[k,j] - sum_l Na[i,l] f_s[l,j] = 0
                for (int k = 0; k < M.dims[t]; ++k)
                    A.at(row, offset[t] + i * M.dims[t] + k) =
                        ffla::fq_add(q, A.at(row, offset[t] + i * M.dims[t] + k), Ma.at(k, j));
                for (int l = 0; l < N.dims[s]; ++l)
                    A.at(row, offset[s] + l * M.dims[s] + j) = ffla::fq_sub(
                        q, A.at(row, offset[s] + l * M.dims[s] + j), Na.at(i, l));
                ++row;
            }
    }
    FqMatrix K = ffla::kernel_basis(q, A);
    HomBasis H;
    H.dim = K.rows;
    for (std::uint32_t b = 0; b < K.rows; ++b) {
        Morphism f;
        for (int v = 0; v < n; ++v) {
            FqMatrix fv(N.dims[v], M.dims[v]);
            for (std::size_t e = 0; e < fv.a.size(); ++e) fv.a[e] = K.at(b, offset[v] + e);
            f.push_back(std::move(fv));
        }
        H.basis.push_back(std::move(f));
    }
    return H;
}

Morphism morphism_from_coords(const Cat& cat, const Representation& M,
                              const Representation& N, const HomBasis& H,
                              const std::vector<std::uint32_t>& coords) {
    Morphism f = zero_morphism(M, N);
    for (std::size_t b = 0; b < coords.size(); ++b) {
        if (coords[b] == 0) continue;
        for (std::size_t v = 0; v < f.size(); ++v)
            if (!f[v].a.empty())
                kern::active().axpy(f[v].a.data(), H.basis[b][v].a.data(), coords[b],
                                    f[v].a.size(), cat.q());
    }
    return f;
}

void hom_space_scan(const Cat& cat, const Representation& M, const Representation& N,
                    const HomBasis& H, std::uint64_t guard,
                    const std::function<bool(const Morphism&)>& visit) {
    const std::uint32_t q = cat.q();
    std::uint64_t count = 1;
    for (int i = 0; i < H.dim; ++i) {
        if (count > guard / q + 1) throw ResourceError("Hom-space enumeration guard exceeded");
        count *= q;
    }
    if (count > guard) throw ResourceError("Hom-space enumeration guard exceeded");
    std::vector<std::uint32_t> coords(H.dim, 0);
    while (true) {
        Morphism f = morphism_from_coords(cat, M, N, H, coords);
        if (!visit(f)) return;
        int k = H.dim;
        while (k > 0) {
            if (++coords[k - 1] < q) break;
            coords[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
    }
}

Int aut_order(const Cat& cat, const Representation& M, std::uint64_t guard) {
    HomBasis H = hom_basis(cat, M, M);
    Int count = 0;
    hom_space_scan(cat, M, M, H, guard, [&](const Morphism& f) {
        bool inv = true;
        for (std::size_t v = 0; v < f.size(); ++v)
            if (ffla::rank(cat.q(), f[v]) != f[v].rows) {
                inv = false;
                break;
            }
        if (inv) ++count;
        return true;
    });
    return count;
}

Fingerprint fingerprint(const Cat& cat, const Representation& M) {
    Fingerprint fp;
    fp.dims = M.dims;
    fp.end_dim = hom_basis(cat, M, M).dim;
    for (int v = 0; v < cat.n(); ++v) {
        Representation S = simple_rep(cat, v);
        fp.hom_to_simple.push_back(hom_basis(cat, M, S).dim);
        fp.hom_from_simple.push_back(hom_basis(cat, S, M).dim);
    }
    return fp;
}

namespace {

bool invertible_everywhere(const Cat& cat, const Morphism& f) {
    for (const auto& fv : f)
        if (fv.rows != fv.cols || ffla::rank(cat.q(), fv) != fv.rows) return false;
    return true;
}

} // namespace

IsoResult is_isomorphic_ex(const Cat& cat, const Representation& M,
                           const Representation& N, std::uint64_t guard) {
    if (M.dims != N.dims) return {false, true};
    if (fingerprint(cat, M) != fingerprint(cat, N)) return {false, true};
    HomBasis H = hom_basis(cat, M, N);
    const std::uint32_t q = cat.q();
    double bits = H.dim * std::log2(double(q));
    if (bits < 63 && [&] {
            std::uint64_t c = 1;
            for (int i = 0; i < H.dim; ++i) c *= q;
            return c <= guard;
        }()) {
        bool found = false;
        hom_space_scan(cat, M, N, H, guard, [&](const Morphism& f) {
            if (invertible_everywhere(cat, f)) {
                found = true;
                return false;
            }
            return true;
        });
        return {found, true};
    }
    // beyond the guard: deterministic randomized sampling, reported inexact
    std::mt19937 rng(0x48414C4Cu);
    std::vector<std::uint32_t> coords(H.dim);
    for (int trial = 0; trial < 200000; ++trial) {
        for (auto& c : coords) c = rng() % q;
        Morphism f = morphism_from_coords(cat, M, N, H, coords);
        if (invertible_everywhere(cat, f)) return {true, false};
    }
    return {false, false};
}

bool is_isomorphic(const Cat& cat, const Representation& M, const Representation& N,
                   std::uint64_t guard) {
    return is_isomorphic_ex(cat, M, N, guard).isomorphic;
}

// ---- subobjects ----

namespace {

ffla::Rref as_rref(const FqMatrix& basis) {
    ffla::Rref r;
    r.mat = basis;
    r.rank = basis.rows;
    for (std::uint32_t i = 0; i < basis.rows; ++i) {
        std::uint32_t j = 0;
        while (j < basis.cols && basis.at(i, j) == 0) ++j;
        r.pivot_cols.push_back(j);
    }
    return r;
}

// Sub arrow maps in subspace coordinates; nullopt if not invariant.
std::optional<std::vector<FqMatrix>> invariant_maps(const Cat& cat, const Representation& C,
                                                    const std::vector<ffla::Rref>& bases) {
    std::vector<FqMatrix> maps;
    for (std::size_t a = 0; a < cat.quiver.arrows.size(); ++a) {
        auto [s, t] = cat.quiver.arrows[a];
        FqMatrix m(bases[t].rank, bases[s].rank);
        for (std::uint32_t j = 0; j < bases[s].rank; ++j) {
            std::vector<std::uint32_t> u(bases[s].mat.cols);
            for (std::uint32_t c = 0; c < bases[s].mat.cols; ++c) u[c] = bases[s].mat.at(j, c);
            auto w = ffla::mat_vec(cat.q(), C.arrow_maps[a], u);
            auto coords = ffla::coordinates_in_rowspace(cat.q(), bases[t], std::move(w));
            if (!coords) return std::nullopt;
            for (std::uint32_t i = 0; i < bases[t].rank; ++i) m.at(i, j) = (*coords)[i];
        }
        maps.push_back(std::move(m));
    }
    return maps;
}

} // namespace

Representation subrep_from_bases(const Cat& cat, const Representation& C,
                                 const std::vector<ffla::FqMatrix>& bases) {
    std::vector<ffla::Rref> rr;
    for (const auto& b : bases) rr.push_back(as_rref(b));
    auto maps = invariant_maps(cat, C, rr);
    if (!maps) throw ContractError("subspace tuple is not arrow-invariant");
    Representation S;
    for (const auto& b : bases) S.dims.push_back(b.rows);
    S.arrow_maps = std::move(*maps);
    return S;
}

Representation quotient_by(const Cat& cat, const Representation& C,
                           const std::vector<ffla::FqMatrix>& bases) {
    const std::uint32_t q = cat.q();
    const int n = cat.n();
    std::vector<FqMatrix> Tinv(n); // (T^T)^{-1} for the completed basis T
    DimVector sdims(n), qdims(n);
    std::vector<FqMatrix> Tt(n);
    for (int v = 0; v < n; ++v) {
        sdims[v] = bases[v].rows;
        qdims[v] = C.dims[v] - sdims[v];
        FqMatrix T = ffla::complete_basis(q, bases[v]);
        Tt[v] = ffla::transpose(T);
        auto inv = ffla::inverse(q, Tt[v]);
        if (!inv) throw ConsistencyError("completed basis not invertible");
        Tinv[v] = std::move(*inv);
    }
    Representation Qr;
    Qr.dims = qdims;
    for (std::size_t a = 0; a < cat.quiver.arrows.size(); ++a) {
        auto [s, t] = cat.quiver.arrows[a];
        FqMatrix full = ffla::mat_mul(q, ffla::mat_mul(q, Tinv[t], C.arrow_maps[a]), Tt[s]);
        FqMatrix m(qdims[t], qdims[s]);
        for (int i = 0; i < qdims[t]; ++i)
            for (int j = 0; j < qdims[s]; ++j) m.at(i, j) = full.at(sdims[t] + i, sdims[s] + j);
        // invariance guarantees the sub block maps into itself
        for (int i = 0; i < qdims[t]; ++i)
            for (int j = 0; j < sdims[s]; ++j)
                if (full.at(sdims[t] + i, j) != 0)
                    throw ConsistencyError("quotient block structure violated");
        Qr.arrow_maps.push_back(std::move(m));
    }
    return Qr;
}

std::vector<SubQuot> subrep_enumerate(const Cat& cat, const Representation& C) {
    const std::uint32_t q = cat.q();
    const int n = cat.n();
    std::vector<std::vector<FqMatrix>> per_vertex(n);
    for (int v = 0; v < n; ++v) per_vertex[v] = ffla::all_subspaces(q, C.dims[v]);
    std::vector<SubQuot> out;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        std::vector<ffla::Rref> rr;
        std::vector<FqMatrix> bases;
        for (int v = 0; v < n; ++v) {
            bases.push_back(per_vertex[v][pick[v]]);
            rr.push_back(as_rref(bases.back()));
        }
        auto maps = invariant_maps(cat, C, rr);
        if (maps) {
            SubQuot sq;
            for (const auto& b : bases) sq.sub.dims.push_back(b.rows);
            sq.sub.arrow_maps = std::move(*maps);
            sq.quot = quotient_by(cat, C, bases);
            sq.sub_basis = std::move(bases);
            out.push_back(std::move(sq));
        }
        int k = n;
        while (k > 0) {
            if (++pick[k - 1] < per_vertex[k - 1].size()) break;
            pick[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

std::vector<ffla::FqMatrix> kernel_bases(const Cat& cat, const Representation& M,
                                         const Morphism& f) {
    std::vector<FqMatrix> out;
    for (std::size_t v = 0; v < M.dims.size(); ++v) {
        FqMatrix K = ffla::kernel_basis(cat.q(), f[v]);
        out.push_back(ffla::rref(cat.q(), std::move(K)).mat);
    }
    return out;
}

std::vector<ffla::FqMatrix> image_bases(const Cat& cat, const Representation& M,
                                        const Representation& N, const Morphism& f) {
    std::vector<FqMatrix> out;
    for (std::size_t v = 0; v < N.dims.size(); ++v) {
        ffla::Rref r = ffla::rref(cat.q(), ffla::transpose(f[v]));
        FqMatrix basis(r.rank, f[v].rows);
        for (std::uint32_t i = 0; i < r.rank; ++i)
            for (std::uint32_t j = 0; j < basis.cols; ++j) basis.at(i, j) = r.mat.at(i, j);
        out.push_back(std::move(basis));
    }
    return out;
}

// ---- table construction ----

bool IsoClassTable::in_bounds(const DimVector& d) const {
    if (static_cast<int>(d.size()) != cat.n()) return false;
    for (std::size_t v = 0; v < d.size(); ++v)
        if (d[v] < 0 || d[v] > caps[v]) return false;
    return dim_total(d) <= total_cap;
}

const std::vector<ClassId>& IsoClassTable::ids_with_dim(const DimVector& d) const {
    static const std::vector<ClassId> empty;
    auto it = by_dim.find(d);
    return it == by_dim.end() ? empty : it->second;
}

std::optional<ClassId> IsoClassTable::resolve(const std::string& name) const {
    for (ClassId id = 0; id < classes.size(); ++id)
        for (const auto& alias : classes[id].aliases)
            if (alias == name) return id;
    std::string digits = name;
    if (!digits.empty() && (digits[0] == 'C' || digits[0] == 'c')) digits = digits.substr(1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
        ClassId id = static_cast<ClassId>(std::stoul(digits));
        if (id < classes.size()) return id;
    }
    return std::nullopt;
}

std::string IsoClassTable::display_name(ClassId id) const {
    const auto& al = classes.at(id).aliases;
    return al.empty() ? "C" + std::to_string(id) : al.front();
}

std::uint64_t encode_rep(const Cat& cat, const Representation& M) {
    std::uint64_t idx = 0, place = 1;
    for (const auto& m : M.arrow_maps)
        for (std::uint32_t e : m.a) {
            idx += e * place;
            place *= cat.q();
        }
    return idx;
}

Representation decode_state(const Cat& cat, const DimVector& dims, std::uint64_t idx) {
    Representation M;
    M.dims = dims;
    for (auto [s, t] : cat.quiver.arrows) {
        FqMatrix m(dims[t], dims[s]);
        for (auto& e : m.a) {
            e = static_cast<std::uint32_t>(idx % cat.q());
            idx /= cat.q();
        }
        M.arrow_maps.push_back(std::move(m));
    }
    return M;
}

namespace {

struct Move {
    int vertex;
    FqMatrix g, ginv;
};

// Standard generators of GL_d(F_q) together with their inverses:
// a transvection, the cyclic permutation, and a primitive scaling.
std::vector<Move> base_change_moves(const Cat& cat, const DimVector& dims) {
    std::vector<Move> moves;
    const std::uint32_t q = cat.q();
    for (int v = 0; v < cat.n(); ++v) {
        int d = dims[v];
        if (d == 0) continue;
        auto push = [&](FqMatrix g) {
            auto inv = ffla::inverse(q, g);
            moves.push_back({v, g, *inv});
            moves.push_back({v, moves.back().ginv, std::move(g)});
        };
        if (q > 2) {
            FqMatrix diag = ffla::identity(d);
            diag.at(0, 0) = ffla::primitive_root(q);
            push(std::move(diag));
        }
        if (d >= 2) {
            FqMatrix trans = ffla::identity(d);
            trans.at(0, 1) = 1;
            push(std::move(trans));
            FqMatrix cyc(d, d);
            for (int i = 0; i < d; ++i) cyc.at((i + 1) % d, i) = 1;
            push(std::move(cyc));
        }
    }
    return moves;
}

Representation apply_move(const Cat& cat, const Representation& M, const Move& mv) {
    Representation R = M;
    for (std::size_t a = 0; a < cat.quiver.arrows.size(); ++a) {
        auto [s, t] = cat.quiver.arrows[a];
        if (t == mv.vertex) R.arrow_maps[a] = ffla::mat_mul(cat.q(), mv.g, R.arrow_maps[a]);
        if (s == mv.vertex) R.arrow_maps[a] = ffla::mat_mul(cat.q(), R.arrow_maps[a], mv.ginv);
    }
    return R;
}

std::vector<DimVector> dim_vectors(const Cat& cat, const std::vector<int>& caps, int total_cap) {
    std::vector<DimVector> out;
    DimVector cur(cat.n(), 0);
    std::function<void(int, int)> rec = [&](int v, int total) {
        if (v == cat.n()) {
            out.push_back(cur);
            return;
        }
        for (int d = 0; d <= caps[v] && total + d <= total_cap; ++d) {
            cur[v] = d;
            rec(v + 1, total + d);
        }
        cur[v] = 0;
    };
    rec(0, 0);
    std::stable_sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        int ta = dim_total(a), tb = dim_total(b);
        return ta != tb ? ta < tb : a < b;
    });
    return out;
}

void build_aliases(IsoClassTable& table) {
    const Cat& cat = table.cat;
    auto try_alias = [&](const Representation& R, const std::string& name) -> std::optional<ClassId> {
        if (!table.in_bounds(R.dims)) return std::nullopt;
        ClassId id = canonical_id(table, R);
        table.classes[id].aliases.push_back(name);
        return id;
    };
    table.classes[0].aliases.push_back("0");
    std::vector<ClassId> simple_ids;
    for (int v = 0; v < cat.n(); ++v) {
        auto id = try_alias(simple_rep(cat, v), "S" + std::to_string(v + 1));
        if (id) simple_ids.push_back(*id);
    }
    if (cat.n() == 1 && !simple_ids.empty())
        table.classes[simple_ids[0]].aliases.push_back("S");
    std::vector<ClassId> proj_nonsimple, inj_nonsimple;
    for (int v = 0; v < cat.n(); ++v) {
        Representation P = proj_rep(cat, v);
        if (auto id = try_alias(P, "P" + std::to_string(v + 1)))
            if (dim_total(P.dims) > 1) proj_nonsimple.push_back(*id);
        Representation I = inj_rep(cat, v);
        if (auto id = try_alias(I, "I" + std::to_string(v + 1)))
            if (dim_total(I.dims) > 1) inj_nonsimple.push_back(*id);
    }
    if (proj_nonsimple.size() == 1) table.classes[proj_nonsimple[0]].aliases.push_back("P");
    if (inj_nonsimple.size() == 1) table.classes[inj_nonsimple[0]].aliases.push_back("I");
}

} // namespace

void rebuild_indexes(IsoClassTable& table) {
    table.fp_index.clear();
    table.by_dim.clear();
    for (ClassId id = 0; id < table.classes.size(); ++id) {
        auto& ci = table.classes[id];
        ci.end_dim = hom_basis(table.cat, ci.rep, ci.rep).dim;
        table.fp_index[fingerprint(table.cat, ci.rep)].push_back(id);
        table.by_dim[ci.dims].push_back(id);
    }
    for (auto& ci : table.classes) ci.aliases.clear();
    build_aliases(table);
}

IsoClassTable enumerate_reps(const Cat& cat, const std::vector<int>& caps, int total_cap,
                             const Guards& guards) {
    if (static_cast<int>(caps.size()) != cat.n())
        throw ContractError("caps length must equal vertex count");
    for (int c : caps)
        if (c < 0) throw ContractError("negative dimension cap");
    IsoClassTable table{cat, caps, total_cap, guards, {}, {}, {}, {}, false};

    std::uint64_t budget = guards.max_state_space;
    for (const DimVector& dims : dim_vectors(cat, caps, total_cap)) {
        // state count q^E for E matrix entries
        std::uint64_t states = 1;
        bool overflow = false;
        for (auto [s, t] : cat.quiver.arrows) {
            for (int e = 0; e < dims[s] * dims[t]; ++e) {
                if (states > budget / cat.q() + 1) {
                    overflow = true;
                    break;
                }
                states *= cat.q();
            }
            if (overflow) break;
        }
        if (overflow || states > budget)
            throw ResourceError("state-space guard exceeded at dimension vector block");
        budget -= states;

        DimBlock block;
        block.states = states;
        block.class_of_state.assign(states, UINT32_MAX);
        auto moves = base_change_moves(cat, dims);
        Int gl_prod = 1;
        for (int d : dims) gl_prod *= ffla::gl_order(cat.q(), d);

        for (std::uint64_t seed = 0; seed < states; ++seed) {
            if (block.class_of_state[seed] != UINT32_MAX) continue;
            ClassId id = static_cast<ClassId>(table.classes.size());
            Int orbit = 0;
            std::queue<std::uint64_t> bfs;
            bfs.push(seed);
            block.class_of_state[seed] = id;
            while (!bfs.empty()) {
                std::uint64_t cur = bfs.front();
                bfs.pop();
                ++orbit;
                Representation R = decode_state(cat, dims, cur);
                for (const Move& mv : moves) {
                    std::uint64_t nxt = encode_rep(cat, apply_move(cat, R, mv));
                    if (block.class_of_state[nxt] == UINT32_MAX) {
                        block.class_of_state[nxt] = id;
                        bfs.push(nxt);
                    }
                }
            }
            ClassInfo ci;
            ci.rep = decode_state(cat, dims, seed);
            ci.dims = dims;
            ci.orbit = orbit;
            ci.aut = exact_div(gl_prod, orbit, "orbit-stabilizer");
            table.classes.push_back(std::move(ci));
        }
        table.blocks[dims] = std::move(block);
    }
    rebuild_indexes(table);
    return table;
}

ClassId canonical_id(const IsoClassTable& table, const Representation& M) {
    validate_rep(table.cat, M);
    if (!table.in_bounds(M.dims))
        throw BoundError("representation outside the table bounds");
    auto it = table.blocks.find(M.dims);
    if (it == table.blocks.end()) throw ConsistencyError("missing dimension block");
    return it->second.class_of_state.at(encode_rep(table.cat, M));
}

} // namespace hall::quiverrep
