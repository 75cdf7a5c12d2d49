#include "hall/ffla.hpp"

#include <algorithm>
#include <numeric>

namespace hall::ffla {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

FieldOrder::FieldOrder(std::uint32_t q_) : q(q_) {
    if (!is_prime(q)) throw ContractError("field order must be prime, got " + std::to_string(q));
    if (q >= (1u << 15)) throw ContractError("field order too large for the residue kernels");
}

std::uint32_t fq_add(std::uint32_t q, std::uint32_t a, std::uint32_t b) { return (a + b) % q; }
std::uint32_t fq_sub(std::uint32_t q, std::uint32_t a, std::uint32_t b) { return (a + q - b) % q; }
std::uint32_t fq_mul(std::uint32_t q, std::uint32_t a, std::uint32_t b) { return (a * b) % q; }
std::uint32_t fq_neg(std::uint32_t q, std::uint32_t a) { return a == 0 ? 0 : q - a; }

std::uint32_t fq_inv(std::uint32_t q, std::uint32_t a) {
    if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q));
    // extended Euclid on (a, q)
    std::int64_t t = 0, newt = 1, r = q, newr = a;
    while (newr != 0) {
        std::int64_t quo = r / newr;
        std::int64_t tmp = t - quo * newt;
        t = newt;
        newt = tmp;
        tmp = r - quo * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += q;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t primitive_root(std::uint32_t q) {
    if (q == 2) return 1;
    std::vector<std::uint32_t> prime_factors;
    std::uint32_t m = q - 1;
    for (std::uint32_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    auto pow_mod = [q](std::uint32_t b, std::uint32_t e) {
        std::uint64_t r = 1, x = b;
        while (e) {
            if (e & 1) r = r * x % q;
            x = x * x % q;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    };
    for (std::uint32_t g = 2; g < q; ++g) {
        bool ok = true;
        for (std::uint32_t p : prime_factors)
            if (pow_mod(g, (q - 1) / p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw ConsistencyError("no primitive root found");
}

FqMatrix identity(std::uint32_t n) {
    FqMatrix I(n, n);
    for (std::uint32_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

FqMatrix mat_mul(std::uint32_t q, const FqMatrix& A, const FqMatrix& B) {
    if (A.cols != B.rows) throw ContractError("matmul shape mismatch");
    FqMatrix C(A.rows, B.cols);
    if (A.rows && B.cols && A.cols)
        kern::active().matmul(C.a.data(), A.a.data(), B.a.data(), A.rows, A.cols, B.cols, q);
    return C;
}

FqMatrix mat_add(std::uint32_t q, const FqMatrix& A, const FqMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw ContractError("matadd shape mismatch");
    FqMatrix C = A;
    if (!C.a.empty()) kern::active().axpy(C.a.data(), B.a.data(), 1, C.a.size(), q);
    return C;
}

FqMatrix mat_sub(std::uint32_t q, const FqMatrix& A, const FqMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw ContractError("matsub shape mismatch");
    FqMatrix C = A;
    if (!C.a.empty()) kern::active().axpy(C.a.data(), B.a.data(), q - 1, C.a.size(), q);
    return C;
}

FqMatrix transpose(const FqMatrix& A) {
    FqMatrix T(A.cols, A.rows);
    for (std::uint32_t i = 0; i < A.rows; ++i)
        for (std::uint32_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

std::vector<std::uint32_t> mat_vec(std::uint32_t q, const FqMatrix& A,
                                   const std::vector<std::uint32_t>& x) {
    if (x.size() != A.cols) throw ContractError("matvec shape mismatch");
    FqMatrix X(A.cols, 1);
    X.a = x;
    return mat_mul(q, A, X).a;
}

bool is_zero(const FqMatrix& A) {
    return std::all_of(A.a.begin(), A.a.end(), [](std::uint32_t v) { return v == 0; });
}

Rref rref(std::uint32_t q, FqMatrix A) {
    const auto& K = kern::active();
    Rref out;
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < A.cols && r < A.rows; ++c) {
        std::uint32_t piv = r;
        while (piv < A.rows && A.at(piv, c) == 0) ++piv;
        if (piv == A.rows) continue;
        if (piv != r)
            for (std::uint32_t j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(r, j));
        std::uint32_t inv = fq_inv(q, A.at(r, c));
        if (inv != 1 && A.cols)
            K.scale(&A.a[std::size_t(r) * A.cols], inv, A.cols, q);
        for (std::uint32_t i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            std::uint32_t f = A.at(i, c);
            if (f != 0)
                K.axpy(&A.a[std::size_t(i) * A.cols], &A.a[std::size_t(r) * A.cols], q - f,
                       A.cols, q);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(A);
    return out;
}

std::uint32_t rank(std::uint32_t q, const FqMatrix& A) { return rref(q, A).rank; }

FqMatrix kernel_basis(std::uint32_t q, const FqMatrix& A) {
    Rref R = rref(q, A);
    std::vector<bool> is_pivot(A.cols, false);
    for (std::uint32_t c : R.pivot_cols) is_pivot[c] = true;
    std::vector<std::uint32_t> free_cols;
    for (std::uint32_t c = 0; c < A.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FqMatrix B(static_cast<std::uint32_t>(free_cols.size()), A.cols);
    for (std::uint32_t bi = 0; bi < B.rows; ++bi) {
        std::uint32_t fc = free_cols[bi];
        B.at(bi, fc) = 1;
        for (std::uint32_t pi = 0; pi < R.rank; ++pi)
            B.at(bi, R.pivot_cols[pi]) = fq_neg(q, R.mat.at(pi, fc));
    }
    return B;
}

std::optional<FqMatrix> inverse(std::uint32_t q, const FqMatrix& A) {
    if (A.rows != A.cols) throw ContractError("inverse of non-square matrix");
    std::uint32_t n = A.rows;
    FqMatrix aug(n, 2 * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Rref R = rref(q, std::move(aug));
    if (R.rank != n) return std::nullopt;
    FqMatrix inv(n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) inv.at(i, j) = R.mat.at(i, n + j);
    return inv;
}

SolveResult linear_solve(std::uint32_t q, const FqMatrix& A,
                         const std::vector<std::uint32_t>& b) {
    if (b.size() != A.rows) throw ContractError("linear_solve shape mismatch");
    FqMatrix aug(A.rows, A.cols + 1);
    for (std::uint32_t i = 0; i < A.rows; ++i) {
        for (std::uint32_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    Rref R = rref(q, std::move(aug));
    SolveResult out;
    out.kernel = kernel_basis(q, A);
    // inconsistent iff a pivot lands in the augmented column
    for (std::uint32_t c : R.pivot_cols)
        if (c == A.cols) {
            out.solvable = false;
            out.rank = R.rank - 1;
            return out;
        }
    out.solvable = true;
    out.rank = R.rank;
    out.particular.assign(A.cols, 0);
    for (std::uint32_t pi = 0; pi < R.rank; ++pi)
        out.particular[R.pivot_cols[pi]] = R.mat.at(pi, A.cols);
    // self-check by substitution: exactness over everything else
    std::vector<std::uint32_t> check = mat_vec(q, A, out.particular);
    if (check != b) throw ConsistencyError("linear_solve substitution check failed");
    return out;
}

void subspace_enumerate(std::uint32_t q, std::uint32_t n, std::uint32_t d,
                        const std::function<bool(const FqMatrix&)>& visit) {
    if (d > n) return;
    if (d == 0) {
        visit(FqMatrix(0, n));
        return;
    }
    // pivot pattern = increasing column indices p_0 < ... < p_{d-1}
    std::vector<std::uint32_t> piv(d);
    std::iota(piv.begin(), piv.end(), 0u);
    bool more = true;
    while (more) {
        // free slots: (row i, col j) with j > piv[i] and j not a pivot
        std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
        std::vector<bool> is_pivot(n, false);
        for (std::uint32_t p : piv) is_pivot[p] = true;
        for (std::uint32_t i = 0; i < d; ++i)
            for (std::uint32_t j = piv[i] + 1; j < n; ++j)
                if (!is_pivot[j]) slots.emplace_back(i, j);
        FqMatrix B(d, n);
        for (std::uint32_t i = 0; i < d; ++i) B.at(i, piv[i]) = 1;
        // odometer over the free entries, last slot fastest
        while (true) {
            if (!visit(B)) return;
            std::size_t k = slots.size();
            while (k > 0) {
                auto [i, j] = slots[k - 1];
                if (++B.at(i, j) < q) break;
                B.at(i, j) = 0;
                --k;
            }
            if (k == 0) break;
        }
        // next pivot combination in lexicographic order
        more = false;
        for (std::uint32_t i = d; i-- > 0;) {
            if (piv[i] + (d - i) <= n - 1) {
                ++piv[i];
                for (std::uint32_t j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
                more = true;
                break;
            }
        }
    }
}

std::vector<FqMatrix> all_subspaces_of_dim(std::uint32_t q, std::uint32_t n, std::uint32_t d) {
    std::vector<FqMatrix> out;
    subspace_enumerate(q, n, d, [&](const FqMatrix& B) {
        out.push_back(B);
        return true;
    });
    return out;
}

std::vector<FqMatrix> all_subspaces(std::uint32_t q, std::uint32_t n) {
    std::vector<FqMatrix> out;
    for (std::uint32_t d = 0; d <= n; ++d)
        for (auto& B : all_subspaces_of_dim(q, n, d)) out.push_back(std::move(B));
    return out;
}

std::optional<std::vector<std::uint32_t>> coordinates_in_rowspace(
    std::uint32_t q, const Rref& basis, std::vector<std::uint32_t> v) {
    std::vector<std::uint32_t> coords(basis.rank, 0);
    for (std::uint32_t i = 0; i < basis.rank; ++i) {
        std::uint32_t c = v[basis.pivot_cols[i]];
        coords[i] = c;
        if (c != 0 && basis.mat.cols)
            kern::active().axpy(v.data(), &basis.mat.a[std::size_t(i) * basis.mat.cols],
                                q - c, basis.mat.cols, q);
    }
    for (std::uint32_t x : v)
        if (x != 0) return std::nullopt;
    return coords;
}

FqMatrix complete_basis(std::uint32_t q, const FqMatrix& basis) {
    std::uint32_t n = basis.cols;
    FqMatrix full(n, n);
    std::uint32_t filled = basis.rows;
    for (std::uint32_t i = 0; i < basis.rows; ++i)
        for (std::uint32_t j = 0; j < n; ++j) full.at(i, j) = basis.at(i, j);
    FqMatrix probe = basis;
    for (std::uint32_t e = 0; e < n && filled < n; ++e) {
        FqMatrix trial(probe.rows + 1, n);
        trial.a.assign(probe.a.begin(), probe.a.end());
        trial.a.resize(std::size_t(probe.rows + 1) * n, 0);
        trial.at(probe.rows, e) = 1;
        if (rank(q, trial) == trial.rows) {
            for (std::uint32_t j = 0; j < n; ++j) full.at(filled, j) = (j == e) ? 1 : 0;
            ++filled;
            probe = std::move(trial);
        }
    }
    if (filled != n) throw ConsistencyError("basis completion failed");
    return full;
}

Int gl_order(std::uint32_t q, std::uint32_t n) {
    Int res = 1;
    Int qn = int_pow(q, n);
    for (std::uint32_t i = 0; i < n; ++i) res *= qn - int_pow(q, i);
    return res;
}

Int gaussian_binomial(std::uint32_t q, std::uint32_t n, std::uint32_t d) {
    if (d > n) return 0;
    Int num = 1, den = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        num *= int_pow(q, n - i) - 1;
        den *= int_pow(q, i + 1) - 1;
    }
    return exact_div(num, den, "gaussian_binomial");
}

} // namespace hall::ffla
