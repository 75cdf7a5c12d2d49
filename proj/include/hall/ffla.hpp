#pragma once
// Exact dense linear algebra over prime fields F_q: the substrate for every
// Hom/Ext/automorphism count. All routines are pure and deterministic; row
// reduction and products run on the kernel layer (scalar or SIMD).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hall/base.hpp"
#include "hall/kernels.hpp"
#include "hall/rational.hpp"

namespace hall::ffla {

// A prime field order. Primes only; extension fields are an explicit
// non-goal of this version (the natural extension point would be a table
// of Zech logarithms behind the same residue interface).
struct FieldOrder {
    std::uint32_t q;
    explicit FieldOrder(std::uint32_t q_);
};

std::uint32_t fq_add(std::uint32_t q, std::uint32_t a, std::uint32_t b);
std::uint32_t fq_sub(std::uint32_t q, std::uint32_t a, std::uint32_t b);
std::uint32_t fq_mul(std::uint32_t q, std::uint32_t a, std::uint32_t b);
std::uint32_t fq_neg(std::uint32_t q, std::uint32_t a);
std::uint32_t fq_inv(std::uint32_t q, std::uint32_t a); // throws DomainError on 0

// Smallest generator of the multiplicative group F_q^*.
std::uint32_t primitive_root(std::uint32_t q);

// Dense row-major matrix with entries in [0, q). The field order travels
// beside the matrix, not inside it.
struct FqMatrix {
    std::uint32_t rows = 0, cols = 0;
    std::vector<std::uint32_t> a;

    FqMatrix() = default;
    FqMatrix(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    std::uint32_t& at(std::uint32_t i, std::uint32_t j) { return a[std::size_t(i) * cols + j]; }
    std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return a[std::size_t(i) * cols + j]; }
    bool operator==(const FqMatrix& o) const = default;
};

FqMatrix identity(std::uint32_t n);
FqMatrix mat_mul(std::uint32_t q, const FqMatrix& A, const FqMatrix& B);
FqMatrix mat_add(std::uint32_t q, const FqMatrix& A, const FqMatrix& B);
FqMatrix mat_sub(std::uint32_t q, const FqMatrix& A, const FqMatrix& B);
FqMatrix transpose(const FqMatrix& A);
std::vector<std::uint32_t> mat_vec(std::uint32_t q, const FqMatrix& A,
                                   const std::vector<std::uint32_t>& x);
bool is_zero(const FqMatrix& A);

struct Rref {
    FqMatrix mat;                 // reduced row-echelon form
    std::vector<std::uint32_t> pivot_cols;
    std::uint32_t rank = 0;
};

Rref rref(std::uint32_t q, FqMatrix A);
std::uint32_t rank(std::uint32_t q, const FqMatrix& A);

// Rows of the result form a deterministic basis of the right null space
// (free variables set to unit vectors in ascending column order).
FqMatrix kernel_basis(std::uint32_t q, const FqMatrix& A);

std::optional<FqMatrix> inverse(std::uint32_t q, const FqMatrix& A);

struct SolveResult {
    bool solvable = false;
    std::vector<std::uint32_t> particular; // one solution of A x = b
    FqMatrix kernel;                       // rows span the solution kernel
    std::uint32_t rank = 0;
};

// Solves A x = b. Every returned solution is re-substituted into the system;
// a mismatch raises ConsistencyError rather than returning silently.
SolveResult linear_solve(std::uint32_t q, const FqMatrix& A,
                         const std::vector<std::uint32_t>& b);

// Emits each d-dimensional subspace of F_q^n exactly once as a reduced
// row-echelon basis (d x n). Order: pivot-column patterns lexicographically
// ascending, then free entries in odometer order (last free slot fastest).
// d > n yields nothing. Return false from the visitor to stop early.
void subspace_enumerate(std::uint32_t q, std::uint32_t n, std::uint32_t d,
                        const std::function<bool(const FqMatrix&)>& visit);

std::vector<FqMatrix> all_subspaces_of_dim(std::uint32_t q, std::uint32_t n, std::uint32_t d);
std::vector<FqMatrix> all_subspaces(std::uint32_t q, std::uint32_t n); // all dims, ascending

// Reduces v against an RREF basis; returns coordinates if v lies in the row
// space, nothing otherwise.
std::optional<std::vector<std::uint32_t>> coordinates_in_rowspace(
    std::uint32_t q, const Rref& basis, std::vector<std::uint32_t> v);

// Deterministically extends the rows of `basis` (rank r, RREF) to a basis of
// F_q^n by appending standard vectors in index order.
FqMatrix complete_basis(std::uint32_t q, const FqMatrix& basis);

Int gl_order(std::uint32_t q, std::uint32_t n); // |GL_n(F_q)|
Int gaussian_binomial(std::uint32_t q, std::uint32_t n, std::uint32_t d);

} // namespace hall::ffla
