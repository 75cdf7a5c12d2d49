#pragma once
// Homological counting over a fixed iso-class table: Euler forms (category
// level and complex level closed forms), Ext^1 dimensions, Hall numbers,
// extension counts with prescribed middle term, and the gamma structure
// constants of the adjacent-degree relations. Everything is an exact integer
// or rational; any division is checked for exactness.

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <tuple>
#include <vector>

#include "hall/quiverrep.hpp"
#include "hall/rational.hpp"

namespace hall::homalg {

using quiverrep::Cat;
using quiverrep::ClassId;
using quiverrep::IsoClassTable;
using quiverrep::Representation;

// Multiplicative Euler-form values are always integer powers of q; they are
// carried as the exponent.
struct EulerValue {
    std::uint32_t q = 0;
    long exponent = 0;
    Rat value() const { return q_pow(q, exponent); }
};

// Bilinear form on K_0: sum_v a_v b_v - sum_{arrows s->t} a_s b_t. This is
// the standard concretization for an acyclic quiver; the Euler-form agreement
// oracle in verify keeps it honest against |Hom|/|Ext^1| counts.
long additive_euler(const quiverrep::Quiver& Q, const DimVector& a, const DimVector& b);
EulerValue mult_euler(const Cat& cat, const DimVector& a, const DimVector& b);

// dim Hom(M,N) - <dim M, dim N>; negative results signal a broken Euler form
// or Hom computation and raise ConsistencyError.
int ext1_dim(const Cat& cat, const Representation& M, const Representation& N);

// A K_0 class of a bounded complex, decomposed into stalk and acyclic-pair
// generators: [U_{alpha,n}] has alpha concentrated in one degree,
// [K_{alpha,n}] covers degrees n-1 and n.
struct ComplexClassTerm {
    enum Kind { stalk, acyclic } kind = stalk;
    DimVector alpha;
    int degree = 0;
};

long complex_euler_exponent(const quiverrep::Quiver& Q,
                            std::span<const ComplexClassTerm> lhs,
                            std::span<const ComplexClassTerm> rhs);
EulerValue complex_euler(const Cat& cat, std::span<const ComplexClassTerm> lhs,
                         std::span<const ComplexClassTerm> rhs);

// Read-only view over an IsoClassTable with memoized counting sweeps.
// All methods are safe for concurrent use (caches behind a lock).
class HallContext {
  public:
    explicit HallContext(const IsoClassTable& table) : table_(table) {}

    const IsoClassTable& table() const { return table_; }
    const Cat& cat() const { return table_.cat; }
    std::uint32_t q() const { return table_.cat.q(); }
    std::size_t class_count() const { return table_.classes.size(); }
    const DimVector& dims(ClassId id) const { return table_.cls(id).dims; }
    const Representation& rep(ClassId id) const { return table_.cls(id).rep; }
    const Int& aut(ClassId id) const { return table_.cls(id).aut; }

    long euler(const DimVector& a, const DimVector& b) const;
    Rat qp(long e) const { return q_pow(q(), e); }

    int hom_dim(ClassId A, ClassId B) const;
    int ext1(ClassId A, ClassId B) const;

    // g^C_{AB}: subobjects of C isomorphic to B with quotient isomorphic to A.
    Int hall_number(ClassId A, ClassId B, ClassId C) const;

    // Count of injective morphisms B -> C with cokernel isomorphic to A.
    // Independent oracle path: enumerates Hom(B,C) rather than subobjects.
    Int injection_count(ClassId B, ClassId C, ClassId A) const;

    // |Ext^1(A,B)_C| via the homological formula, verified integral.
    Int ext_count_with_middle(ClassId A, ClassId B, ClassId C) const;

    // gamma^{MN}_{AB} = |S| a_M a_N / (a_A a_B) with
    // S = { g in Hom(B,A) : Ker g = M, Coker g = N }.
    Rat gamma(ClassId A, ClassId B, ClassId M, ClassId N) const;

    // Rewriting-engine structure constants.
    // same_degree_line(A,B): all (C, |Ext^1(A,B)_C| / |Hom(A,B)|) with C in
    // the table; throws BoundError when dim A + dim B exceeds the bounds.
    std::vector<std::pair<ClassId, Rat>> same_degree_line(ClassId A, ClassId B) const;
    // gamma_line(A,B): all (M, N, gamma^{MN}_{AB}) with nonzero gamma.
    std::vector<std::tuple<ClassId, ClassId, Rat>> gamma_line(ClassId A, ClassId B) const;

  private:
    using Pair = std::pair<ClassId, ClassId>;
    const std::map<Pair, Int>& hall_sweep(ClassId C) const;   // (A,B) -> g^C_{AB}
    const std::map<Pair, Int>& gamma_sweep(ClassId A, ClassId B) const; // (M,N) -> |S|

    const IsoClassTable& table_;
    mutable std::recursive_mutex mu_;
    mutable std::map<Pair, int> hom_memo_;
    mutable std::map<ClassId, std::map<Pair, Int>> hall_memo_;
    mutable std::map<Pair, std::map<Pair, Int>> gamma_memo_;
};

} // namespace hall::homalg
