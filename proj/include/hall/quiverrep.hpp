#pragma once
// The concrete hereditary abelian category: finite-dimensional representations
// of an acyclic quiver over F_q. Objects, morphisms, subobjects, quotients and
// isomorphism classification, materialized up to a dimension bound as an
// IsoClassTable that indexes every Hall-algebra basis downstream.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "hall/base.hpp"
#include "hall/ffla.hpp"
#include "hall/rational.hpp"

namespace hall::quiverrep {

// Vertices are 0-based internally (1-based in all serialized formats).
// Acyclicity is a construction invariant: it guarantees finite path algebra,
// finite Hom/Ext spaces and global dimension one.
struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows; // (source, target)

    Quiver() = default;
    Quiver(int n, std::vector<std::pair<int, int>> arr);
    std::vector<int> topo_order;
};

// Ambient category data: a quiver plus a prime field.
struct Cat {
    Quiver quiver;
    ffla::FieldOrder field;
    std::uint32_t q() const { return field.q; }
    int n() const { return quiver.vertices; }
};

struct Representation {
    DimVector dims;                           // one entry per vertex, >= 0
    std::vector<ffla::FqMatrix> arrow_maps;   // shape dims[target] x dims[source]
    bool operator==(const Representation&) const = default;
};

// A morphism M -> N: one dims_N[v] x dims_M[v] matrix per vertex,
// intertwining the arrow maps.
using Morphism = std::vector<ffla::FqMatrix>;

void validate_rep(const Cat& cat, const Representation& M);

Representation zero_rep(const Cat& cat);
Representation simple_rep(const Cat& cat, int vertex);
Representation proj_rep(const Cat& cat, int vertex); // paths out of the vertex
Representation inj_rep(const Cat& cat, int vertex);  // paths into the vertex
Representation direct_sum(const Cat& cat, const Representation& M, const Representation& N);
Representation random_rep(const Cat& cat, const DimVector& dims, std::mt19937& rng);

// Base change by a tuple of invertible matrices, one per vertex.
Representation conjugate(const Cat& cat, const Representation& M,
                         const std::vector<ffla::FqMatrix>& g);

bool is_morphism(const Cat& cat, const Representation& M, const Representation& N,
                 const Morphism& f);
Morphism zero_morphism(const Representation& M, const Representation& N);
Morphism identity_morphism(const Representation& M);
bool morphism_injective(const Cat& cat, const Representation& M, const Morphism& f);
bool morphism_surjective(const Cat& cat, const Representation& N, const Morphism& f);

struct HomBasis {
    int dim = 0;
    std::vector<Morphism> basis; // deterministic order from the kernel solver
};

// Basis of intertwiners: f_{t(a)} M_a = N_a f_{s(a)} for every arrow a.
HomBasis hom_basis(const Cat& cat, const Representation& M, const Representation& N);

Morphism morphism_from_coords(const Cat& cat, const Representation& M,
                              const Representation& N, const HomBasis& H,
                              const std::vector<std::uint32_t>& coords);

// Visits every element of Hom(M,N) in odometer order over the Hom basis
// coordinates. Throws ResourceError when q^dim exceeds the guard.
void hom_space_scan(const Cat& cat, const Representation& M, const Representation& N,
                    const HomBasis& H, std::uint64_t guard,
                    const std::function<bool(const Morphism&)>& visit);

// |Aut M| counted directly as the invertible endomorphisms.
Int aut_order(const Cat& cat, const Representation& M,
              std::uint64_t guard = Guards{}.max_hom_enum);

// Fingerprint used to pre-filter isomorphism tests: dimension vector, dim End,
// and Hom dimensions against every simple on both sides.
struct Fingerprint {
    DimVector dims;
    int end_dim = 0;
    std::vector<int> hom_to_simple;
    std::vector<int> hom_from_simple;
    auto key() const { return std::tie(dims, end_dim, hom_to_simple, hom_from_simple); }
    bool operator<(const Fingerprint& o) const { return key() < o.key(); }
    bool operator==(const Fingerprint& o) const { return key() == o.key(); }
};

Fingerprint fingerprint(const Cat& cat, const Representation& M);

struct IsoResult {
    bool isomorphic = false;
    bool exact = true; // false when decided by randomized sampling past the guard
};

// Fingerprint filter, then search for an invertible intertwiner over the Hom
// basis; past the enumeration guard, deterministic randomized sampling.
IsoResult is_isomorphic_ex(const Cat& cat, const Representation& M,
                           const Representation& N,
                           std::uint64_t guard = Guards{}.max_hom_enum);
bool is_isomorphic(const Cat& cat, const Representation& M, const Representation& N,
                   std::uint64_t guard = Guards{}.max_hom_enum);

// ---- Subobjects ----

struct SubQuot {
    Representation sub;
    Representation quot;
    std::vector<ffla::FqMatrix> sub_basis; // per-vertex RREF rows spanning the subspace
};

// All arrow-invariant subspace tuples of C, each with its subrepresentation
// and quotient. Deterministic order: per-vertex subspace streams combined by
// an odometer with the last vertex fastest.
std::vector<SubQuot> subrep_enumerate(const Cat& cat, const Representation& C);

// Subrepresentation spanned by given per-vertex bases (throws ContractError
// if the tuple is not arrow-invariant), and the quotient by it. The quotient
// basis completes the subspace basis with standard vectors in index order.
Representation subrep_from_bases(const Cat& cat, const Representation& C,
                                 const std::vector<ffla::FqMatrix>& bases);
Representation quotient_by(const Cat& cat, const Representation& C,
                           const std::vector<ffla::FqMatrix>& bases);

// Per-vertex bases of the kernel / image of a morphism f : M -> N (these are
// automatically arrow-invariant since f intertwines).
std::vector<ffla::FqMatrix> kernel_bases(const Cat& cat, const Representation& M,
                                         const Morphism& f);
std::vector<ffla::FqMatrix> image_bases(const Cat& cat, const Representation& M,
                                        const Representation& N, const Morphism& f);

// ---- Iso-class table ----

using ClassId = std::uint32_t;

struct ClassInfo {
    Representation rep;  // canonical representative: first seen in enumeration order
    DimVector dims;
    Int aut;             // |Aut|, via orbit-stabilizer against the base-change group
    Int orbit;           // orbit size within its dimension block
    int end_dim = 0;
    std::vector<std::string> aliases;
};

struct DimBlock {
    std::uint64_t states = 0;                 // q^(#matrix entries)
    std::vector<ClassId> class_of_state;      // total classification of the block
};

struct IsoClassTable {
    Cat cat;
    std::vector<int> caps;
    int total_cap = 0;
    Guards guards;
    std::vector<ClassInfo> classes;
    std::map<DimVector, DimBlock> blocks;
    std::map<Fingerprint, std::vector<ClassId>> fp_index;
    std::map<DimVector, std::vector<ClassId>> by_dim;
    bool probabilistic = false; // set if any classification fell back to sampling

    bool in_bounds(const DimVector& d) const;
    const ClassInfo& cls(ClassId id) const { return classes.at(id); }
    ClassId zero_id() const { return 0; }
    const std::vector<ClassId>& ids_with_dim(const DimVector& d) const;
    std::optional<ClassId> resolve(const std::string& name) const; // alias | C<id> | id
    std::string display_name(ClassId id) const;
};

// Complete deterministic classification of all representations with
// dim <= caps componentwise and total dim <= total_cap. Ids are assigned
// first-seen, scanning dimension vectors by (total, lex) and matrix tuples in
// odometer order within each block.
IsoClassTable enumerate_reps(const Cat& cat, const std::vector<int>& caps,
                             int total_cap, const Guards& guards = {});

ClassId canonical_id(const IsoClassTable& table, const Representation& M);

// Rebuilds the derived indexes (fingerprints, aliases, dim index) of a table
// whose classes/blocks were restored from a cache file.
void rebuild_indexes(IsoClassTable& table);

std::uint64_t encode_rep(const Cat& cat, const Representation& M);
Representation decode_state(const Cat& cat, const DimVector& dims, std::uint64_t idx);

} // namespace hall::quiverrep
