#pragma once
// Explicit bounded complexes of quiver representations: validation, homology,
// and reduction to the normal-form basis of the modified Ringel-Hall algebra
// (coefficient = product of image/kernel Euler pairings, word = acyclic-pair
// block followed by the homology stalk block).

#include <map>
#include <vector>

#include "hall/homalg.hpp"
#include "hall/mhall.hpp"
#include "hall/quiverrep.hpp"

namespace hall::complexes {

using homalg::HallContext;
using quiverrep::Cat;
using quiverrep::ClassId;
using quiverrep::Morphism;
using quiverrep::Representation;

struct BoundedComplex {
    std::map<int, Representation> components;
    std::map<int, Morphism> differentials; // keyed by source degree i, maps X^i -> X^{i+1}
};

// Invariants checked: every differential is a representation morphism and
// consecutive differentials compose to zero. Errors carry the first violating
// degree and vertex.
void validate(const Cat& cat, const BoundedComplex& X);

BoundedComplex make_stalk(const Cat& cat, const Representation& A, int m);
// A -> A by the identity in degrees m-1 and m.
BoundedComplex make_K(const Cat& cat, const Representation& A, int m);
BoundedComplex direct_sum(const Cat& cat, const BoundedComplex& X, const BoundedComplex& Y);

// Support [l, r] over nonzero components; width r-l+1, zero complex -> 0.
int width(const BoundedComplex& X);

// The component at a degree, a zero representation outside the support.
Representation component_at(const Cat& cat, const BoundedComplex& X, int degree);
Morphism differential_at(const Cat& cat, const BoundedComplex& X, int degree);

struct ImagesKernels {
    std::map<int, Representation> images;  // Im d^i as an abstract representation
    std::map<int, Representation> kernels; // Ker d^i likewise
    std::map<int, DimVector> image_dims;
};

ImagesKernels images_kernels(const Cat& cat, const BoundedComplex& X);

// Homology classes by degree; degrees with vanishing homology are omitted.
std::map<int, ClassId> homology(const HallContext& ctx, const BoundedComplex& X);

struct ReducedForm {
    Rat coeff;
    mhall::NormalWord word;
};

// [X] = coeff * word in the (twisted) modified Ringel-Hall algebra. The
// untwisted coefficient is prod_i <Im d^i, Ker d^i>; the twisted form divides
// out the pairwise complex Euler pairings of the ordered word factors.
ReducedForm reduce_to_normal_form(const HallContext& ctx, const BoundedComplex& X, bool twisted);

// For acyclic K: the ordered acyclic-pair factors (degree, image class in K_0).
std::vector<std::pair<int, DimVector>> acyclic_decompose(const HallContext& ctx,
                                                         const BoundedComplex& K);

// Dimension of the space of chain maps X -> Y.
int hom_complex(const Cat& cat, const BoundedComplex& X, const BoundedComplex& Y);

} // namespace hall::complexes
