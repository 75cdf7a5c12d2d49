#pragma once
// The derived Hall algebra and its twist on generators Z_A^{[n]}, sharing the
// mhall rewriting engine (no torus block, its own scalar dictionary), the
// embedding iota into the twisted modified Ringel-Hall algebra, and the
// inverse tensor decomposition word-by-word.

#include <map>
#include <tuple>
#include <utility>

#include "hall/homalg.hpp"
#include "hall/mhall.hpp"

namespace hall::dhall {

using homalg::HallContext;
using quiverrep::ClassId;

// Z_{A_r}^{[r]} ... Z_{A_l}^{[l]} in strictly descending degree; zero-object
// entries dropped.
struct DerivedWord {
    std::map<int, ClassId> stalks;
    bool operator<(const DerivedWord& o) const { return stalks < o.stalks; }
    bool operator==(const DerivedWord& o) const = default;
    bool is_unit() const { return stalks.empty(); }
};

struct DHElement {
    std::map<DerivedWord, Rat> terms;
    static DHElement unit();
    bool operator==(const DHElement& o) const = default;
};

DHElement dh_single(DerivedWord w, Rat c = Rat(1));
DHElement dh_add(const DHElement& a, const DHElement& b);
DHElement generator(ClassId A, int degree); // Z_A^{[degree]}

DHElement dh_multiply(const HallContext& ctx, const DHElement& x, const DHElement& y,
                      bool twisted,
                      mhall::Strategy strategy = mhall::Strategy::leftmost_first);

// Torus correction attached to iota(Z_A^{[n]}): alternating exponents of the
// class of A in the degrees between n and 0 (exclusive).
mhall::TorusElement iota_torus(const HallContext& ctx, ClassId A, int degree);

// Image of a basis word: stalk block unchanged, torus block the sum of the
// per-generator corrections (the twisted torus is central, so the image of a
// descending word is again a single basis word with coefficient 1).
mhall::NormalWord iota_word(const HallContext& ctx, const DerivedWord& w);
mhall::Element iota(const HallContext& ctx, const DHElement& x);

// Unique (derived word, torus element) with iota(word) * torus = w.
std::pair<DerivedWord, mhall::TorusElement> tensor_decompose(const HallContext& ctx,
                                                             const mhall::NormalWord& w);

} // namespace hall::dhall
