#pragma once
// The modified Ringel-Hall algebra and its twist, presented on the normal-form
// basis: a block of acyclic-pair (torus) factors in strictly descending degree
// followed by a block of stalk factors in strictly descending degree. Products
// are evaluated by a rewriting engine whose rules are the defining relations;
// the derived Hall algebra reuses the same engine with a different scalar
// dictionary and no torus block.

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "hall/homalg.hpp"
#include "hall/rational.hpp"

namespace hall::mhall {

using homalg::HallContext;
using quiverrep::ClassId;

// K_{alpha_r, r} ... K_{alpha_l, l} * U_{A_r, r} ... U_{A_l, l}. Canonical:
// no zero exponent vectors, no zero-object stalk entries. std::map keeps the
// degrees sorted; the product semantics reads each block in descending order.
struct NormalWord {
    std::map<int, DimVector> torus;
    std::map<int, ClassId> stalks;

    auto key() const { return std::tie(torus, stalks); }
    bool operator<(const NormalWord& o) const { return key() < o.key(); }
    bool operator==(const NormalWord& o) const { return key() == o.key(); }
    bool is_unit() const { return torus.empty() && stalks.empty(); }
};

// A single basis element of the quantum torus of acyclic complexes: a
// finitely supported exponent map degree -> K_0 element.
struct TorusElement {
    std::map<int, DimVector> exps;
    bool operator==(const TorusElement& o) const = default;
};

TorusElement torus_inverse(const TorusElement& t);

// Finite rational linear combination of normal words; zero coefficients are
// never stored.
struct Element {
    std::map<NormalWord, Rat> terms;

    static Element unit();
    static Element zero() { return {}; }
    bool operator==(const Element& o) const = default;
};

Element add(const Element& a, const Element& b);
Element scale(const Element& a, const Rat& c);
Element single(NormalWord w, Rat c = Rat(1));

enum class Mode { mh, mh_tw, dh, dh_tw };
constexpr bool is_twisted(Mode m) { return m == Mode::mh_tw || m == Mode::dh_tw; }
constexpr bool has_torus(Mode m) { return m == Mode::mh || m == Mode::mh_tw; }

// Tie-break policy for which reducible pair fires first. Normal forms are
// independent of it; the confluence suite checks exactly that.
enum class Strategy { leftmost_first, rightmost_first };

struct Factor {
    enum Kind { torus, stalk } kind = stalk;
    int degree = 0;
    DimVector alpha; // torus exponent
    ClassId cls = 0; // stalk class
};

Factor torus_factor(int degree, DimVector alpha);
Factor stalk_factor(int degree, ClassId cls);
std::vector<Factor> word_factors(const NormalWord& w);

// Rewrites an arbitrary factor sequence to a normalized Element equal to the
// ordered product of the factors in the given mode.
Element normalize(const HallContext& ctx, Mode mode, std::vector<Factor> seq,
                  const Rat& coeff = Rat(1), Strategy strategy = Strategy::leftmost_first,
                  std::uint64_t max_steps = 0 /* 0: table guard */);

Element multiply(const HallContext& ctx, Mode mode, const Element& x, const Element& y,
                 Strategy strategy = Strategy::leftmost_first);

// U_{A,n} . U_{B,n} expanded over all middle terms.
Element same_degree_product(const HallContext& ctx, ClassId A, ClassId B, int degree,
                            bool twisted);

// Product of two torus group elements: componentwise exponent sum plus the
// relation scalar (always 1 in the twisted algebra, whose torus is central).
std::pair<Rat, TorusElement> torus_multiply(const HallContext& ctx, const TorusElement& a,
                                            const TorusElement& b, bool twisted);

} // namespace hall::mhall
