#pragma once
// Executable theorem checks: Green's formula, associativity and confluence of
// the rewriting algebras, the embedding suite, and the cross-method counting
// oracles. Each check walks its full parameter space (exhaustive at desk
// scale), compares both sides exactly, and returns a machine-readable report
// whose canonical form is byte-identical across runs.

#include <cstdint>
#include <string>
#include <vector>

#include "hall/dhall.hpp"
#include "hall/homalg.hpp"
#include "hall/mhall.hpp"

namespace hall::verify {

using homalg::HallContext;

struct Failure {
    std::string instance; // enough data to re-run standalone
    std::string lhs, rhs; // both sides as exact rationals / element dumps
};

struct CheckReport {
    std::string check;
    std::string params;
    std::uint64_t instances = 0;
    std::vector<Failure> failures;
    double wall_ms = 0; // informational only, not part of the canonical form
    bool pass() const { return failures.empty(); }
};

// Green's formula over all class 4-tuples (A,B,A',B') with matching
// dimension-vector sums and total dimension <= total_dim_cap.
CheckReport green_check(const HallContext& ctx, int total_dim_cap, int threads = 1);

// Two association orders of seeded pseudo-random generator triples compared
// exactly. Generators: stalk factors with class total dim <= gen_dim_cap and
// torus factors with small exponents, degrees within the window.
CheckReport associativity_suite(const HallContext& ctx, mhall::Mode mode, int samples,
                                std::uint64_t seed, int degree_window = 2,
                                int gen_dim_cap = 2);

// Seeded raw factor sequences reduced under both rewriting strategies.
CheckReport confluence_suite(const HallContext& ctx, mhall::Mode mode, int samples,
                             std::uint64_t seed, int degree_window = 2, int gen_dim_cap = 2,
                             int word_len = 4);

// Homomorphism property of iota on all generator pairs within the window,
// injectivity on basis words, and the tensor round trip on seeded words.
CheckReport embed_suite(const HallContext& ctx, int degree_window = 2, int dim_cap = 2,
                        int sampled_words = 100, std::uint64_t seed = 1);

// Hall-number-vs-injection-count, Ext-sum, gamma-vs-g-convolution and
// hom_complex-vs-closed-form oracles over the full in-cap parameter space.
CheckReport consistency_suite(const HallContext& ctx, int threads = 1);

// Deterministic class sampling support shared with the test drivers.
std::vector<quiverrep::ClassId> classes_with_total_dim_at_most(const HallContext& ctx, int cap);

} // namespace hall::verify
