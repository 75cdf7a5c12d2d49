#include "hall/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "hall/complexes.hpp"

namespace hall::verify {

using homalg::ComplexClassTerm;
using mhall::Element;
using mhall::Factor;
using mhall::Mode;
using mhall::NormalWord;
using mhall::Strategy;
using quiverrep::ClassId;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::string dims_str(const DimVector& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

std::string word_str(const NormalWord& w) {
    std::string s;
    for (auto it = w.torus.rbegin(); it != w.torus.rend(); ++it)
        s += "K[" + std::to_string(it->first) + "]" + dims_str(it->second);
    for (auto it = w.stalks.rbegin(); it != w.stalks.rend(); ++it)
        s += "U[" + std::to_string(it->first) + "]C" + std::to_string(it->second);
    return s.empty() ? "1" : s;
}

std::string element_str(const Element& e) {
    if (e.terms.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : e.terms) {
        if (!s.empty()) s += " + ";
        s += rat_str(c) + "*" + word_str(w);
    }
    return s;
}

std::string dh_str(const dhall::DHElement& e) {
    if (e.terms.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : e.terms) {
        if (!s.empty()) s += " + ";
        std::string ws;
        for (auto it = w.stalks.rbegin(); it != w.stalks.rend(); ++it)
            ws += "Z[" + std::to_string(it->first) + "]C" + std::to_string(it->second);
        s += rat_str(c) + "*" + (ws.empty() ? "1" : ws);
    }
    return s;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += threads) body(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace

std::vector<ClassId> classes_with_total_dim_at_most(const HallContext& ctx, int cap) {
    std::vector<ClassId> out;
    for (ClassId id = 0; id < ctx.class_count(); ++id)
        if (dim_total(ctx.dims(id)) <= cap) out.push_back(id);
    return out;
}

CheckReport green_check(const HallContext& ctx, int total_dim_cap, int threads) {
    Timer timer;
    const auto& table = ctx.table();
    for (int c : table.caps)
        if (c < total_dim_cap)
            throw BoundError("green_check cap exceeds the table's per-vertex caps");
    if (table.total_cap < total_dim_cap)
        throw BoundError("green_check cap exceeds the table's total-dimension cap");

    struct Quad {
        ClassId A, B, A2, B2;
    };
    std::vector<Quad> quads;
    std::vector<ClassId> all = classes_with_total_dim_at_most(ctx, total_dim_cap);
    for (ClassId A : all)
        for (ClassId B : all) {
            DimVector sum = dim_add(ctx.dims(A), ctx.dims(B));
            if (dim_total(sum) > total_dim_cap) continue;
            for (ClassId A2 : all) {
                if (!dim_leq(ctx.dims(A2), sum)) continue;
                for (ClassId B2 : all)
                    if (dim_add(ctx.dims(A2), ctx.dims(B2)) == sum)
                        quads.push_back({A, B, A2, B2});
            }
        }

    // warm the subobject sweeps serially so the parallel phase is read-mostly
    for (ClassId C : classes_with_total_dim_at_most(ctx, total_dim_cap))
        ctx.hall_number(ctx.table().zero_id(), C, C);

    std::vector<std::optional<Failure>> fails(quads.size());
    parallel_for(quads.size(), threads, [&](std::size_t qi) {
        const Quad& t = quads[qi];
        DimVector sum = dim_add(ctx.dims(t.A), ctx.dims(t.B));
        Rat lhs(0);
        for (ClassId C : table.ids_with_dim(sum)) {
            Int g1 = ctx.hall_number(t.A, t.B, C);
            if (g1 == 0) continue;
            Int g2 = ctx.hall_number(t.A2, t.B2, C);
            if (g2 == 0) continue;
            lhs += make_rat(g1 * g2, ctx.aut(C));
        }
        lhs *= Rat(ctx.aut(t.A) * ctx.aut(t.B) * ctx.aut(t.A2) * ctx.aut(t.B2));

        Rat rhs(0);
        for (ClassId X : all) {
            if (!dim_leq(ctx.dims(X), ctx.dims(t.A)) || !dim_leq(ctx.dims(X), ctx.dims(t.A2)))
                continue;
            DimVector dX2 = dim_sub(ctx.dims(t.A), ctx.dims(X));
            DimVector dY = dim_sub(ctx.dims(t.A2), ctx.dims(X));
            for (ClassId X2 : table.ids_with_dim(dX2)) {
                Int gA = ctx.hall_number(X, X2, t.A);
                if (gA == 0) continue;
                for (ClassId Y : table.ids_with_dim(dY)) {
                    Int gA2 = ctx.hall_number(X, Y, t.A2);
                    if (gA2 == 0) continue;
                    DimVector dY2 = dim_sub(ctx.dims(t.B), ctx.dims(Y));
                    if (!dim_leq(DimVector(dY2.size(), 0), dY2)) continue;
                    for (ClassId Y2 : table.ids_with_dim(dY2)) {
                        Int gB = ctx.hall_number(Y, Y2, t.B);
                        if (gB == 0) continue;
                        Int gB2 = ctx.hall_number(X2, Y2, t.B2);
                        if (gB2 == 0) continue;
                        Rat term = ctx.qp(ctx.ext1(X, Y2) - ctx.hom_dim(X, Y2));
                        term *= Rat(gA * gB * gA2 * gB2);
                        term *= Rat(ctx.aut(X) * ctx.aut(Y) * ctx.aut(X2) * ctx.aut(Y2));
                        rhs += term;
                    }
                }
            }
        }
        if (lhs != rhs) {
            std::ostringstream os;
            os << "A=" << t.A << " B=" << t.B << " A'=" << t.A2 << " B'=" << t.B2
               << " dims A" << dims_str(ctx.dims(t.A)) << " B" << dims_str(ctx.dims(t.B));
            fails[qi] = Failure{os.str(), rat_str(lhs), rat_str(rhs)};
        }
    });

    CheckReport rep;
    rep.check = "green";
    rep.params = "total_dim<=" + std::to_string(total_dim_cap);
    rep.instances = quads.size();
    for (auto& f : fails)
        if (f) rep.failures.push_back(std::move(*f));
    rep.wall_ms = timer.ms();
    return rep;
}

namespace {

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::mh: return "mh";
        case Mode::mh_tw: return "mh_tw";
        case Mode::dh: return "dh";
        case Mode::dh_tw: return "dh_tw";
    }
    return "?";
}

Factor random_factor(const HallContext& ctx, Mode mode, std::mt19937& rng,
                     const std::vector<ClassId>& ids, int degree_window, bool allow_torus) {
    int deg = int(rng() % (2 * degree_window + 1)) - degree_window;
    if (allow_torus && mhall::has_torus(mode) && rng() % 4 == 0) {
        DimVector alpha(ctx.cat().n(), 0);
        bool nz = false;
        for (auto& e : alpha) {
            e = int(rng() % 5) - 2;
            nz |= e != 0;
        }
        if (!nz) alpha[rng() % alpha.size()] = 1;
        return mhall::torus_factor(deg, std::move(alpha));
    }
    return mhall::stalk_factor(deg, ids[rng() % ids.size()]);
}

Element factor_element(const Factor& f) {
    NormalWord w;
    if (f.kind == Factor::torus) {
        if (!dim_is_zero(f.alpha)) w.torus[f.degree] = f.alpha;
    } else if (f.cls != 0) {
        w.stalks[f.degree] = f.cls;
    }
    return mhall::single(std::move(w));
}

} // namespace

CheckReport associativity_suite(const HallContext& ctx, Mode mode, int samples,
                                std::uint64_t seed, int degree_window, int gen_dim_cap) {
    Timer timer;
    CheckReport rep;
    rep.check = std::string("assoc_") + mode_name(mode);
    rep.params = "samples=" + std::to_string(samples) + " seed=" + std::to_string(seed) +
                 " window=" + std::to_string(degree_window);
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::vector<ClassId> ids = classes_with_total_dim_at_most(ctx, gen_dim_cap);
    for (int s = 0; s < samples; ++s) {
        Factor fx = random_factor(ctx, mode, rng, ids, degree_window, true);
        Factor fy = random_factor(ctx, mode, rng, ids, degree_window, true);
        Factor fz = random_factor(ctx, mode, rng, ids, degree_window, true);
        Element x = factor_element(fx), y = factor_element(fy), z = factor_element(fz);
        Element lhs = mhall::multiply(ctx, mode, mhall::multiply(ctx, mode, x, y), z);
        Element rhs = mhall::multiply(ctx, mode, x, mhall::multiply(ctx, mode, y, z));
        ++rep.instances;
        if (!(lhs == rhs)) {
            rep.failures.push_back({"sample=" + std::to_string(s) + " x=" +
                                        element_str(x) + " y=" + element_str(y) +
                                        " z=" + element_str(z),
                                    element_str(lhs), element_str(rhs)});
        }
    }
    rep.wall_ms = timer.ms();
    return rep;
}

CheckReport confluence_suite(const HallContext& ctx, Mode mode, int samples,
                             std::uint64_t seed, int degree_window, int gen_dim_cap,
                             int word_len) {
    Timer timer;
    CheckReport rep;
    rep.check = std::string("confluence_") + mode_name(mode);
    rep.params = "samples=" + std::to_string(samples) + " seed=" + std::to_string(seed);
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::vector<ClassId> ids = classes_with_total_dim_at_most(ctx, gen_dim_cap);
    for (int s = 0; s < samples; ++s) {
        std::vector<Factor> seq;
        int stalk_budget = 3; // keeps same-degree pileups inside the table bounds
        for (int k = 0; k < word_len; ++k) {
            bool want_torus = mhall::has_torus(mode) && (stalk_budget == 0 || rng() % 2 == 0);
            Factor f = random_factor(ctx, mode, rng, ids, degree_window, want_torus);
            if (want_torus && f.kind != Factor::torus)
                f = mhall::torus_factor(f.degree, DimVector(ctx.cat().n(), 1));
            if (f.kind == Factor::stalk) {
                if (stalk_budget == 0) continue;
                --stalk_budget;
            }
            seq.push_back(std::move(f));
        }
        Element a = mhall::normalize(ctx, mode, seq, Rat(1), Strategy::leftmost_first);
        Element b = mhall::normalize(ctx, mode, seq, Rat(1), Strategy::rightmost_first);
        ++rep.instances;
        if (!(a == b))
            rep.failures.push_back({"sample=" + std::to_string(s), element_str(a),
                                    element_str(b)});
    }
    rep.wall_ms = timer.ms();
    return rep;
}

CheckReport embed_suite(const HallContext& ctx, int degree_window, int dim_cap,
                        int sampled_words, std::uint64_t seed) {
    Timer timer;
    CheckReport rep;
    rep.check = "embed";
    rep.params = "window=" + std::to_string(degree_window) + " dims<=" +
                 std::to_string(dim_cap) + " words=" + std::to_string(sampled_words);
    std::vector<ClassId> ids = classes_with_total_dim_at_most(ctx, dim_cap);

    // homomorphism property on all generator pairs in the window
    for (ClassId B : ids)
        for (ClassId A : ids)
            for (int n = -degree_window; n <= degree_window; ++n)
                for (int m = -degree_window; m <= degree_window; ++m) {
                    dhall::DHElement zb = dhall::generator(B, n);
                    dhall::DHElement za = dhall::generator(A, m);
                    dhall::DHElement prod = dhall::dh_multiply(ctx, zb, za, true);
                    Element lhs = dhall::iota(ctx, prod);
                    Element rhs = mhall::multiply(ctx, Mode::mh_tw, dhall::iota(ctx, zb),
                                                  dhall::iota(ctx, za));
                    ++rep.instances;
                    if (!(lhs == rhs))
                        rep.failures.push_back(
                            {"Z_" + std::to_string(B) + "^[" + std::to_string(n) + "] * Z_" +
                                 std::to_string(A) + "^[" + std::to_string(m) + "]",
                             element_str(lhs), element_str(rhs)});
                }

    // injectivity on basis words and the tensor round trip, seeded
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::map<NormalWord, dhall::DerivedWord> images;
    for (int s = 0; s < sampled_words; ++s) {
        dhall::DerivedWord w;
        int k = 1 + int(rng() % 2);
        for (int f = 0; f < k; ++f) {
            int deg = int(rng() % (2 * degree_window + 1)) - degree_window;
            ClassId cls = ids[rng() % ids.size()];
            if (cls != 0) w.stalks[deg] = cls;
        }
        NormalWord img = dhall::iota_word(ctx, w);
        ++rep.instances;
        auto [it, fresh] = images.emplace(img, w);
        if (!fresh && !(it->second == w))
            rep.failures.push_back({"injectivity sample=" + std::to_string(s),
                                    word_str(img), word_str(img)});

        mhall::TorusElement t;
        for (int f = 0; f < 2; ++f) {
            int deg = int(rng() % (2 * degree_window + 1)) - degree_window;
            DimVector alpha(ctx.cat().n(), 0);
            bool nz = false;
            for (auto& e : alpha) {
                e = int(rng() % 5) - 2;
                nz |= e != 0;
            }
            if (nz) t.exps[deg] = alpha;
        }
        NormalWord tw;
        tw.torus = t.exps;
        Element composed = mhall::multiply(ctx, Mode::mh_tw,
                                           mhall::single(dhall::iota_word(ctx, w)),
                                           mhall::single(tw));
        ++rep.instances;
        if (composed.terms.size() != 1 || composed.terms.begin()->second != 1) {
            rep.failures.push_back({"round-trip sample=" + std::to_string(s),
                                    element_str(composed), "single unit-coefficient word"});
            continue;
        }
        auto [dw, corr] = dhall::tensor_decompose(ctx, composed.terms.begin()->first);
        if (!(dw == w) || !(corr == t))
            rep.failures.push_back({"round-trip sample=" + std::to_string(s),
                                    word_str(composed.terms.begin()->first),
                                    "decompose mismatch"});
    }
    rep.wall_ms = timer.ms();
    return rep;
}

CheckReport consistency_suite(const HallContext& ctx, int threads) {
    Timer timer;
    (void)threads; // the memoized sweeps dominate and fill under one lock
    CheckReport rep;
    rep.check = "consistency";
    const auto& table = ctx.table();
    rep.params = "full table, " + std::to_string(table.classes.size()) + " classes";
    const std::size_t n_classes = table.classes.size();

    // (a) Hall number vs injection count: g^C_{AB} = inj(B,C,A) / a_B
    for (ClassId C = 0; C < n_classes; ++C)
        for (ClassId A = 0; A < n_classes; ++A) {
            if (!dim_leq(ctx.dims(A), ctx.dims(C))) continue;
            DimVector dB = dim_sub(ctx.dims(C), ctx.dims(A));
            for (ClassId B : table.ids_with_dim(dB)) {
                Int scaled = ctx.hall_number(A, B, C) * ctx.aut(B);
                Int inj = ctx.injection_count(B, C, A);
                ++rep.instances;
                if (scaled != inj)
                    rep.failures.push_back({"hall-vs-injection A=" + std::to_string(A) +
                                                " B=" + std::to_string(B) +
                                                " C=" + std::to_string(C),
                                            scaled.get_str(), inj.get_str()});
            }
        }

    // (b) Ext-sum: sum_C |Ext^1(A,B)_C| = q^{ext1(A,B)}
    for (ClassId A = 0; A < n_classes; ++A)
        for (ClassId B = 0; B < n_classes; ++B) {
            DimVector sum = dim_add(ctx.dims(A), ctx.dims(B));
            if (!table.in_bounds(sum)) continue;
            Int total = 0;
            for (ClassId C : table.ids_with_dim(sum)) total += ctx.ext_count_with_middle(A, B, C);
            Int expect = int_pow(ctx.q(), ctx.ext1(A, B));
            ++rep.instances;
            if (total != expect)
                rep.failures.push_back({"ext-sum A=" + std::to_string(A) + " B=" +
                                            std::to_string(B),
                                        total.get_str(), expect.get_str()});
        }

    // (c) gamma vs g-convolution:
    //     gamma^{FG}_{DE} = sum_I g^E_{IF} g^D_{GI} a_F a_I a_G / (a_D a_E)
    for (ClassId D = 0; D < n_classes; ++D)
        for (ClassId E = 0; E < n_classes; ++E)
            for (ClassId F = 0; F < n_classes; ++F) {
                if (!dim_leq(ctx.dims(F), ctx.dims(E))) continue;
                DimVector dI = dim_sub(ctx.dims(E), ctx.dims(F));
                if (!dim_leq(dI, ctx.dims(D))) continue;
                DimVector dG = dim_sub(ctx.dims(D), dI);
                for (ClassId G : table.ids_with_dim(dG)) {
                    Rat lhs = ctx.gamma(D, E, F, G);
                    Rat rhs(0);
                    for (ClassId I : table.ids_with_dim(dI)) {
                        Int g1 = ctx.hall_number(I, F, E);
                        if (g1 == 0) continue;
                        Int g2 = ctx.hall_number(G, I, D);
                        if (g2 == 0) continue;
                        rhs += make_rat(g1 * g2 * ctx.aut(F) * ctx.aut(I) * ctx.aut(G),
                                        ctx.aut(D) * ctx.aut(E));
                    }
                    ++rep.instances;
                    if (lhs != rhs)
                        rep.failures.push_back({"gamma-convolution D=" + std::to_string(D) +
                                                    " E=" + std::to_string(E) + " F=" +
                                                    std::to_string(F) + " G=" +
                                                    std::to_string(G),
                                                rat_str(lhs), rat_str(rhs)});
                }
            }

    // (d) hom_complex vs the closed forms on stalk/acyclic generator pairs
    const int window = 2;
    for (ClassId A = 0; A < n_classes; ++A)
        for (ClassId B = 0; B < n_classes; ++B) {
            int h = ctx.hom_dim(A, B);
            const auto& RA = ctx.rep(A);
            const auto& RB = ctx.rep(B);
            for (int m = -window; m <= window; ++m)
                for (int n = -window; n <= window; ++n) {
                    for (int kinds = 0; kinds < 4; ++kinds) {
                        bool lhsK = kinds & 1, rhsK = kinds & 2;
                        complexes::BoundedComplex X = lhsK
                                                          ? complexes::make_K(ctx.cat(), RA, m)
                                                          : complexes::make_stalk(ctx.cat(), RA, m);
                        complexes::BoundedComplex Y = rhsK
                                                          ? complexes::make_K(ctx.cat(), RB, n)
                                                          : complexes::make_stalk(ctx.cat(), RB, n);
                        int got = complexes::hom_complex(ctx.cat(), X, Y);
                        int expect;
                        if (!lhsK && !rhsK)
                            expect = (m == n) ? h : 0;
                        else if (lhsK && !rhsK)
                            expect = (n == m - 1) ? h : 0;
                        else if (!lhsK && rhsK)
                            expect = (m == n) ? h : 0;
                        else
                            expect = (n == m || n == m - 1) ? h : 0;
                        ++rep.instances;
                        if (got != expect)
                            rep.failures.push_back(
                                {"hom_complex " + std::string(lhsK ? "K" : "U") + "[" +
                                     std::to_string(m) + "]C" + std::to_string(A) + " -> " +
                                     (rhsK ? "K" : "U") + "[" + std::to_string(n) + "]C" +
                                     std::to_string(B),
                                 std::to_string(got), std::to_string(expect)});
                    }
                }
        }

    rep.wall_ms = timer.ms();
    return rep;
}

} // namespace hall::verify
