#include "hall/mhall.hpp"

#include <algorithm>

namespace hall::mhall {

TorusElement torus_inverse(const TorusElement& t) {
    TorusElement r;
    for (const auto& [deg, alpha] : t.exps) {
        DimVector neg(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
        r.exps[deg] = std::move(neg);
    }
    return r;
}

Element Element::unit() { return single(NormalWord{}); }

Element single(NormalWord w, Rat c) {
    Element e;
    if (c != 0) e.terms.emplace(std::move(w), std::move(c));
    return e;
}

Element add(const Element& a, const Element& b) {
    Element r = a;
    for (const auto& [w, c] : b.terms) {
        auto [it, fresh] = r.terms.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

Element scale(const Element& a, const Rat& c) {
    Element r;
    if (c == 0) return r;
    for (const auto& [w, coeff] : a.terms) r.terms.emplace(w, coeff * c);
    return r;
}

Factor torus_factor(int degree, DimVector alpha) {
    Factor f;
    f.kind = Factor::torus;
    f.degree = degree;
    f.alpha = std::move(alpha);
    return f;
}

Factor stalk_factor(int degree, ClassId cls) {
    Factor f;
    f.kind = Factor::stalk;
    f.degree = degree;
    f.cls = cls;
    return f;
}

std::vector<Factor> word_factors(const NormalWord& w) {
    std::vector<Factor> seq;
    for (auto it = w.torus.rbegin(); it != w.torus.rend(); ++it)
        seq.push_back(torus_factor(it->first, it->second));
    for (auto it = w.stalks.rbegin(); it != w.stalks.rend(); ++it)
        seq.push_back(stalk_factor(it->first, it->second));
    return seq;
}

namespace {

struct Term {
    Rat c;
    std::vector<Factor> seq;
};

bool is_unit_factor(const HallContext& ctx, const Factor& f) {
    if (f.kind == Factor::torus) return dim_is_zero(f.alpha);
    return f.cls == ctx.table().zero_id();
}

void drop_units(const HallContext& ctx, std::vector<Factor>& seq) {
    std::erase_if(seq, [&](const Factor& f) { return is_unit_factor(ctx, f); });
}

// -1 when the adjacent pair (seq[i], seq[i+1]) is already in normal position.
bool pair_reducible(const Factor& f, const Factor& g) {
    if (f.kind == Factor::stalk && g.kind == Factor::torus) return true;
    if (f.kind == Factor::torus && g.kind == Factor::torus) return g.degree >= f.degree;
    if (f.kind == Factor::stalk && g.kind == Factor::stalk) return g.degree >= f.degree;
    return false; // torus before stalk is normal regardless of degrees
}

int find_violation(const std::vector<Factor>& seq, Strategy st) {
    if (seq.size() < 2) return -1;
    if (st == Strategy::leftmost_first) {
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (pair_reducible(seq[i], seq[i + 1])) return static_cast<int>(i);
    } else {
        for (std::size_t i = seq.size() - 1; i-- > 0;)
            if (pair_reducible(seq[i], seq[i + 1])) return static_cast<int>(i);
    }
    return -1;
}

std::vector<Factor> splice(const std::vector<Factor>& seq, std::size_t i,
                           std::vector<Factor> repl) {
    std::vector<Factor> out;
    out.reserve(seq.size() + repl.size());
    out.insert(out.end(), seq.begin(), seq.begin() + i);
    out.insert(out.end(), std::make_move_iterator(repl.begin()),
               std::make_move_iterator(repl.end()));
    out.insert(out.end(), seq.begin() + i + 2, seq.end());
    return out;
}

// One rewriting step on the pair at position i; emits the replacement terms.
std::vector<Term> apply_rule(const HallContext& ctx, Mode mode, const Term& t, std::size_t i) {
    const Factor& f = t.seq[i];
    const Factor& g = t.seq[i + 1];
    const bool tw = is_twisted(mode);
    std::vector<Term> out;

    auto swapped = [&](const Rat& scalar) {
        out.push_back({t.c * scalar, splice(t.seq, i, {g, f})});
    };

    if (f.kind == Factor::stalk && g.kind == Factor::torus) {
        if (!has_torus(mode)) throw ContractError("torus factor in a derived-algebra word");
        Rat s(1);
        if (!tw) {
            const DimVector& du = ctx.dims(f.cls);
            if (g.degree == f.degree)
                s = ctx.qp(-ctx.euler(du, g.alpha));
            else if (g.degree == f.degree + 1)
                s = ctx.qp(ctx.euler(g.alpha, du));
            // adjacent below and |gap| >= 2 commute with scalar 1
        }
        swapped(s);
        return out;
    }

    if (f.kind == Factor::torus && g.kind == Factor::torus) {
        if (g.degree == f.degree) {
            Rat s = tw ? Rat(1) : ctx.qp(-ctx.euler(f.alpha, g.alpha));
            std::vector<Factor> repl{torus_factor(f.degree, dim_add(f.alpha, g.alpha))};
            out.push_back({t.c * s, splice(t.seq, i, std::move(repl))});
            return out;
        }
        Rat s(1);
        if (!tw && g.degree == f.degree + 1) s = ctx.qp(ctx.euler(g.alpha, f.alpha));
        swapped(s);
        return out;
    }

    // stalk-stalk
    const int n = f.degree, m = g.degree;
    if (m == n) {
        // Hall sum over middle terms
        Rat twist = tw ? ctx.qp(ctx.euler(ctx.dims(f.cls), ctx.dims(g.cls))) : Rat(1);
        for (const auto& [C, r] : ctx.same_degree_line(f.cls, g.cls))
            out.push_back({t.c * r * twist, splice(t.seq, i, {stalk_factor(n, C)})});
        return out;
    }
    if (m == n + 1) {
        // adjacent-degree expansion via the gamma structure constants
        const ClassId B = f.cls, A = g.cls;
        const DimVector &dB = ctx.dims(B), &dA = ctx.dims(A);
        for (const auto& [M, N, gam] : ctx.gamma_line(A, B)) {
            Rat coeff = gam * make_rat(ctx.aut(A) * ctx.aut(B), ctx.aut(M) * ctx.aut(N));
            DimVector kalpha = dim_sub(dB, ctx.dims(M));
            std::vector<Factor> repl;
            switch (mode) {
                case Mode::mh:
                    coeff *= ctx.qp(ctx.euler(kalpha, ctx.dims(M)));
                    repl = {torus_factor(m, kalpha), stalk_factor(m, N), stalk_factor(n, M)};
                    break;
                case Mode::mh_tw:
                    coeff *= ctx.qp(-ctx.euler(dB, dA));
                    repl = {stalk_factor(m, N), stalk_factor(n, M), torus_factor(m, kalpha)};
                    break;
                case Mode::dh:
                    coeff *= ctx.qp(-ctx.euler(ctx.dims(N), ctx.dims(M)));
                    repl = {stalk_factor(m, N), stalk_factor(n, M)};
                    break;
                case Mode::dh_tw:
                    coeff *= ctx.qp(-ctx.euler(dB, dA));
                    repl = {stalk_factor(m, N), stalk_factor(n, M)};
                    break;
            }
            out.push_back({t.c * coeff, splice(t.seq, i, std::move(repl))});
        }
        return out;
    }
    // far apart: quasi-commutation
    {
        const long sign = (m - n) % 2 == 0 ? 1 : -1;
        Rat s(1);
        switch (mode) {
            case Mode::mh: break;
            case Mode::mh_tw: s = ctx.qp(sign * ctx.euler(ctx.dims(f.cls), ctx.dims(g.cls))); break;
            case Mode::dh: s = ctx.qp(sign * ctx.euler(ctx.dims(g.cls), ctx.dims(f.cls))); break;
            case Mode::dh_tw: s = ctx.qp(sign * ctx.euler(ctx.dims(f.cls), ctx.dims(g.cls))); break;
        }
        swapped(s);
    }
    return out;
}

NormalWord word_of(const std::vector<Factor>& seq) {
    NormalWord w;
    for (const Factor& f : seq) {
        if (f.kind == Factor::torus) {
            if (!w.torus.emplace(f.degree, f.alpha).second)
                throw ConsistencyError("duplicate torus degree in a normal word");
            if (!w.stalks.empty())
                throw ConsistencyError("torus factor after stalk block");
        } else if (!w.stalks.emplace(f.degree, f.cls).second) {
            throw ConsistencyError("duplicate stalk degree in a normal word");
        }
    }
    return w;
}

} // namespace

Element normalize(const HallContext& ctx, Mode mode, std::vector<Factor> seq, const Rat& coeff,
                  Strategy strategy, std::uint64_t max_steps) {
    if (max_steps == 0) max_steps = ctx.table().guards.max_rewrite_steps;
    for (const Factor& f : seq) {
        if (f.kind == Factor::torus && !has_torus(mode))
            throw ContractError("torus factor in a derived-algebra word");
        if (f.kind == Factor::stalk && f.cls >= ctx.class_count())
            throw BoundError("stalk class outside the table");
        if (f.kind == Factor::torus && static_cast<int>(f.alpha.size()) != ctx.cat().n())
            throw ContractError("torus exponent of wrong length");
    }
    drop_units(ctx, seq);
    std::vector<Term> stack{{coeff, std::move(seq)}};
    Element out;
    std::uint64_t steps = 0;
    while (!stack.empty()) {
        if (++steps > max_steps) throw ResourceError("rewrite step guard exceeded");
        Term t = std::move(stack.back());
        stack.pop_back();
        if (t.c == 0) continue;
        int v = find_violation(t.seq, strategy);
        if (v < 0) {
            auto [it, fresh] = out.terms.emplace(word_of(t.seq), t.c);
            if (!fresh) {
                it->second += t.c;
                if (it->second == 0) out.terms.erase(it);
            }
            continue;
        }
        for (Term& nt : apply_rule(ctx, mode, t, static_cast<std::size_t>(v))) {
            drop_units(ctx, nt.seq);
            stack.push_back(std::move(nt));
        }
    }
    return out;
}

Element multiply(const HallContext& ctx, Mode mode, const Element& x, const Element& y,
                 Strategy strategy) {
    Element out;
    for (const auto& [wx, cx] : x.terms)
        for (const auto& [wy, cy] : y.terms) {
            std::vector<Factor> seq = word_factors(wx);
            std::vector<Factor> tail = word_factors(wy);
            seq.insert(seq.end(), std::make_move_iterator(tail.begin()),
                       std::make_move_iterator(tail.end()));
            out = add(out, normalize(ctx, mode, std::move(seq), cx * cy, strategy));
        }
    return out;
}

Element same_degree_product(const HallContext& ctx, ClassId A, ClassId B, int degree,
                            bool twisted) {
    return normalize(ctx, twisted ? Mode::mh_tw : Mode::mh,
                     {stalk_factor(degree, A), stalk_factor(degree, B)});
}

std::pair<Rat, TorusElement> torus_multiply(const HallContext& ctx, const TorusElement& a,
                                            const TorusElement& b, bool twisted) {
    std::vector<Factor> seq;
    for (auto it = a.exps.rbegin(); it != a.exps.rend(); ++it)
        seq.push_back(torus_factor(it->first, it->second));
    for (auto it = b.exps.rbegin(); it != b.exps.rend(); ++it)
        seq.push_back(torus_factor(it->first, it->second));
    Element e = normalize(ctx, twisted ? Mode::mh_tw : Mode::mh, std::move(seq));
    if (e.terms.size() != 1) throw ConsistencyError("torus product is not a single word");
    const auto& [w, c] = *e.terms.begin();
    if (!w.stalks.empty()) throw ConsistencyError("torus product produced stalk factors");
    TorusElement t;
    t.exps = w.torus;
    return {c, t};
}

} // namespace hall::mhall
