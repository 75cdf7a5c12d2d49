#include "hall/dhall.hpp"

namespace hall::dhall {

DHElement DHElement::unit() { return dh_single(DerivedWord{}); }

DHElement dh_single(DerivedWord w, Rat c) {
    DHElement e;
    if (c != 0) e.terms.emplace(std::move(w), std::move(c));
    return e;
}

DHElement dh_add(const DHElement& a, const DHElement& b) {
    DHElement r = a;
    for (const auto& [w, c] : b.terms) {
        auto [it, fresh] = r.terms.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

DHElement generator(ClassId A, int degree) {
    DerivedWord w;
    if (A != 0) w.stalks[degree] = A;
    return dh_single(std::move(w));
}

namespace {

std::vector<mhall::Factor> derived_factors(const DerivedWord& w) {
    std::vector<mhall::Factor> seq;
    for (auto it = w.stalks.rbegin(); it != w.stalks.rend(); ++it)
        seq.push_back(mhall::stalk_factor(it->first, it->second));
    return seq;
}

DerivedWord derived_of(const mhall::NormalWord& w) {
    if (!w.torus.empty()) throw ConsistencyError("derived product emitted torus factors");
    DerivedWord d;
    d.stalks = w.stalks;
    return d;
}

} // namespace

DHElement dh_multiply(const HallContext& ctx, const DHElement& x, const DHElement& y,
                      bool twisted, mhall::Strategy strategy) {
    const mhall::Mode mode = twisted ? mhall::Mode::dh_tw : mhall::Mode::dh;
    DHElement out;
    for (const auto& [wx, cx] : x.terms)
        for (const auto& [wy, cy] : y.terms) {
            std::vector<mhall::Factor> seq = derived_factors(wx);
            auto tail = derived_factors(wy);
            seq.insert(seq.end(), tail.begin(), tail.end());
            mhall::Element prod = mhall::normalize(ctx, mode, std::move(seq), cx * cy, strategy);
            for (const auto& [w, c] : prod.terms)
                out = dh_add(out, dh_single(derived_of(w), c));
        }
    return out;
}

mhall::TorusElement iota_torus(const HallContext& ctx, ClassId A, int degree) {
    mhall::TorusElement t;
    if (degree == 0 || A == ctx.table().zero_id()) return t;
    const DimVector& a = ctx.dims(A);
    DimVector neg(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    if (degree > 0) {
        // (K_{A,degree})^{-1} (K_{A,degree-1})^{+1} ... down to degree 1
        for (int d = degree; d >= 1; --d) t.exps[d] = ((degree - d) % 2 == 0) ? neg : a;
    } else {
        // degrees degree+1 .. 0, alternating, -A at the lowest
        for (int d = degree + 1; d <= 0; ++d) t.exps[d] = ((d - degree) % 2 == 1) ? neg : a;
    }
    return t;
}

mhall::NormalWord iota_word(const HallContext& ctx, const DerivedWord& w) {
    mhall::NormalWord out;
    out.stalks = w.stalks;
    for (const auto& [deg, cls] : w.stalks) {
        mhall::TorusElement t = iota_torus(ctx, cls, deg);
        for (const auto& [d, alpha] : t.exps) {
            auto [it, fresh] = out.torus.emplace(d, alpha);
            if (!fresh) {
                it->second = dim_add(it->second, alpha);
                if (dim_is_zero(it->second)) out.torus.erase(it);
            }
        }
    }
    return out;
}

mhall::Element iota(const HallContext& ctx, const DHElement& x) {
    mhall::Element out;
    for (const auto& [w, c] : x.terms)
        out = mhall::add(out, mhall::single(iota_word(ctx, w), c));
    return out;
}

std::pair<DerivedWord, mhall::TorusElement> tensor_decompose(const HallContext& ctx,
                                                             const mhall::NormalWord& w) {
    DerivedWord d;
    d.stalks = w.stalks;
    mhall::NormalWord image = iota_word(ctx, d);
    mhall::TorusElement corr;
    corr.exps = w.torus;
    for (const auto& [deg, alpha] : image.torus) {
        auto it = corr.exps.find(deg);
        if (it == corr.exps.end()) {
            corr.exps[deg] = dim_sub(DimVector(alpha.size(), 0), alpha);
        } else {
            it->second = dim_sub(it->second, alpha);
            if (dim_is_zero(it->second)) corr.exps.erase(it);
        }
    }
    return {std::move(d), std::move(corr)};
}

} // namespace hall::dhall
