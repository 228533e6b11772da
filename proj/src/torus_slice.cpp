#include "solvquot/torus_slice.hpp"

#include <algorithm>
#include <tuple>

namespace solvquot {

long gm_degree(const TorusRestriction& phi, const Localized& a,
               const Character& denom_weight) {
    if (a.is_zero()) return 0;
    return phi.apply(a, denom_weight).num().deg_laurent(phi.tvar());
}

std::vector<std::pair<Character, Localized>> torus_coeff_decompose(
    const TorusRestriction& phi, const Localized& a, const Character& denom_weight) {
    const ActionSpec& spec = phi.spec();
    Localized im = phi.apply(a, denom_weight);
    if (im.num().involves_any(spec.additive_vars))
        throw InvalidCoactionError("torus decomposition of an element that is not unipotent-invariant");

    std::vector<std::pair<Character, Localized>> out;
    auto groups = im.num().collect_by(spec.torus_vars);
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        auto chi = spec.character_of_monomial(it->first);
        if (!chi) throw InternalError("unexpected variables in torus image");
        Localized comp(it->second, im.denom_exp(), im.denom());
        // Each weight component must be a semi-invariant of its weight.
        Localized comp_im = phi.apply(comp, denom_weight);
        if (!comp_im.equals(comp.mono_times(it->first)))
            throw InvalidCoactionError("weight component is not a semi-invariant of its weight");
        out.emplace_back(*chi, comp);
    }

    Localized sum = Localized::embed(Poly::zero(a.table()), a.denom());
    for (const auto& [chi, comp] : out) sum = sum + comp;
    if (!sum.equals(a)) throw InternalError("weight components do not sum to the element");
    return out;
}

namespace {

// Symmetric remainder: e = q*d + r with 0 < |r| <= d/2; the midpoint takes
// the positive sign.
std::pair<long, long> symmetric_rem(long e, long d) {
    long r = e % d;
    if (r < 0) r += d; // 0 <= r < d
    if (2 * r > d) r -= d;
    return {(e - r) / d, r};
}

} // namespace

GmSlice gm_slice(const ActionSpec& spec, int j, std::vector<Localized>& gens,
                 Epoch& epoch, const GrowHook& on_grow, const Limits& limits) {
    TorusRestriction phi(spec, j);
    const int tj = phi.tvar();

    UnitWitness s{Localized::from_long(spec.table, 1, epoch.den),
                  Localized::from_long(spec.table, 1, epoch.den)};
    long d = 0;

    for (long pass = 0;; ++pass) {
        if (pass > limits.max_iter)
            throw IterationCapError("torus slice search exceeded the iteration cap");

        // Scan the full torus monomials of the generator images for one whose
        // t_j-exponent is not a multiple of d. Minimal |r| wins; ties by
        // generator index, then the larger monomial in the global order.
        bool found = false;
        long cand_absr = 0, cand_q = 0, cand_r = 0;
        size_t cand_gen = 0;
        Monomial cand_mono;
        Localized cand_coef = s.elem;
        bool any_exponent = false;

        for (size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].is_zero()) continue;
            Localized im = phi.apply(gens[i], epoch.weight);
            if (im.num().involves_any(spec.additive_vars))
                throw InvalidCoactionError("torus stage reached with unipotent variables present");
            for (const auto& [mono, coef] : im.num().collect_by(spec.torus_vars)) {
                long e = mono[tj];
                if (e != 0) any_exponent = true;
                if (d == 0 ? e == 0 : e % d == 0) continue;
                auto [q, r] = d == 0 ? std::pair<long, long>{0, e} : symmetric_rem(e, d);
                bool better;
                if (!found)
                    better = true;
                else if (std::labs(r) != cand_absr)
                    better = std::labs(r) < cand_absr;
                else if (i != cand_gen)
                    better = i < cand_gen;
                else
                    better = MonoLess()(cand_mono, mono);
                if (better) {
                    found = true;
                    cand_absr = std::labs(r);
                    cand_q = q;
                    cand_r = r;
                    cand_gen = i;
                    cand_mono = mono;
                    cand_coef = Localized(coef, im.denom_exp(), im.denom());
                }
            }
        }

        if (!found) {
            if (d == 0)
                throw TrivialActionError(any_exponent
                                             ? "torus slice: inconsistent exponent scan"
                                             : "torus factor acts trivially on the generators");
            break; // every occurring exponent is a multiple of d
        }

        Localized shat = s.pow(cand_q) * cand_coef;
        auto w = invert(shat);
        if (!w) {
            auto [num, wt] = semi_invariant_numerator(shat, spec, epoch.weight);
            Poly grown_raw = num * *epoch.den;
            FieldElem lambda = grown_raw.monic_scale();
            Epoch grown{make_denom(grown_raw.monic()), epoch.weight * wt};
            auto check = weight_of(*grown.den, spec);
            if (!check || *check != grown.weight)
                throw InvalidCoactionError(
                    "grown denominator is not a semi-invariant of the expected weight");
            if (on_grow) on_grow(shat, lambda, grown);
            for (auto& g : gens) g = rebase(g, grown.den);
            s.elem = rebase(s.elem, grown.den);
            s.inverse = rebase(s.inverse, grown.den);
            shat = rebase(shat, grown.den);
            epoch = grown;
            w = invert(shat);
            if (!w)
                throw InternalError(
                    "slice candidate still not invertible after growing the denominator");
        }
        s = cand_r < 0 ? *w : UnitWitness{w->inverse, w->elem};
        d = std::labs(cand_r);

        auto ws = weight_of(s.elem, spec, epoch.weight);
        if (!ws || (*ws)[j] != -d)
            throw InvalidCoactionError("torus slice is not a semi-invariant of weight t^-d");
        for (int jj = 0; jj < j; ++jj)
            if ((*ws)[jj] != 0)
                throw InvalidCoactionError("torus slice weight involves an earlier torus factor");
    }

    return GmSlice{s, d, *weight_of(s.elem, spec, epoch.weight)};
}

namespace {

Localized subst_tj_root(const ActionSpec& spec, int j, const GmSlice& slice,
                        const Localized& im) {
    const int tj = spec.torus_vars[j];
    Substitution ones;
    for (int k = j + 1; k < spec.m(); ++k)
        ones.insert_or_assign(spec.torus_vars[k], SubstEntry{Poly::from_long(spec.table, 1), std::nullopt});
    Poly flat = ones.empty() ? im.num() : substitute(im.num(), ones);
    for (int k = 0; k < j; ++k)
        if (flat.involves(spec.torus_vars[k]))
            throw InvalidCoactionError("pi_gm: image involves an earlier torus variable");

    Localized out = Localized::embed(Poly::zero(im.table()), im.denom());
    for (const auto& [mono, coef] : flat.collect_by({tj})) {
        long e = mono[tj];
        if (e % slice.d != 0)
            throw InvalidCoactionError("pi_gm: t-exponent " + std::to_string(e) +
                                       " not divisible by the slice degree " +
                                       std::to_string(slice.d));
        out = out + Localized(coef, im.denom_exp(), im.denom()) * slice.s.pow(e / slice.d);
    }
    return out;
}

} // namespace

Localized pi_gm(const ActionSpec& spec, int j, const GmSlice& slice,
                const Localized& a, const Epoch& epoch) {
    TorusRestriction phi(spec, j);
    Localized im = phi.apply(a, epoch.weight);
    if (im.num().involves_any(spec.additive_vars))
        throw InvalidCoactionError("pi_gm: image involves additive variables");
    return subst_tj_root(spec, j, slice, im);
}

} // namespace solvquot
