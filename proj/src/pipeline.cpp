#include "solvquot/pipeline.hpp"

#include <algorithm>

namespace solvquot {

namespace {

void rebase_record(StageRecord& rec, const DenomRef& den) {
    if (auto* ga = std::get_if<GaStage>(&rec)) {
        ga->slice.s = rebase(ga->slice.s, den);
        ga->slice.lead = rebase(ga->slice.lead, den);
        ga->slice.g = rebase(ga->slice.g, den);
        ga->lead_inv.elem = rebase(ga->lead_inv.elem, den);
        ga->lead_inv.inverse = rebase(ga->lead_inv.inverse, den);
    } else {
        auto& gm = std::get<GmStage>(rec);
        gm.slice.s.elem = rebase(gm.slice.s.elem, den);
        gm.slice.s.inverse = rebase(gm.slice.s.inverse, den);
    }
}

struct PipelineState {
    const ActionSpec& spec;
    Limits limits;
    Epoch epoch;
    std::vector<Localized> b;      // current generator images
    Localized bval;                // pi-so-far applied to the current c
    std::vector<StageRecord> records;

    explicit PipelineState(const ActionSpec& s, const Limits& lim)
        : spec(s), limits(lim),
          epoch{make_denom(Poly::from_long(s.table, 1)), Character::trivial(s.m())},
          bval(Poly::from_long(s.table, 1), 0, epoch.den) {
        for (int k = 0; k < s.n(); ++k)
            b.emplace_back(Poly::variable(s.table, s.base_vars[k]), 0, epoch.den);
    }

    void rebase_all(const DenomRef& den) {
        for (auto& bi : b) bi = rebase(bi, den);
        bval = rebase(bval, den);
        for (auto& rec : records) rebase_record(rec, den);
    }

    // The denominator grew by the invertible piece x (over the old epoch):
    // c_new = lambda * num(x) * c_old = lambda * x * c_old^(e+1), so the
    // retraction image of the denominator updates the same way.
    void absorb_growth(const Localized& x, const FieldElem& lambda, const Epoch& grown) {
        bval = (bval.pow(x.denom_exp() + 1) * x).scaled(lambda);
        rebase_all(grown.den);
        epoch = grown;
    }
};

} // namespace

SemiinvSliceResult slice_semiinv(const ActionSpec& spec, int stage_i,
                                 std::span<const Localized> gens, const Epoch& epoch,
                                 const Limits& limits) {
    GaRestriction phi(spec, stage_i);
    GaSlice slice = find_local_slice(phi, gens, limits);
    Localized s = slice.s;
    Localized ctil = slice.lead;
    const long d = slice.d;

    // Push invariance of the denominator through the remaining additive
    // factors: replace s and c by the top z-coefficients of their images.
    for (int i2 = stage_i + 1; i2 < spec.l(); ++i2) {
        GaRestriction phi2(spec, i2);
        int z2 = phi2.zvar();
        Localized gc = phi2.apply(ctil);
        long k = gc.num().deg_poly(z2);
        Localized gs = phi2.apply(s);
        ctil = Localized(gc.num().coeff(z2, k), gc.denom_exp(), gc.denom());
        s = Localized(gs.num().coeff(z2, k), gs.denom_exp(), gs.denom());
        if (ctil.is_zero() || s.is_zero())
            throw InternalError("slice collapsed while passing an additive factor");
    }

    // Torus step: pick the leading weight of Phi(c); the matching coefficients
    // are a semi-invariant denominator and its slice.
    Localized imc = apply_Phi_localized(ctil, spec, epoch.weight);
    if (imc.num().involves_any(spec.additive_vars))
        throw InvalidCoactionError("slice denominator is not unipotent-invariant");
    auto groups = imc.num().collect_by(spec.torus_vars);
    auto lead_it = groups.rbegin();
    auto tstar = spec.character_of_monomial(lead_it->first);
    if (!tstar) throw InternalError("unexpected variables in Phi(c)");
    ctil = Localized(lead_it->second, imc.denom_exp(), imc.denom());

    Localized ims = apply_Phi_localized(s, spec, epoch.weight);
    Monomial target = spec.character_monomial(spec.characters[stage_i].pow(d) * *tstar);
    std::vector<int> gvars = spec.group_vars();
    std::vector<int> exps;
    exps.reserve(gvars.size());
    for (int v : gvars) exps.push_back(target[v]);
    s = Localized(ims.num().coeff_monomial(gvars, exps), ims.denom_exp(), ims.denom());
    if (s.is_zero()) throw InternalError("semi-invariant slice extraction yielded zero");

    GaSlice out = make_ga_slice(phi, s);
    if (out.d != d) throw InternalError("slice degree changed during the semi-invariant step");
    if (!out.lead.equals(ctil))
        throw InternalError("slice denominator does not match the extracted semi-invariant");
    auto wc = weight_of(ctil, spec, epoch.weight);
    if (!wc || *wc != *tstar)
        throw InvalidCoactionError("slice denominator is not a semi-invariant of weight t*");
    return SemiinvSliceResult{out, *tstar};
}

namespace {

void run_additive_stages(PipelineState& st) {
    const ActionSpec& spec = st.spec;
    for (int i = 0; i < spec.l(); ++i) {
        int zi = spec.additive_vars[i];
        bool acts = std::any_of(st.b.begin(), st.b.end(), [&](const Localized& bi) {
            return spec.apply_Phi(bi.num()).involves(zi);
        });
        if (!acts) continue;

        SemiinvSliceResult sem = slice_semiinv(spec, i, st.b, st.epoch, st.limits);
        auto [numc, wt] = semi_invariant_numerator(sem.slice.lead, spec, st.epoch.weight);
        if (!numc.is_constant()) {
            Poly grown_raw = numc * *st.epoch.den;
            FieldElem lambda = grown_raw.monic_scale();
            Epoch grown{make_denom(grown_raw.monic()), st.epoch.weight * wt};
            auto check = weight_of(*grown.den, spec);
            if (!check || *check != grown.weight)
                throw InvalidCoactionError("grown denominator has an unexpected weight");
            Localized ctil = sem.slice.lead;
            st.absorb_growth(ctil, lambda, grown);
            sem.slice.s = rebase(sem.slice.s, grown.den);
            sem.slice.lead = rebase(sem.slice.lead, grown.den);
            sem.slice.g = rebase(sem.slice.g, grown.den);
        }
        auto lead_inv = invert(sem.slice.lead);
        if (!lead_inv)
            throw InternalError("slice denominator not invertible after localization");

        GaRestriction phi(spec, i);
        for (auto& bi : st.b) bi = pi_ga(phi, sem.slice, *lead_inv, bi);
        st.bval = pi_ga(phi, sem.slice, *lead_inv, st.bval);
        st.records.push_back(GaStage{i, sem.slice, *lead_inv});
    }

    for (const auto& bi : st.b)
        if (spec.apply_Phi(bi.num()).involves_any(spec.additive_vars))
            throw InvalidCoactionError("generator image still involves additive variables "
                                       "after the unipotent stages");
}

void run_torus_stages(PipelineState& st) {
    const ActionSpec& spec = st.spec;
    for (int j = 0; j < spec.m(); ++j) {
        int tj = spec.torus_vars[j];
        bool acts = std::any_of(st.b.begin(), st.b.end(), [&](const Localized& bi) {
            return !bi.is_zero() &&
                   apply_Phi_localized(bi, spec, st.epoch.weight).num().involves(tj);
        });
        if (!acts) continue;

        auto b_unit = invert(st.bval);
        if (!b_unit) throw InternalError("pi(c) is not invertible");
        std::vector<Localized> gens = st.b;
        gens.push_back(b_unit->inverse);

        GrowHook hook = [&st](const Localized& shat, const FieldElem& lambda,
                              const Epoch& grown) {
            st.absorb_growth(shat, lambda, grown);
        };
        GmSlice slice = gm_slice(spec, j, gens, st.epoch, hook, st.limits);

        for (auto& bi : st.b) bi = pi_gm(spec, j, slice, bi, st.epoch);
        st.bval = pi_gm(spec, j, slice, st.bval, st.epoch);
        st.records.push_back(GmStage{j, slice});
    }
}

std::vector<Poly> kernel_generators(const QuotientPresentation& q) {
    std::vector<Poly> out;
    for (const auto& ui : q.u) out.push_back(ui.num());
    for (const auto& sj : q.s) {
        Localized one = Localized::from_long(sj.s.elem.table(), 1, sj.s.elem.denom());
        out.push_back((sj.s.elem - one).num());
    }
    return out;
}

} // namespace

Presentation make_presentation(const ActionSpec& spec, const QuotientPresentation& q) {
    Presentation pres;
    for (int v : spec.base_vars) pres.vars.push_back(spec.table->name(v));
    pres.vars.push_back(spec.table->name(spec.inverse_var));
    Poly wc = Poly::variable(spec.table, spec.inverse_var) * *q.epoch.den -
              Poly::from_long(spec.table, 1);
    pres.relations.push_back(wc);
    for (const auto& k : q.kernel) pres.relations.push_back(k);
    return pres;
}

UnipotentResult unipotent_invariants(const ActionSpec& spec, const Limits& limits) {
    PipelineState st(spec, limits);
    run_additive_stages(st);
    UnipotentResult out{st.epoch, st.bval, st.b, {}, std::move(st.records)};
    for (const auto& rec : out.records) out.u.push_back(std::get<GaStage>(rec).slice.s);
    return out;
}

QuotientPresentation solvable_invariants(const ActionSpec& spec, const Limits& limits) {
    PipelineState st(spec, limits);
    run_additive_stages(st);
    run_torus_stages(st);

    QuotientPresentation q{st.epoch,
                           st.bval,
                           UnitWitness{st.bval, st.bval},
                           st.b,
                           {},
                           {},
                           {},
                           {},
                           std::move(st.records)};
    auto b_unit = invert(q.b);
    if (!b_unit) throw InternalError("pi(c) is not invertible in the final localization");
    q.b_unit = *b_unit;
    for (const auto& rec : q.records) {
        if (const auto* ga = std::get_if<GaStage>(&rec))
            q.u.push_back(ga->slice.s);
        else
            q.s.push_back(std::get<GmStage>(rec).slice);
    }
    q.kernel = kernel_generators(q);
    q.presentation = make_presentation(spec, q);
    return q;
}

Localized composite_pi(const ActionSpec& spec, const QuotientPresentation& q,
                       const Localized& a) {
    Localized cur = a;
    for (const auto& rec : q.records) {
        if (const auto* ga = std::get_if<GaStage>(&rec)) {
            GaRestriction phi(spec, ga->i);
            cur = pi_ga(phi, ga->slice, ga->lead_inv, cur);
        } else {
            const auto& gm = std::get<GmStage>(rec);
            cur = pi_gm(spec, gm.j, gm.slice, cur, q.epoch);
        }
    }
    return cur;
}

namespace {

ReconNode reconstruct_from(const ActionSpec& spec, const QuotientPresentation& q,
                           const Localized& a, size_t ridx) {
    if (ridx == q.records.size()) {
        ReconNode leaf;
        if (!a.is_zero() && !is_invariant(a, spec, q.epoch.weight))
            throw InternalError("reconstruction leaf is not invariant");
        leaf.leaf = a;
        return leaf;
    }
    ReconNode node;
    node.record_index = static_cast<int>(ridx);
    const StageRecord& rec = q.records[ridx];
    if (const auto* ga = std::get_if<GaStage>(&rec)) {
        GaRestriction phi(spec, ga->i);
        auto coeffs = expand_in_slice(phi, ga->slice, ga->lead_inv, a);
        for (size_t e = 0; e < coeffs.size(); ++e) {
            if (coeffs[e].is_zero()) continue;
            node.terms.emplace_back(static_cast<long>(e),
                                    reconstruct_from(spec, q, coeffs[e], ridx + 1));
        }
    } else {
        const auto& gm = std::get<GmStage>(rec);
        // Expand by the weight components of the single factor t_j.
        Substitution collapse;
        for (int v : spec.additive_vars)
            collapse.insert_or_assign(v, SubstEntry{Poly::zero(spec.table), std::nullopt});
        for (int k = 0; k < spec.m(); ++k)
            if (k != gm.j)
                collapse.insert_or_assign(spec.torus_vars[k], SubstEntry{Poly::from_long(spec.table, 1), std::nullopt});
        Substitution phimap;
        for (int k = 0; k < spec.n(); ++k)
            phimap.insert_or_assign(spec.base_vars[k], SubstEntry{substitute(spec.images[k], collapse), std::nullopt});
        int tj = spec.torus_vars[gm.j];
        long cw = q.epoch.weight[gm.j] * (-a.denom_exp());
        Poly im = substitute(a.num(), phimap);
        Localized sum = Localized::embed(Poly::zero(spec.table), a.denom());
        for (const auto& [mono, coef] : im.collect_by({tj})) {
            long e = mono[tj] + cw; // include the localization twist
            if (e % gm.slice.d != 0)
                throw InternalError("reconstruction: weight not divisible by the slice degree");
            Localized comp(coef, a.denom_exp(), a.denom());
            Localized inv_coeff = comp * gm.slice.s.pow(e / gm.slice.d);
            node.terms.emplace_back(-e / gm.slice.d,
                                    reconstruct_from(spec, q, inv_coeff, ridx + 1));
            sum = sum + comp;
        }
        if (!sum.equals(a))
            throw InternalError("reconstruction: weight components do not sum back");
    }
    return node;
}

} // namespace

ReconNode reconstruct(const ActionSpec& spec, const QuotientPresentation& q,
                      const Localized& a) {
    return reconstruct_from(spec, q, a, 0);
}

Localized evaluate_recon(const QuotientPresentation& q, const ReconNode& node) {
    if (node.leaf) return *node.leaf;
    const StageRecord& rec = q.records[node.record_index];
    const DenomRef& den = q.epoch.den;
    const VarTableRef& tab = q.b.table();
    Localized acc = Localized::embed(Poly::zero(tab), den);
    for (const auto& [e, child] : node.terms) {
        Localized val = evaluate_recon(q, child);
        if (const auto* ga = std::get_if<GaStage>(&rec)) {
            if (e < 0) throw InternalError("negative exponent on an additive slice");
            acc = acc + val * ga->slice.s.pow(e);
        } else {
            acc = acc + val * std::get<GmStage>(rec).slice.s.pow(e);
        }
    }
    return acc;
}

} // namespace solvquot
