#include "solvquot/action.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace solvquot {

bool Character::is_trivial() const {
    return std::all_of(e_.begin(), e_.end(), [](long v) { return v == 0; });
}

Character Character::operator*(const Character& o) const {
    if (size() != o.size()) throw InternalError("character arity mismatch");
    Character r = *this;
    for (size_t j = 0; j < e_.size(); ++j) r.e_[j] += o.e_[j];
    return r;
}

Character Character::inverse() const {
    Character r = *this;
    for (auto& v : r.e_) v = -v;
    return r;
}

Character Character::pow(long k) const {
    Character r = *this;
    for (auto& v : r.e_) v *= k;
    return r;
}

Character Character::truncated(size_t j) const {
    Character r = *this;
    for (size_t i = 0; i < j && i < r.e_.size(); ++i) r.e_[i] = 0;
    return r;
}

std::vector<int> ActionSpec::group_vars() const {
    std::vector<int> out = additive_vars;
    out.insert(out.end(), torus_vars.begin(), torus_vars.end());
    return out;
}

Monomial ActionSpec::character_monomial(const Character& chi) const {
    Monomial m(table->size());
    for (size_t j = 0; j < chi.size(); ++j)
        m.set(torus_vars[j], static_cast<int>(chi[j]));
    return m;
}

std::optional<Character> ActionSpec::character_of_monomial(const Monomial& mono) const {
    Character chi(torus_vars.size());
    Monomial rest = mono;
    for (size_t j = 0; j < torus_vars.size(); ++j) {
        chi.set(j, mono[torus_vars[j]]);
        rest.set(torus_vars[j], 0);
    }
    if (!rest.is_unit()) return std::nullopt;
    return chi;
}

std::string ActionSpec::character_to_string(const Character& chi) const {
    if (chi.is_trivial()) return "1";
    std::ostringstream out;
    bool first = true;
    for (size_t j = 0; j < chi.size(); ++j) {
        if (chi[j] == 0) continue;
        if (!first) out << "*";
        out << table->name(torus_vars[j]);
        if (chi[j] != 1) out << "^" << chi[j];
        first = false;
    }
    return out.str();
}

Poly ActionSpec::apply_Phi(const Poly& p) const {
    Substitution sigma;
    for (int k = 0; k < n(); ++k) sigma.insert_or_assign(base_vars[k], SubstEntry{images[k], std::nullopt});
    return substitute(p, sigma);
}

VarTableRef action_input_table(Field field, const std::vector<std::string>& base,
                               const std::vector<std::string>& additive,
                               const std::vector<std::string>& torus,
                               int* check_add, int* check_tor, int* inv_var) {
    std::vector<VarTable::Entry> entries;
    for (const auto& s : base) entries.push_back({s, VarKind::base});
    for (const auto& s : additive) entries.push_back({s, VarKind::additive});
    for (const auto& s : torus) entries.push_back({s, VarKind::torus});
    // Scratch variables for the coaction checks; '#' keeps them unparseable.
    *check_add = static_cast<int>(entries.size());
    entries.push_back({"#w", VarKind::auxiliary});
    *check_tor = static_cast<int>(entries.size());
    entries.push_back({"#s", VarKind::slice_laurent});
    // Localization variable of the presentation, first free legal name.
    std::set<std::string> used(base.begin(), base.end());
    used.insert(additive.begin(), additive.end());
    used.insert(torus.begin(), torus.end());
    std::string inv_name;
    for (const std::string& cand : {std::string("w"), std::string("v")}) {
        if (!used.count(cand)) { inv_name = cand; break; }
    }
    for (int k = 1; inv_name.empty(); ++k) {
        std::string cand = "w" + std::to_string(k);
        if (!used.count(cand)) inv_name = cand;
    }
    *inv_var = static_cast<int>(entries.size());
    entries.push_back({inv_name, VarKind::slice});
    return make_table(field, std::move(entries));
}

ActionSpec make_action_spec(Field field, const std::vector<std::string>& base,
                            const std::vector<std::string>& additive,
                            const std::vector<std::string>& torus,
                            std::vector<Character> characters,
                            std::vector<Poly> images) {
    ActionSpec spec;
    spec.field = field;
    if (images.empty()) throw SpecError("no generators");
    spec.table = images.front().table();
    for (const auto& s : base) {
        auto i = spec.table->find(s);
        if (!i) throw SpecError("unknown base variable " + s);
        spec.base_vars.push_back(*i);
    }
    for (const auto& s : additive) {
        auto i = spec.table->find(s);
        if (!i) throw SpecError("unknown additive variable " + s);
        spec.additive_vars.push_back(*i);
    }
    for (const auto& s : torus) {
        auto i = spec.table->find(s);
        if (!i) throw SpecError("unknown torus variable " + s);
        spec.torus_vars.push_back(*i);
    }
    spec.check_add_var = *spec.table->find("#w");
    spec.check_tor_var = *spec.table->find("#s");
    for (int i = 0; i < spec.table->size(); ++i)
        if (spec.table->kind(i) == VarKind::slice) spec.inverse_var = i;
    spec.characters = std::move(characters);
    spec.images = std::move(images);
    validate(spec);
    return spec;
}

void validate(const ActionSpec& spec) {
    if (static_cast<int>(spec.images.size()) != spec.n())
        throw SpecError("expected one coaction image per base variable");
    if (static_cast<int>(spec.characters.size()) != spec.l())
        throw SpecError("expected one character per additive variable");
    for (const auto& chi : spec.characters)
        if (static_cast<int>(chi.size()) != spec.m())
            throw SpecError("character arity does not match the torus rank");

    std::vector<int> allowed = spec.base_vars;
    for (int v : spec.additive_vars) allowed.push_back(v);
    for (int v : spec.torus_vars) allowed.push_back(v);

    Substitution unit;
    for (int v : spec.additive_vars)
        unit.insert_or_assign(v, SubstEntry{Poly::zero(spec.table), std::nullopt});
    for (int v : spec.torus_vars)
        unit.insert_or_assign(v, SubstEntry{Poly::from_long(spec.table, 1), std::nullopt});

    for (int k = 0; k < spec.n(); ++k) {
        const Poly& im = spec.images[k];
        for (const auto& [m, c] : im.terms()) {
            if (!m.uses_only(allowed))
                throw SpecError("image of " + spec.table->name(spec.base_vars[k]) +
                                " uses a variable outside the action");
            for (int v : spec.additive_vars)
                if (m[v] < 0)
                    throw SpecError("negative exponent on additive variable in image of " +
                                    spec.table->name(spec.base_vars[k]));
        }
        Poly at_identity = substitute(im, unit);
        if (at_identity != Poly::variable(spec.table, spec.base_vars[k]))
            throw SpecError("identity axiom fails on " +
                            spec.table->name(spec.base_vars[k]) +
                            ": substituting z = 0, t = 1 yields " +
                            at_identity.to_string());
    }
}

GaRestriction::GaRestriction(const ActionSpec& spec, int i) : spec_(&spec), i_(i) {
    if (i < 0 || i >= spec.l()) throw InternalError("additive factor out of range");
    Substitution collapse;
    for (int k = 0; k < spec.l(); ++k)
        if (k != i)
            collapse.insert_or_assign(spec.additive_vars[k], SubstEntry{Poly::zero(spec.table), std::nullopt});
    for (int v : spec.torus_vars)
        collapse.insert_or_assign(v, SubstEntry{Poly::from_long(spec.table, 1), std::nullopt});
    for (int k = 0; k < spec.n(); ++k)
        map_.insert_or_assign(spec.base_vars[k], SubstEntry{substitute(spec.images[k], collapse), std::nullopt});
}

Poly GaRestriction::apply(const Poly& p) const { return substitute(p, map_); }

Localized GaRestriction::apply(const Localized& a) const {
    // Semi-invariant denominators are fixed by every phi_i.
    return Localized(apply(a.num()), a.denom_exp(), a.denom());
}

TorusRestriction::TorusRestriction(const ActionSpec& spec, int j) : spec_(&spec), j_(j) {
    if (j < 0 || j >= spec.m()) throw InternalError("torus factor out of range");
    Substitution collapse;
    for (int v : spec.additive_vars)
        collapse.insert_or_assign(v, SubstEntry{Poly::zero(spec.table), std::nullopt});
    for (int k = 0; k < j; ++k)
        collapse.insert_or_assign(spec.torus_vars[k], SubstEntry{Poly::from_long(spec.table, 1), std::nullopt});
    for (int k = 0; k < spec.n(); ++k)
        map_.insert_or_assign(spec.base_vars[k], SubstEntry{substitute(spec.images[k], collapse), std::nullopt});
}

Poly TorusRestriction::apply(const Poly& p) const { return substitute(p, map_); }

Localized TorusRestriction::apply(const Localized& a, const Character& denom_weight) const {
    Character twist = denom_weight.truncated(j_).pow(-a.denom_exp());
    Poly im = apply(a.num()).mono_times(spec_->character_monomial(twist));
    return Localized(im, a.denom_exp(), a.denom());
}

Localized apply_Phi_localized(const Localized& a, const ActionSpec& spec,
                              const Character& denom_weight) {
    Character twist = denom_weight.pow(-a.denom_exp());
    Poly im = spec.apply_Phi(a.num()).mono_times(spec.character_monomial(twist));
    return Localized(im, a.denom_exp(), a.denom());
}

std::optional<Character> weight_of(const Poly& p, const ActionSpec& spec) {
    if (p.is_zero()) throw InternalError("weight_of(0)");
    Poly im = spec.apply_Phi(p);
    auto groups = im.collect_by(spec.group_vars());
    if (groups.size() != 1) return std::nullopt;
    const auto& [mono, coef] = *groups.begin();
    auto chi = spec.character_of_monomial(mono);
    if (!chi) return std::nullopt; // additive variables occur
    if (coef != p) return std::nullopt;
    return chi;
}

std::optional<Character> weight_of(const Localized& a, const ActionSpec& spec,
                                   const Character& denom_weight) {
    if (a.is_zero()) throw InternalError("weight_of(0)");
    Localized im = apply_Phi_localized(a, spec, denom_weight);
    auto groups = im.num().collect_by(spec.group_vars());
    if (groups.size() != 1) return std::nullopt;
    const auto& [mono, coef] = *groups.begin();
    auto chi = spec.character_of_monomial(mono);
    if (!chi) return std::nullopt;
    if (!Localized(coef, im.denom_exp(), im.denom()).equals(a)) return std::nullopt;
    return chi;
}

bool is_invariant(const Localized& a, const ActionSpec& spec,
                  const Character& denom_weight) {
    if (a.is_zero()) return true;
    auto w = weight_of(a, spec, denom_weight);
    return w && w->is_trivial();
}

std::pair<Poly, Character> semi_invariant_numerator(const Localized& a,
                                                    const ActionSpec& spec,
                                                    const Character& denom_weight) {
    if (a.is_zero()) throw InternalError("semi_invariant_numerator(0)");
    auto wa = weight_of(a, spec, denom_weight);
    if (!wa) throw InvalidCoactionError("semi_invariant_numerator: element is not a semi-invariant");
    auto wn = weight_of(a.num(), spec);
    if (!wn)
        throw InvalidCoactionError("semi_invariant_numerator: numerator is not a semi-invariant");
    return {a.num(), *wn};
}

CheckReport check_ga_coaction(const ActionSpec& spec, int i) {
    CheckReport rep;
    GaRestriction phi(spec, i);
    int z = phi.zvar();
    int w = spec.check_add_var;
    Poly zw = Poly::variable(spec.table, z) + Poly::variable(spec.table, w);
    for (int k = 0; k < spec.n(); ++k) {
        Poly g = phi.apply(Poly::variable(spec.table, spec.base_vars[k]));
        Substitution to_w{{z, SubstEntry{Poly::variable(spec.table, w), std::nullopt}}};
        Poly lhs = phi.apply(substitute(g, to_w));
        Substitution shift{{z, SubstEntry{zw, std::nullopt}}};
        Poly rhs = substitute(g, shift);
        if (lhs != rhs)
            rep.failures.push_back("phi_" + std::to_string(i + 1) + "(g(w)) != g(w + z) on " +
                                   spec.table->name(spec.base_vars[k]));
    }
    return rep;
}

CheckReport check_torus_coaction(const ActionSpec& spec, int j) {
    CheckReport rep;
    if (spec.m() == 0) return rep;
    int t = spec.torus_vars[j];
    int s = spec.check_tor_var;

    // Single-factor restriction: z to 0, every other torus variable to 1.
    Substitution collapse;
    for (int v : spec.additive_vars)
        collapse.insert_or_assign(v, SubstEntry{Poly::zero(spec.table), std::nullopt});
    for (int k = 0; k < spec.m(); ++k)
        if (k != j)
            collapse.insert_or_assign(spec.torus_vars[k], SubstEntry{Poly::from_long(spec.table, 1), std::nullopt});
    Substitution phi_map;
    for (int k = 0; k < spec.n(); ++k)
        phi_map.insert_or_assign(spec.base_vars[k], SubstEntry{substitute(spec.images[k], collapse), std::nullopt});

    Poly st = Poly::variable(spec.table, s) * Poly::variable(spec.table, t);
    for (int k = 0; k < spec.n(); ++k) {
        Poly h = substitute(Poly::variable(spec.table, spec.base_vars[k]), phi_map);
        // Apply the coaction to the coefficients, writing the inner copy in #s.
        Poly lhs = Poly::zero(spec.table);
        for (const auto& [mono, coef] : h.collect_by({t})) {
            Poly inner = substitute(coef, phi_map);
            Substitution rename{{t, SubstEntry{Poly::variable(spec.table, s), std::nullopt}}};
            lhs = lhs + substitute(inner, rename).mono_times(mono);
        }
        Substitution mul{{t, SubstEntry{st, std::nullopt}}};
        Poly rhs = substitute(h, mul);
        if (lhs != rhs)
            rep.failures.push_back("coassociativity fails for " +
                                   spec.table->name(t) + " on " +
                                   spec.table->name(spec.base_vars[k]));
    }
    return rep;
}

CheckReport check_compat(const ActionSpec& spec, int i) {
    CheckReport rep;
    GaRestriction phi(spec, i);
    int z = phi.zvar();
    Substitution kill_z{{z, SubstEntry{Poly::zero(spec.table), std::nullopt}}};

    Substitution phi_coeffwise;
    for (int k = 0; k < spec.n(); ++k)
        phi_coeffwise.insert_or_assign(spec.base_vars[k], SubstEntry{phi.apply(Poly::variable(spec.table, spec.base_vars[k])), std::nullopt});

    for (int k = 0; k < spec.n(); ++k) {
        Poly x = Poly::variable(spec.table, spec.base_vars[k]);
        Poly psi_x = substitute(spec.apply_Phi(x), kill_z);
        Poly lhs = substitute(psi_x, phi_coeffwise);

        Poly g = phi.apply(x);
        Poly rhs = Poly::zero(spec.table);
        long d = g.deg_poly(z);
        for (long e = 0; e <= d; ++e) {
            Poly ce = g.coeff(z, e);
            if (ce.is_zero()) continue;
            Poly psi_ce = substitute(spec.apply_Phi(ce), kill_z);
            Monomial mono = spec.character_monomial(spec.characters[i].pow(e));
            mono.set(z, static_cast<int>(e));
            rhs = rhs + psi_ce.mono_times(mono);
        }
        if (lhs != rhs)
            rep.failures.push_back("ambient compatibility fails for z" +
                                   std::to_string(i + 1) + " on " +
                                   spec.table->name(spec.base_vars[k]));
    }
    return rep;
}

} // namespace solvquot
