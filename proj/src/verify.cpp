#include "solvquot/verify.hpp"

#include <random>
#include <sstream>

#include "solvquot/dsl.hpp"

namespace solvquot {

bool VerifyReport::all_pass() const {
    for (const auto& it : items)
        if (!it.pass) return false;
    return true;
}

bool VerifyReport::passed(const std::string& name) const {
    for (const auto& it : items)
        if (it.name == name) return it.pass;
    return false;
}

std::string VerifyReport::summary() const {
    std::ostringstream out;
    for (const auto& it : items) {
        out << (it.pass ? "  [ok]   " : "  [FAIL] ") << it.name;
        if (!it.witness.empty()) out << ": " << it.witness;
        out << "\n";
    }
    return out.str();
}

namespace {

template <typename F>
void run_item(VerifyReport& rep, const std::string& name, F&& f) {
    VerifyReport::Item item{name, true, ""};
    try {
        auto witness = f(); // optional<string>
        if (witness) {
            item.pass = false;
            item.witness = *witness;
        }
    } catch (const std::exception& e) {
        item.pass = false;
        item.witness = e.what();
    }
    rep.items.push_back(std::move(item));
}

} // namespace

VerifyReport verify_output(const ActionSpec& spec, const QuotientPresentation& q) {
    VerifyReport rep;
    const Character& cw = q.epoch.weight;

    run_item(rep, "invariance", [&]() -> std::optional<std::string> {
        for (int k = 0; k < spec.n(); ++k) {
            const Localized& bi = q.b_images[k];
            if (bi.is_zero()) continue;
            if (!is_invariant(bi, spec, cw))
                return "Phi(b_" + spec.table->name(spec.base_vars[k]) +
                       ") differs from it: Phi image " +
                       dsl::localized_to_string(apply_Phi_localized(bi, spec, cw));
        }
        if (!q.b.is_zero() && !is_invariant(q.b, spec, cw)) return std::string("b is not invariant");
        return std::nullopt;
    });

    run_item(rep, "semi_invariance", [&]() -> std::optional<std::string> {
        auto w = weight_of(*q.epoch.den, spec);
        if (!w) return std::string("c is not a semi-invariant");
        if (*w != cw)
            return "weight of c is " + spec.character_to_string(*w) +
                   ", recorded " + spec.character_to_string(cw);
        return std::nullopt;
    });

    run_item(rep, "kernel", [&]() -> std::optional<std::string> {
        for (size_t i = 0; i < q.u.size(); ++i)
            if (!composite_pi(spec, q, q.u[i]).is_zero())
                return "pi(u_" + std::to_string(i + 1) + ") != 0";
        for (size_t j = 0; j < q.s.size(); ++j)
            if (!composite_pi(spec, q, q.s[j].s.elem).is_one())
                return "pi(s_" + std::to_string(j + 1) + ") != 1";
        return std::nullopt;
    });

    run_item(rep, "reconstruction", [&]() -> std::optional<std::string> {
        for (int k = 0; k < spec.n(); ++k) {
            Localized xk(Poly::variable(spec.table, spec.base_vars[k]), 0, q.epoch.den);
            ReconNode node = reconstruct(spec, q, xk);
            if (!evaluate_recon(q, node).equals(xk))
                return "reconstruction of " + spec.table->name(spec.base_vars[k]) +
                       " does not evaluate back";
        }
        return std::nullopt;
    });

    run_item(rep, "counting", [&]() -> std::optional<std::string> {
        size_t kr = q.u.size() + q.s.size();
        if (q.kernel.size() != kr)
            return "kernel has " + std::to_string(q.kernel.size()) +
                   " generators, expected k + r = " + std::to_string(kr);
        if (kr > static_cast<size_t>(spec.n()))
            return "k + r exceeds the number of generators";
        if (q.presentation.relations.size() != kr + 1)
            return std::string("presentation relation count is not k + r + 1");
        return std::nullopt;
    });

    run_item(rep, "idempotence", [&]() -> std::optional<std::string> {
        for (int k = 0; k < spec.n(); ++k)
            if (!composite_pi(spec, q, q.b_images[k]).equals(q.b_images[k]))
                return "pi(b_" + std::to_string(k + 1) + ") != b_" + std::to_string(k + 1);
        return std::nullopt;
    });

    run_item(rep, "char0_degrees", [&]() -> std::optional<std::string> {
        if (!spec.field.is_rationals()) return std::nullopt;
        for (const auto& rec : q.records)
            if (const auto* ga = std::get_if<GaStage>(&rec))
                if (ga->slice.d != 1)
                    return "additive slice of degree " + std::to_string(ga->slice.d) +
                           " in characteristic 0";
        return std::nullopt;
    });

    return rep;
}

namespace {

mpq_class random_rational(std::mt19937_64& rng, bool nonzero) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    for (;;) {
        mpq_class v(num(rng), den(rng));
        v.canonicalize();
        if (!nonzero || v != 0) return v;
    }
}

} // namespace

std::optional<std::string> numeric_invariance_probe(const ActionSpec& spec,
                                                    const Localized& a,
                                                    const Character& denom_weight,
                                                    int trials, std::uint64_t seed,
                                                    int* skipped_out) {
    if (!spec.field.is_rationals())
        throw SpecError("numeric spot-checks require field Q");
    (void)denom_weight;
    std::mt19937_64 rng(seed);
    const Poly& c = *a.denom();
    const long e = a.denom_exp();
    int skipped = 0;

    for (int t = 0; t < trials; ++t) {
        bool done = false;
        for (int attempt = 0; attempt < 100 && !done; ++attempt) {
            std::vector<FieldElem> pt(spec.table->size(), FieldElem(0));
            for (int v : spec.base_vars) pt[v] = random_rational(rng, false);
            for (int v : spec.additive_vars) pt[v] = random_rational(rng, false);
            for (int v : spec.torus_vars) pt[v] = random_rational(rng, true);

            FieldElem c0 = c.evaluate(pt);
            if (c0 == 0) continue;
            // Translate the base point by the group element (z, t).
            std::vector<FieldElem> moved = pt;
            for (int k = 0; k < spec.n(); ++k)
                moved[spec.base_vars[k]] = spec.images[k].evaluate(pt);
            FieldElem c1 = c.evaluate(moved);
            if (c1 == 0) continue;

            const Field& F = spec.field;
            FieldElem v0 = F.div(a.num().evaluate(pt), F.pow(c0, e));
            FieldElem v1 = F.div(a.num().evaluate(moved), F.pow(c1, e));
            if (v0 != v1) {
                std::ostringstream out;
                out << "orbit values differ: " << v0.get_str() << " vs " << v1.get_str()
                    << " (trial " << t << ")";
                return out.str();
            }
            done = true;
        }
        if (!done) ++skipped;
    }
    if (skipped_out) *skipped_out += skipped;
    if (skipped == trials)
        return std::string("all trials hit zeros of c; nothing was checked");
    return std::nullopt;
}

VerifyReport numeric_spotcheck(const ActionSpec& spec, const QuotientPresentation& q,
                               int trials, std::uint64_t seed) {
    VerifyReport rep;
    std::ostringstream name;
    name << "numeric_spotcheck(trials=" << trials << ", seed=" << seed << ")";
    VerifyReport::Item item{name.str(), true, ""};
    int skipped = 0;
    try {
        std::uint64_t s = seed;
        for (int k = 0; k < spec.n() && item.pass; ++k) {
            if (q.b_images[k].is_zero()) continue;
            auto w = numeric_invariance_probe(spec, q.b_images[k], q.epoch.weight,
                                              trials, s++, &skipped);
            if (w) {
                item.pass = false;
                item.witness = "b_" + std::to_string(k + 1) + ": " + *w;
            }
        }
        if (item.pass && !q.b.is_zero()) {
            auto w = numeric_invariance_probe(spec, q.b, q.epoch.weight, trials, s++,
                                              &skipped);
            if (w) {
                item.pass = false;
                item.witness = "b: " + *w;
            }
        }
    } catch (const std::exception& e) {
        item.pass = false;
        item.witness = e.what();
    }
    if (item.pass && skipped > 0)
        item.witness = std::to_string(skipped) + " trial(s) skipped at zeros of c";
    rep.items.push_back(std::move(item));
    return rep;
}

} // namespace solvquot
