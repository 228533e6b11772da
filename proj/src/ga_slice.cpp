#include "solvquot/ga_slice.hpp"

#include <algorithm>
#include <tuple>

namespace solvquot {

long ga_degree(const GaRestriction& phi, const Localized& a) {
    if (a.is_zero()) return kNegInfDeg;
    return phi.apply(a.num()).deg_poly(phi.zvar());
}

GaSlice make_ga_slice(const GaRestriction& phi, const Localized& s) {
    GaSlice out{s, 0, s, s};
    out.g = phi.apply(s);
    out.d = out.g.num().deg_poly(phi.zvar());
    if (out.d < 1) throw InternalError("slice candidate is invariant");
    out.lead = Localized(out.g.num().coeff(phi.zvar(), out.d), out.g.denom_exp(),
                         out.g.denom());
    if (ga_degree(phi, out.lead) != 0)
        throw InvalidCoactionError("leading coefficient of phi(s) is not invariant");
    return out;
}

DwrResult dwr(const GaRestriction& phi, const Localized& s, const Localized& a) {
    return dwr(phi, make_ga_slice(phi, s), a);
}

DwrResult dwr(const GaRestriction& phi, const GaSlice& slice, const Localized& a) {
    const int z = phi.zvar();
    const Localized& g = slice.g;
    const Localized& cs = slice.lead;
    const long d = slice.d;

    // Pseudo-division: cs^m f = q g + h with deg_z h < d.
    Localized f = phi.apply(a);
    Localized q = Localized::embed(Poly::zero(a.table()), a.denom());
    Localized h = f;
    long m = 0;
    while (!h.is_zero() && h.num().deg_poly(z) >= d) {
        long k = h.num().deg_poly(z);
        Localized ak(h.num().coeff(z, k), h.denom_exp(), h.denom());
        Monomial shift(a.table()->size());
        shift.set(z, static_cast<int>(k - d));
        h = cs * h - ak.mono_times(shift) * g;
        q = cs * q + ak.mono_times(shift);
        ++m;
        if (!h.is_zero() && h.num().deg_poly(z) >= k)
            throw InternalError("dwr: no progress");
    }

    // Substituting z = 0 turns cs^m f = q g + h into cs^m a = r s + b.
    Substitution z0{{z, SubstEntry{Poly::zero(a.table()), std::nullopt}}};
    DwrResult res{m, Localized(substitute(q.num(), z0), q.denom_exp(), q.denom()),
                  Localized(substitute(h.num(), z0), h.denom_exp(), h.denom())};

    // Drop common powers of the denominator so m is exact, not a bound.
    while (res.m > 0) {
        auto rq = loc_exact_div(res.r, cs);
        if (!rq) break;
        auto rb = loc_exact_div(res.b, cs);
        if (!rb) break;
        res.r = std::move(*rq);
        res.b = std::move(*rb);
        --res.m;
    }

    if (!(cs.pow(res.m) * a).equals(res.r * slice.s + res.b))
        throw InternalError("dwr: division identity violated");
    return res;
}

GaSlice find_local_slice(const GaRestriction& phi, std::span<const Localized> gens,
                         const Limits& limits) {
    if (gens.empty()) throw TrivialActionError("no generators");
    const int z = phi.zvar();
    const bool char_zero = gens.front().table()->field().is_rationals();

    std::vector<Localized> b(gens.begin(), gens.end());
    std::optional<GaSlice> made;
    long prev_max = std::numeric_limits<long>::max();

    for (long iter = 0;; ++iter) {
        if (iter > limits.max_iter)
            throw IterationCapError("local slice search exceeded the iteration cap");

        long max_deg = kNegInfDeg;
        for (const auto& bi : b) max_deg = std::max(max_deg, ga_degree(phi, bi));
        if (max_deg <= 0) {
            if (!made)
                throw TrivialActionError("additive factor acts trivially on the generators");
            return *made;
        }
        if (max_deg >= prev_max)
            throw InternalError("local slice search: generator degree did not decrease");
        prev_max = max_deg;

        // Minimal-degree noninvariant coefficient; ties by generator, then
        // z-exponent.
        std::optional<std::tuple<long, size_t, long>> best;
        Localized chosen = b.front();
        for (size_t i = 0; i < b.size(); ++i) {
            if (ga_degree(phi, b[i]) <= 0) continue;
            Localized gi = phi.apply(b[i]);
            long top = gi.num().deg_poly(z);
            for (long e = 0; e <= top; ++e) {
                Poly ce = gi.num().coeff(z, e);
                if (ce.is_zero()) continue;
                Localized cand(ce, gi.denom_exp(), gi.denom());
                long dg = ga_degree(phi, cand);
                if (dg < 1) continue;
                std::tuple<long, size_t, long> key{dg, i, e};
                if (!best || key < *best) {
                    best = key;
                    chosen = cand;
                }
            }
        }
        if (!best) throw InternalError("noninvariant generator without noninvariant coefficients");

        made = make_ga_slice(phi, chosen);
        if (char_zero) {
            if (made->d != 1)
                throw InvalidCoactionError("characteristic 0 slice of degree > 1");
            return *made;
        }
        for (size_t i = 0; i < b.size(); ++i) b[i] = dwr(phi, *made, gens[i]).b;
    }
}

namespace {

// Honest division of phi(a) by g using the inverted slice denominator;
// returns (q(0), remainder). The remainder is z-free for genuine coactions.
std::pair<Localized, Localized> divide_by_slice(const GaRestriction& phi,
                                                const GaSlice& slice,
                                                const UnitWitness& lead_inv,
                                                const Localized& a) {
    const int z = phi.zvar();
    Localized h = phi.apply(a);
    Localized q0 = Localized::embed(Poly::zero(a.table()), a.denom());
    while (!h.is_zero() && h.num().deg_poly(z) >= slice.d) {
        long k = h.num().deg_poly(z);
        Localized ak(h.num().coeff(z, k), h.denom_exp(), h.denom());
        Localized t = ak * lead_inv.inverse;
        Monomial shift(a.table()->size());
        shift.set(z, static_cast<int>(k - slice.d));
        h = h - t.mono_times(shift) * slice.g;
        if (k == slice.d) q0 = q0 + t;
        if (!h.is_zero() && h.num().deg_poly(z) >= k)
            throw InternalError("pi_ga: no progress");
    }
    if (h.num().involves(z))
        throw InvalidCoactionError("pi_ga: remainder involves z; the input is not a coaction");
    return {q0, h};
}

} // namespace

Localized pi_ga(const GaRestriction& phi, const GaSlice& slice,
                const UnitWitness& lead_inv, const Localized& a) {
    return divide_by_slice(phi, slice, lead_inv, a).second;
}

std::vector<Localized> expand_in_slice(const GaRestriction& phi, const GaSlice& slice,
                                       const UnitWitness& lead_inv, const Localized& a) {
    std::vector<Localized> coeffs;
    Localized cur = a;
    while (true) {
        if (ga_degree(phi, cur) <= 0) {
            coeffs.push_back(cur);
            break;
        }
        auto [q0, r] = divide_by_slice(phi, slice, lead_inv, cur);
        coeffs.push_back(r);
        cur = q0;
    }
    for (const auto& f : coeffs)
        if (ga_degree(phi, f) > 0)
            throw InternalError("expand_in_slice: coefficient is not invariant");
    // Reconstruction must be exact.
    Localized sum = Localized::embed(Poly::zero(a.table()), a.denom());
    for (size_t j = coeffs.size(); j-- > 0;) sum = sum * slice.s + coeffs[j];
    if (!sum.equals(a)) throw InternalError("expand_in_slice: reconstruction mismatch");
    return coeffs;
}

} // namespace solvquot
