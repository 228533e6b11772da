#pragma once

#include <span>
#include <vector>

#include "solvquot/action.hpp"

namespace solvquot {

struct Limits {
    long max_iter = 10000;
};

// Local slice for one additive factor: s noninvariant of degree d, lead the
// (invariant) top z-coefficient of g = phi(s).
struct GaSlice {
    Localized s;
    long d = 0;
    Localized lead; // the slice denominator
    Localized g;    // phi(s), numerator involves z
};

// deg_z phi(a); kNegInfDeg for a = 0.
long ga_degree(const GaRestriction& phi, const Localized& a);

GaSlice make_ga_slice(const GaRestriction& phi, const Localized& s);

// Division-with-remainder principle: lead^m * a = r * s + b with
// deg(r) <= deg(a) - deg(s), deg(b) <= deg(s) - 1; m is reduced to the exact
// power needed. The identity is re-checked exactly on every call.
struct DwrResult {
    long m;
    Localized r;
    Localized b;
};
DwrResult dwr(const GaRestriction& phi, const GaSlice& slice, const Localized& a);
DwrResult dwr(const GaRestriction& phi, const Localized& s, const Localized& a);

// Search for a local slice among the coefficients of the phi-images,
// minimizing the degree (ties: generator index, then z-exponent). In
// characteristic 0 the minimum is always 1.
GaSlice find_local_slice(const GaRestriction& phi, std::span<const Localized> gens,
                         const Limits& limits = {});

// Retraction onto the phi-invariants: the z-free remainder of dividing phi(a)
// by phi(s). lead_inv witnesses invertibility of the slice denominator.
Localized pi_ga(const GaRestriction& phi, const GaSlice& slice,
                const UnitWitness& lead_inv, const Localized& a);

// Coefficients f_0..f_k with a = sum f_j s^j, each f_j invariant.
std::vector<Localized> expand_in_slice(const GaRestriction& phi, const GaSlice& slice,
                                       const UnitWitness& lead_inv, const Localized& a);

} // namespace solvquot
