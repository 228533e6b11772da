#pragma once

#include <functional>
#include <vector>

#include "solvquot/ga_slice.hpp"

namespace solvquot {

// Local slice for one multiplicative factor: an invertible semi-invariant
// whose weight has t_j-exponent -d.
struct GmSlice {
    UnitWitness s;
    long d = 0;
    Character weight;
};

// Current localization denominator with its weight.
struct Epoch {
    DenomRef den;
    Character weight;
};

// max |k| over the t_j-exponents of Phi_T(a); 0 for a = 0.
long gm_degree(const TorusRestriction& phi, const Localized& a,
               const Character& denom_weight);

// Weight decomposition Phi_T(a) = sum_chi a_chi * chi; each component is
// verified to be a semi-invariant of its weight, and the components sum to a.
std::vector<std::pair<Character, Localized>> torus_coeff_decompose(
    const TorusRestriction& phi, const Localized& a, const Character& denom_weight);

// Notification that the denominator grew: shat (over the old epoch) became
// invertible by appending its numerator, scaled by lambda to keep the
// denominator monic. Receivers rebase their state.
using GrowHook =
    std::function<void(const Localized& shat, const FieldElem& lambda, const Epoch& grown)>;

// Local slice for t_j with the whole sub-torus t_j..t_m acting, growing the
// localization as needed. `gens` are rebased in place; the epoch is updated.
GmSlice gm_slice(const ActionSpec& spec, int j, std::vector<Localized>& gens,
                 Epoch& epoch, const GrowHook& on_grow, const Limits& limits = {});

// Retraction onto the t_j-invariants: substitute t_j = s^(1/d) and the later
// torus variables by 1 in Phi(a). Every t_j-exponent must be divisible by d.
Localized pi_gm(const ActionSpec& spec, int j, const GmSlice& slice,
                const Localized& a, const Epoch& epoch);

} // namespace solvquot
