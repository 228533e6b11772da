#pragma once

#include <span>
#include <variant>

#include "solvquot/torus_slice.hpp"

namespace solvquot {

struct GaStage {
    int i; // additive factor
    GaSlice slice;
    UnitWitness lead_inv;
};

struct GmStage {
    int j; // torus factor
    GmSlice slice;
};

using StageRecord = std::variant<GaStage, GmStage>;

struct Presentation {
    std::vector<std::string> vars;
    std::vector<Poly> relations; // localization relation first, then the kernel
};

// Output of the solvable pipeline: the semi-invariant c, the retraction data
// b = pi(c) and b_i = pi(x_i), the slices realizing
// R_c = (R_c)^G[x_1..x_k, y_1^-..y_r^-], the cleared kernel generators and the
// complete-intersection presentation.
struct QuotientPresentation {
    Epoch epoch; // final denominator c and its weight
    Localized b;
    UnitWitness b_unit;
    std::vector<Localized> b_images;
    std::vector<Localized> u;
    std::vector<GmSlice> s;
    std::vector<Poly> kernel;
    Presentation presentation;
    std::vector<StageRecord> records; // rebased to the final epoch; replay pi
};

struct SemiinvSliceResult {
    GaSlice slice;   // slice for phi_i whose denominator is a semi-invariant
    Character tstar; // weight of the slice denominator
};

// Local slice with semi-invariant denominator for the group window starting
// at additive factor stage_i, acting on the subring generated by `gens`.
SemiinvSliceResult slice_semiinv(const ActionSpec& spec, int stage_i,
                                 std::span<const Localized> gens, const Epoch& epoch,
                                 const Limits& limits = {});

struct UnipotentResult {
    Epoch epoch;
    Localized b; // pi(c), equal to c here since c is U-invariant
    std::vector<Localized> b_images;
    std::vector<Localized> u;
    std::vector<StageRecord> records;
};

UnipotentResult unipotent_invariants(const ActionSpec& spec, const Limits& limits = {});

QuotientPresentation solvable_invariants(const ActionSpec& spec,
                                         const Limits& limits = {});

// Generators x_1..x_n plus the localization variable, and the k + r + 1
// relations (w*c - 1, the cleared u_i, the cleared s_j - 1) presenting
// (R_c)^G as a complete intersection.
Presentation make_presentation(const ActionSpec& spec, const QuotientPresentation& q);

// The composite retraction, replayed from the stage records. `a` must live
// over the final epoch.
Localized composite_pi(const ActionSpec& spec, const QuotientPresentation& q,
                       const Localized& a);

// Expression of an element over the slices with invariant leaf coefficients.
struct ReconNode {
    std::optional<Localized> leaf;                // set iff this is a leaf
    int record_index = -1;                        // which slice is expanded
    std::vector<std::pair<long, ReconNode>> terms; // exponent -> coefficient
};

ReconNode reconstruct(const ActionSpec& spec, const QuotientPresentation& q,
                      const Localized& a);
Localized evaluate_recon(const QuotientPresentation& q, const ReconNode& node);

} // namespace solvquot
