#pragma once

#include <cstdint>

#include "solvquot/pipeline.hpp"

namespace solvquot {

struct VerifyReport {
    struct Item {
        std::string name;
        bool pass;
        std::string witness; // failure detail, empty on pass
    };
    std::vector<Item> items;

    bool all_pass() const;
    bool passed(const std::string& name) const;
    std::string summary() const;
};

// Symbolic checks of the theorem-level properties of a computed result:
// invariance, semi-invariance, kernel, reconstruction, counting, idempotence,
// and degree-1 slices in characteristic 0.
VerifyReport verify_output(const ActionSpec& spec, const QuotientPresentation& q);

// Exact randomized orbit check for one element: evaluate at a random point
// and at its translate under random group parameters; values must agree.
// Returns a witness string on disagreement. Trials that keep hitting zeros of
// c are counted in *skipped (reported, not fatal).
std::optional<std::string> numeric_invariance_probe(const ActionSpec& spec,
                                                    const Localized& a,
                                                    const Character& denom_weight,
                                                    int trials, std::uint64_t seed,
                                                    int* skipped = nullptr);

// Probe every reported invariant (b and the b_i). Field must be Q.
VerifyReport numeric_spotcheck(const ActionSpec& spec, const QuotientPresentation& q,
                               int trials, std::uint64_t seed);

} // namespace solvquot
