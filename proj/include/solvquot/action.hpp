#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvquot/localize.hpp"
#include "solvquot/poly.hpp"

namespace solvquot {

// Laurent monomial in the torus variables, as an exponent vector.
class Character {
public:
    Character() = default;
    explicit Character(size_t m) : e_(m, 0) {}

    static Character trivial(size_t m) { return Character(m); }

    size_t size() const { return e_.size(); }
    long operator[](size_t j) const { return e_[j]; }
    void set(size_t j, long v) { e_[j] = v; }

    bool is_trivial() const;
    Character operator*(const Character& o) const;
    Character inverse() const;
    Character pow(long k) const;
    bool operator==(const Character& o) const { return e_ == o.e_; }
    bool operator!=(const Character& o) const { return e_ != o.e_; }

    // Weight with the first j entries dropped (set to zero).
    Character truncated(size_t j) const;

private:
    std::vector<long> e_;
};

// A group in standard solvable form together with its coaction on R:
// l additive coordinates z_i under an m-torus, conjugation characters chi_i,
// and the images Phi(x_i).
struct ActionSpec {
    Field field = Field::rationals();
    VarTableRef table;

    std::vector<int> base_vars;     // x_1..x_n
    std::vector<int> additive_vars; // z_1..z_l
    std::vector<int> torus_vars;    // t_1..t_m
    int check_add_var = -1;         // scratch additive variable for checks
    int check_tor_var = -1;         // scratch invertible variable for checks
    int inverse_var = -1;           // localization variable of the presentation

    std::vector<Character> characters; // chi_i, one per additive variable
    std::vector<Poly> images;          // Phi(x_i)

    int n() const { return static_cast<int>(base_vars.size()); }
    int l() const { return static_cast<int>(additive_vars.size()); }
    int m() const { return static_cast<int>(torus_vars.size()); }

    std::vector<int> group_vars() const; // additive + torus

    Monomial character_monomial(const Character& chi) const;
    std::optional<Character> character_of_monomial(const Monomial& m) const;
    std::string character_to_string(const Character& chi) const;

    // Phi on plain ring elements (base variables only).
    Poly apply_Phi(const Poly& p) const;
};

// Builds the table (with scratch and presentation variables appended) and
// validates. `images` are over a bare table produced by action_input_table().
ActionSpec make_action_spec(Field field, const std::vector<std::string>& base,
                            const std::vector<std::string>& additive,
                            const std::vector<std::string>& torus,
                            std::vector<Character> characters,
                            std::vector<Poly> images);

// Table holding exactly base/additive/torus variables plus the appended
// helpers, in spec order; used by parsers and programmatic construction.
VarTableRef action_input_table(Field field, const std::vector<std::string>& base,
                               const std::vector<std::string>& additive,
                               const std::vector<std::string>& torus,
                               int* check_add, int* check_tor, int* inv_var);

// Identity axiom and exponent discipline; throws SpecError.
void validate(const ActionSpec& spec);

// phi_i: the coaction of the i-th additive factor alone (other z's to 0, t's
// to 1). Extends to R_c since the tracked denominator is a semi-invariant and
// therefore fixed by every phi_i.
class GaRestriction {
public:
    GaRestriction(const ActionSpec& spec, int i);

    const ActionSpec& spec() const { return *spec_; }
    int factor() const { return i_; }
    int zvar() const { return spec_->additive_vars[i_]; }

    Poly apply(const Poly& p) const;
    Localized apply(const Localized& a) const;

private:
    const ActionSpec* spec_;
    int i_;
    Substitution map_;
};

// Phi restricted to the sub-torus t_j..t_m (z's to 0, earlier t's to 1).
class TorusRestriction {
public:
    TorusRestriction(const ActionSpec& spec, int j);

    const ActionSpec& spec() const { return *spec_; }
    int factor() const { return j_; }
    int tvar() const { return spec_->torus_vars[j_]; }

    Poly apply(const Poly& p) const;
    // Extension to R_c: Phi(a/c^e) = chi^{-e} Phi(a)/c^e with chi the (truncated)
    // weight of the denominator.
    Localized apply(const Localized& a, const Character& denom_weight) const;

private:
    const ActionSpec* spec_;
    int j_;
    Substitution map_;
};

// Full coaction on R_c.
Localized apply_Phi_localized(const Localized& a, const ActionSpec& spec,
                              const Character& denom_weight);

// chi with Phi(a) = chi * a, if a is a semi-invariant.
std::optional<Character> weight_of(const Poly& p, const ActionSpec& spec);
std::optional<Character> weight_of(const Localized& a, const ActionSpec& spec,
                                   const Character& denom_weight);

bool is_invariant(const Localized& a, const ActionSpec& spec,
                  const Character& denom_weight);

// Numerator of a nonzero semi-invariant of R_c, with its weight. Both a and c
// are semi-invariants, so num(a) = a * c^exp is one too.
std::pair<Poly, Character> semi_invariant_numerator(const Localized& a,
                                                    const ActionSpec& spec,
                                                    const Character& denom_weight);

struct CheckReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Coaction law of Eq-style phi_i: phi(g(w)) == g(w + z) on every generator.
CheckReport check_ga_coaction(const ActionSpec& spec, int i);
// Coassociativity of the j-th multiplicative factor.
CheckReport check_torus_coaction(const ActionSpec& spec, int j);
// Compatibility of phi_i with the ambient action:
// (id (x) phi_i)(psi(x_k)) == sum chi_i^e psi(c_e) z_i^e.
// The identity presumes the i-th factor is normal with a scheme section given
// by z_i = 0, which holds for i = 0 in general and for later factors only on
// elements already invariant under the earlier ones.
CheckReport check_compat(const ActionSpec& spec, int i);

} // namespace solvquot
