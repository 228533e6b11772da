#pragma once

#include <memory>
#include <optional>

#include "solvquot/poly.hpp"

namespace solvquot {

// Shared handle to the current denominator c; a new handle starts a new epoch.
using DenomRef = std::shared_ptr<const Poly>;

inline DenomRef make_denom(Poly c) {
    if (c.is_zero()) throw InternalError("zero denominator");
    return std::make_shared<const Poly>(std::move(c));
}

// Element of R_c, stored as num / c^exp with the minimal exponent reachable by
// cancelling exact powers of c. R is a domain, so equality is decided by
// cross-multiplication.
class Localized {
public:
    Localized(Poly num, long exp, DenomRef den);

    static Localized embed(Poly p, DenomRef den) {
        return Localized(std::move(p), 0, std::move(den));
    }
    static Localized from_long(const VarTableRef& tab, long v, DenomRef den) {
        return embed(Poly::from_long(tab, v), std::move(den));
    }

    const Poly& num() const { return num_; }
    long denom_exp() const { return exp_; }
    const DenomRef& denom() const { return den_; }
    const VarTableRef& table() const { return num_.table(); }

    bool is_zero() const { return num_.is_zero(); }
    bool equals(const Localized& o) const; // cross-multiplication
    bool is_one() const;

    Localized operator+(const Localized& o) const;
    Localized operator-(const Localized& o) const;
    Localized operator-() const;
    Localized operator*(const Localized& o) const;
    Localized scaled(const FieldElem& c) const;
    Localized mono_times(const Monomial& m) const;
    Localized pow(long e) const; // e >= 0

private:
    Poly num_;
    long exp_;
    DenomRef den_;

    void normalize();
    friend void check_same_denom(const Localized& a, const Localized& b);
};

struct UnitWitness {
    Localized elem;
    Localized inverse; // elem * inverse == 1 in R_c

    Localized pow(long e) const; // any sign
};

// Inverse of a in R_c, which exists iff num(a) divides a power of c.
std::optional<UnitWitness> invert(const Localized& a);

// The same ring element over powers of a new denominator; requires the old
// denominator to divide a power of the new one.
Localized rebase(const Localized& a, const DenomRef& new_den);

// a / b when b divides a exactly in R_c (allowing extra powers of c).
std::optional<Localized> loc_exact_div(const Localized& a, const Localized& b);

} // namespace solvquot
