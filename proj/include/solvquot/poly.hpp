#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solvquot/vars.hpp"

namespace solvquot {

// Degree of the zero polynomial in the ordinary (non-Laurent) sense.
inline constexpr long kNegInfDeg = std::numeric_limits<long>::min();

// Sparse multivariate (Laurent) polynomial over the table's field, kept in
// canonical form: no zero coefficients, terms ordered by the global monomial
// order.
class Poly {
public:
    using TermMap = std::map<Monomial, FieldElem, MonoLess>;

    explicit Poly(VarTableRef tab) : tab_(std::move(tab)) {}

    static Poly zero(const VarTableRef& tab) { return Poly(tab); }
    static Poly constant(const VarTableRef& tab, const FieldElem& c);
    static Poly from_long(const VarTableRef& tab, long v);
    static Poly variable(const VarTableRef& tab, int var);
    static Poly monomial(const VarTableRef& tab, const Monomial& m,
                         const FieldElem& c);

    const VarTableRef& table() const { return tab_; }
    const Field& field() const { return tab_->field(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Nonzero constant value, if the poly is one.
    std::optional<FieldElem> constant_value() const;
    int term_count() const { return static_cast<int>(terms_.size()); }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const FieldElem& c) const;
    Poly mono_times(const Monomial& m) const;
    Poly pow(long e) const; // e >= 0

    // Coefficient of v^k, as a poly not involving v.
    Poly coeff(int var, long k) const;
    // Coefficient of the stated exponents on `vars`; remaining variables pass
    // through. Terms must match every listed exponent exactly.
    Poly coeff_monomial(const std::vector<int>& vars,
                        const std::vector<int>& exps) const;

    // Ordinary degree (max exponent; kNegInfDeg when zero).
    long deg_poly(int var) const;
    // Laurent degree (max |exponent|; 0 when zero).
    long deg_laurent(int var) const;
    // Dispatches on the variable's kind.
    long deg_in(int var) const;

    long total_degree() const; // max signed monomial degree, kNegInfDeg if zero
    bool involves(int var) const;
    bool involves_any(const std::vector<int>& vars) const;

    const Monomial& leading_monomial() const; // w.r.t. the global order
    const FieldElem& leading_coeff() const;
    Poly monic() const;
    // The unit u with monic() == scaled(u).
    FieldElem monic_scale() const;

    // Group terms by their exponents on `vars`; keys have support only there.
    std::map<Monomial, Poly, MonoLess> collect_by(const std::vector<int>& vars) const;

    FieldElem evaluate(const std::vector<FieldElem>& values) const;

    std::string to_string() const;

    // Internal: insert c * m, maintaining canonical form.
    void add_term(const Monomial& m, const FieldElem& c);

private:
    VarTableRef tab_;
    TermMap terms_;
};

// Substitution map var -> image, extended as the identity elsewhere. A Laurent
// variable occurring with nonzero exponent must map to something invertible:
// a unit monomial, a nonzero constant, or an image with an explicit inverse.
struct SubstEntry {
    Poly image;
    std::optional<Poly> inverse;
};
using Substitution = std::map<int, SubstEntry>;

Poly substitute(const Poly& p, const Substitution& sigma);

// Division with remainder by g in (coefficient ring)[v]: f = q*g + r with
// deg_v(r) < deg_v(g). The caller supplies inv_lead with
// inv_lead * leadcoeff_v(g) == 1 in the ambient polynomial ring.
std::pair<Poly, Poly> divide_univ(const Poly& f, const Poly& g, int var,
                                  const Poly& inv_lead);

// q with q*n == f, if n divides f. Inputs must have no negative exponents.
std::optional<Poly> exact_divide(const Poly& f, const Poly& n);

// Least m with n | c^m, if any; n | c^m for some m iff n | c^totaldeg(n),
// since every irreducible factor of n must divide c and its multiplicity in n
// is bounded by totaldeg(n).
std::optional<long> divides_power(const Poly& n, const Poly& c);

} // namespace solvquot
