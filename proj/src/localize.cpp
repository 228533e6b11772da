#include "solvquot/localize.hpp"

namespace solvquot {

namespace {

// Factor p as unit * p+ with p+ free of negative exponents and unit a Laurent
// monomial. Denominators are plain polynomials, so cancellation happens on p+.
std::pair<Monomial, Poly> split_laurent_unit(const Poly& p) {
    const VarTableRef& tab = p.table();
    Monomial unit(tab->size());
    bool any = false;
    for (const auto& [m, c] : p.terms()) {
        for (int i = 0; i < m.size(); ++i) {
            if (m[i] < 0 && m[i] < unit[i]) {
                unit.set(i, m[i]);
                any = true;
            }
        }
    }
    if (!any) return {unit, p};
    Monomial shift(tab->size());
    for (int i = 0; i < unit.size(); ++i) shift.set(i, -unit[i]);
    return {unit, p.mono_times(shift)};
}

} // namespace

void check_same_denom(const Localized& a, const Localized& b) {
    if (a.den_ == b.den_) return;
    if (*a.den_ == *b.den_) return;
    throw InternalError("mismatched localization denominators");
}

Localized::Localized(Poly num, long exp, DenomRef den)
    : num_(std::move(num)), exp_(exp), den_(std::move(den)) {
    if (!den_ || den_->is_zero()) throw InternalError("zero denominator");
    if (exp_ < 0) throw InternalError("negative denominator exponent");
    normalize();
}

void Localized::normalize() {
    if (num_.is_zero()) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) return;
    auto cv = den_->constant_value();
    if (cv) { // constant denominator, absorb it
        num_ = num_.scaled(num_.field().inv(num_.field().pow(*cv, exp_)));
        exp_ = 0;
        return;
    }
    auto [unit, plus] = split_laurent_unit(num_);
    bool shifted = !unit.is_unit();
    while (exp_ > 0) {
        auto q = exact_divide(plus, *den_);
        if (!q) break;
        plus = std::move(*q);
        --exp_;
    }
    num_ = shifted ? plus.mono_times(unit) : plus;
}

bool Localized::equals(const Localized& o) const {
    check_same_denom(*this, o);
    // a/c^i = b/c^j iff a c^j = b c^i
    return num_ * den_->pow(o.exp_) == o.num_ * den_->pow(exp_);
}

bool Localized::is_one() const {
    return exp_ == 0 && num_.constant_value() && *num_.constant_value() == 1;
}

Localized Localized::operator+(const Localized& o) const {
    check_same_denom(*this, o);
    long e = std::max(exp_, o.exp_);
    Poly a = num_ * den_->pow(e - exp_);
    Poly b = o.num_ * den_->pow(e - o.exp_);
    return Localized(a + b, e, den_);
}

Localized Localized::operator-(const Localized& o) const { return *this + (-o); }

Localized Localized::operator-() const { return Localized(-num_, exp_, den_); }

Localized Localized::operator*(const Localized& o) const {
    check_same_denom(*this, o);
    return Localized(num_ * o.num_, exp_ + o.exp_, den_);
}

Localized Localized::scaled(const FieldElem& c) const {
    return Localized(num_.scaled(c), exp_, den_);
}

Localized Localized::mono_times(const Monomial& m) const {
    return Localized(num_.mono_times(m), exp_, den_);
}

Localized Localized::pow(long e) const {
    if (e < 0) throw InternalError("Localized::pow with negative exponent");
    return Localized(num_.pow(e), exp_ * e, den_);
}

Localized UnitWitness::pow(long e) const {
    if (e >= 0) return elem.pow(e);
    return inverse.pow(-e);
}

std::optional<UnitWitness> invert(const Localized& a) {
    if (a.is_zero()) throw InternalError("invert(0)");
    const DenomRef& den = a.denom();
    auto [unit, plus] = split_laurent_unit(a.num());
    auto m = divides_power(plus, *den);
    if (!m) return std::nullopt;
    Poly q = *exact_divide(den->pow(*m), plus);
    // 1/a = c^exp * q / (unit * c^m)
    Monomial uinv(a.table()->size());
    for (int i = 0; i < unit.size(); ++i) uinv.set(i, -unit[i]);
    Poly numinv = (q * den->pow(a.denom_exp())).mono_times(uinv);
    Localized inv(numinv, *m, den);
    UnitWitness w{a, inv};
    if (!(w.elem * w.inverse).is_one())
        throw InternalError("invert: witness product is not 1");
    return w;
}

Localized rebase(const Localized& a, const DenomRef& new_den) {
    if (*a.denom() == *new_den)
        return Localized(a.num(), a.denom_exp(), new_den);
    if (a.denom_exp() == 0) return Localized(a.num(), 0, new_den);
    auto k = divides_power(*a.denom(), *new_den);
    if (!k)
        throw InternalError("rebase: old denominator does not divide a power of the new one");
    Poly q = *exact_divide(new_den->pow(*k), *a.denom());
    return Localized(a.num() * q.pow(a.denom_exp()), *k * a.denom_exp(), new_den);
}

std::optional<Localized> loc_exact_div(const Localized& a, const Localized& b) {
    check_same_denom(a, b);
    if (b.is_zero()) throw InternalError("loc_exact_div by zero");
    if (a.is_zero()) return Localized::embed(Poly::zero(a.table()), a.denom());
    auto [bunit, bplus] = split_laurent_unit(b.num());
    auto [aunit, aplus] = split_laurent_unit(a.num());
    // Extra powers of c may be needed; totaldeg(b+) of them always suffice.
    long j = std::max<long>(bplus.total_degree(), 0);
    Poly lhs = aplus * a.denom()->pow(b.denom_exp() + j);
    auto q = exact_divide(lhs, bplus);
    if (!q) return std::nullopt;
    Monomial shift(a.table()->size());
    for (int i = 0; i < shift.size(); ++i) shift.set(i, aunit[i] - bunit[i]);
    return Localized(q->mono_times(shift), a.denom_exp() + j, a.denom());
}

} // namespace solvquot
