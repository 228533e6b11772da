#include "solvquot/poly.hpp"

#include <algorithm>
#include <sstream>

#include "solvquot/errors.hpp"

namespace solvquot {

Poly Poly::constant(const VarTableRef& tab, const FieldElem& c) {
    Poly p(tab);
    p.add_term(Monomial(tab->size()), tab->field().reduce(c));
    return p;
}

Poly Poly::from_long(const VarTableRef& tab, long v) {
    return constant(tab, tab->field().from_long(v));
}

Poly Poly::variable(const VarTableRef& tab, int var) {
    Monomial m(tab->size());
    m.set(var, 1);
    return monomial(tab, m, tab->field().one());
}

Poly Poly::monomial(const VarTableRef& tab, const Monomial& m, const FieldElem& c) {
    if (m.size() != tab->size()) throw InternalError("monomial arity mismatch");
    if (m.has_negative(*tab))
        throw InternalError("negative exponent on a non-Laurent variable");
    Poly p(tab);
    p.add_term(m, tab->field().reduce(c));
    return p;
}

void Poly::add_term(const Monomial& m, const FieldElem& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        FieldElem s = field().add(it->second, c);
        if (s == 0)
            terms_.erase(it);
        else
            it->second = std::move(s);
    }
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::optional<FieldElem> Poly::constant_value() const {
    if (terms_.size() == 1 && terms_.begin()->first.is_unit())
        return terms_.begin()->second;
    if (terms_.empty()) return FieldElem(0);
    return std::nullopt;
}

bool Poly::operator==(const Poly& o) const { return terms_ == o.terms_; }

static void check_same_table(const Poly& a, const Poly& b) {
    if (a.table() != b.table())
        throw InternalError("mismatched variable tables");
}

Poly Poly::operator+(const Poly& o) const {
    check_same_table(*this, o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(tab_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, field().neg(c));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_table(*this, o);
    Poly r(tab_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma * mb, field().mul(ca, cb));
    return r;
}

Poly Poly::scaled(const FieldElem& c) const {
    FieldElem cc = field().reduce(c);
    Poly r(tab_);
    if (cc == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, field().mul(k, cc));
    return r;
}

Poly Poly::mono_times(const Monomial& m) const {
    Poly r(tab_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw InternalError("negative polynomial power");
    Poly r = constant(tab_, field().one());
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

Poly Poly::coeff(int var, long k) const {
    Poly r(tab_);
    for (const auto& [m, c] : terms_) {
        if (m[var] != k) continue;
        Monomial mm = m;
        mm.set(var, 0);
        r.add_term(mm, c);
    }
    return r;
}

Poly Poly::coeff_monomial(const std::vector<int>& vars,
                          const std::vector<int>& exps) const {
    Poly r(tab_);
    for (const auto& [m, c] : terms_) {
        bool match = true;
        for (size_t i = 0; i < vars.size() && match; ++i)
            match = (m[vars[i]] == exps[i]);
        if (!match) continue;
        Monomial mm = m;
        for (int v : vars) mm.set(v, 0);
        r.add_term(mm, c);
    }
    return r;
}

long Poly::deg_poly(int var) const {
    if (terms_.empty()) return kNegInfDeg;
    long d = std::numeric_limits<long>::min();
    for (const auto& [m, c] : terms_) d = std::max<long>(d, m[var]);
    return d;
}

long Poly::deg_laurent(int var) const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max<long>(d, std::labs(m[var]));
    return d;
}

long Poly::deg_in(int var) const {
    return tab_->laurent(var) ? deg_laurent(var) : deg_poly(var);
}

long Poly::total_degree() const {
    if (terms_.empty()) return kNegInfDeg;
    long d = std::numeric_limits<long>::min();
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Poly::involves(int var) const {
    for (const auto& [m, c] : terms_)
        if (m[var] != 0) return true;
    return false;
}

bool Poly::involves_any(const std::vector<int>& vars) const {
    for (int v : vars)
        if (involves(v)) return true;
    return false;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw InternalError("leading monomial of 0");
    return terms_.rbegin()->first;
}

const FieldElem& Poly::leading_coeff() const {
    if (terms_.empty()) throw InternalError("leading coefficient of 0");
    return terms_.rbegin()->second;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coeff()));
}

FieldElem Poly::monic_scale() const {
    if (is_zero()) return field().one();
    return field().inv(leading_coeff());
}

std::map<Monomial, Poly, MonoLess> Poly::collect_by(const std::vector<int>& vars) const {
    std::map<Monomial, Poly, MonoLess> out;
    for (const auto& [m, c] : terms_) {
        Monomial key = m.restricted_to(vars);
        Monomial rest = m.cleared(vars);
        auto it = out.find(key);
        if (it == out.end()) it = out.emplace(key, Poly(tab_)).first;
        it->second.add_term(rest, c);
    }
    return out;
}

FieldElem Poly::evaluate(const std::vector<FieldElem>& values) const {
    if (static_cast<int>(values.size()) != tab_->size())
        throw InternalError("evaluate: wrong number of values");
    const Field& F = field();
    FieldElem acc = F.zero();
    for (const auto& [m, c] : terms_) {
        FieldElem t = c;
        for (int i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (values[i] == 0 && m[i] < 0)
                throw InternalError("evaluate: zero value for inverted variable");
            t = F.mul(t, F.pow(values[i], m[i]));
        }
        acc = F.add(acc, t);
    }
    return acc;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    const Field& F = field();
    std::ostringstream out;
    bool first = true;
    // Leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        FieldElem c = it->second;
        bool neg = F.is_rationals() && c < 0;
        if (first) {
            if (neg) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            out << (neg ? " - " : " + ");
            if (neg) c = -c;
        }
        const Monomial& m = it->first;
        bool unit_mono = m.is_unit();
        bool coeff_is_one = (c == 1);
        bool wrote = false;
        if (!coeff_is_one || unit_mono) {
            std::string cs = c.get_str();
            if (cs.find('/') != std::string::npos && !unit_mono)
                out << "(" << cs << ")";
            else
                out << cs;
            wrote = true;
        }
        for (int i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) out << "*";
            out << tab_->name(i);
            if (m[i] != 1) out << "^" << m[i];
            wrote = true;
        }
    }
    return out.str();
}

Poly substitute(const Poly& p, const Substitution& sigma) {
    const VarTableRef& tab = p.table();
    const Field& F = p.field();

    // Validate Laurent images once and materialize inverses where needed.
    std::map<int, Poly> inverses;
    for (const auto& [var, entry] : sigma) {
        if (!tab->laurent(var)) continue;
        if (!p.involves(var)) continue;
        const Poly& im = entry.image;
        if (entry.inverse) {
            Poly prod = im * *entry.inverse;
            auto cv = prod.constant_value();
            if (!cv || *cv != 1)
                throw InternalError("substitute: supplied inverse does not invert the image");
            inverses.emplace(var, *entry.inverse);
        } else if (im.term_count() == 1) {
            // Unit monomial (possibly times a scalar): invert directly.
            const auto& [m, c] = *im.terms().begin();
            if (m.has_negative(*tab)) throw InternalError("bad image monomial");
            Monomial minv(tab->size());
            for (int i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!tab->laurent(i))
                    throw InternalError(
                        "substitute: Laurent variable mapped to a non-invertible image");
                minv.set(i, -m[i]);
            }
            inverses.emplace(var, Poly::monomial(tab, minv, F.inv(c)));
        } else {
            throw InternalError(
                "substitute: Laurent variable mapped to a non-invertible image");
        }
    }

    // Power tables keep repeated images from being recomputed per term.
    std::map<int, std::vector<Poly>> pos_pows, neg_pows;
    auto power = [&](std::map<int, std::vector<Poly>>& cache, const Poly& base, int var,
                     int e) -> const Poly& {
        auto& pows = cache.try_emplace(var).first->second;
        if (pows.empty()) pows.push_back(Poly::constant(p.table(), p.field().one()));
        while (static_cast<int>(pows.size()) <= e) pows.push_back(pows.back() * base);
        return pows[e];
    };

    Poly out(tab);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(tab, c);
        Monomial rest = m;
        for (const auto& [var, entry] : sigma) {
            int e = m[var];
            if (e == 0) continue;
            rest.set(var, 0);
            if (e > 0)
                term = term * power(pos_pows, entry.image, var, e);
            else
                term = term * power(neg_pows, inverses.at(var), var, -e);
        }
        out = out + term.mono_times(rest);
    }
    return out;
}

std::pair<Poly, Poly> divide_univ(const Poly& f, const Poly& g, int var,
                                  const Poly& inv_lead) {
    if (f.table() != g.table() || f.table() != inv_lead.table())
        throw InternalError("mismatched variable tables");
    long d = g.deg_poly(var);
    if (d < 1) throw InternalError("divide_univ: divisor must have positive degree");
    Poly lead = g.coeff(var, d);
    auto check = (lead * inv_lead).constant_value();
    if (!check || *check != 1)
        throw InternalError("divide_univ: inv_lead fails to invert the leading coefficient");

    const VarTableRef& tab = f.table();
    Poly q = Poly::zero(tab);
    Poly r = f;
    while (!r.is_zero() && r.deg_poly(var) >= d) {
        long k = r.deg_poly(var);
        Poly ak = r.coeff(var, k);
        Monomial shift(tab->size());
        shift.set(var, static_cast<int>(k - d));
        Poly t = (ak * inv_lead).mono_times(shift);
        q = q + t;
        r = r - t * g;
        if (!r.is_zero() && r.deg_poly(var) >= k)
            throw InternalError("divide_univ: no progress");
    }
    return {q, r};
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& n) {
    if (f.table() != n.table()) throw InternalError("mismatched variable tables");
    if (n.is_zero()) throw InternalError("exact_divide by zero");
    const VarTableRef& tab = f.table();
    for (const auto& [m, c] : f.terms())
        for (int i = 0; i < m.size(); ++i)
            if (m[i] < 0) throw InternalError("exact_divide: negative exponents");
    for (const auto& [m, c] : n.terms())
        for (int i = 0; i < m.size(); ++i)
            if (m[i] < 0) throw InternalError("exact_divide: negative exponents");

    const Monomial& ln = n.leading_monomial();
    const FieldElem& lc = n.leading_coeff();
    Poly q = Poly::zero(tab);
    Poly r = f;
    while (!r.is_zero()) {
        Monomial mq = r.leading_monomial() / ln;
        bool ok = true;
        for (int i = 0; i < mq.size(); ++i)
            if (mq[i] < 0) { ok = false; break; }
        if (!ok) return std::nullopt;
        Poly t = Poly::monomial(tab, mq, tab->field().div(r.leading_coeff(), lc));
        q = q + t;
        r = r - t * n;
    }
    return q;
}

std::optional<long> divides_power(const Poly& n, const Poly& c) {
    if (n.is_zero() || c.is_zero())
        throw InternalError("divides_power: zero argument");
    long bound = n.total_degree();
    if (bound < 0) bound = 0;
    Poly cm = c.pow(bound);
    if (!exact_divide(cm, n)) return std::nullopt;
    long m = bound;
    while (m > 0) {
        cm = *exact_divide(cm, c);
        if (!exact_divide(cm, n)) break;
        --m;
    }
    return m;
}

} // namespace solvquot
