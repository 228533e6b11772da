#include "solvquot/field.hpp"

namespace solvquot {

Field Field::prime_field(unsigned long p) {
    mpz_class m(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
        throw SpecError("modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

FieldElem Field::from_long(long v) const { return reduce(mpq_class(v)); }

FieldElem Field::reduce(const mpq_class& v) const {
    mpq_class c = v;
    c.canonicalize();
    if (p_ == 0) return c;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = c.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = c.get_den() % p;
    if (den == 0) throw SpecError("denominator divisible by the characteristic");
    mpz_class deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InternalError("non-invertible residue in prime field");
    mpz_class r = (num * deninv) % p;
    if (r < 0) r += p;
    return mpq_class(r);
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const { return reduce(a + b); }
FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const { return reduce(a - b); }
FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const { return reduce(a * b); }

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const {
    if (b == 0) throw InternalError("division by zero in the coefficient field");
    return reduce(a / b);
}

FieldElem Field::neg(const FieldElem& a) const { return reduce(-a); }

FieldElem Field::inv(const FieldElem& a) const { return div(one(), a); }

FieldElem Field::pow(const FieldElem& a, long e) const {
    if (e < 0) return inv(pow(a, -e));
    FieldElem r = one();
    FieldElem base = a;
    long k = e;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

FieldElem Field::binom(unsigned long n, unsigned long k) const {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return reduce(mpq_class(b));
}

std::string Field::to_string(const FieldElem& a) const { return a.get_str(); }

} // namespace solvquot
