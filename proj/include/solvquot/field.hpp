#pragma once

#include <gmpxx.h>

#include <string>

#include "solvquot/errors.hpp"

namespace solvquot {

// A coefficient. Over the rationals this is a reduced fraction; over a prime
// field it is an integer-valued rational in [0, p).
using FieldElem = mpq_class;

// Ground field descriptor: the rationals, or F_p with p prime.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime_field(unsigned long p); // throws SpecError if p is not prime

    bool is_rationals() const { return p_ == 0; }
    unsigned long characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    FieldElem zero() const { return FieldElem(0); }
    FieldElem one() const { return FieldElem(1); }
    FieldElem from_long(long v) const;

    // Canonicalize an arbitrary rational into this field (mod-p reduction
    // includes inverting the denominator).
    FieldElem reduce(const mpq_class& v) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const; // throws on b == 0
    FieldElem neg(const FieldElem& a) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& a, long e) const;

    // binom(n, k) as an element of the field.
    FieldElem binom(unsigned long n, unsigned long k) const;

    std::string to_string(const FieldElem& a) const;

private:
    explicit Field(unsigned long p) : p_(p) {}

    unsigned long p_; // 0 means rationals
};

} // namespace solvquot
