#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "solvquot/field.hpp"

namespace solvquot {

enum class VarKind {
    base,          // generators of R
    additive,      // z_i, coordinates of the unipotent factors
    torus,         // t_j, Laurent
    slice,         // adjoined slice/localization indeterminates
    slice_laurent, // adjoined invertible indeterminates, Laurent
    auxiliary      // scratch variables for coaction checks
};

inline bool is_laurent(VarKind k) {
    return k == VarKind::torus || k == VarKind::slice_laurent;
}

// Fixed, ordered list of variables. The order is frozen for the lifetime of a
// computation and induces the monomial order.
class VarTable {
public:
    struct Entry {
        std::string name;
        VarKind kind;
    };

    VarTable(Field field, std::vector<Entry> entries);

    const Field& field() const { return field_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const std::string& name(int i) const { return entries_[i].name; }
    VarKind kind(int i) const { return entries_[i].kind; }
    bool laurent(int i) const { return is_laurent(entries_[i].kind); }
    std::optional<int> find(const std::string& name) const;

    std::vector<int> indices_of(VarKind k) const;

private:
    Field field_;
    std::vector<Entry> entries_;
};

using VarTableRef = std::shared_ptr<const VarTable>;

VarTableRef make_table(Field field, std::vector<VarTable::Entry> entries);

// Dense exponent vector over a VarTable. Exponents of non-Laurent variables
// must stay nonnegative; callers that can break this check it explicitly.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0) {}

    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[i]; }
    void set(int i, int v) { e_[i] = v; }
    long degree() const; // signed sum of exponents
    bool is_unit() const;

    Monomial operator*(const Monomial& o) const;
    // Exact quotient; exponents may go negative, the caller decides whether
    // that is legal.
    Monomial operator/(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    // Restrict to / clear a subset of positions.
    Monomial restricted_to(const std::vector<int>& vars) const;
    Monomial cleared(const std::vector<int>& vars) const;

    bool uses_only(const std::vector<int>& vars) const;
    bool has_negative(const VarTable& tab) const;

private:
    std::vector<int> e_;
};

// Graded lexicographic: first by signed total degree, ties by exponents in
// table order. Restricted to the exponent lattice this is compatible with
// multiplication, which is what the leading-monomial choices rely on.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (int i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

} // namespace solvquot
