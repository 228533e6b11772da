#include "solvquot/vars.hpp"

#include <algorithm>
#include <set>

namespace solvquot {

VarTable::VarTable(Field field, std::vector<Entry> entries)
    : field_(field), entries_(std::move(entries)) {
    std::set<std::string> seen;
    for (const auto& e : entries_) {
        if (!seen.insert(e.name).second)
            throw SpecError("duplicate variable name '" + e.name + "'");
    }
}

std::optional<int> VarTable::find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (entries_[i].name == name) return i;
    return std::nullopt;
}

std::vector<int> VarTable::indices_of(VarKind k) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (entries_[i].kind == k) out.push_back(i);
    return out;
}

VarTableRef make_table(Field field, std::vector<VarTable::Entry> entries) {
    return std::make_shared<const VarTable>(field, std::move(entries));
}

long Monomial::degree() const {
    long d = 0;
    for (int e : e_) d += e;
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(e_.begin(), e_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Monomial Monomial::restricted_to(const std::vector<int>& vars) const {
    Monomial r(size());
    for (int v : vars) r.e_[v] = e_[v];
    return r;
}

Monomial Monomial::cleared(const std::vector<int>& vars) const {
    Monomial r = *this;
    for (int v : vars) r.e_[v] = 0;
    return r;
}

bool Monomial::uses_only(const std::vector<int>& vars) const {
    for (int i = 0; i < size(); ++i) {
        if (e_[i] == 0) continue;
        if (std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
    }
    return true;
}

bool Monomial::has_negative(const VarTable& tab) const {
    for (int i = 0; i < size(); ++i)
        if (e_[i] < 0 && !tab.laurent(i)) return true;
    return false;
}

} // namespace solvquot
