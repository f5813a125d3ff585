#include "exalg/varset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace exalg {

namespace {

const std::vector<std::string>& empty_names() {
    static const std::vector<std::string> empty;
    return empty;
}

void validate(const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw std::invalid_argument("variable name must be nonempty");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
}

}  // namespace

VarSet::VarSet(std::vector<std::string> names) {
    validate(names);
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarSet::VarSet(std::initializer_list<std::string> names)
    : VarSet(std::vector<std::string>(names)) {}

VarSet VarSet::split(std::string_view comma_separated) {
    std::vector<std::string> names;
    std::string cur;
    for (char ch : comma_separated) {
        if (ch == ',') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else if (ch != ' ' && ch != '\t') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) names.push_back(cur);
    return VarSet(std::move(names));
}

const std::vector<std::string>& VarSet::names() const {
    return names_ ? *names_ : empty_names();
}

const std::string& VarSet::name(size_t i) const {
    if (i >= size()) throw std::out_of_range("variable index out of range");
    return (*names_)[i];
}

std::optional<size_t> VarSet::index_of(std::string_view name) const {
    const auto& ns = names();
    for (size_t i = 0; i < ns.size(); ++i)
        if (ns[i] == name) return i;
    return std::nullopt;
}

size_t VarSet::require_index(std::string_view name) const {
    auto idx = index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    return *idx;
}

bool VarSet::operator==(const VarSet& other) const {
    if (names_ == other.names_) return true;
    return names() == other.names();
}

VarSet VarSet::extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> ns = names();
    ns.insert(ns.end(), extra.begin(), extra.end());
    return VarSet(std::move(ns));
}

VarSet VarSet::without(const std::vector<std::string>& drop) const {
    std::vector<std::string> ns;
    for (const auto& d : drop) require_index(d);
    for (const auto& n : names())
        if (std::find(drop.begin(), drop.end(), n) == drop.end()) ns.push_back(n);
    if (ns.empty()) throw std::invalid_argument("cannot remove every variable from the ring");
    return VarSet(std::move(ns));
}

VarSet VarSet::permuted_front(const std::vector<std::string>& front) const {
    std::vector<std::string> ns;
    for (const auto& f : front) {
        require_index(f);
        ns.push_back(f);
    }
    for (const auto& n : names())
        if (std::find(front.begin(), front.end(), n) == front.end()) ns.push_back(n);
    VarSet result(std::move(ns));
    if (result.size() != size()) throw std::invalid_argument("duplicate names in permutation");
    return result;
}

std::string VarSet::fresh_name(std::string base) const {
    while (contains(base)) base.push_back('_');
    return base;
}

std::string VarSet::to_string() const {
    std::string out;
    for (const auto& n : names()) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

}  // namespace exalg
