#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exalg {

/// An ordered list of distinct variable names shared by all polynomials and
/// ideals of one ring context. Copies are cheap; the name list is immutable.
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names);
    VarSet(std::initializer_list<std::string> names);

    /// Builds a VarSet from a comma-separated list such as "x1,x2,x3".
    static VarSet split(std::string_view comma_separated);

    size_t size() const { return names_ ? names_->size() : 0; }
    const std::vector<std::string>& names() const;
    const std::string& name(size_t i) const;

    std::optional<size_t> index_of(std::string_view name) const;
    /// Like index_of but throws std::invalid_argument for unknown names.
    size_t require_index(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    bool operator==(const VarSet& other) const;
    bool operator!=(const VarSet& other) const { return !(*this == other); }

    /// New VarSet with `extra` appended after the existing names.
    VarSet extended(const std::vector<std::string>& extra) const;
    /// New VarSet with the given names removed; remaining order preserved.
    VarSet without(const std::vector<std::string>& drop) const;
    /// New VarSet listing `front` first, then the remaining names in order.
    VarSet permuted_front(const std::vector<std::string>& front) const;

    /// A name not present in this VarSet, derived from `base` by appending
    /// underscores. Used for auxiliary elimination variables.
    std::string fresh_name(std::string base) const;

    std::string to_string() const;  // "x1, x2, x3"

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace exalg
