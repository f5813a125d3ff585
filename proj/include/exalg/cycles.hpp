#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace exalg {

/// Integer combination of the named curve classes of a CycleGroup.
struct Cycle {
    std::vector<long long> coeffs;

    bool is_zero_vector() const;
    /// All coefficients nonnegative and at least one positive.
    bool is_effective() const;

    bool operator==(const Cycle& o) const { return coeffs == o.coeffs; }
    Cycle operator+(const Cycle& o) const;
};

/// Free abelian group on named curve classes modulo an integer relation
/// lattice. Canonical representatives are computed against the Hermite
/// normal form of the relation matrix.
class CycleGroup {
public:
    CycleGroup(std::vector<std::string> class_names,
               std::vector<std::vector<long long>> relations);

    /// Declarative format: one "classes: A B C" line, then relation lines
    /// like "L1 = L12 + L01 + L13" (integer coefficients as "2*L23" allowed
    /// on either side). '#' starts a comment.
    static CycleGroup load(std::istream& in);
    static CycleGroup load_file(const std::string& path);

    const std::vector<std::string>& class_names() const { return names_; }
    size_t rank() const { return names_.size(); }
    size_t relation_count() const { return relations_.size(); }
    const std::vector<std::vector<long long>>& relations() const { return relations_; }

    /// Canonical representative of c modulo the relation lattice.
    Cycle reduce(const Cycle& c) const;
    bool is_zero(const Cycle& c) const;

    /// First nonzero effective cycle in [0, bound]^n (ascending lexicographic
    /// enumeration) that reduces to zero, if any.
    std::optional<Cycle> search_effective_zero(long long bound) const;

    /// Parses "L1 + 2*L23 - L13" against this group's class names.
    Cycle parse_combination(const std::string& text) const;

    Cycle cycle(const std::vector<std::pair<std::string, long long>>& terms) const;
    std::string to_string(const Cycle& c) const;

private:
    size_t index_of(const std::string& name) const;

    std::vector<std::string> names_;
    std::vector<std::vector<long long>> relations_;
    // Row HNF of the relation matrix and its pivot columns.
    std::vector<std::vector<long long>> hnf_;
    std::vector<size_t> pivot_cols_;
};

}  // namespace exalg
