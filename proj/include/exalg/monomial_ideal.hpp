#pragma once

#include <string>
#include <vector>

#include "exalg/monomial.hpp"
#include "exalg/varset.hpp"

namespace exalg {

/// Monomial ideal with the generator set kept minimal under divisibility.
/// The empty generator set is the zero ideal; {1} is the unit ideal.
class MonomialIdeal {
public:
    MonomialIdeal(VarSet ring, std::vector<Monomial> gens);

    static MonomialIdeal zero(VarSet ring);
    static MonomialIdeal unit(VarSet ring);

    const VarSet& ring() const { return ring_; }
    /// Minimal generators, sorted structurally; unique per ideal.
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const Monomial& m) const;
    /// The generator (smallest in structural order) dividing m, if any.
    const Monomial* witness_divisor(const Monomial& m) const;

    bool operator==(const MonomialIdeal& other) const;
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    VarSet ring_;
    std::vector<Monomial> gens_;
};

/// Divisibility-reduced generating set (the unique minimal one).
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

MonomialIdeal operator+(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal operator*(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, int n);  // n >= 1
/// Generated by pairwise lcms of the generators.
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
/// (I : x^inf): zero the variable's exponent in every generator, minimalize.
MonomialIdeal saturate_variable(const MonomialIdeal& I, std::string_view var);

/// One row of a product-expansion table: one generator chosen per factor slot
/// (powers expand to multisets of slots) together with the resulting product.
struct ExpansionRow {
    std::vector<Monomial> choice;
    Monomial product;
};

/// Enumerates every choice of generators across the factors I^e, in a fixed
/// deterministic order. For each factor the multisets of its generators of
/// size e are enumerated with non-decreasing generator indices.
std::vector<ExpansionRow> expansion_report(
    const std::vector<std::pair<MonomialIdeal, int>>& factors);

std::string render_witness(const ExpansionRow& row, const VarSet& ring);

}  // namespace exalg
