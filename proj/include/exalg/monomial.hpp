#pragma once

#include <compare>
#include <string>
#include <vector>

#include "exalg/varset.hpp"

namespace exalg {

/// Exponent vector of a power product. The exponent count must match the
/// VarSet of whatever ring-level object (polynomial, ideal) holds it.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(size_t var_count);

    size_t var_count() const { return e_.size(); }
    int exponent(size_t i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }
    int degree() const;
    /// Total degree restricted to variable indices [lo, hi).
    int degree_in_range(size_t lo, size_t hi) const;
    bool is_one() const;
    bool depends_on(size_t var) const { return e_[var] > 0; }

    Monomial operator*(const Monomial& other) const;

    /// Structural comparison (plain lexicographic on the exponent vector).
    /// This is a container ordering, not a monomial order.
    auto operator<=>(const Monomial& other) const = default;

    std::string to_string(const VarSet& ring) const;  // "x1^2*x2", "1"

private:
    std::vector<int> e_;
};

bool mono_divides(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
/// Exact quotient b / a; throws std::invalid_argument unless a divides b.
Monomial mono_quotient(const Monomial& b, const Monomial& a);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Total, multiplicative well-orders on monomials of one ring.
/// block(k) is an elimination order for the first k variables:
/// lex on the leading block, grevlex on the rest.
class MonomialOrder {
public:
    enum class Kind { lex, grevlex, block };

    static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
    static MonomialOrder block(size_t lex_prefix) { return MonomialOrder(Kind::block, lex_prefix); }

    Kind kind() const { return kind_; }
    size_t block_size() const { return block_; }

    /// Positive if a > b, zero if equal, negative if a < b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
    bool operator<(const MonomialOrder& o) const;  // container ordering for caches

    std::string to_string() const;

private:
    MonomialOrder(Kind k, size_t b) : kind_(k), block_(b) {}
    Kind kind_;
    size_t block_;
};

}  // namespace exalg
