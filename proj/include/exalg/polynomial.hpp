#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exalg/monomial.hpp"
#include "exalg/varset.hpp"

namespace exalg {

struct Term {
    Monomial mono;
    mpq_class coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in a canonical structural order; monomial-order-sensitive
/// access (leading term, division) takes the order as an argument.
/// Immutable value semantics: all operators return new polynomials.
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial over the empty ring
    explicit Polynomial(VarSet ring);
    Polynomial(VarSet ring, std::map<Monomial, mpq_class> terms);

    static Polynomial constant(const VarSet& ring, const mpq_class& c);
    static Polynomial variable(const VarSet& ring, size_t index);
    static Polynomial variable(const VarSet& ring, std::string_view name);
    static Polynomial term(const VarSet& ring, Monomial m, const mpq_class& c);

    const VarSet& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    int total_degree() const;  // -1 for the zero polynomial

    /// If the polynomial is a single term, returns it.
    std::optional<Term> single_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial operator*(const mpq_class& c) const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);

    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }
    /// Structural ordering for canonical generator lists.
    bool operator<(const Polynomial& g) const;

    /// Maximal term under the given order; throws on the zero polynomial.
    Term leading_term(const MonomialOrder& ord) const;
    Monomial leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).mono; }
    Polynomial monic(const MonomialOrder& ord) const;

    Polynomial derivative(size_t var) const;
    mpq_class evaluate(const std::vector<mpq_class>& point) const;

    /// Substitutes the assigned variables and drops them from the ring.
    /// `assignment[i]` set means variable i is replaced by that value.
    Polynomial substitute_partial(const std::vector<std::optional<mpq_class>>& assignment) const;

    std::string to_string() const;

private:
    void add_term(const Monomial& m, const mpq_class& c);

    VarSet ring_;
    std::map<Monomial, mpq_class> terms_;
};

Polynomial operator*(const mpq_class& c, const Polynomial& f);
Polynomial pow(const Polynomial& f, unsigned e);

/// Maps f into `target`, matching variables by name (all must exist).
Polynomial lift_to_ring(const Polynomial& f, const VarSet& target);
/// Maps f into `target`; every variable of f used by some term must exist
/// in target, otherwise throws.
Polynomial project_to_ring(const Polynomial& f, const VarSet& target);

/// Multivariate division of f by an ordered divisor sequence.
/// f == sum(quotients[i] * divisors[i]) + remainder, and no term of the
/// remainder is divisible by any divisor's leading monomial. Among divisor
/// candidates the earliest in the sequence wins, so the result is
/// deterministic for a fixed sequence and order.
struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
    size_t steps = 0;  // leading-term cancellations performed
};

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& ord);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& ord);

mpq_class q_pow(const mpq_class& q, unsigned long e);

}  // namespace exalg
