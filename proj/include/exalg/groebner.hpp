#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "exalg/monomial_ideal.hpp"
#include "exalg/polynomial.hpp"

namespace exalg {

/// Rational point of the ambient ring, one coordinate per variable.
using PointQ = std::vector<mpq_class>;

/// Polynomial ideal with a per-order cache of its reduced Groebner basis.
/// Values are immutable; copies share the cache. The cache is populated at
/// most once per order under a lock, so concurrent readers are safe.
class PolyIdeal {
public:
    PolyIdeal(VarSet ring, std::vector<Polynomial> gens);

    static PolyIdeal zero(VarSet ring);
    static PolyIdeal principal(const Polynomial& f);

    const VarSet& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool has_no_gens() const { return gens_.empty(); }

    /// The reduced Groebner basis under `ord`: monic elements, no term of any
    /// element divisible by another's leading monomial, sorted by leading
    /// monomial. Unique per (ideal, order) regardless of the generator list.
    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& ord) const;

    std::string to_string() const;

private:
    VarSet ring_;
    std::vector<Polynomial> gens_;

    struct Cache {
        std::mutex mu;
        std::map<MonomialOrder, std::vector<Polynomial>> bases;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Buchberger with the coprime and chain pair criteria. Exposed for tests;
/// PolyIdeal::groebner_basis is the cached entry point.
std::vector<Polynomial> reduced_groebner_basis(const VarSet& ring, std::vector<Polynomial> gens,
                                               const MonomialOrder& ord);

bool ideal_member(const Polynomial& f, const PolyIdeal& I,
                  const MonomialOrder& ord = MonomialOrder::grevlex());
bool ideal_equal(const PolyIdeal& I, const PolyIdeal& J);
bool ideal_is_unit(const PolyIdeal& I);

PolyIdeal ideal_sum(const PolyIdeal& I, const PolyIdeal& J);
PolyIdeal ideal_product(const PolyIdeal& I, const PolyIdeal& J);
PolyIdeal ideal_power(const PolyIdeal& I, int n);  // n >= 1

/// Computed with an auxiliary variable t: eliminate t from t*I + (1-t)*J.
PolyIdeal intersect(const PolyIdeal& I, const PolyIdeal& J);

/// (I : f), via intersection with (f) followed by exact division.
PolyIdeal quotient_by_poly(const PolyIdeal& I, const Polynomial& f);

/// (I : f^inf), via an auxiliary variable w: eliminate w from I + (w*f - 1).
PolyIdeal saturate_by_poly(const PolyIdeal& I, const Polynomial& f);

/// I intersected with the subring omitting `vars`; the result lives in the
/// smaller ring. Uses a block order (lex on the eliminated block).
PolyIdeal eliminate(const PolyIdeal& I, const std::vector<std::string>& vars);

/// True iff f vanishes on V(I): 1 in I + (w*f - 1).
bool radical_member(const Polynomial& f, const PolyIdeal& I);

/// Substitutes rational values for the assigned variables; the result lives
/// in the ring without them.
PolyIdeal specialize(const PolyIdeal& I,
                     const std::vector<std::pair<std::string, mpq_class>>& assignments);

/// Ring dimension minus the rank of the Jacobian of the generators at p.
/// Requires every generator to vanish at p.
size_t zariski_tangent_dim(const PolyIdeal& I, const PointQ& p);

/// True iff J + modulus == (candidate) + modulus and candidate is in
/// J + modulus, i.e. J becomes principal with the given generator once the
/// relations of `modulus` are imposed.
bool is_principal_modulo(const PolyIdeal& modulus, const PolyIdeal& J, const Polynomial& candidate);

/// Converts a monomial ideal to a polynomial ideal over the same ring.
PolyIdeal to_poly_ideal(const MonomialIdeal& I);

/// Cumulative Buchberger work counters (monotone; snapshot and subtract).
struct EngineStats {
    long long s_pairs = 0;
    long long reductions = 0;
};
EngineStats engine_stats();

}  // namespace exalg
