#include "exalg/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

#include "exalg/qlinalg.hpp"

namespace exalg {

namespace {

std::atomic<long long> g_spairs{0};
std::atomic<long long> g_reductions{0};

void check_same_ring(const PolyIdeal& I, const PolyIdeal& J) {
    if (I.ring() != J.ring()) throw std::invalid_argument("ideals belong to different rings");
}

void check_same_ring(const PolyIdeal& I, const Polynomial& f) {
    if (I.ring() != f.ring())
        throw std::invalid_argument("polynomial and ideal belong to different rings");
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    Term lf = f.leading_term(ord);
    Term lg = g.leading_term(ord);
    Monomial l = mono_lcm(lf.mono, lg.mono);
    Polynomial a = Polynomial::term(f.ring(), mono_quotient(l, lf.mono), mpq_class(1) / lf.coeff);
    Polynomial b = Polynomial::term(g.ring(), mono_quotient(l, lg.mono), mpq_class(1) / lg.coeff);
    return a * f - b * g;
}

struct PairKey {
    Monomial lcm;
    size_t i, j;
};

struct PairLess {
    MonomialOrder ord;
    bool operator()(const PairKey& a, const PairKey& b) const {
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

std::vector<Polynomial> reduced_groebner_basis(const VarSet& ring, std::vector<Polynomial> gens,
                                               const MonomialOrder& ord) {
    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.ring() != ring) throw std::invalid_argument("generator belongs to a different ring");
        basis.push_back(g.monic(ord));
    }
    // Canonical input order keeps everything downstream deterministic.
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        int c = ord.compare(a.leading_monomial(ord), b.leading_monomial(ord));
        if (c != 0) return c < 0;
        return a < b;
    });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    if (basis.empty()) return {};

    std::set<PairKey, PairLess> pending(PairLess{ord});
    std::set<std::pair<size_t, size_t>> handled;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial l = mono_lcm(basis[i].leading_monomial(ord), basis[j].leading_monomial(ord));
            pending.insert(PairKey{std::move(l), i, j});
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    auto pair_handled = [&](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        return handled.count({a, b}) > 0;
    };

    while (!pending.empty()) {
        PairKey p = *pending.begin();
        pending.erase(pending.begin());
        handled.insert({p.i, p.j});

        const Monomial lm_i = basis[p.i].leading_monomial(ord);
        const Monomial lm_j = basis[p.j].leading_monomial(ord);
        if (mono_coprime(lm_i, lm_j)) continue;  // product criterion
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (mono_divides(basis[k].leading_monomial(ord), p.lcm) &&
                pair_handled(p.i, k) && pair_handled(p.j, k))
                chained = true;  // chain criterion
        }
        if (chained) continue;

        g_spairs.fetch_add(1, std::memory_order_relaxed);
        DivisionResult div = divide(spoly(basis[p.i], basis[p.j], ord), basis, ord);
        g_reductions.fetch_add(static_cast<long long>(div.steps), std::memory_order_relaxed);
        if (div.remainder.is_zero()) continue;
        basis.push_back(div.remainder.monic(ord));
        push_pairs_for(basis.size() - 1);
    }

    // Minimal basis: drop elements whose leading monomial is divisible by
    // another kept one.
    std::vector<Polynomial> minimal;
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        int c = ord.compare(a.leading_monomial(ord), b.leading_monomial(ord));
        if (c != 0) return c < 0;
        return a < b;
    });
    for (const auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (mono_divides(kept.leading_monomial(ord), g.leading_monomial(ord))) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }

    // Tail-reduce to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            DivisionResult div = divide(minimal[i], others, ord);
            g_reductions.fetch_add(static_cast<long long>(div.steps), std::memory_order_relaxed);
            Polynomial r = div.remainder.monic(ord);
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return minimal;
}

PolyIdeal::PolyIdeal(VarSet ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.ring() != ring_) throw std::invalid_argument("generator belongs to a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

PolyIdeal PolyIdeal::zero(VarSet ring) { return PolyIdeal(std::move(ring), {}); }

PolyIdeal PolyIdeal::principal(const Polynomial& f) { return PolyIdeal(f.ring(), {f}); }

const std::vector<Polynomial>& PolyIdeal::groebner_basis(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(ord);
    if (it != cache_->bases.end()) return it->second;
    std::vector<Polynomial> basis = reduced_groebner_basis(ring_, gens_, ord);
    return cache_->bases.emplace(ord, std::move(basis)).first->second;
}

std::string PolyIdeal::to_string() const {
    if (gens_.empty()) return "(0)";
    std::string out = "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string();
    }
    return out + ")";
}

bool ideal_member(const Polynomial& f, const PolyIdeal& I, const MonomialOrder& ord) {
    check_same_ring(I, f);
    if (f.is_zero()) return true;
    const std::vector<Polynomial>& gb = I.groebner_basis(ord);
    if (gb.empty()) return false;
    DivisionResult div = divide(f, gb, ord);
    g_reductions.fetch_add(static_cast<long long>(div.steps), std::memory_order_relaxed);
    return div.remainder.is_zero();
}

bool ideal_equal(const PolyIdeal& I, const PolyIdeal& J) {
    check_same_ring(I, J);
    MonomialOrder ord = MonomialOrder::grevlex();
    return I.groebner_basis(ord) == J.groebner_basis(ord);
}

bool ideal_is_unit(const PolyIdeal& I) {
    const std::vector<Polynomial>& gb = I.groebner_basis(MonomialOrder::grevlex());
    return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

PolyIdeal ideal_sum(const PolyIdeal& I, const PolyIdeal& J) {
    check_same_ring(I, J);
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return PolyIdeal(I.ring(), std::move(gens));
}

PolyIdeal ideal_product(const PolyIdeal& I, const PolyIdeal& J) {
    check_same_ring(I, J);
    std::vector<Polynomial> gens;
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) gens.push_back(a * b);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return PolyIdeal(I.ring(), std::move(gens));
}

PolyIdeal ideal_power(const PolyIdeal& I, int n) {
    if (n < 1) throw std::invalid_argument("ideal power requires a positive exponent");
    PolyIdeal r = I;
    for (int i = 1; i < n; ++i) r = ideal_product(r, I);
    return r;
}

PolyIdeal intersect(const PolyIdeal& I, const PolyIdeal& J) {
    check_same_ring(I, J);
    const VarSet& ring = I.ring();
    std::string t = ring.fresh_name("t");
    VarSet ringt = VarSet({t}).extended(ring.names());
    Polynomial tv = Polynomial::variable(ringt, t);
    Polynomial one_minus_t = Polynomial::constant(ringt, 1) - tv;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(tv * lift_to_ring(g, ringt));
    for (const auto& h : J.gens()) gens.push_back(one_minus_t * lift_to_ring(h, ringt));
    PolyIdeal extended(ringt, std::move(gens));
    return eliminate(extended, {t});
}

PolyIdeal quotient_by_poly(const PolyIdeal& I, const Polynomial& f) {
    check_same_ring(I, f);
    if (f.is_zero()) throw std::invalid_argument("ideal quotient by the zero polynomial");
    PolyIdeal meet = intersect(I, PolyIdeal::principal(f));
    std::vector<Polynomial> gens;
    for (const auto& g : meet.gens()) {
        DivisionResult div = divide(g, {f}, MonomialOrder::grevlex());
        if (!div.remainder.is_zero())
            throw std::logic_error("quotient generator not divisible by the divisor");
        gens.push_back(div.quotients[0]);
    }
    return PolyIdeal(I.ring(), std::move(gens));
}

PolyIdeal saturate_by_poly(const PolyIdeal& I, const Polynomial& f) {
    check_same_ring(I, f);
    if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
    const VarSet& ring = I.ring();
    std::string w = ring.fresh_name("w");
    VarSet ringw = ring.extended({w});
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(lift_to_ring(g, ringw));
    Polynomial rab = Polynomial::variable(ringw, w) * lift_to_ring(f, ringw) -
                     Polynomial::constant(ringw, 1);
    gens.push_back(rab);
    PolyIdeal extended(ringw, std::move(gens));
    return eliminate(extended, {w});
}

PolyIdeal eliminate(const PolyIdeal& I, const std::vector<std::string>& vars) {
    if (vars.empty()) return I;
    const VarSet& ring = I.ring();
    VarSet target = ring.without(vars);  // validates names and rejects eliminating all
    VarSet work = ring.permuted_front(vars);
    std::vector<Polynomial> lifted;
    for (const auto& g : I.gens()) lifted.push_back(lift_to_ring(g, work));
    std::vector<Polynomial> gb =
        reduced_groebner_basis(work, std::move(lifted), MonomialOrder::block(vars.size()));
    std::vector<Polynomial> kept;
    for (const auto& g : gb) {
        bool uses_eliminated = false;
        for (const auto& [m, c] : g.terms())
            if (m.degree_in_range(0, vars.size()) > 0) {
                uses_eliminated = true;
                break;
            }
        if (!uses_eliminated) kept.push_back(project_to_ring(g, target));
    }
    return PolyIdeal(target, std::move(kept));
}

bool radical_member(const Polynomial& f, const PolyIdeal& I) {
    check_same_ring(I, f);
    if (f.is_zero()) return true;
    const VarSet& ring = I.ring();
    std::string w = ring.fresh_name("w");
    VarSet ringw = ring.extended({w});
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(lift_to_ring(g, ringw));
    gens.push_back(Polynomial::variable(ringw, w) * lift_to_ring(f, ringw) -
                   Polynomial::constant(ringw, 1));
    return ideal_is_unit(PolyIdeal(ringw, std::move(gens)));
}

PolyIdeal specialize(const PolyIdeal& I,
                     const std::vector<std::pair<std::string, mpq_class>>& assignments) {
    if (assignments.empty()) return I;
    const VarSet& ring = I.ring();
    std::vector<std::optional<mpq_class>> assign(ring.size());
    std::vector<std::string> dropped;
    for (const auto& [name, value] : assignments) {
        size_t idx = ring.require_index(name);
        assign[idx] = value;
        dropped.push_back(name);
    }
    VarSet target = ring.without(dropped);
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) {
        Polynomial s = g.substitute_partial(assign);
        if (!s.is_zero()) gens.push_back(std::move(s));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return PolyIdeal(target, std::move(gens));
}

size_t zariski_tangent_dim(const PolyIdeal& I, const PointQ& p) {
    const VarSet& ring = I.ring();
    if (p.size() != ring.size()) throw std::invalid_argument("point does not match ring size");
    QMatrix jac;
    for (const auto& g : I.gens()) {
        mpq_class value = g.evaluate(p);
        if (value != 0)
            throw std::domain_error("point does not lie on the variety of the ideal");
        std::vector<mpq_class> row;
        row.reserve(ring.size());
        for (size_t v = 0; v < ring.size(); ++v) row.push_back(g.derivative(v).evaluate(p));
        jac.push_back(std::move(row));
    }
    return ring.size() - matrix_rank(std::move(jac));
}

bool is_principal_modulo(const PolyIdeal& modulus, const PolyIdeal& J,
                         const Polynomial& candidate) {
    check_same_ring(modulus, J);
    check_same_ring(modulus, candidate);
    PolyIdeal cand_plus = ideal_sum(PolyIdeal::principal(candidate), modulus);
    for (const auto& g : J.gens())
        if (!ideal_member(g, cand_plus)) return false;
    return ideal_member(candidate, ideal_sum(J, modulus));
}

PolyIdeal to_poly_ideal(const MonomialIdeal& I) {
    std::vector<Polynomial> gens;
    for (const auto& m : I.gens()) gens.push_back(Polynomial::term(I.ring(), m, 1));
    return PolyIdeal(I.ring(), std::move(gens));
}

EngineStats engine_stats() {
    EngineStats s;
    s.s_pairs = g_spairs.load(std::memory_order_relaxed);
    s.reductions = g_reductions.load(std::memory_order_relaxed);
    return s;
}

}  // namespace exalg
