#include "exalg/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace exalg {

namespace {

void check_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.ring() != J.ring()) throw std::invalid_argument("ideals belong to different rings");
}

}  // namespace

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& g : gens) {
            if (g == m) continue;
            // Strict divisor wins; among equal monomials the dedupe above
            // already kept one copy.
            if (mono_divides(g, m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(m);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(VarSet ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    for (const auto& m : gens)
        if (m.var_count() != ring_.size())
            throw std::invalid_argument("generator does not match ring size");
    gens_ = minimal_generators(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(VarSet ring) { return MonomialIdeal(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::unit(VarSet ring) {
    size_t n = ring.size();
    return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

bool MonomialIdeal::contains(const Monomial& m) const { return witness_divisor(m) != nullptr; }

const Monomial* MonomialIdeal::witness_divisor(const Monomial& m) const {
    if (m.var_count() != ring_.size())
        throw std::invalid_argument("monomial does not match ring size");
    for (const auto& g : gens_)
        if (mono_divides(g, m)) return &g;
    return nullptr;
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
    check_same_ring(*this, other);
    return gens_ == other.gens_;
}

std::string MonomialIdeal::to_string() const {
    if (gens_.empty()) return "(0)";
    std::string out = "(";
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string(ring_);
    }
    return out + ")";
}

MonomialIdeal operator+(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ring(I, J);
    std::vector<Monomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal operator*(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ring(I, J);
    std::vector<Monomial> gens;
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) gens.push_back(a * b);
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, int n) {
    if (n < 1) throw std::invalid_argument("ideal power requires a positive exponent");
    MonomialIdeal r = I;
    for (int i = 1; i < n; ++i) r = r * I;
    return r;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_ring(I, J);
    std::vector<Monomial> gens;
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) gens.push_back(mono_lcm(a, b));
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal saturate_variable(const MonomialIdeal& I, std::string_view var) {
    size_t idx = I.ring().require_index(var);
    std::vector<Monomial> gens;
    for (const auto& g : I.gens()) {
        std::vector<int> e = g.exponents();
        e[idx] = 0;
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(I.ring(), std::move(gens));
}

std::vector<ExpansionRow> expansion_report(
    const std::vector<std::pair<MonomialIdeal, int>>& factors) {
    if (factors.empty()) throw std::invalid_argument("expansion of an empty factor list");
    const VarSet& ring = factors.front().first.ring();
    for (const auto& [I, e] : factors) {
        if (I.ring() != ring) throw std::invalid_argument("ideals belong to different rings");
        if (e < 1) throw std::invalid_argument("factor exponent must be positive");
        if (I.is_zero()) return {};
    }

    // Multisets of generator indices per factor, non-decreasing.
    auto multisets = [](size_t gen_count, int size) {
        std::vector<std::vector<size_t>> out;
        std::vector<size_t> cur;
        auto rec = [&](auto&& self, size_t lo) -> void {
            if ((int)cur.size() == size) {
                out.push_back(cur);
                return;
            }
            for (size_t i = lo; i < gen_count; ++i) {
                cur.push_back(i);
                self(self, i);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };

    std::vector<std::vector<std::vector<size_t>>> per_factor;
    for (const auto& [I, e] : factors) per_factor.push_back(multisets(I.gens().size(), e));

    std::vector<ExpansionRow> rows;
    std::vector<size_t> pick(factors.size(), 0);
    while (true) {
        ExpansionRow row;
        row.product = Monomial::one(ring.size());
        for (size_t f = 0; f < factors.size(); ++f) {
            for (size_t gi : per_factor[f][pick[f]]) {
                const Monomial& g = factors[f].first.gens()[gi];
                row.choice.push_back(g);
                row.product = row.product * g;
            }
        }
        rows.push_back(std::move(row));
        // Odometer over the factor choices, last factor fastest.
        size_t f = factors.size();
        while (f-- > 0) {
            if (++pick[f] < per_factor[f].size()) break;
            pick[f] = 0;
            if (f == 0) return rows;
        }
    }
}

std::string render_witness(const ExpansionRow& row, const VarSet& ring) {
    std::string out;
    for (const auto& m : row.choice) {
        if (!out.empty()) out += "*";
        out += "(" + m.to_string(ring) + ")";
    }
    return out;
}

}  // namespace exalg
