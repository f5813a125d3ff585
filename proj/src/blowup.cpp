#include "exalg/blowup.hpp"

#include <stdexcept>

#include "exalg/qlinalg.hpp"

namespace exalg {

namespace {

// Laplace expansion; the matrices here are at most 4x4.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const VarSet& ring) {
    size_t n = m.size();
    if (n == 0) return Polynomial::constant(ring, 1);
    if (n == 1) return m[0][0];
    Polynomial det(ring);
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Polynomial>> sub;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            sub.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * poly_det(sub, ring);
        if (c % 2)
            det -= term;
        else
            det += term;
    }
    return det;
}

void combinations(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
    std::vector<size_t> cur;
    auto rec = [&](auto&& self, size_t lo) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = lo; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

BlowupChart make_chart(const PolyIdeal& base, const std::vector<Polynomial>& gens, size_t index,
                       const std::vector<std::string>& new_vars) {
    if (gens.empty()) throw std::invalid_argument("blow-up of an empty generator list");
    if (index >= gens.size()) throw std::invalid_argument("chart index out of range");
    if (new_vars.size() + 1 != gens.size())
        throw std::invalid_argument("need one chart variable per non-unit generator");
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("blow-up of a zero generator");
        if (g.ring() != base.ring())
            throw std::invalid_argument("generator belongs to a different ring");
    }

    BlowupChart chart{.ambient = base.ring().extended(new_vars),
                      .base_ideal = PolyIdeal::zero(base.ring()),
                      .blown_gens = {},
                      .chart_index = index,
                      .chart_vars = new_vars,
                      .chart_ideal = PolyIdeal::zero(base.ring())};

    std::vector<Polynomial> lifted_base;
    for (const auto& g : base.gens()) lifted_base.push_back(lift_to_ring(g, chart.ambient));
    chart.base_ideal = PolyIdeal(chart.ambient, lifted_base);
    for (const auto& g : gens) chart.blown_gens.push_back(lift_to_ring(g, chart.ambient));

    std::vector<Polynomial> eqs = lifted_base;
    const Polynomial& unit_gen = chart.blown_gens[index];
    size_t w = 0;
    for (size_t j = 0; j < gens.size(); ++j) {
        if (j == index) continue;
        Polynomial wj = Polynomial::variable(chart.ambient, new_vars[w++]);
        eqs.push_back(chart.blown_gens[j] - wj * unit_gen);
    }
    chart.chart_ideal = saturate_by_poly(PolyIdeal(chart.ambient, std::move(eqs)), unit_gen);
    return chart;
}

PolyIdeal singular_locus_ideal(const PolyIdeal& I, size_t codim) {
    const VarSet& ring = I.ring();
    size_t rows = I.gens().size();
    size_t cols = ring.size();
    if (codim == 0 || codim > rows || codim > cols)
        throw std::invalid_argument("codimension exceeds the Jacobian dimensions");

    std::vector<std::vector<Polynomial>> jac;
    for (const auto& g : I.gens()) {
        std::vector<Polynomial> row;
        for (size_t v = 0; v < cols; ++v) row.push_back(g.derivative(v));
        jac.push_back(std::move(row));
    }

    std::vector<std::vector<size_t>> row_sets, col_sets;
    combinations(rows, codim, row_sets);
    combinations(cols, codim, col_sets);

    std::vector<Polynomial> gens = I.gens();
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            std::vector<std::vector<Polynomial>> sub;
            for (size_t r : rs) {
                std::vector<Polynomial> row;
                for (size_t c : cs) row.push_back(jac[r][c]);
                sub.push_back(std::move(row));
            }
            Polynomial minor = poly_det(sub, ring);
            if (!minor.is_zero()) gens.push_back(std::move(minor));
        }
    return PolyIdeal(ring, std::move(gens));
}

SmoothnessVerdict classify_smoothness(const PolyIdeal& singular_ideal,
                                      const std::vector<Polynomial>& claimed_locus_gens) {
    if (ideal_is_unit(singular_ideal)) return SmoothnessVerdict::smooth;
    if (!claimed_locus_gens.empty()) {
        PolyIdeal claimed(singular_ideal.ring(), claimed_locus_gens);
        bool same = true;
        for (const auto& g : claimed_locus_gens)
            if (!radical_member(g, singular_ideal)) {
                same = false;
                break;
            }
        if (same)
            for (const auto& g : singular_ideal.gens())
                if (!radical_member(g, claimed)) {
                    same = false;
                    break;
                }
        if (same) return SmoothnessVerdict::singular_locus_certified;
    }
    return SmoothnessVerdict::inconclusive;
}

bool is_principal_in_chart(const BlowupChart& chart, const PolyIdeal& J,
                           const Polynomial& candidate) {
    return is_principal_modulo(chart.chart_ideal, J, candidate);
}

bool ideal_equal_in_chart(const BlowupChart& chart, const PolyIdeal& J, const PolyIdeal& K) {
    return ideal_equal(ideal_sum(J, chart.chart_ideal), ideal_sum(K, chart.chart_ideal));
}

mpq_class jacobian_det_at(const std::vector<Polynomial>& fns, const PointQ& p) {
    if (fns.empty()) throw std::invalid_argument("empty system");
    const VarSet& ring = fns.front().ring();
    if (fns.size() != ring.size())
        throw std::invalid_argument("system is not square in its ring");
    QMatrix m;
    for (const auto& f : fns) {
        if (f.ring() != ring) throw std::invalid_argument("functions belong to different rings");
        std::vector<mpq_class> row;
        for (size_t v = 0; v < ring.size(); ++v) row.push_back(f.derivative(v).evaluate(p));
        m.push_back(std::move(row));
    }
    return matrix_det(std::move(m));
}

}  // namespace exalg
