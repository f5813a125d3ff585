#pragma once

#include <string>
#include <vector>

#include "exalg/groebner.hpp"

namespace exalg {

/// One affine chart of the blow-up of an ideal (g_1, ..., g_k) on the locus
/// cut out by base_ideal. In the chart where g_i is the local unit, the new
/// variables w_j satisfy g_j = w_j * g_i; the chart ideal is the saturation
/// of those graph equations (plus the base relations) by g_i, which removes
/// the components lying over {g_i = 0}.
struct BlowupChart {
    VarSet ambient;                     // base ring followed by the chart variables
    PolyIdeal base_ideal;               // lifted to the ambient ring
    std::vector<Polynomial> blown_gens; // lifted to the ambient ring
    size_t chart_index = 0;
    std::vector<std::string> chart_vars;
    PolyIdeal chart_ideal;
    /// g_i being a non-zero-divisor on the base is assumed, not proved.
    bool unit_gen_nonzerodivisor_assumed = true;
};

BlowupChart make_chart(const PolyIdeal& base, const std::vector<Polynomial>& gens, size_t index,
                       const std::vector<std::string>& new_vars);

/// I plus every codim x codim minor of the Jacobian of its generators.
/// The expected codimension is supplied by the caller.
PolyIdeal singular_locus_ideal(const PolyIdeal& I, size_t codim);

enum class SmoothnessVerdict { smooth, singular_locus_certified, inconclusive };

/// smooth: the singular ideal is the unit ideal. singular_locus_certified:
/// the singular ideal has the same radical as (claimed_locus_gens).
SmoothnessVerdict classify_smoothness(const PolyIdeal& singular_ideal,
                                      const std::vector<Polynomial>& claimed_locus_gens);

bool is_principal_in_chart(const BlowupChart& chart, const PolyIdeal& J,
                           const Polynomial& candidate);
bool ideal_equal_in_chart(const BlowupChart& chart, const PolyIdeal& J, const PolyIdeal& K);

/// Determinant of the Jacobian of a square polynomial system at p.
mpq_class jacobian_det_at(const std::vector<Polynomial>& fns, const PointQ& p);

}  // namespace exalg
