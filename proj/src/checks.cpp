#include "exalg/checks.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>

#include "exalg/blowup.hpp"
#include "exalg/cycles.hpp"
#include "exalg/groebner.hpp"
#include "exalg/monomial_ideal.hpp"
#include "exalg/parse.hpp"
#include "exalg/properties.hpp"

#ifndef EXALG_SOURCE_DATA_DIR
#define EXALG_SOURCE_DATA_DIR "data"
#endif

namespace exalg {

namespace {

MonomialIdeal eval_mono(const std::string& src, const VarSet& ring) {
    return std::get<MonomialIdeal>(evaluate(*parse_ideal_expr(src, ring)));
}

PolyIdeal eval_poly(const std::string& src, const VarSet& ring) {
    return evaluate_poly(*parse_ideal_expr(src, ring));
}

MonomialIdeal lemma_h1_left(const VarSet& ring) {
    return eval_mono("(x1*x2, x2*x3, x1*x3)*(x1, x2*x3)*(x2, x1*x3)^2*(x3, x1*x2)^2", ring);
}

MonomialIdeal lemma_h1_right(const VarSet& ring) {
    return eval_mono("(x2,x3)^5 & (x1,x3)^4 & (x1,x2)^4 & (x1,x2,x3)^7", ring);
}

std::vector<Monomial> lemma_h1_minimal_gens() {
    // m0..m4' with exponent triples (x1, x2, x3).
    return {Monomial({0, 4, 4}), Monomial({1, 3, 3}), Monomial({2, 3, 2}), Monomial({2, 2, 3}),
            Monomial({3, 4, 1}), Monomial({3, 1, 4}), Monomial({4, 5, 0}), Monomial({4, 0, 5})};
}

void check_lemma_h1(VerificationReport& rep, const CheckOptions&) {
    VarSet ring{"x1", "x2", "x3"};
    MonomialIdeal lhs = lemma_h1_left(ring);
    MonomialIdeal rhs = lemma_h1_right(ring);

    MonomialIdeal expected(ring, lemma_h1_minimal_gens());
    rep.add_step("minimal generators of the intersection",
                 "(x2,x3)^5 & (x1,x3)^4 & (x1,x2)^4 & (x1,x2,x3)^7", rhs == expected,
                 rhs.to_string());

    bool reverse = true;
    for (const auto& m : rhs.gens())
        if (!lhs.contains(m)) reverse = false;
    rep.add_step("every minimal generator lies in the product", "m0..m4' in product", reverse,
                 reverse ? "all contained" : "containment fails");

    rep.add_step("product equals the fourfold intersection", "lemma-h1 equality", lhs == rhs,
                 lhs == rhs ? "equal" : "not equal");

    std::vector<std::pair<MonomialIdeal, int>> factors{
        {eval_mono("(x1*x2, x2*x3, x1*x3)", ring), 1},
        {eval_mono("(x1, x2*x3)", ring), 1},
        {eval_mono("(x2, x1*x3)", ring), 2},
        {eval_mono("(x3, x1*x2)", ring), 2}};
    std::vector<ExpansionRow> rows = expansion_report(factors);
    rep.add_step("expansion table size", "choices per factor: 3*2*3*3", rows.size() == 54,
                 std::to_string(rows.size()) + " rows");
    for (const auto& row : rows) {
        const Monomial* w = rhs.witness_divisor(row.product);
        std::string outcome = w ? "in (" + w->to_string(ring) + ")" : "NOT in the intersection";
        rep.add_step("expansion row",
                     render_witness(row, ring) + " = " + row.product.to_string(ring), w != nullptr,
                     outcome);
    }
}

void check_lemma_h1bis(VerificationReport& rep, const CheckOptions&) {
    VarSet ring{"x1", "x2", "x3"};
    MonomialIdeal lhs = eval_mono("(x2,x3)^5 & (x1,x3)^4", ring);
    MonomialIdeal rhs = eval_mono("(x1*x2, x3)^4*(x2, x3)", ring);
    rep.add_step("intersection equals the product form",
                 "(x2,x3)^5 & (x1,x3)^4 = (x1*x2,x3)^4*(x2,x3)", lhs == rhs,
                 lhs == rhs ? "equal, generators " + lhs.to_string() : "not equal");

    // The ten products x1^a*x2^(a+1)*x3^b and x1^a*x2^a*x3^(b+1), a+b = 4,
    // generate the right-hand side.
    std::vector<Monomial> ten;
    for (int a = 0; a <= 4; ++a) {
        int b = 4 - a;
        ten.push_back(Monomial({a, a + 1, b}));
        ten.push_back(Monomial({a, a, b + 1}));
    }
    bool generate = MonomialIdeal(ring, ten) == lhs;
    rep.add_step("the ten listed products generate the intersection",
                 "x1^a*x2^(a+1)*x3^b, x1^a*x2^a*x3^(b+1), a+b=4", generate,
                 generate ? "equal ideals" : "not equal");
}

void check_localization(VerificationReport& rep, const CheckOptions&) {
    VarSet ring{"x1", "x2", "x3"};
    MonomialIdeal H = lemma_h1_left(ring);
    struct Case {
        const char* var;
        const char* expect_src;
    };
    for (const Case& c : {Case{"x1", "(x2,x3)^5"}, Case{"x2", "(x1,x3)^4"}, Case{"x3", "(x1,x2)^4"}}) {
        MonomialIdeal sat = saturate_variable(H, c.var);
        MonomialIdeal expected = eval_mono(c.expect_src, ring);
        rep.add_step(std::string("saturation at ") + c.var,
                     std::string("sat(H, ") + c.var + ") = " + c.expect_src, sat == expected,
                     sat.to_string());
    }
}

void check_blowup_charts(VerificationReport& rep, const CheckOptions&) {
    VarSet base_ring{"x1", "x2", "x3"};
    std::vector<Polynomial> center{parse_polynomial("x1*x2", base_ring),
                                   parse_polynomial("x2*x3", base_ring),
                                   parse_polynomial("x3*x1", base_ring)};
    BlowupChart chart1 = make_chart(PolyIdeal::zero(base_ring), center, 0, {"u", "v"});

    PolyIdeal expected1 = eval_poly("(x3 - u*x1, x3 - v*x2)", chart1.ambient);
    bool eq1 = ideal_equal(chart1.chart_ideal, expected1);
    rep.add_step("first chart ideal", "sat((x2*x3 - u*x1*x2, x3*x1 - v*x1*x2), x1*x2)", eq1,
                 eq1 ? "(x3 - u*x1, x3 - v*x2)" : chart1.chart_ideal.to_string());

    PolyIdeal hyper = eliminate(chart1.chart_ideal, {"x3"});
    PolyIdeal expected_h = eval_poly("(u*x1 - v*x2)", hyper.ring());
    bool eqh = ideal_equal(hyper, expected_h);
    rep.add_step("chart eliminates to the hypersurface", "eliminate(chart1, {x3})", eqh,
                 eqh ? "(u*x1 - v*x2)" : hyper.to_string());

    VarSet hring = hyper.ring();  // x1, x2, u, v
    PolyIdeal sing1 = singular_locus_ideal(eval_poly("(x2*v - x1*u)", hring), 1);
    std::vector<Polynomial> origin_gens{
        parse_polynomial("x1", hring), parse_polynomial("x2", hring),
        parse_polynomial("u", hring), parse_polynomial("v", hring)};
    SmoothnessVerdict verdict = classify_smoothness(sing1, origin_gens);
    rep.add_step("hypersurface singular locus is the origin",
                 "radical of (x2*v - x1*u) + gradient",
                 verdict == SmoothnessVerdict::singular_locus_certified,
                 verdict == SmoothnessVerdict::singular_locus_certified
                     ? "radical equals (x1, x2, u, v): Morse point"
                     : "unexpected verdict");

    bool p1 = is_principal_in_chart(chart1, eval_poly("(x1, x2*x3)", chart1.ambient),
                                    parse_polynomial("x1", chart1.ambient));
    rep.add_step("(x1, x2*x3) is principal on the chart", "generator x1", p1,
                 p1 ? "principal" : "not principal");
    bool p2 = is_principal_in_chart(chart1, eval_poly("(x2, x1*x3)", chart1.ambient),
                                    parse_polynomial("x2", chart1.ambient));
    rep.add_step("(x2, x1*x3) is principal on the chart", "generator x2", p2,
                 p2 ? "principal" : "not principal");
    bool p3 = is_principal_in_chart(chart1, eval_poly("(x3, x1*x2)", chart1.ambient),
                                    parse_polynomial("x3", chart1.ambient));
    rep.add_step("(x3, x1*x2) is not principal on the chart", "candidate x3", !p3,
                 p3 ? "principal" : "not principal");

    bool red = ideal_equal_in_chart(chart1, eval_poly("(x3, x1*x2)", chart1.ambient),
                                    eval_poly("(x1*u, x1*x2)", chart1.ambient));
    rep.add_step("(x3, x1*x2) reduces to x1*(u, x2) on the chart",
                 "(x3, x1*x2) = x1*(u, x2) mod chart", red, red ? "equal" : "not equal");

    std::vector<Polynomial> second{parse_polynomial("u", chart1.ambient),
                                   parse_polynomial("x2", chart1.ambient)};
    BlowupChart chart2 = make_chart(chart1.chart_ideal, second, 0, {"z"});
    PolyIdeal expected2 = eval_poly("(x1 - v*z, x2 - u*z, x3 - u*v*z)", chart2.ambient);
    bool eq2 = ideal_equal(chart2.chart_ideal, expected2);
    rep.add_step("second chart is affine 3-space", "blow-up of (u, x2) over the first chart", eq2,
                 eq2 ? "(x1 - v*z, x2 - u*z, x3 - u*v*z)" : chart2.chart_ideal.to_string());

    PolyIdeal sing2 = singular_locus_ideal(chart2.chart_ideal, 3);
    SmoothnessVerdict verdict2 = classify_smoothness(sing2, {});
    rep.add_step("second chart is smooth", "codim-3 Jacobian minors",
                 verdict2 == SmoothnessVerdict::smooth,
                 verdict2 == SmoothnessVerdict::smooth ? "unit singular ideal" : "not smooth");

    bool exc = ideal_equal_in_chart(chart2, eval_poly("(x1, x2, x3)", chart2.ambient),
                                    eval_poly("(u*z, v*z)", chart2.ambient));
    rep.add_step("pullback of the maximal ideal is z*(u, v)",
                 "(x1, x2, x3) = (u*z, v*z) mod chart", exc, exc ? "equal" : "not equal");

    VarSet jring{"x1", "x2", "x3", "u"};
    std::vector<Polynomial> change{
        parse_polynomial("(1 + u*x1)*(x1 + x2 + x3 + x1*x2) + x1*x3", jring),
        parse_polynomial("x2", jring), parse_polynomial("x3", jring),
        parse_polynomial("u", jring)};
    mpq_class det = jacobian_det_at(change, PointQ(4, mpq_class(0)));
    rep.add_step("coordinate change is invertible at the origin", "jacobian determinant",
                 det == 1, det.get_str());
}

void check_surface_example(VerificationReport& rep, const CheckOptions& options) {
    VarSet ring{"x", "y", "u", "v"};
    PolyIdeal is = eval_poly("(x*u - y*v, x*v - y*u, y*u - y*v)", ring);
    PolyIdeal planes = intersect(intersect(eval_poly("(u, v)", ring), eval_poly("(x, y)", ring)),
                                 eval_poly("(x - y, u - v)", ring));
    bool eq = ideal_equal(is, planes);
    rep.add_step("surface ideal is the triple plane intersection",
                 "(u,v) & (x,y) & (x-y, u-v)", eq, eq ? "equal" : "not equal");

    bool vanish = true;
    for (const char* plane : {"(u, v)", "(x, y)", "(x - y, u - v)"}) {
        PolyIdeal p = eval_poly(plane, ring);
        for (const auto& g : is.gens())
            if (!ideal_member(g, p, options.order)) vanish = false;
    }
    rep.add_step("every generator vanishes on each plane", "membership in the plane ideals",
                 vanish, vanish ? "all vanish" : "vanishing fails");

    PolyIdeal product = eval_poly("(x, y)*(u, v)", ring);
    Polynomial xu = parse_polynomial("x*u", ring);
    bool principal = is_principal_modulo(is, product, xu);
    rep.add_step("(x,y)*(u,v) is principal modulo the surface", "generator x*u", principal,
                 principal ? "principal" : "not principal");

    bool congruent = ideal_member(parse_polynomial("x*u - x*v", ring), is, options.order) &&
                     ideal_member(parse_polynomial("x*u - y*u", ring), is, options.order) &&
                     ideal_member(parse_polynomial("x*u - y*v", ring), is, options.order);
    rep.add_step("the four products agree on the surface", "x*u = x*v = y*u = y*v", congruent,
                 congruent ? "congruent" : "not congruent");
}

void check_two_curves(VerificationReport& rep, const CheckOptions& options) {
    VarSet ring{"s", "x", "y", "z"};
    PolyIdeal ix = intersect(eval_poly("(x, y)", ring), eval_poly("(x - s, z)", ring));
    PolyIdeal expected = eval_poly("(x*(x - s), x*z, y*(x - s), y*z)", ring);
    bool eq = ideal_equal(ix, expected);
    rep.add_step("ideal of the two-curve family", "(x, y) & (x - s, z)", eq,
                 eq ? "(x*(x-s), x*z, y*(x-s), y*z)" : ix.to_string());

    PolyIdeal fiber = specialize(ix, {{"s", 0}});
    PolyIdeal expected_fiber = eval_poly("(x^2, x*y, x*z, y*z)", fiber.ring());
    bool eqf = ideal_equal(fiber, expected_fiber);
    rep.add_step("fiber ideal at s = 0", "specialize(I_X, s = 0)", eqf,
                 eqf ? "(x^2, x*y, x*z, y*z)" : fiber.to_string());

    Polynomial x = parse_polynomial("x", fiber.ring());
    bool not_member = !ideal_member(x, fiber, options.order);
    rep.add_step("x is not in the fiber ideal", "normal form of x", not_member,
                 not_member ? "nonzero normal form" : "member");
    bool nilpotent = radical_member(x, fiber);
    rep.add_step("x is nilpotent in the fiber", "radical membership of x", nilpotent,
                 nilpotent ? "x^2 lies in the ideal" : "not nilpotent");

    size_t dim = zariski_tangent_dim(ix, PointQ(4, mpq_class(0)));
    rep.add_step("tangent space at the origin", "corank of the Jacobian", dim == 4,
                 "dimension " + std::to_string(dim));
}

void check_three_curves(VerificationReport& rep, const CheckOptions&) {
    VarSet ring{"s", "x", "y", "z"};
    PolyIdeal iy = eval_poly("(y*(x - s), x*z, y*z)", ring);
    PolyIdeal quot = quotient_by_poly(iy, parse_polynomial("s", ring));
    bool torsion_free = ideal_equal(quot, iy);
    rep.add_step("no s-torsion", "(I_Y : s) = I_Y", torsion_free,
                 torsion_free ? "equal" : quot.to_string());

    PolyIdeal fiber = specialize(iy, {{"s", 0}});
    PolyIdeal expected = eval_poly("(x*y, x*z, y*z)", fiber.ring());
    bool eqf = ideal_equal(fiber, expected);
    rep.add_step("fiber ideal at s = 0", "specialize(I_Y, s = 0)", eqf,
                 eqf ? "(x*y, x*z, y*z)" : fiber.to_string());

    PolyIdeal axes = intersect(intersect(eval_poly("(x, y)", fiber.ring()),
                                         eval_poly("(y, z)", fiber.ring())),
                               eval_poly("(x, z)", fiber.ring()));
    bool reduced = ideal_equal(fiber, axes);
    rep.add_step("fiber is the reduced union of the axes", "(x,y) & (y,z) & (x,z)", reduced,
                 reduced ? "equal" : "not equal");
}

void check_cycles(VerificationReport& rep, const CheckOptions& options,
                  const std::string& scenario) {
    namespace fs = std::filesystem;
    fs::path file = fs::path(resolve_data_dir(options)) / "cycles" / (scenario + ".txt");
    CycleGroup group = CycleGroup::load_file(file.string());
    rep.add_step("scenario loaded", file.string(),
                 true, std::to_string(group.rank()) + " classes, " +
                           std::to_string(group.relation_count()) + " relations");

    bool rows_zero = true;
    for (const auto& row : group.relations()) {
        Cycle c{row};
        if (!group.is_zero(c)) rows_zero = false;
    }
    rep.add_step("every relation reduces to zero", "is_zero per relation row", rows_zero,
                 rows_zero ? "all zero" : "nonzero relation");

    auto expect_zero = [&](const std::string& text, bool expected) {
        bool z = group.is_zero(group.parse_combination(text));
        rep.add_step(expected ? "certificate cycle vanishes" : "cycle does not vanish",
                     "is_zero(" + text + ")", z == expected, z ? "zero" : "nonzero");
    };

    if (scenario == "v0") {
        expect_zero("L1' + 2*L23 + L02", true);
        expect_zero("L1", false);
        std::optional<Cycle> found = group.search_effective_zero(options.bound);
        rep.add_step("effective cycle homologous to zero exists",
                     "search bound " + std::to_string(options.bound), found.has_value(),
                     found ? group.to_string(*found) : "none found");
    } else if (scenario == "v0-deformed") {
        expect_zero("L1' + L23 - L13", true);
        std::optional<Cycle> found = group.search_effective_zero(options.bound);
        rep.add_step("no effective cycle is homologous to zero",
                     "search bound " + std::to_string(options.bound), !found.has_value(),
                     found ? group.to_string(*found) : "none found");
    } else if (scenario == "simple") {
        expect_zero("A'", true);
    } else if (scenario == "two-point") {
        expect_zero("A + C", true);
    } else {
        throw UnknownCheck("unknown cycles scenario '" + scenario + "'");
    }
}

void check_properties(VerificationReport& rep, const CheckOptions& options) {
    struct Suite {
        const char* name;
        PropertyResult result;
    };
    const Suite suites[] = {
        {"monomial vs groebner membership", check_membership_agreement(options.seed, 1000)},
        {"reduced basis input invariance", check_gb_input_invariance(options.seed, 200)},
        {"parser round-trip", check_parser_roundtrip(options.seed, 200)},
        {"parser totality", check_parser_totality(options.seed, 100000)},
        {"monomial route agreement", check_route_agreement(options.seed, 200)},
    };
    for (const Suite& s : suites) {
        rep.add_step(s.name, "seed " + std::to_string(options.seed), s.result.ok,
                     s.result.ok ? std::to_string(s.result.cases) + " cases" : s.result.detail);
    }
}

using CheckFn = std::function<void(VerificationReport&, const CheckOptions&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"lemma-h1", check_lemma_h1},
        {"lemma-h1bis", check_lemma_h1bis},
        {"localization", check_localization},
        {"blowup-charts", check_blowup_charts},
        {"surface-example", check_surface_example},
        {"two-curves", check_two_curves},
        {"three-curves", check_three_curves},
        {"cycles v0",
         [](VerificationReport& r, const CheckOptions& o) { check_cycles(r, o, "v0"); }},
        {"cycles v0-deformed",
         [](VerificationReport& r, const CheckOptions& o) { check_cycles(r, o, "v0-deformed"); }},
        {"cycles simple",
         [](VerificationReport& r, const CheckOptions& o) { check_cycles(r, o, "simple"); }},
        {"cycles two-point",
         [](VerificationReport& r, const CheckOptions& o) { check_cycles(r, o, "two-point"); }},
        {"properties", check_properties},
    };
    return checks;
}

}  // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

std::string resolve_data_dir(const CheckOptions& options) {
    namespace fs = std::filesystem;
    if (options.data_dir) return *options.data_dir;
    if (fs::exists(fs::path("data") / "cycles")) return "data";
    return EXALG_SOURCE_DATA_DIR;
}

VerificationReport run_verification(const std::string& check_id, const CheckOptions& options) {
    if (check_id == "all") {
        VerificationReport rep;
        rep.check_id = "all";
        for (const auto& sub : run_all(options)) {
            rep.add_step(sub.check_id,
                         std::to_string(sub.steps.size()) + " steps", sub.pass,
                         sub.pass ? "pass" : "fail");
            rep.elapsed_ms += sub.elapsed_ms;
            rep.s_pairs += sub.s_pairs;
            rep.reductions += sub.reductions;
        }
        return rep;
    }
    for (const auto& [id, fn] : registry()) {
        if (id != check_id) continue;
        VerificationReport rep;
        rep.check_id = check_id;
        EngineStats before = engine_stats();
        auto start = std::chrono::steady_clock::now();
        fn(rep, options);
        auto stop = std::chrono::steady_clock::now();
        EngineStats after = engine_stats();
        rep.elapsed_ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
                .count();
        rep.s_pairs = after.s_pairs - before.s_pairs;
        rep.reductions = after.reductions - before.reductions;
        return rep;
    }
    throw UnknownCheck("unknown check '" + check_id + "'");
}

std::vector<VerificationReport> run_all(const CheckOptions& options) {
    std::vector<VerificationReport> out;
    for (const auto& id : known_checks()) out.push_back(run_verification(id, options));
    return out;
}

}  // namespace exalg
