#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "exalg/groebner.hpp"
#include "exalg/parse.hpp"
#include "exalg/properties.hpp"

using namespace exalg;

namespace {

Polynomial P(const char* src, const VarSet& ring) { return parse_polynomial(src, ring); }
PolyIdeal I(const char* src, const VarSet& ring) {
    return evaluate_poly(*parse_ideal_expr(src, ring));
}

const VarSet& curve_ring() {
    static const VarSet ring{"s", "x", "y", "z"};
    return ring;
}

PolyIdeal ideal_y() { return I("(y*(x - s), x*z, y*z)", curve_ring()); }

Polynomial rand_poly(std::mt19937_64& rng, const VarSet& ring) {
    Polynomial f(ring);
    int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(ring.size());
        int budget = 3;
        for (auto& x : e) {
            x = std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= x;
        }
        int c = std::uniform_int_distribution<int>(-3, 3)(rng);
        if (c == 0) c = 1;
        f += Polynomial::term(ring, Monomial(std::move(e)), c);
    }
    return f;
}

}  // namespace

TEST_CASE("reduced bases of simple ideals") {
    VarSet xy{"x", "y"};
    std::vector<Polynomial> gb = I("(x, y)", xy).groebner_basis(MonomialOrder::grevlex());
    CHECK(gb == std::vector<Polynomial>{P("y", xy), P("x", xy)});

    VarSet ring{"x1", "x2", "u", "v"};
    PolyIdeal principal = I("(3*x2*v - 3*x1*u)", ring);
    std::vector<Polynomial> gb2 = principal.groebner_basis(MonomialOrder::grevlex());
    REQUIRE(gb2.size() == 1);
    CHECK(gb2[0].leading_term(MonomialOrder::grevlex()).coeff == 1);
    CHECK(ideal_equal(principal, I("(x2*v - x1*u)", ring)));
}

TEST_CASE("reduced basis does not depend on the generator list") {
    PolyIdeal a = ideal_y();
    PolyIdeal b = I("(y*z, x*z, y*(x - s))", curve_ring());  // permuted
    MonomialOrder lex = MonomialOrder::lex();
    CHECK(a.groebner_basis(lex) == b.groebner_basis(lex));

    PropertyResult pr = check_gb_input_invariance(7, 25);
    CHECK(pr.ok);
}

TEST_CASE("the groebner property holds for the computed bases") {
    std::mt19937_64 rng(31);
    VarSet ring{"x", "y", "z"};
    MonomialOrder ord = MonomialOrder::grevlex();
    for (int i = 0; i < 25; ++i) {
        std::vector<Polynomial> gens{rand_poly(rng, ring), rand_poly(rng, ring)};
        std::vector<Polynomial> gb = reduced_groebner_basis(ring, gens, ord);
        if (gb.empty()) continue;
        // every generator reduces to zero
        for (const auto& g : gens) CHECK(normal_form(g, gb, ord).is_zero());
        // every S-polynomial reduces to zero
        for (size_t a = 0; a < gb.size(); ++a)
            for (size_t b = a + 1; b < gb.size(); ++b) {
                Monomial l = mono_lcm(gb[a].leading_monomial(ord), gb[b].leading_monomial(ord));
                Polynomial s =
                    Polynomial::term(ring, mono_quotient(l, gb[a].leading_monomial(ord)), 1) *
                        gb[a] -
                    Polynomial::term(ring, mono_quotient(l, gb[b].leading_monomial(ord)),
                                     gb[a].leading_term(ord).coeff /
                                         gb[b].leading_term(ord).coeff) *
                        gb[b];
                CHECK(normal_form(s, gb, ord).is_zero());
            }
        // reducedness: no term of any element is divisible by another's LM
        for (size_t a = 0; a < gb.size(); ++a)
            for (size_t b = 0; b < gb.size(); ++b) {
                if (a == b) continue;
                for (const auto& [m, c] : gb[a].terms())
                    CHECK_FALSE(mono_divides(gb[b].leading_monomial(ord), m));
            }
    }
}

TEST_CASE("ideal membership") {
    VarSet ring{"x", "y", "u", "v"};
    PolyIdeal is = I("(x*u - y*v, x*v - y*u, y*u - y*v)", ring);
    CHECK(ideal_member(P("x*v - x*u", ring), is));

    VarSet xyz{"x", "y", "z"};
    PolyIdeal fiber = I("(x^2, x*y, x*z, y*z)", xyz);
    CHECK_FALSE(ideal_member(P("x", xyz), fiber));
    CHECK(ideal_member(P("x^2", xyz), fiber));
    CHECK(ideal_member(Polynomial(xyz), fiber));  // zero is always a member
}

TEST_CASE("membership witnesses recompose exactly") {
    std::mt19937_64 rng(32);
    VarSet ring{"x", "y", "z"};
    MonomialOrder ord = MonomialOrder::grevlex();
    for (int i = 0; i < 25; ++i) {
        std::vector<Polynomial> gens{rand_poly(rng, ring), rand_poly(rng, ring)};
        PolyIdeal ideal(ring, gens);
        // random combination of the generators is a member; its division by
        // the basis must recompose exactly
        Polynomial f = rand_poly(rng, ring) * gens[0] + rand_poly(rng, ring) * gens[1];
        const std::vector<Polynomial>& gb = ideal.groebner_basis(ord);
        if (f.is_zero() || gb.empty()) continue;
        REQUIRE(ideal_member(f, ideal));
        DivisionResult div = divide(f, gb, ord);
        CHECK(div.remainder.is_zero());
        Polynomial recomposed(ring);
        for (size_t k = 0; k < gb.size(); ++k) recomposed += div.quotients[k] * gb[k];
        CHECK(recomposed == f);
    }
}

TEST_CASE("ideal equality") {
    CHECK(ideal_equal(specialize(ideal_y(), {{"s", 0}}),
                      I("(x*y, x*z, y*z)", VarSet{"x", "y", "z"})));
    VarSet xy{"x", "y"};
    CHECK(ideal_equal(I("(x)", xy), I("(2*x)", xy)));
    CHECK_FALSE(ideal_equal(I("(x)", xy), I("(y)", xy)));
}

TEST_CASE("intersection via the auxiliary variable") {
    PolyIdeal ix = intersect(I("(x, y)", curve_ring()), I("(x - s, z)", curve_ring()));
    CHECK(ideal_equal(ix, I("(x*(x - s), x*z, y*(x - s), y*z)", curve_ring())));
    // the fiber of the intersection matches the product structure at s = 0
    CHECK(ideal_equal(specialize(ix, {{"s", 0}}),
                      I("(x^2, x*y, x*z, y*z)", VarSet{"x", "y", "z"})));

    VarSet xy{"x", "y"};
    PolyIdeal f = I("(x^2 + y)", xy);
    CHECK(ideal_equal(intersect(f, f), f));
}

TEST_CASE("intersection agrees with the monomial engine") {
    VarSet r3{"x1", "x2", "x3"};
    PolyIdeal lhs = intersect(I("(x2,x3)^5", r3), I("(x1,x3)^4", r3));
    MonomialIdeal mono = std::get<MonomialIdeal>(
        evaluate(*parse_ideal_expr("(x2,x3)^5 & (x1,x3)^4", r3)));
    CHECK(ideal_equal(lhs, to_poly_ideal(mono)));
}

TEST_CASE("ideal quotient") {
    PolyIdeal iy = ideal_y();
    CHECK(ideal_equal(quotient_by_poly(iy, P("s", curve_ring())), iy));

    VarSet xy{"x", "y"};
    CHECK(ideal_equal(quotient_by_poly(I("(x^2, x*y)", xy), P("x", xy)), I("(x, y)", xy)));
    CHECK_THROWS_AS(quotient_by_poly(iy, Polynomial(curve_ring())), std::invalid_argument);

    std::mt19937_64 rng(33);
    VarSet ring{"x", "y", "z"};
    for (int i = 0; i < 20; ++i) {
        Polynomial g1 = rand_poly(rng, ring), g2 = rand_poly(rng, ring);
        Polynomial x = P("x", ring);
        PolyIdeal q = quotient_by_poly(PolyIdeal(ring, {x * g1, x * g2}), x);
        CHECK(ideal_member(g1, q));
        CHECK(ideal_member(g2, q));
        // f * (I : f) lies in I
        PolyIdeal base(ring, {x * g1, x * g2});
        for (const auto& h : q.gens()) CHECK(ideal_member(x * h, base));
    }
}

TEST_CASE("saturation") {
    VarSet chart{"x1", "x2", "x3", "u", "v"};
    PolyIdeal graph = I("(x2*x3 - u*x1*x2, x3*x1 - v*x1*x2)", chart);
    PolyIdeal sat = saturate_by_poly(graph, P("x1*x2", chart));
    CHECK(ideal_equal(sat, I("(x3 - u*x1, x3 - v*x2)", chart)));

    VarSet xy{"x", "y"};
    CHECK(ideal_equal(saturate_by_poly(I("(x*y + x)", xy), P("x", xy)), I("(y + 1)", xy)));
    PolyIdeal iy = ideal_y();
    CHECK(ideal_equal(saturate_by_poly(iy, Polynomial::constant(curve_ring(), 1)), iy));
}

TEST_CASE("saturation contains the quotient contains the ideal") {
    std::mt19937_64 rng(34);
    VarSet ring{"x", "y", "z"};
    for (int i = 0; i < 15; ++i) {
        PolyIdeal ideal(ring, {rand_poly(rng, ring), rand_poly(rng, ring)});
        Polynomial f = rand_poly(rng, ring);
        if (f.is_zero()) continue;
        PolyIdeal quot = quotient_by_poly(ideal, f);
        PolyIdeal sat = saturate_by_poly(ideal, f);
        for (const auto& g : ideal.gens()) CHECK(ideal_member(g, quot));
        for (const auto& g : quot.gens()) CHECK(ideal_member(g, sat));
    }
}

TEST_CASE("quotient and saturation agree with the monomial engine on monomials") {
    std::mt19937_64 rng(35);
    VarSet ring{"x", "y", "z"};
    for (int i = 0; i < 30; ++i) {
        std::vector<Monomial> gens;
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int g = 0; g < k; ++g) {
            std::vector<int> e(3);
            for (auto& x : e) x = std::uniform_int_distribution<int>(0, 3)(rng);
            gens.push_back(Monomial(std::move(e)));
        }
        MonomialIdeal mono(ring, gens);
        PolyIdeal poly = to_poly_ideal(mono);
        size_t var = std::uniform_int_distribution<size_t>(0, 2)(rng);
        Polynomial xv = Polynomial::variable(ring, var);

        // saturation at a variable
        MonomialIdeal msat = saturate_variable(mono, ring.name(var));
        CHECK(ideal_equal(saturate_by_poly(poly, xv), to_poly_ideal(msat)));

        // quotient by a variable: divide out one power where possible
        std::vector<Monomial> qgens;
        for (const auto& m : mono.gens()) {
            std::vector<int> e = m.exponents();
            if (e[var] > 0) e[var] -= 1;
            qgens.push_back(Monomial(std::move(e)));
        }
        CHECK(ideal_equal(quotient_by_poly(poly, xv),
                          to_poly_ideal(MonomialIdeal(ring, qgens))));

        // intersection with another random monomial ideal
        MonomialIdeal other = MonomialIdeal(ring, {gens.back()});
        CHECK(ideal_equal(intersect(poly, to_poly_ideal(other)),
                          to_poly_ideal(intersect(mono, other))));
    }
}

TEST_CASE("elimination") {
    VarSet chart{"x1", "x2", "x3", "u", "v"};
    PolyIdeal k0 = I("(x3 - u*x1, x3 - v*x2)", chart);
    PolyIdeal h = eliminate(k0, {"x3"});
    CHECK(h.ring().names() == std::vector<std::string>{"x1", "x2", "u", "v"});
    CHECK(ideal_equal(h, I("(u*x1 - v*x2)", h.ring())));

    CHECK(ideal_equal(eliminate(k0, {}), k0));
    CHECK_THROWS_AS(eliminate(k0, {"x1", "x2", "x3", "u", "v"}), std::invalid_argument);

    // eliminating w from I + (w*s - 1) is the saturation at s
    VarSet ext = curve_ring().extended({"w"});
    PolyIdeal iy = ideal_y();
    std::vector<Polynomial> gens;
    for (const auto& g : iy.gens()) gens.push_back(lift_to_ring(g, ext));
    gens.push_back(P("w*s - 1", ext));
    PolyIdeal elim = eliminate(PolyIdeal(ext, gens), {"w"});
    CHECK(ideal_equal(elim, saturate_by_poly(ideal_y(), P("s", curve_ring()))));

    std::mt19937_64 rng(36);
    VarSet ring{"x", "y", "z"};
    for (int i = 0; i < 10; ++i) {
        PolyIdeal ideal(ring, {rand_poly(rng, ring), rand_poly(rng, ring)});
        PolyIdeal out = eliminate(ideal, {"y"});
        for (const auto& g : out.gens())
            CHECK_FALSE(g.ring().contains("y"));
    }
}

TEST_CASE("radical membership") {
    VarSet xyz{"x", "y", "z"};
    PolyIdeal fiber = I("(x^2, x*y, x*z, y*z)", xyz);
    CHECK(radical_member(P("x", xyz), fiber));
    CHECK_FALSE(ideal_member(P("x", xyz), fiber));

    VarSet xy{"x", "y"};
    CHECK(radical_member(P("x", xy), I("(x^2)", xy)));
    CHECK_FALSE(radical_member(P("y", xy), I("(x^2)", xy)));
}

TEST_CASE("specialization") {
    PolyIdeal iy = ideal_y();
    PolyIdeal fiber = specialize(iy, {{"s", 0}});
    CHECK(fiber.ring().names() == std::vector<std::string>{"x", "y", "z"});
    CHECK(ideal_equal(fiber, I("(x*y, x*z, y*z)", fiber.ring())));

    PolyIdeal ix = intersect(I("(x, y)", curve_ring()), I("(x - s, z)", curve_ring()));
    CHECK(ideal_equal(specialize(ix, {{"s", 0}}),
                      I("(x^2, x*y, x*z, y*z)", VarSet{"x", "y", "z"})));

    CHECK(ideal_equal(specialize(iy, {}), iy));
    CHECK_THROWS_AS(specialize(iy, {{"q", 1}}), std::invalid_argument);
}

TEST_CASE("zariski tangent dimension") {
    PolyIdeal ix = intersect(I("(x, y)", curve_ring()), I("(x - s, z)", curve_ring()));
    CHECK(zariski_tangent_dim(ix, PointQ(4, 0)) == 4);

    VarSet h{"x1", "x2", "u", "v"};
    CHECK(zariski_tangent_dim(I("(x2*v - x1*u)", h), PointQ(4, 0)) == 4);

    VarSet c3{"x1", "x2", "x3"};
    CHECK(zariski_tangent_dim(I("(x1)", c3), PointQ(3, 0)) == 2);

    CHECK_THROWS_AS(zariski_tangent_dim(I("(x1 - 1)", c3), PointQ(3, 0)), std::domain_error);
}

TEST_CASE("unit ideal detection") {
    VarSet xy{"x", "y"};
    CHECK(ideal_is_unit(I("(x, x + 1)", xy)));
    CHECK_FALSE(ideal_is_unit(I("(x, y)", xy)));
    CHECK_FALSE(ideal_is_unit(PolyIdeal::zero(xy)));
}

TEST_CASE("principality modulo an ideal") {
    VarSet ring{"x", "y", "u", "v"};
    PolyIdeal is = I("(x*u - y*v, x*v - y*u, y*u - y*v)", ring);
    PolyIdeal prod = I("(x, y)*(u, v)", ring);
    CHECK(is_principal_modulo(is, prod, P("x*u", ring)));
    CHECK_FALSE(is_principal_modulo(is, I("(x, y)", ring), P("x", ring)));
}

TEST_CASE("classical pinned bases") {
    // Twisted intersection of a sphere, a paraboloid and a plane: under lex
    // x > y > z the reduced basis solves the system by back-substitution.
    VarSet xyz{"x", "y", "z"};
    PolyIdeal system = I("(x^2 + y^2 + z^2 - 1, x^2 + z^2 - y, x - z)", xyz);
    std::vector<Polynomial> expected{
        parse_polynomial("x - z", xyz),
        parse_polynomial("y - 2*z^2", xyz),
        pow(parse_polynomial("z", xyz), 4) + parse_polynomial("z^2", xyz) * mpq_class(1, 2) -
            Polynomial::constant(xyz, mpq_class(1, 4))};
    std::vector<Polynomial> gb = system.groebner_basis(MonomialOrder::lex());
    std::sort(expected.begin(), expected.end());
    std::vector<Polynomial> got = gb;
    std::sort(got.begin(), got.end());
    CHECK(got == expected);

    // Cyclic-3: elementary-symmetric relations collapse onto z^3 = 1.
    PolyIdeal cyclic = I("(x + y + z, x*y + y*z + z*x, x*y*z - 1)", xyz);
    std::vector<Polynomial> cyclic_expected{parse_polynomial("x + y + z", xyz),
                                            parse_polynomial("y^2 + y*z + z^2", xyz),
                                            parse_polynomial("z^3 - 1", xyz)};
    std::vector<Polynomial> cyclic_gb = cyclic.groebner_basis(MonomialOrder::lex());
    std::sort(cyclic_expected.begin(), cyclic_expected.end());
    std::vector<Polynomial> cyclic_got = cyclic_gb;
    std::sort(cyclic_got.begin(), cyclic_got.end());
    CHECK(cyclic_got == cyclic_expected);

    // Under grevlex x > y the pair (x^3 - 2xy, x^2y - 2y^2 + x) reduces to
    // the familiar three-element basis.
    VarSet xy{"x", "y"};
    PolyIdeal pair = I("(x^3 - 2*x*y, x^2*y - 2*y^2 + x)", xy);
    std::vector<Polynomial> pair_expected{
        parse_polynomial("x^2", xy), parse_polynomial("x*y", xy),
        parse_polynomial("y^2", xy) - parse_polynomial("x", xy) * mpq_class(1, 2)};
    std::vector<Polynomial> pair_got = pair.groebner_basis(MonomialOrder::grevlex());
    std::sort(pair_expected.begin(), pair_expected.end());
    std::sort(pair_got.begin(), pair_got.end());
    CHECK(pair_got == pair_expected);

    CHECK(ideal_equal(intersect(I("(x)", xy), I("(y)", xy)), I("(x*y)", xy)));
    CHECK(ideal_equal(saturate_by_poly(I("(x^2*y)", xy), P("y", xy)), I("(x^2)", xy)));

    PolyIdeal circle_parabola = I("(x^2 + y^2 - 1, y - x^2)", xy);
    PolyIdeal elim = eliminate(circle_parabola, {"x"});
    CHECK(ideal_equal(elim, I("(y^2 + y - 1)", elim.ring())));
}

TEST_CASE("the basis cache computes once per order") {
    PolyIdeal i = ideal_y();
    const std::vector<Polynomial>& first = i.groebner_basis(MonomialOrder::grevlex());
    EngineStats before = engine_stats();
    const std::vector<Polynomial>& second = i.groebner_basis(MonomialOrder::grevlex());
    EngineStats after = engine_stats();
    CHECK(&first == &second);
    CHECK(before.s_pairs == after.s_pairs);
    CHECK(before.reductions == after.reductions);

    PolyIdeal copy = i;  // copies share the cache
    const std::vector<Polynomial>& third = copy.groebner_basis(MonomialOrder::grevlex());
    CHECK(&first == &third);
}

TEST_CASE("concurrent readers share one ideal safely") {
    PolyIdeal shared = ideal_y();
    std::vector<std::thread> workers;
    std::atomic<int> members{0};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&shared, &members] {
            for (int i = 0; i < 20; ++i) {
                const std::vector<Polynomial>& gb =
                    shared.groebner_basis(i % 2 ? MonomialOrder::lex()
                                                : MonomialOrder::grevlex());
                if (!gb.empty() && ideal_member(gb.front(), shared)) ++members;
            }
        });
    for (auto& w : workers) w.join();
    CHECK(members == 80);
}
