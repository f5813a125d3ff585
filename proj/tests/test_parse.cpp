#include <doctest.h>

#include "exalg/parse.hpp"
#include "exalg/properties.hpp"

using namespace exalg;

namespace {

const VarSet& R3() {
    static const VarSet ring{"x1", "x2", "x3"};
    return ring;
}

}  // namespace

TEST_CASE("the product side of the monomial identity parses to a product chain") {
    IdealExprPtr e =
        parse_ideal_expr("(x1*x2, x2*x3, x1*x3)*(x1, x2*x3)*(x2, x1*x3)^2*(x3, x1*x2)^2", R3());
    // left-associated product whose right operand is a power
    const auto* top = std::get_if<IdealExpr::Product>(&e->node);
    REQUIRE(top);
    const auto* pow2 = std::get_if<IdealExpr::Power>(&top->rhs->node);
    REQUIRE(pow2);
    CHECK(pow2->exponent == 2);
    const auto* mid = std::get_if<IdealExpr::Product>(&top->lhs->node);
    REQUIRE(mid);
    const auto* pow1 = std::get_if<IdealExpr::Power>(&mid->rhs->node);
    REQUIRE(pow1);
    CHECK(pow1->exponent == 2);
    const auto* inner = std::get_if<IdealExpr::Product>(&mid->lhs->node);
    REQUIRE(inner);
    const auto* lit1 = std::get_if<IdealExpr::Literal>(&inner->lhs->node);
    REQUIRE(lit1);
    CHECK(lit1->gens.size() == 3);
}

TEST_CASE("the intersection side parses to an intersection chain") {
    IdealExprPtr e = parse_ideal_expr("(x2,x3)^5 & (x1,x3)^4 & (x1,x2)^4 & (x1,x2,x3)^7", R3());
    const auto* top = std::get_if<IdealExpr::Intersection>(&e->node);
    REQUIRE(top);
    const auto* mid = std::get_if<IdealExpr::Intersection>(&top->lhs->node);
    REQUIRE(mid);
    const auto* inner = std::get_if<IdealExpr::Intersection>(&mid->lhs->node);
    REQUIRE(inner);
    const auto* pow = std::get_if<IdealExpr::Power>(&inner->lhs->node);
    REQUIRE(pow);
    CHECK(pow->exponent == 5);
}

TEST_CASE("positioned syntax errors") {
    try {
        parse_ideal_expr("(x1,", R3());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
        REQUIRE(e.expected().size() == 1);
        CHECK(e.expected()[0] == "polynomial");
    }

    CHECK_THROWS_AS(parse_ideal_expr("", R3()), ParseError);
    CHECK_THROWS_AS(parse_ideal_expr("(x1 x2)", R3()), ParseError);  // implicit product
    CHECK_THROWS_AS(parse_ideal_expr("(x1)^0", R3()), ParseError);
    CHECK_THROWS_AS(parse_ideal_expr("(x1^0)", R3()), ParseError);
    CHECK_THROWS_AS(parse_ideal_expr("(x1)^99999999999", R3()), ParseError);
    CHECK_THROWS_AS(parse_ideal_expr("(x1) @ (x2)", R3()), ParseError);

    try {
        parse_ideal_expr("(x1 + y)", R3());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);  // the unknown variable
    }
}

TEST_CASE("deeply nested input fails cleanly") {
    std::string src = "(";
    for (int i = 0; i < 400; ++i) src += "(";
    src += "x1";
    for (int i = 0; i < 400; ++i) src += ")";
    src += ")";
    CHECK_THROWS_AS(parse_ideal_expr(src, R3()), ParseError);
}

TEST_CASE("dotted notation and the intersection sign") {
    CHECK(parse_polynomial("x1.x2", R3()) == parse_polynomial("x1*x2", R3()));
    IdealExprPtr dotted =
        parse_ideal_expr("(x1.x2, x2.x3, x1.x3).(x1, x2.x3).(x2, x1.x3)^2.(x3, x1.x2)^2", R3());
    IdealExprPtr starred =
        parse_ideal_expr("(x1*x2, x2*x3, x1*x3)*(x1, x2*x3)*(x2, x1*x3)^2*(x3, x1*x2)^2", R3());
    CHECK(ast_equal(*dotted, *starred));

    IdealExprPtr amp = parse_ideal_expr("(x1) & (x2)", R3());
    IdealExprPtr sign = parse_ideal_expr("(x1) ∩ (x2)", R3());
    CHECK(ast_equal(*amp, *sign));
}

TEST_CASE("whitespace is insignificant") {
    IdealExprPtr a = parse_ideal_expr("( x1 ,x2 ) ^ 2", R3());
    IdealExprPtr b = parse_ideal_expr("(x1,x2)^2", R3());
    CHECK(ast_equal(*a, *b));
}

TEST_CASE("polynomial grammar") {
    VarSet ring{"x", "y"};
    CHECK(parse_polynomial("-x^2 + 2*y - 3", ring) ==
          parse_polynomial("2*y - 3 - x^2", ring));
    CHECK(parse_polynomial("(x + y)^2", ring) ==
          parse_polynomial("x^2 + 2*x*y + y^2", ring));
    CHECK(parse_polynomial("x - - y", ring) == parse_polynomial("x + y", ring));
    CHECK(parse_polynomial("0", ring).is_zero());
    CHECK_THROWS_AS(parse_polynomial("x +", ring), ParseError);
}

TEST_CASE("evaluation routes") {
    IdealExprPtr lhs =
        parse_ideal_expr("(x1*x2, x2*x3, x1*x3)*(x1, x2*x3)*(x2, x1*x3)^2*(x3, x1*x2)^2", R3());
    IdealExprPtr rhs = parse_ideal_expr("(x2,x3)^5 & (x1,x3)^4 & (x1,x2)^4 & (x1,x2,x3)^7", R3());
    CHECK(monomial_route_eligible(*lhs));
    IdealValue l = evaluate(*lhs);
    IdealValue r = evaluate(*rhs);
    REQUIRE(std::holds_alternative<MonomialIdeal>(l));
    REQUIRE(std::holds_alternative<MonomialIdeal>(r));
    CHECK(std::get<MonomialIdeal>(l) == std::get<MonomialIdeal>(r));

    // a principal literal stays monomial, a coefficient forces the other route
    CHECK(std::holds_alternative<MonomialIdeal>(evaluate(*parse_ideal_expr("(x1)", R3()))));
    CHECK(std::holds_alternative<PolyIdeal>(evaluate(*parse_ideal_expr("(2*x1)", R3()))));
    CHECK(std::holds_alternative<PolyIdeal>(evaluate(*parse_ideal_expr("(x1 + x2)", R3()))));

    // quotients always run in the groebner engine
    VarSet curve{"s", "x", "y", "z"};
    IdealExprPtr quot = parse_ideal_expr("(y*(x - s), x*z, y*z) : s", curve);
    CHECK_FALSE(monomial_route_eligible(*quot));
    IdealValue qv = evaluate(*quot);
    REQUIRE(std::holds_alternative<PolyIdeal>(qv));
    CHECK(ideal_equal(std::get<PolyIdeal>(qv),
                      evaluate_poly(*parse_ideal_expr("(y*(x - s), x*z, y*z)", curve))));

    // saturation by a variable works on both routes
    IdealExprPtr sat = parse_ideal_expr("sat((x1*x2, x3), x1)", R3());
    CHECK(monomial_route_eligible(*sat));
    CHECK(std::get<MonomialIdeal>(evaluate(*sat)) ==
          std::get<MonomialIdeal>(evaluate(*parse_ideal_expr("(x2, x3)", R3()))));
}

TEST_CASE("round-trip and totality properties") {
    PropertyResult rt = check_parser_roundtrip(3, 50);
    CHECK(rt.ok);
    PropertyResult tot = check_parser_totality(3, 5000);
    CHECK(tot.ok);
    PropertyResult route = check_route_agreement(3, 50);
    CHECK(route.ok);
}

TEST_CASE("printer output reparses to the same tree") {
    for (const char* src :
         {"(x1*x2, x2*x3)", "(x1, x2)^2*(x3)", "(x1) + (x2) & (x3)",
          "sat((x1*x2, x3), x1)", "(x1^2 - x2, x3) : x1", "(x1)*(x2)*(x3)^2"}) {
        IdealExprPtr e = parse_ideal_expr(src, R3());
        IdealExprPtr again = parse_ideal_expr(to_string(*e), R3());
        CHECK(ast_equal(*e, *again));
    }
}
