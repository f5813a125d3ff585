#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "exalg/groebner.hpp"
#include "exalg/monomial_ideal.hpp"
#include "exalg/polynomial.hpp"

namespace exalg {

/// Positioned parse failure. `offset` is the byte offset into the source;
/// `expected` lists what would have been accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, size_t offset, std::vector<std::string> expected);
    size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    size_t offset_;
    std::vector<std::string> expected_;
};

struct IdealExpr;
using IdealExprPtr = std::unique_ptr<IdealExpr>;

/// AST for textual ideal expressions. Shapes mirror the grammar:
///   ideal  :=  inter (':' poly)*
///   inter  :=  sum ('&' sum)*            ('∩' is an alias of '&')
///   sum    :=  prod ('+' prod)*
///   prod   :=  pow (('*'|'.') pow)*
///   pow    :=  atom ('^' INT)*           (INT >= 1)
///   atom   :=  '(' poly (',' poly)* ')'  |  'sat' '(' ideal ',' var ')'
/// Polynomials support integer coefficients, '+', '-', '*' (or '.'), '^'
/// and parentheses. A '(' at the ideal level always opens a literal.
struct IdealExpr {
    struct Literal {
        std::vector<Polynomial> gens;
    };
    struct Sum {
        IdealExprPtr lhs, rhs;
    };
    struct Product {
        IdealExprPtr lhs, rhs;
    };
    struct Intersection {
        IdealExprPtr lhs, rhs;
    };
    struct Power {
        IdealExprPtr base;
        int exponent;
    };
    struct Quotient {
        IdealExprPtr base;
        Polynomial divisor;
    };
    struct SaturateVar {
        IdealExprPtr base;
        std::string var;
    };

    std::variant<Literal, Sum, Product, Intersection, Power, Quotient, SaturateVar> node;
};

IdealExprPtr parse_ideal_expr(std::string_view src, const VarSet& ring);
Polynomial parse_polynomial(std::string_view src, const VarSet& ring);

std::string to_string(const IdealExpr& e);
bool ast_equal(const IdealExpr& a, const IdealExpr& b);

/// True when every literal generator is a single coefficient-1 term and no
/// quotient node occurs, so the expression evaluates in the monomial engine.
bool monomial_route_eligible(const IdealExpr& e);

using IdealValue = std::variant<MonomialIdeal, PolyIdeal>;

/// Evaluates through the monomial engine when eligible, otherwise through
/// the Groebner engine. Both routes agree where both apply.
IdealValue evaluate(const IdealExpr& e);
/// Always evaluates through the Groebner engine.
PolyIdeal evaluate_poly(const IdealExpr& e);

}  // namespace exalg
