#include "exalg/parse.hpp"

#include <cctype>
#include <optional>

namespace exalg {

namespace {

std::string describe(const std::vector<std::string>& expected) {
    std::string out;
    for (size_t i = 0; i < expected.size(); ++i) {
        if (i) out += i + 1 == expected.size() ? " or " : ", ";
        out += expected[i];
    }
    return out;
}

constexpr int kMaxDepth = 256;
constexpr int kMaxExponent = 1 << 20;

enum class Tok {
    lparen,
    rparen,
    comma,
    plus,
    minus,
    star,
    caret,
    colon,
    amp,
    integer,
    ident,
    sat,
    eof
};

struct Token {
    Tok kind;
    size_t offset;
    std::string text;  // ident name or integer digits
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        size_t at = pos_;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::eof, at, ""};
            return;
        }
        char c = src_[pos_];
        auto single = [&](Tok k) {
            ++pos_;
            cur_ = {k, at, std::string(1, c)};
        };
        switch (c) {
            case '(': return single(Tok::lparen);
            case ')': return single(Tok::rparen);
            case ',': return single(Tok::comma);
            case '+': return single(Tok::plus);
            case '-': return single(Tok::minus);
            case '*':
            case '.': return single(Tok::star);
            case '^': return single(Tok::caret);
            case ':': return single(Tok::colon);
            case '&': return single(Tok::amp);
            default: break;
        }
        // UTF-8 intersection sign as an '&' alias.
        if (static_cast<unsigned char>(c) == 0xE2 && pos_ + 2 < src_.size() &&
            static_cast<unsigned char>(src_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(src_[pos_ + 2]) == 0xA9) {
            pos_ += 3;
            cur_ = {Tok::amp, at, "&"};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            cur_ = {Tok::integer, at, std::string(src_.substr(start, pos_ - start))};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_'))
                ++pos_;
            std::string word(src_.substr(start, pos_ - start));
            cur_ = {word == "sat" ? Tok::sat : Tok::ident, at, std::move(word)};
            return;
        }
        throw ParseError("unexpected character at offset " + std::to_string(at), at,
                         {"expression token"});
    }

    std::string_view src_;
    size_t pos_ = 0;
    Token cur_{Tok::eof, 0, ""};
};

[[noreturn]] void fail(const Token& t, std::vector<std::string> expected) {
    std::string message = "syntax error at offset " + std::to_string(t.offset) + ": expected " +
                          describe(expected);
    throw ParseError(std::move(message), t.offset, std::move(expected));
}

class Parser {
public:
    Parser(std::string_view src, const VarSet& ring) : lex_(src), ring_(ring) {}

    IdealExprPtr parse_ideal() {
        IdealExprPtr e = parse_quotient(0);
        expect_eof();
        return e;
    }

    Polynomial parse_poly_top() {
        Polynomial p = parse_poly(0);
        expect_eof();
        return p;
    }

private:
    void expect_eof() {
        if (lex_.peek().kind != Tok::eof) fail(lex_.peek(), {"end of input"});
    }

    Token expect(Tok kind, const char* what) {
        if (lex_.peek().kind != kind) fail(lex_.peek(), {what});
        return lex_.take();
    }

    int parse_exponent() {
        Token t = expect(Tok::integer, "integer exponent");
        if (t.text.size() > 7) fail(t, {"exponent in range"});
        int e = std::stoi(t.text);
        if (e < 1 || e > kMaxExponent)
            throw ParseError("exponent must be a positive integer at offset " +
                                 std::to_string(t.offset),
                             t.offset, {"positive exponent"});
        return e;
    }

    // --- ideal level -------------------------------------------------------

    IdealExprPtr parse_quotient(int depth) {
        IdealExprPtr e = parse_intersection(depth);
        while (lex_.peek().kind == Tok::colon) {
            lex_.take();
            Polynomial f = parse_poly(depth + 1);
            auto n = std::make_unique<IdealExpr>();
            n->node = IdealExpr::Quotient{std::move(e), std::move(f)};
            e = std::move(n);
        }
        return e;
    }

    IdealExprPtr parse_intersection(int depth) {
        IdealExprPtr e = parse_sum(depth);
        while (lex_.peek().kind == Tok::amp) {
            lex_.take();
            IdealExprPtr rhs = parse_sum(depth);
            auto n = std::make_unique<IdealExpr>();
            n->node = IdealExpr::Intersection{std::move(e), std::move(rhs)};
            e = std::move(n);
        }
        return e;
    }

    IdealExprPtr parse_sum(int depth) {
        IdealExprPtr e = parse_product(depth);
        while (lex_.peek().kind == Tok::plus) {
            lex_.take();
            IdealExprPtr rhs = parse_product(depth);
            auto n = std::make_unique<IdealExpr>();
            n->node = IdealExpr::Sum{std::move(e), std::move(rhs)};
            e = std::move(n);
        }
        return e;
    }

    IdealExprPtr parse_product(int depth) {
        IdealExprPtr e = parse_power(depth);
        while (lex_.peek().kind == Tok::star) {
            lex_.take();
            IdealExprPtr rhs = parse_power(depth);
            auto n = std::make_unique<IdealExpr>();
            n->node = IdealExpr::Product{std::move(e), std::move(rhs)};
            e = std::move(n);
        }
        return e;
    }

    IdealExprPtr parse_power(int depth) {
        IdealExprPtr e = parse_atom(depth);
        while (lex_.peek().kind == Tok::caret) {
            lex_.take();
            int exp = parse_exponent();
            auto n = std::make_unique<IdealExpr>();
            n->node = IdealExpr::Power{std::move(e), exp};
            e = std::move(n);
        }
        return e;
    }

    IdealExprPtr parse_atom(int depth) {
        if (depth > kMaxDepth)
            throw ParseError("expression nests too deeply", lex_.peek().offset, {"shallower input"});
        const Token& t = lex_.peek();
        if (t.kind == Tok::sat) {
            lex_.take();
            expect(Tok::lparen, "'('");
            IdealExprPtr base = parse_quotient(depth + 1);
            expect(Tok::comma, "','");
            Token var = expect(Tok::ident, "variable");
            ring_.require_index(var.text);  // throws for unknown names
            expect(Tok::rparen, "')'");
            auto n = std::make_unique<IdealExpr>();
            n->node = IdealExpr::SaturateVar{std::move(base), var.text};
            return n;
        }
        if (t.kind == Tok::lparen) {
            lex_.take();
            IdealExpr::Literal lit;
            lit.gens.push_back(parse_poly(depth + 1));
            while (lex_.peek().kind == Tok::comma) {
                lex_.take();
                lit.gens.push_back(parse_poly(depth + 1));
            }
            expect(Tok::rparen, "')' or ','");
            auto n = std::make_unique<IdealExpr>();
            n->node = std::move(lit);
            return n;
        }
        fail(t, {"'('", "'sat('"});
    }

    // --- polynomial level --------------------------------------------------

    Polynomial parse_poly(int depth) {
        if (depth > kMaxDepth)
            throw ParseError("expression nests too deeply", lex_.peek().offset, {"shallower input"});
        Polynomial p = parse_pterm(depth);
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            bool minus = lex_.take().kind == Tok::minus;
            Polynomial q = parse_pterm(depth);
            p = minus ? p - q : p + q;
        }
        return p;
    }

    Polynomial parse_pterm(int depth) {
        Polynomial p = parse_pfactor(depth);
        while (lex_.peek().kind == Tok::star) {
            lex_.take();
            p = p * parse_pfactor(depth);
        }
        return p;
    }

    Polynomial parse_pfactor(int depth) {
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            return -parse_pfactor(depth);
        }
        Polynomial base = parse_pbase(depth);
        while (lex_.peek().kind == Tok::caret) {
            lex_.take();
            base = pow(base, static_cast<unsigned>(parse_exponent()));
        }
        return base;
    }

    Polynomial parse_pbase(int depth) {
        if (depth > kMaxDepth)
            throw ParseError("expression nests too deeply", lex_.peek().offset, {"shallower input"});
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::integer: {
                Token n = lex_.take();
                return Polynomial::constant(ring_, mpq_class(mpz_class(n.text, 10)));
            }
            case Tok::ident: {
                Token v = lex_.take();
                auto idx = ring_.index_of(v.text);
                if (!idx)
                    throw ParseError("unknown variable '" + v.text + "' at offset " +
                                         std::to_string(v.offset),
                                     v.offset, {"declared variable"});
                return Polynomial::variable(ring_, *idx);
            }
            case Tok::lparen: {
                lex_.take();
                Polynomial p = parse_poly(depth + 1);
                expect(Tok::rparen, "')'");
                return p;
            }
            default:
                fail(t, {"polynomial"});
        }
    }

    Lexer lex_;
    const VarSet& ring_;
};

}  // namespace

ParseError::ParseError(std::string message, size_t offset, std::vector<std::string> expected)
    : std::runtime_error(std::move(message)), offset_(offset), expected_(std::move(expected)) {}

IdealExprPtr parse_ideal_expr(std::string_view src, const VarSet& ring) {
    Parser p(src, ring);
    return p.parse_ideal();
}

Polynomial parse_polynomial(std::string_view src, const VarSet& ring) {
    Parser p(src, ring);
    return p.parse_poly_top();
}

std::string to_string(const IdealExpr& e) {
    return std::visit(
        [&](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IdealExpr::Literal>) {
                std::string out = "(";
                for (size_t i = 0; i < n.gens.size(); ++i) {
                    if (i) out += ", ";
                    out += n.gens[i].to_string();
                }
                return out + ")";
            } else if constexpr (std::is_same_v<T, IdealExpr::Sum>) {
                return to_string(*n.lhs) + " + " + to_string(*n.rhs);
            } else if constexpr (std::is_same_v<T, IdealExpr::Product>) {
                return to_string(*n.lhs) + "*" + to_string(*n.rhs);
            } else if constexpr (std::is_same_v<T, IdealExpr::Intersection>) {
                return to_string(*n.lhs) + " & " + to_string(*n.rhs);
            } else if constexpr (std::is_same_v<T, IdealExpr::Power>) {
                return to_string(*n.base) + "^" + std::to_string(n.exponent);
            } else if constexpr (std::is_same_v<T, IdealExpr::Quotient>) {
                return to_string(*n.base) + " : " + n.divisor.to_string();
            } else {
                return "sat(" + to_string(*n.base) + ", " + n.var + ")";
            }
        },
        e.node);
}

bool ast_equal(const IdealExpr& a, const IdealExpr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const T& nb = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, IdealExpr::Literal>) {
                return na.gens == nb.gens;
            } else if constexpr (std::is_same_v<T, IdealExpr::Power>) {
                return na.exponent == nb.exponent && ast_equal(*na.base, *nb.base);
            } else if constexpr (std::is_same_v<T, IdealExpr::Quotient>) {
                return na.divisor == nb.divisor && ast_equal(*na.base, *nb.base);
            } else if constexpr (std::is_same_v<T, IdealExpr::SaturateVar>) {
                return na.var == nb.var && ast_equal(*na.base, *nb.base);
            } else {
                return ast_equal(*na.lhs, *nb.lhs) && ast_equal(*na.rhs, *nb.rhs);
            }
        },
        a.node);
}

bool monomial_route_eligible(const IdealExpr& e) {
    return std::visit(
        [](const auto& n) -> bool {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IdealExpr::Literal>) {
                for (const auto& g : n.gens) {
                    auto t = g.single_term();
                    if (!t || t->coeff != 1) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, IdealExpr::Quotient>) {
                return false;
            } else if constexpr (std::is_same_v<T, IdealExpr::Power> ||
                                 std::is_same_v<T, IdealExpr::SaturateVar>) {
                return monomial_route_eligible(*n.base);
            } else {
                return monomial_route_eligible(*n.lhs) && monomial_route_eligible(*n.rhs);
            }
        },
        e.node);
}

namespace {

MonomialIdeal evaluate_monomial(const IdealExpr& e) {
    return std::visit(
        [](const auto& n) -> MonomialIdeal {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IdealExpr::Literal>) {
                const VarSet& ring = n.gens.front().ring();
                std::vector<Monomial> gens;
                for (const auto& g : n.gens) gens.push_back(g.single_term()->mono);
                return MonomialIdeal(ring, std::move(gens));
            } else if constexpr (std::is_same_v<T, IdealExpr::Sum>) {
                return evaluate_monomial(*n.lhs) + evaluate_monomial(*n.rhs);
            } else if constexpr (std::is_same_v<T, IdealExpr::Product>) {
                return evaluate_monomial(*n.lhs) * evaluate_monomial(*n.rhs);
            } else if constexpr (std::is_same_v<T, IdealExpr::Intersection>) {
                return intersect(evaluate_monomial(*n.lhs), evaluate_monomial(*n.rhs));
            } else if constexpr (std::is_same_v<T, IdealExpr::Power>) {
                return power(evaluate_monomial(*n.base), n.exponent);
            } else if constexpr (std::is_same_v<T, IdealExpr::SaturateVar>) {
                return saturate_variable(evaluate_monomial(*n.base), n.var);
            } else {
                throw std::logic_error("quotient is not a monomial-engine operation");
            }
        },
        e.node);
}

}  // namespace

PolyIdeal evaluate_poly(const IdealExpr& e) {
    return std::visit(
        [&](const auto& n) -> PolyIdeal {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IdealExpr::Literal>) {
                const VarSet& ring = n.gens.front().ring();
                return PolyIdeal(ring, n.gens);
            } else if constexpr (std::is_same_v<T, IdealExpr::Sum>) {
                return ideal_sum(evaluate_poly(*n.lhs), evaluate_poly(*n.rhs));
            } else if constexpr (std::is_same_v<T, IdealExpr::Product>) {
                return ideal_product(evaluate_poly(*n.lhs), evaluate_poly(*n.rhs));
            } else if constexpr (std::is_same_v<T, IdealExpr::Intersection>) {
                return intersect(evaluate_poly(*n.lhs), evaluate_poly(*n.rhs));
            } else if constexpr (std::is_same_v<T, IdealExpr::Power>) {
                return ideal_power(evaluate_poly(*n.base), n.exponent);
            } else if constexpr (std::is_same_v<T, IdealExpr::Quotient>) {
                return quotient_by_poly(evaluate_poly(*n.base), n.divisor);
            } else {
                PolyIdeal base = evaluate_poly(*n.base);
                return saturate_by_poly(base, Polynomial::variable(base.ring(), n.var));
            }
        },
        e.node);
}

IdealValue evaluate(const IdealExpr& e) {
    if (monomial_route_eligible(e)) return evaluate_monomial(e);
    return evaluate_poly(e);
}

}  // namespace exalg
