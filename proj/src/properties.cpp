#include "exalg/properties.hpp"

#include <algorithm>
#include <random>

#include "exalg/groebner.hpp"
#include "exalg/monomial_ideal.hpp"
#include "exalg/parse.hpp"

namespace exalg {

namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Monomial rand_monomial(Rng& rng, size_t nvars, int max_exp) {
    std::vector<int> e(nvars);
    for (auto& x : e) x = rand_int(rng, 0, max_exp);
    return Monomial(std::move(e));
}

Polynomial rand_polynomial(Rng& rng, const VarSet& ring, int max_terms, int max_exp) {
    Polynomial f(ring);
    int terms = rand_int(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
        int c = rand_int(rng, -3, 3);
        if (c == 0) c = 1;
        f += Polynomial::term(ring, rand_monomial(rng, ring.size(), max_exp), c);
    }
    return f;
}

const VarSet& small_ring() {
    static const VarSet ring{"x", "y", "z"};
    return ring;
}

}  // namespace

PropertyResult check_membership_agreement(uint64_t seed, size_t cases) {
    Rng rng(seed * 2 + 1);
    PropertyResult res;
    const VarSet& ring = small_ring();
    for (size_t i = 0; i < cases; ++i) {
        std::vector<Monomial> gens;
        int k = rand_int(rng, 1, 4);
        for (int g = 0; g < k; ++g) gens.push_back(rand_monomial(rng, 3, 3));
        MonomialIdeal I(ring, gens);
        PolyIdeal J = to_poly_ideal(I);
        Monomial probe = rand_monomial(rng, 3, 4);
        bool mono = I.contains(probe);
        bool grob = ideal_member(Polynomial::term(ring, probe, 1), J);
        ++res.cases;
        if (mono != grob) {
            res.ok = false;
            res.detail = "disagreement on " + probe.to_string(ring) + " in " + I.to_string();
            return res;
        }
    }
    return res;
}

PropertyResult check_gb_input_invariance(uint64_t seed, size_t cases) {
    Rng rng(seed * 2 + 2);
    PropertyResult res;
    const VarSet& ring = small_ring();
    MonomialOrder ord = MonomialOrder::grevlex();
    for (size_t i = 0; i < cases; ++i) {
        std::vector<Polynomial> gens;
        int k = rand_int(rng, 2, 3);
        for (int g = 0; g < k; ++g) gens.push_back(rand_polynomial(rng, ring, 3, 3));
        std::vector<Polynomial> reference = reduced_groebner_basis(ring, gens, ord);

        std::vector<Polynomial> mixed = gens;
        std::shuffle(mixed.begin(), mixed.end(), rng);
        for (int op = 0; op < 3; ++op) {
            size_t a = rand_int(rng, 0, static_cast<int>(mixed.size()) - 1);
            size_t b = rand_int(rng, 0, static_cast<int>(mixed.size()) - 1);
            if (a == b) continue;
            int c = rand_int(rng, -2, 2);
            mixed[a] += Polynomial::constant(ring, c) * mixed[b];
        }
        std::vector<Polynomial> recomputed = reduced_groebner_basis(ring, mixed, ord);
        ++res.cases;
        if (reference != recomputed) {
            res.ok = false;
            res.detail = "basis changed under recombination (case " + std::to_string(i) + ")";
            return res;
        }
    }
    return res;
}

namespace {

// Grammar-shaped random expressions. The printer emits no ideal-level
// parentheses, so binary nodes must nest the way the parser associates:
// left operands at the node's own precedence level, right operands one
// level tighter. Levels: intersection 1, sum 2, product 3, power 4, atom 5.
IdealExprPtr rand_expr_level(Rng& rng, const VarSet& ring, int depth, int min_level) {
    auto node = std::make_unique<IdealExpr>();
    int level = depth <= 0 ? 5 : rand_int(rng, min_level, 5);
    switch (level) {
        case 1:
            node->node = IdealExpr::Intersection{rand_expr_level(rng, ring, depth - 1, 1),
                                                 rand_expr_level(rng, ring, depth - 1, 2)};
            return node;
        case 2:
            node->node = IdealExpr::Sum{rand_expr_level(rng, ring, depth - 1, 2),
                                        rand_expr_level(rng, ring, depth - 1, 3)};
            return node;
        case 3:
            node->node = IdealExpr::Product{rand_expr_level(rng, ring, depth - 1, 3),
                                            rand_expr_level(rng, ring, depth - 1, 4)};
            return node;
        case 4:
            node->node = IdealExpr::Power{rand_expr_level(rng, ring, 0, 5), rand_int(rng, 1, 2)};
            return node;
        default: {
            if (depth > 0 && rand_int(rng, 0, 3) == 0) {
                node->node = IdealExpr::SaturateVar{
                    rand_expr_level(rng, ring, depth - 1, 1),
                    ring.name(rand_int(rng, 0, static_cast<int>(ring.size()) - 1))};
                return node;
            }
            IdealExpr::Literal lit;
            int k = rand_int(rng, 1, 3);
            for (int i = 0; i < k; ++i)
                lit.gens.push_back(Polynomial::term(ring, rand_monomial(rng, ring.size(), 2), 1));
            node->node = std::move(lit);
            return node;
        }
    }
}

IdealExprPtr rand_expr(Rng& rng, const VarSet& ring, int depth) {
    return rand_expr_level(rng, ring, depth, 1);
}

}  // namespace

PropertyResult check_parser_roundtrip(uint64_t seed, size_t cases) {
    Rng rng(seed * 2 + 3);
    PropertyResult res;
    const VarSet& ring = small_ring();
    for (size_t i = 0; i < cases; ++i) {
        IdealExprPtr e = rand_expr(rng, ring, 2);
        std::string printed = to_string(*e);
        IdealExprPtr reparsed = parse_ideal_expr(printed, ring);
        ++res.cases;
        if (!ast_equal(*e, *reparsed)) {
            res.ok = false;
            res.detail = "round-trip mismatch for: " + printed;
            return res;
        }
    }
    return res;
}

PropertyResult check_parser_totality(uint64_t seed, size_t cases) {
    Rng rng(seed * 2 + 4);
    PropertyResult res;
    const VarSet& ring = small_ring();
    const std::string tokens = "xyz()^*&:,+-. 0123456789satw";
    for (size_t i = 0; i < cases; ++i) {
        std::string input;
        int len = rand_int(rng, 0, 40);
        bool raw = rand_int(rng, 0, 1) == 0;
        for (int b = 0; b < len; ++b) {
            if (raw)
                input.push_back(static_cast<char>(rand_int(rng, 0, 255)));
            else
                input.push_back(tokens[rand_int(rng, 0, static_cast<int>(tokens.size()) - 1)]);
        }
        ++res.cases;
        try {
            parse_ideal_expr(input, ring);
        } catch (const ParseError&) {
            // positioned error: fine
        } catch (const std::exception& ex) {
            res.ok = false;
            res.detail = std::string("unexpected exception: ") + ex.what();
            return res;
        }
    }
    return res;
}

PropertyResult check_route_agreement(uint64_t seed, size_t cases) {
    Rng rng(seed * 2 + 5);
    PropertyResult res;
    const VarSet& ring = small_ring();
    for (size_t i = 0; i < cases; ++i) {
        IdealExprPtr e = rand_expr(rng, ring, 2);
        IdealValue routed = evaluate(*e);
        if (!std::holds_alternative<MonomialIdeal>(routed)) {
            res.ok = false;
            res.detail = "monomial expression not routed to the monomial engine";
            return res;
        }
        const MonomialIdeal& mono = std::get<MonomialIdeal>(routed);
        PolyIdeal grob = evaluate_poly(*e);
        ++res.cases;
        if (!ideal_equal(to_poly_ideal(mono), grob)) {
            res.ok = false;
            res.detail = "engines disagree on: " + to_string(*e);
            return res;
        }
    }
    return res;
}

}  // namespace exalg
