#include <doctest.h>

#include <algorithm>
#include <random>

#include "exalg/monomial_ideal.hpp"
#include "exalg/parse.hpp"

using namespace exalg;

namespace {

const VarSet& R3() {
    static const VarSet ring{"x1", "x2", "x3"};
    return ring;
}

MonomialIdeal M(const char* src) { return std::get<MonomialIdeal>(evaluate(*parse_ideal_expr(src, R3()))); }

MonomialIdeal rand_ideal(std::mt19937_64& rng, int max_gens, int max_exp) {
    std::vector<Monomial> gens;
    int k = std::uniform_int_distribution<int>(1, max_gens)(rng);
    for (int g = 0; g < k; ++g) {
        std::vector<int> e(3);
        for (auto& x : e) x = std::uniform_int_distribution<int>(0, max_exp)(rng);
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(R3(), std::move(gens));
}

// The whole lemma: product of the four simple factors.
MonomialIdeal big_product() {
    return M("(x1*x2, x2*x3, x1*x3)*(x1, x2*x3)*(x2, x1*x3)^2*(x3, x1*x2)^2");
}

MonomialIdeal big_intersection() { return M("(x2,x3)^5 & (x1,x3)^4 & (x1,x2)^4 & (x1,x2,x3)^7"); }

}  // namespace

TEST_CASE("divisibility pruning") {
    MonomialIdeal I(R3(), {Monomial({1, 0, 0}), Monomial({1, 1, 0}), Monomial({2, 0, 0})});
    CHECK(I.gens() == std::vector<Monomial>{Monomial({1, 0, 0})});
}

TEST_CASE("minimal generators of the fourfold intersection") {
    std::vector<Monomial> expected{Monomial({0, 4, 4}), Monomial({1, 3, 3}), Monomial({2, 3, 2}),
                                   Monomial({2, 2, 3}), Monomial({3, 4, 1}), Monomial({3, 1, 4}),
                                   Monomial({4, 5, 0}), Monomial({4, 0, 5})};
    std::sort(expected.begin(), expected.end());
    CHECK(big_intersection().gens() == expected);
}

TEST_CASE("minimal generators of the pairwise intersection") {
    // Oracle: minimal exponent triples with b+c >= 5 and a+c >= 4, found by
    // enumeration. The ten products x1^a*x2^(a+1)*x3^b, x1^a*x2^a*x3^(b+1)
    // (a+b = 4) generate the ideal but four of them are redundant.
    std::vector<Monomial> oracle;
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= 10; ++b)
            for (int c = 0; c <= 10; ++c) {
                if (b + c < 5 || a + c < 4) continue;
                bool minimal = true;
                if (a > 0 && b + c >= 5 && (a - 1) + c >= 4) minimal = false;
                if (b > 0 && (b - 1) + c >= 5 && a + c >= 4) minimal = false;
                if (c > 0 && b + (c - 1) >= 5 && a + (c - 1) >= 4) minimal = false;
                if (minimal) oracle.push_back(Monomial({a, b, c}));
            }
    std::sort(oracle.begin(), oracle.end());
    MonomialIdeal I = M("(x2,x3)^5 & (x1,x3)^4");
    CHECK(I.gens() == oracle);
    CHECK(I.gens().size() == 6);

    std::vector<Monomial> ten;
    for (int a = 0; a <= 4; ++a) {
        ten.push_back(Monomial({a, a + 1, 4 - a}));
        ten.push_back(Monomial({a, a, 5 - a}));
    }
    CHECK(MonomialIdeal(R3(), ten) == I);
}

TEST_CASE("membership") {
    MonomialIdeal H = big_product();
    CHECK(H.contains(Monomial({6, 3, 2})));  // the top x1-degree product
    CHECK_FALSE(big_intersection().contains(Monomial({7, 0, 0})));
    CHECK(M("(x1,x2,x3)^7").contains(Monomial({0, 4, 4})));
    CHECK_THROWS_AS(H.contains(Monomial({1, 0})), std::invalid_argument);
}

TEST_CASE("sum, product, power") {
    CHECK(M("(x2, x1*x3)^2") == M("(x2^2, x1*x2*x3, x1^2*x3^2)"));
    CHECK(M("(x1)*(x2, x3)") == M("(x1*x2, x1*x3)"));
    CHECK(M("(x1) + (x2)") == M("(x1, x2)"));
    CHECK_THROWS_AS(power(M("(x1)"), 0), std::invalid_argument);
}

TEST_CASE("intersection") {
    CHECK(intersect(M("(x2, x3)"), M("(x1, x3)")) == M("(x3, x1*x2)"));
    MonomialIdeal I = M("(x1*x2, x3^2)");
    CHECK(intersect(I, I) == I);
    CHECK(M("(x2,x3)^5 & (x1,x3)^4") == M("(x1*x2, x3)^4*(x2, x3)"));
}

TEST_CASE("equality") {
    CHECK(big_product() == big_intersection());
    CHECK_FALSE(M("(x2,x3)^5") == M("(x2,x3)^4"));
}

TEST_CASE("variable saturation") {
    MonomialIdeal H = big_product();
    CHECK(saturate_variable(H, "x1") == M("(x2, x3)^5"));
    CHECK(saturate_variable(H, "x2") == M("(x1, x3)^4"));
    CHECK(saturate_variable(H, "x3") == M("(x1, x2)^4"));
    CHECK(saturate_variable(M("(x1*x2, x3)"), "x1") == M("(x2, x3)"));
    CHECK_THROWS_AS(saturate_variable(H, "y"), std::invalid_argument);
}

TEST_CASE("saturation is idempotent and commutes across variables") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        MonomialIdeal I = rand_ideal(rng, 4, 3);
        MonomialIdeal s1 = saturate_variable(I, "x1");
        CHECK(saturate_variable(s1, "x1") == s1);
        CHECK(saturate_variable(saturate_variable(I, "x2"), "x1") ==
              saturate_variable(s1, "x2"));
    }
}

TEST_CASE("product lies inside the intersection, membership is coherent") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        MonomialIdeal I = rand_ideal(rng, 3, 3), J = rand_ideal(rng, 3, 3);
        MonomialIdeal prod = I * J;
        MonomialIdeal meet = intersect(I, J);
        for (const auto& g : prod.gens()) CHECK(meet.contains(g));
        if (!I.is_zero() && !J.is_zero()) {
            const Monomial& a = I.gens()[i % I.gens().size()];
            const Monomial& b = J.gens()[i % J.gens().size()];
            CHECK(prod.contains(a * b));
        }
    }
}

TEST_CASE("sum and intersection are commutative and associative") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        MonomialIdeal I = rand_ideal(rng, 3, 3), J = rand_ideal(rng, 3, 3),
                     K = rand_ideal(rng, 3, 3);
        CHECK(I + J == J + I);
        CHECK(intersect(I, J) == intersect(J, I));
        CHECK(I * J == J * I);
        CHECK(intersect(intersect(I, J), K) == intersect(I, intersect(J, K)));
        CHECK((I * J) * K == I * (J * K));
    }
}

TEST_CASE("exponent-inequality oracle for the fourfold intersection") {
    MonomialIdeal rhs = big_intersection();
    for (int a = 0; a <= 9; ++a)
        for (int b = 0; b <= 9; ++b)
            for (int c = 0; c <= 9; ++c) {
                bool expected = a + b + c >= 7 && a + b >= 4 && a + c >= 4 && b + c >= 5;
                CHECK(rhs.contains(Monomial({a, b, c})) == expected);
            }
}

TEST_CASE("expansion report") {
    std::vector<ExpansionRow> single = expansion_report({{M("(x1)"), 1}});
    REQUIRE(single.size() == 1);
    CHECK(single[0].product == Monomial({1, 0, 0}));
    CHECK(render_witness(single[0], R3()) == "(x1)");

    std::vector<std::pair<MonomialIdeal, int>> factors{{M("(x1*x2, x2*x3, x1*x3)"), 1},
                                                       {M("(x1, x2*x3)"), 1},
                                                       {M("(x2, x1*x3)"), 2},
                                                       {M("(x3, x1*x2)"), 2}};
    std::vector<ExpansionRow> rows = expansion_report(factors);
    CHECK(rows.size() == 54);
    MonomialIdeal rhs = big_intersection();
    for (const auto& row : rows) {
        CHECK(rhs.contains(row.product));
        Monomial prod = Monomial::one(3);
        for (const auto& g : row.choice) prod = prod * g;
        CHECK(prod == row.product);
    }
    // the witness for x1^5*x2^4*x3: (x1*x2), x1, then x2 and x1*x3 from the
    // squared factor, then (x1*x2) twice
    bool found = false;
    for (const auto& row : rows)
        if (row.product == Monomial({5, 4, 1}) &&
            render_witness(row, R3()) == "(x1*x2)*(x1)*(x2)*(x1*x3)*(x1*x2)*(x1*x2)")
            found = true;
    CHECK(found);
}

TEST_CASE("zero and unit ideals propagate") {
    MonomialIdeal zero = MonomialIdeal::zero(R3());
    MonomialIdeal unit = MonomialIdeal::unit(R3());
    MonomialIdeal I = M("(x1*x2, x3)");
    CHECK(zero.is_zero());
    CHECK(unit.is_unit());
    CHECK(I * zero == zero);
    CHECK(I + zero == I);
    CHECK(intersect(I, zero) == zero);
    CHECK(intersect(I, unit) == I);
    CHECK(I * unit == I);
    CHECK(I + unit == unit);
    CHECK_FALSE(zero.contains(Monomial({1, 0, 0})));
    CHECK(unit.contains(Monomial({0, 0, 0})));
    CHECK(saturate_variable(zero, "x1") == zero);
}
