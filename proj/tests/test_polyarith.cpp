#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "adeq/multipoly.hpp"
#include "adeq/polyarith.hpp"

using namespace adeq;
using Float = boost::multiprecision::cpp_bin_float_quad;  // 128-bit binary float

namespace {

IntPoly P(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

// Independent root-count oracle: sign changes over a refining rational grid,
// stable across two consecutive refinements.
int grid_count(const IntPoly &p, const Rat &a, const Rat &b, int cells) {
    int zeros = 0, changes = 0, last = 0;
    for (int i = 0; i <= cells; ++i) {
        Rat x = a + (b - a) * Rat(i, cells);
        int s = p.sign_at(x);
        if (s == 0) {
            if (i != 0 && i != cells) ++zeros;
            continue;
        }
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return zeros + changes;
}

int oracle_count(const IntPoly &p, const Rat &a, const Rat &b) {
    int prev = grid_count(p, a, b, 64);
    for (int cells = 128; cells <= 4096; cells *= 2) {
        int cur = grid_count(p, a, b, cells);
        if (cur == prev) return cur;
        prev = cur;
    }
    return prev;
}

Float eval_float(const IntPoly &p, const Float &x) {
    Float acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + Float(p[i].str());
    return acc;
}

}  // namespace

TEST_CASE("derivative") {
    CHECK(derivative(P({-4, 0, 1})) == P({0, 2}));
    CHECK(derivative(P({5})).is_zero());
    CHECK(derivative(P({-2, 0, 0, 1})) == P({0, 0, 3}));
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(P({1, -2, 1})) == P({-1, 1}));      // (x-1)^2 -> x-1
    CHECK(squarefree_part(P({-2, 0, 1})) == P({-2, 0, 1}));   // already squarefree
    CHECK(squarefree_part(P({0, 0, -1, 1})) == P({0, -1, 1}));  // x^3-x^2 -> x^2-x
    CHECK_THROWS_AS(squarefree_part(IntPoly()), std::domain_error);
}

TEST_CASE("squarefree output has constant gcd with its derivative") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> cs(5);
        for (auto &c : cs) c = coeff(rng);
        IntPoly p(std::move(cs));
        if (p.degree() < 1) continue;
        IntPoly sq = squarefree_part(p * p);  // force repeated factors
        CHECK(poly_gcd(sq, derivative(sq)).degree() == 0);
        // same root set as p: sq divides p^2 and p divides sq * content stuff;
        // check both vanish together on a grid
        for (int i = -8; i <= 8; ++i) {
            bool pz = p.sign_at(Rat(i, 3)) == 0;
            bool sz = sq.sign_at(Rat(i, 3)) == 0;
            CHECK(pz == sz);
        }
    }
}

TEST_CASE("sturm count on fixed examples") {
    CHECK(sturm_count(P({-2, 0, 1}), RatInterval(1, 2)) == 1);
    CHECK(sturm_count(P({1, 0, 1}), RatInterval(-10, 10)) == 0);
    CHECK(sturm_count(P({-2, 0, 1}), RatInterval(-2, 2)) == 2);
    CHECK_THROWS_AS(sturm_count(IntPoly(), RatInterval(0, 1)), std::domain_error);
    // endpoint root rejected
    CHECK_THROWS_AS(sturm_count(P({-4, 0, 1}), RatInterval(2, 3)), std::domain_error);
}

TEST_CASE("sturm count matches bisection oracle on random cubics") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-20, 20);
    int done = 0;
    while (done < 100) {
        std::vector<Int> cs(4);
        for (auto &c : cs) c = coeff(rng);
        IntPoly p(std::move(cs));
        if (p.degree() < 1) continue;
        IntPoly s = squarefree_part(p);
        Rat b = cauchy_bound(s) + Rat(1, 3);
        if (s.sign_at(-b) == 0 || s.sign_at(b) == 0) continue;
        CHECK(sturm_count(s, RatInterval(-b, b)) == oracle_count(s, -b, b));
        ++done;
    }
}

TEST_CASE("annihilators from resultants") {
    IntPoly s2 = P({-2, 0, 1}), s3 = P({-3, 0, 1});
    CHECK(squarefree_part(annihilator_sum(s2, s3)) == P({1, 0, -10, 0, 1}));
    CHECK(squarefree_part(annihilator_product(s2, s3)) == P({-6, 0, 1}));
    CHECK(squarefree_part(annihilator_sum(s2, P({0, 1}))) == P({-2, 0, 1}));
}

TEST_CASE("annihilators vanish at high-precision numeric roots") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> small(1, 6);
    for (int trial = 0; trial < 20; ++trial) {
        long m = small(rng), n = small(rng);
        IntPoly a = P({-m, 0, 1}), b = P({-n, 0, 1});  // roots sqrt(m), sqrt(n)
        Float ra = sqrt(Float(m)), rb = sqrt(Float(n));
        Float vs = eval_float(annihilator_sum(a, b), ra + rb);
        Float vp = eval_float(annihilator_product(a, b), ra * rb);
        CHECK(abs(vs) < Float("1e-20"));
        CHECK(abs(vp) < Float("1e-20"));
    }
}

TEST_CASE("poly gcd and exact division") {
    IntPoly f = P({-1, 1}) * P({-2, 1}) * P({-2, 1});
    CHECK(poly_gcd(f, derivative(f)) == P({-2, 1}));
    CHECK(exact_divide(f, P({-2, 1})) == P({-1, 1}) * P({-2, 1}));
    CHECK_THROWS_AS(exact_divide(P({1, 1}), P({0, 1})), std::domain_error);
}

TEST_CASE("composition helpers") {
    IntPoly s2 = P({-2, 0, 1});
    CHECK(compose_shift(s2, Rat(1)) == P({-1, 2, 1}));  // (x+1)^2 - 2
    CHECK(compose_negate(P({1, 2, 3})) == P({1, -2, 3}));
    CHECK(compose_power(P({-2, 1}), 3) == P({-2, 0, 0, 1}));
    CHECK(reverse_coeffs(P({-1, 0, 2})) == P({2, 0, -1}));
    CHECK(compose_scale(P({-2, 0, 1}), Rat(1, 2)) == P({-8, 0, 1}));
}

TEST_CASE("sym poly normalization and univariate extraction") {
    SymPoly t = SymPoly::symbol(0, Rat(1));
    SymPoly z = t + t - (SymPoly::constant(Rat(2)) * t);
    CHECK(z.is_zero());

    SymPoly cube = t * t * t - SymPoly::constant(Rat(2));
    auto uni = sym_extract_univariate(cube);
    REQUIRE(uni.has_value());
    CHECK(uni->first == P({-2, 0, 0, 1}));
    CHECK(uni->second == 0);

    SymPoly s = SymPoly::symbol(1, Rat(1));
    CHECK_FALSE(sym_extract_univariate(t + s).has_value());

    // denominators cleared
    SymPoly half = SymPoly::constant(Rat(1, 2)) * t - SymPoly::constant(Rat(1, 3));
    auto uni2 = sym_extract_univariate(half);
    REQUIRE(uni2.has_value());
    CHECK(uni2->first == P({-2, 3}));
}

TEST_CASE("sym budget overflow") {
    SymPoly t = SymPoly::symbol(0, Rat(1));
    SymPoly big = SymPoly::constant(Rat(1));
    SymBudget tight{4, 8};
    for (int i = 0; i < 8; ++i) big = checked_mul(big, t, tight);
    CHECK_THROWS_AS(checked_mul(big, t, tight), budget_error);
    SymBudget syms{1, 32};
    CHECK_THROWS_AS(checked_mul(SymPoly::symbol(1, Rat(1)), t, syms), budget_error);
}

TEST_CASE("integer determinant") {
    CHECK(int_det({{Int(1), Int(2)}, {Int(3), Int(4)}}) == -2);
    CHECK(int_det({{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
    CHECK(int_det({{Int(2)}}) == 2);
}
