#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adeq/realalg.hpp"

using namespace adeq;

namespace {

IntPoly P(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.emplace_back(c);
    return IntPoly(std::move(v));
}

RealAlg sqrt2() { return RealAlg::make(P({-2, 0, 1}), RatInterval(1, 2)); }
RealAlg sqrt3() { return RealAlg::make(P({-3, 0, 1}), RatInterval(1, 2)); }

void check_isolated(const RealAlg &a) {
    CHECK(sturm_count(a.defining(), a.interval()) == 1);
    CHECK(a.defining().sign_at(a.interval().lo) != 0);
    CHECK(a.defining().sign_at(a.interval().hi) != 0);
}

}  // namespace

TEST_CASE("make isolates roots") {
    RealAlg r = sqrt2();
    check_isolated(r);
    CHECK_FALSE(r.is_rational());

    RealAlg five = RealAlg::make(P({-5, 1}), RatInterval(0, 10));
    CHECK(five.is_rational());
    CHECK(five.rat_value() == 5);

    CHECK_THROWS_AS(RealAlg::make(P({-2, 0, 1}), RatInterval(5, 6)), std::domain_error);
    CHECK_THROWS_AS(RealAlg::make(P({-2, 0, 1}), RatInterval(-2, 2)), std::domain_error);
    CHECK_THROWS_AS(RealAlg::make(IntPoly(), RatInterval(0, 1)), std::domain_error);
}

TEST_CASE("make excludes endpoint roots") {
    // roots 1 and 2; the open interval (1, 2) holds neither
    IntPoly p = P({-1, 1}) * P({-2, 1});
    CHECK_THROWS_AS(RealAlg::make(p, RatInterval(1, 2)), std::domain_error);
    RealAlg two = RealAlg::make(p, RatInterval(Rat(3, 2), 3));
    CHECK(ra_compare(two, RealAlg::from_rat(2)) == 0);
}

TEST_CASE("arith examples") {
    RealAlg s = sqrt2() + sqrt3();
    CHECK(s.defining() == P({1, 0, -10, 0, 1}));
    check_isolated(s);

    RealAlg prod = sqrt2() * sqrt2();
    CHECK(ra_compare(prod, RealAlg::from_rat(2)) == 0);

    RealAlg inv = RealAlg::one() / sqrt2();
    CHECK(inv.defining() == P({-1, 0, 2}));
    CHECK(ra_sign_at(P({-1, 0, 2}), inv) == 0);

    CHECK_THROWS_AS(sqrt2() / RealAlg::zero(), std::domain_error);
}

TEST_CASE("sqrt examples") {
    RealAlg r = ra_sqrt(RealAlg::from_rat(2));
    CHECK(r.defining() == P({-2, 0, 1}));
    CHECK(ra_compare(r, sqrt2()) == 0);

    RealAlg rm1 = sqrt2() - RealAlg::one();
    RealAlg q = ra_sqrt(rm1);
    CHECK(q.defining() == P({-1, 0, 2, 0, 1}));  // x^4 + 2x^2 - 1
    CHECK(ra_compare(q * q, rm1) == 0);
    CHECK(ra_compare(q, RealAlg::zero()) > 0);

    CHECK(ra_sqrt(RealAlg::zero()).is_zero());
    CHECK(ra_sqrt(RealAlg::from_rat(Rat(9, 4))).rat_value() == Rat(3, 2));
    CHECK_THROWS_AS(ra_sqrt(RealAlg::from_rat(-1)), std::domain_error);
}

TEST_CASE("nthroot") {
    RealAlg c = ra_nthroot(RealAlg::from_rat(2), 3);
    CHECK(c.defining() == P({-2, 0, 0, 1}));
    CHECK(ra_compare(c * c * c, RealAlg::from_rat(2)) == 0);
    RealAlg neg = ra_nthroot(RealAlg::from_rat(-8), 3);
    CHECK(neg.rat_value() == -2);
    CHECK_THROWS_AS(ra_nthroot(RealAlg::from_rat(-2), 2), std::domain_error);
}

TEST_CASE("compare and sign") {
    CHECK(ra_compare(sqrt2(), RealAlg::from_rat(Rat(3, 2))) < 0);
    CHECK(ra_compare(sqrt2(), sqrt2()) == 0);
    CHECK(ra_sign_at(P({-2, 0, 1}), sqrt3()) > 0);
    CHECK(ra_sign_at(P({-3, 0, 1}), sqrt2()) < 0);
    CHECK(ra_sign_at(P({-2, 0, 1}), sqrt2()) == 0);
    // sqrt2 + sqrt3 annihilated by x^4 - 10x^2 + 1
    CHECK(ra_sign_at(P({1, 0, -10, 0, 1}), sqrt2() + sqrt3()) == 0);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick(0, 3), ratv(-4, 4);
    auto value = [&]() -> RealAlg {
        switch (pick(rng)) {
            case 0: return sqrt2();
            case 1: return sqrt3();
            case 2: return RealAlg::from_rat(Rat(ratv(rng)));
            default: return RealAlg::from_rat(Rat(ratv(rng), 3));
        }
    };
    for (int i = 0; i < 200; ++i) {
        RealAlg a = value(), b = value(), c = value();
        CHECK(ra_equal((a + b) + c, a + (b + c)));
        CHECK(ra_equal(a * (b + c), a * b + a * c));
        CHECK(ra_equal(a + b, b + a));
        CHECK(ra_equal(a * b, b * a));
    }
}

TEST_CASE("sqrt squares back on random nonnegative inputs") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> nv(0, 9);
    for (int i = 0; i < 50; ++i) {
        RealAlg a = RealAlg::from_rat(Rat(nv(rng), 1 + nv(rng) % 3));
        if (i % 3 == 0) a = a + sqrt2();  // irrational nonnegative
        RealAlg s = ra_sqrt(a);
        CHECK(ra_equal(s * s, a));
        check_isolated(s);
    }
}

TEST_CASE("isolation invariant maintained by operations") {
    RealAlg x = sqrt2() + sqrt3();
    check_isolated(x);
    RealAlg y = x * x - RealAlg::from_rat(10) * RealAlg::one();
    check_isolated(y);
    RealAlg z = ra_sqrt(sqrt2());
    check_isolated(z);
}

TEST_CASE("isolate_real_roots") {
    auto roots = isolate_real_roots(P({-2, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(ra_compare(roots[0], roots[1]) < 0);
    CHECK(ra_equal(roots[0], ra_neg(roots[1])));

    CHECK(isolate_real_roots(P({1, 0, 1})).empty());

    auto cube = isolate_real_roots(P({-2, 0, 0, 1}));
    REQUIRE(cube.size() == 1);
    CHECK(ra_equal(cube[0] * cube[0] * cube[0], RealAlg::from_rat(2)));

    auto rational_roots = isolate_real_roots(P({0, -1, 0, 1}));  // x^3 - x
    REQUIRE(rational_roots.size() == 3);
    CHECK(ra_equal(rational_roots[1], RealAlg::zero()));
}
