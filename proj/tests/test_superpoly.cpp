#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d21a/superpoly.hpp"
#include "support/gen.hpp"

using namespace d21a;

namespace {
const SuperPoly Z1 = SuperPoly::gen(1);
const SuperPoly Z2 = SuperPoly::gen(2);
const SuperPoly Z3 = SuperPoly::gen(3);
const SuperPoly Z4 = SuperPoly::gen(4);
} // namespace

TEST_CASE("odd generators anticommute and square to zero") {
    CHECK(Z3 * Z4 == -(Z4 * Z3));
    CHECK((Z3 * Z4).coeff(Mono{0, 0, 1, 1}) == Scalar(1));
    CHECK((Z3 * Z3).is_zero());
    CHECK((Z4 * Z4).is_zero());
}

TEST_CASE("even part is commutative") {
    SuperPoly s = Z1 + Z2;
    SuperPoly sq = s * s;
    CHECK(sq.coeff(Mono{2, 0, 0, 0}) == Scalar(1));
    CHECK(sq.coeff(Mono{1, 1, 0, 0}) == Scalar(2));
    CHECK(sq.coeff(Mono{0, 2, 0, 0}) == Scalar(1));
}

TEST_CASE("supercommutativity on homogeneous pairs") {
    testgen::Rng rng(2024);
    for (int t = 0; t < 60; ++t) {
        int pp = static_cast<int>(rng() % 2), pq = static_cast<int>(rng() % 2);
        SuperPoly p = testgen::random_parity_poly(rng, pp);
        SuperPoly q = testgen::random_parity_poly(rng, pq);
        SuperPoly rhs = q * p;
        if (pp && pq) rhs = -rhs;
        CHECK(p * q == rhs);
    }
}

TEST_CASE("left odd derivatives") {
    SuperPoly z34 = Z3 * Z4;
    CHECK(partial(3, z34) == Z4);
    CHECK(partial(4, z34) == -Z3);
    // d1(z1^k) = k z1^{k-1}
    SuperPoly z1c = SuperPoly::monomial(Mono{5, 0, 0, 0});
    CHECK(partial(1, z1c) == SuperPoly::monomial(Mono{4, 0, 0, 0}, Scalar(5)));
}

TEST_CASE("odd partials anticommute") {
    testgen::Rng rng(88);
    for (int t = 0; t < 40; ++t) {
        SuperPoly p = testgen::random_poly(rng);
        CHECK((partial(3, partial(4, p)) + partial(4, partial(3, p))).is_zero());
        CHECK(partial(3, partial(3, p)).is_zero());
        CHECK(partial(4, partial(4, p)).is_zero());
        CHECK(partial(1, partial(2, p)) == partial(2, partial(1, p)));
    }
}

TEST_CASE("signed Leibniz rule") {
    testgen::Rng rng(4096);
    for (int t = 0; t < 60; ++t) {
        int pp = static_cast<int>(rng() % 2);
        SuperPoly p = testgen::random_parity_poly(rng, pp);
        SuperPoly q = testgen::random_poly(rng);
        for (int i = 1; i <= 4; ++i) {
            SuperPoly lhs = partial(i, p * q);
            SuperPoly rhs = partial(i, p) * q;
            SuperPoly second = p * partial(i, q);
            bool deriv_odd = (i >= 3);
            if (deriv_odd && pp) second = -second;
            rhs += second;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("coefficient conjugation") {
    Scalar a = Scalar::param(), i = Scalar::i();
    CHECK((Z1.scaled(i)).conj() == Z1.scaled(-i));
    SuperPoly z34 = Z3 * Z4;
    CHECK(z34.scaled(a).conj() == z34.scaled(a));
    testgen::Rng rng(321);
    for (int t = 0; t < 30; ++t) {
        SuperPoly p = testgen::random_poly(rng);
        CHECK(p.conj().conj() == p);
    }
}

TEST_CASE("exponential-polynomial derivatives") {
    ExpPoly::Key m22{rat(-2), rat(-2)};
    ExpPoly::Key m20{rat(-2), rat(0)};
    ExpPoly vac(ExpPoly::Key{rat(-2), rat(0)}, SuperPoly(Scalar(1)));
    // d1 exp(-2 x1) = -2 exp(-2 x1)
    CHECK(exp_partial(1, vac) == vac.scaled(Scalar(-2)));
    // d2 (x2 exp(-2 x2)) = (1 - 2 x2) exp(-2 x2)
    ExpPoly f(ExpPoly::Key{rat(0), rat(-2)}, SuperPoly::gen(2));
    ExpPoly expect(ExpPoly::Key{rat(0), rat(-2)}, SuperPoly(Scalar(1)) - SuperPoly::gen(2).scaled(Scalar(2)));
    CHECK(exp_partial(2, f) == expect);
    // d3 (x3 x4 exp(-2 x1)) = x4 exp(-2 x1)
    ExpPoly g(m20, SuperPoly::gen(3) * SuperPoly::gen(4));
    CHECK(exp_partial(3, g) == ExpPoly(m20, SuperPoly::gen(4)));
    (void)m22;
}

TEST_CASE("exp-polynomial arithmetic keeps keys separate") {
    ExpPoly f(ExpPoly::Key{rat(-2), rat(-2)}, Z1);
    ExpPoly g(ExpPoly::Key{rat(-2), rat(2)}, Z2);
    ExpPoly sum = f + g;
    CHECK(sum.summands().size() == 2);
    CHECK((sum - f) == g);
    CHECK((f - f).is_zero());
}
