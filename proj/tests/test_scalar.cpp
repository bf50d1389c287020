#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d21a/scalar.hpp"
#include "support/gen.hpp"

using namespace d21a;

namespace {
const Scalar A = Scalar::param();
const Scalar I = Scalar::i();
} // namespace

TEST_CASE("cancellation and gcd reduction") {
    // (a+1)/a * a = a+1
    Scalar x = (A + Scalar(1)) / A;
    CHECK(x * A == A + Scalar(1));
    // (1+i) + (1-i) = 2
    CHECK(Scalar(1) + I + (Scalar(1) - I) == Scalar(2));
    // (a^2-1)/(a-1) = a+1 in canonical form
    Scalar y = (A * A - Scalar(1)) / (A - Scalar(1));
    CHECK(y == A + Scalar(1));
    CHECK(y.den() == APoly(GaussianRational(1)));
}

TEST_CASE("zero and division errors") {
    CHECK(Scalar().is_zero());
    CHECK_THROWS_AS(Scalar(1) / Scalar(), arithmetic_error);
    CHECK_THROWS_AS(Scalar().inverse(), arithmetic_error);
}

TEST_CASE("eval_at") {
    // (1+a)/2 at a=3 -> 2
    Scalar s = (Scalar(1) + A) / Scalar(2);
    CHECK(s.eval_at(rat(3)) == GaussianRational(2));
    // 1/(a+1) has a pole at -1
    Scalar p = Scalar(1) / (A + Scalar(1));
    CHECK_THROWS_AS(p.eval_at(rat(-1)), pole_error);
    CHECK(!p.defined_at(rat(-1)));
    // (-a)(-a+1) at a=1/2 -> -1/4, i.e. the k=2 rising factorial of -a
    Scalar poch = pochhammer(-A, 2);
    CHECK(poch == (-A) * (-A + Scalar(1)));
    CHECK(poch.eval_at(rat(1, 2)) == GaussianRational(rat(-1, 4)));
}

TEST_CASE("conjugation fixes a and flips i") {
    CHECK((Scalar(2) + Scalar(3) * I).conj() == Scalar(2) - Scalar(3) * I);
    CHECK((A * I).conj() == -(A * I));
    testgen::Rng rng(12345);
    for (int t = 0; t < 50; ++t) {
        Scalar x = testgen::random_scalar(rng);
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("field axioms on random triples") {
    testgen::Rng rng(999);
    for (int t = 0; t < 40; ++t) {
        Scalar x = testgen::random_scalar(rng);
        Scalar y = testgen::random_scalar(rng);
        Scalar z = testgen::random_scalar(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == Scalar());
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
        CHECK(x * y == y * x);
    }
}

TEST_CASE("canonical form is unique") {
    testgen::Rng rng(777);
    for (int t = 0; t < 40; ++t) {
        Scalar x = testgen::random_scalar(rng);
        Scalar r = testgen::random_nonzero_scalar(rng, 1);
        Scalar y = (x * r) / r;
        CHECK(x == y);
        CHECK(x.num() == y.num());
        CHECK(x.den() == y.den());
        CHECK(x.den().leading().is_one());
    }
}

TEST_CASE("eval_at is a ring morphism") {
    testgen::Rng rng(31337);
    for (int t = 0; t < 40; ++t) {
        Scalar x = testgen::random_scalar(rng);
        Scalar y = testgen::random_scalar(rng);
        Rat pt = testgen::random_rat(rng, 3, 3);
        if (!x.defined_at(pt) || !y.defined_at(pt)) continue;
        CHECK((x * y).eval_at(pt) == x.eval_at(pt) * y.eval_at(pt));
        CHECK((x + y).eval_at(pt) == x.eval_at(pt) + y.eval_at(pt));
    }
}

TEST_CASE("conjugate is a ring involution") {
    testgen::Rng rng(4242);
    for (int t = 0; t < 40; ++t) {
        Scalar x = testgen::random_scalar(rng);
        Scalar y = testgen::random_scalar(rng);
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x + y).conj() == x.conj() + y.conj());
    }
}

TEST_CASE("string round trip") {
    testgen::Rng rng(555);
    CHECK(parse_scalar("(a^2+2*a+1)/(a+1)") == A + Scalar(1));
    CHECK(parse_scalar("1/2+3/4*i") == Scalar(rat(1, 2)) + Scalar(rat(3, 4)) * I);
    CHECK(parse_scalar("-a") == -A);
    CHECK(parse_scalar("0") == Scalar());
    CHECK_THROWS_AS(parse_scalar("a+"), parse_error);
    CHECK_THROWS_AS(parse_scalar("q"), parse_error);
    for (int t = 0; t < 60; ++t) {
        Scalar x = testgen::random_scalar(rng);
        CHECK(parse_scalar(x.str()) == x);
    }
}

TEST_CASE("pochhammer degenerates at naturals") {
    // (-2)_3 = (-2)(-1)(0) = 0
    CHECK(pochhammer(Scalar(-2), 3) == Scalar());
    CHECK(pochhammer(-A, 3).eval_at(rat(2)) == GaussianRational(0));
    CHECK(factorial_scalar(5) == Scalar(120));
}
