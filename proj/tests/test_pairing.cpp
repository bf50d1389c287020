#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "d21a/pairing.hpp"
#include "support/gen.hpp"

using namespace d21a;

namespace {
const Scalar A = Scalar::param();
SuperPoly z1pow(unsigned k) { return SuperPoly::monomial(Mono{k, 0, 0, 0}); }
SuperPoly mono(unsigned d1, unsigned d2, unsigned e3, unsigned e4) {
    return SuperPoly::monomial(Mono{d1, d2, static_cast<std::uint8_t>(e3), static_cast<std::uint8_t>(e4)});
}
} // namespace

TEST_CASE("basic pairings") {
    Character chi = Character::lambda_alpha();
    CHECK(bessel_fischer(chi, SuperPoly(Scalar(1)), SuperPoly(Scalar(1))) == Scalar(1));
    // <z1^k, z1^k> = k! (-alpha)_k
    for (unsigned k = 1; k <= 10; ++k)
        CHECK(bessel_fischer(chi, z1pow(k), z1pow(k)) == factorial_scalar(k) * pochhammer(-A, k));
    // <z1^k z3, z1^k z4> = 2 k! (-alpha)_{k+1}
    for (unsigned k = 0; k <= 6; ++k) {
        SuperPoly p = z1pow(k) * SuperPoly::gen(3);
        SuperPoly q = z1pow(k) * SuperPoly::gen(4);
        CHECK(bessel_fischer(chi, p, q) == Scalar(2) * factorial_scalar(k) * pochhammer(-A, k + 1));
    }
    // brute-force level-1 values
    CHECK(bessel_fischer(chi, SuperPoly::gen(1), SuperPoly::gen(1)) == -A);
    CHECK(bessel_fischer(chi, SuperPoly::gen(2), SuperPoly::gen(2)) == Scalar(-1));
    CHECK(bessel_fischer(chi, SuperPoly::gen(1), SuperPoly::gen(2)).is_zero());
    // sesquilinearity in the second slot
    Scalar i = Scalar::i();
    CHECK(bessel_fischer(chi, SuperPoly::gen(1), SuperPoly::gen(1).scaled(i)) == -A * (-i));
}

TEST_CASE("lambda = 1 closed forms") {
    Character chi = Character::lambda_one();
    SuperPoly z2 = SuperPoly::gen(2);
    for (unsigned k = 1; k <= 6; ++k) {
        SuperPoly p(Scalar(1));
        for (unsigned j = 0; j < k; ++j) p = p * z2;
        CHECK(bessel_fischer(chi, p, p) == factorial_scalar(k) * pochhammer(-A.inverse(), k));
        SuperPoly p3 = p * SuperPoly::gen(3);
        SuperPoly p4 = p * SuperPoly::gen(4);
        // sign forced by B(z3) z4 = -2 lambda (the recursion gives 2(alpha k - 1) <z2^k, z2^k>)
        CHECK(bessel_fischer(chi, p3, p4) ==
              Scalar(2) * A * factorial_scalar(k) * pochhammer(-A.inverse(), k + 1));
        CHECK(bessel_fischer(chi, p3, p4) ==
              (Scalar(2) * A * Scalar(static_cast<long>(k)) - Scalar(2)) * bessel_fischer(chi, p, p));
    }
    // the operator identity B(z3) z4 = -2 lambda pins the k = 0 case
    CHECK(bessel_fischer(chi, SuperPoly::gen(3), SuperPoly::gen(4)) == Scalar(-2));
}

TEST_CASE("gram matrices match the closed forms") {
    for (const Character& chi : {Character::lambda_alpha(), Character::lambda_one()}) {
        CheckReport r = check_gram_closed_forms(chi, 6, ExecMode::Serial);
        std::string first = r.failures.empty() ? std::string() : r.failures.front();
        INFO(first);
        CHECK(r.pass);
    }
}

TEST_CASE("unlisted pairs vanish") {
    Character chi = Character::lambda_alpha();
    for (unsigned k = 1; k <= 4; ++k) {
        GramMatrix g = gram(chi, k, ExecMode::Serial);
        // zero pattern: only 00, 11, 23, 32 nonzero
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                bool listed = (i == j && i < 2) || (i == 2 && j == 3) || (i == 3 && j == 2);
                if (!listed) CHECK(g.entries[i][j].is_zero());
            }
    }
}

TEST_CASE("degeneracy witnesses") {
    // lambda = alpha, alpha = 2, degree 3: (-2)_3 = 0 makes the gram singular
    Character bad = Character::lambda_alpha(Scalar(2));
    GramMatrix g = gram(bad, 3, ExecMode::Serial);
    CHECK(g.degenerate);
    CHECK(g.determinant.is_zero());
    // nondegenerate at alpha = 1/2 up to degree 8
    CheckReport ok = check_nondegenerate(Character::lambda_alpha(), 8, rat(1, 2));
    CHECK(ok.pass);
    CheckReport bad_report = check_nondegenerate(Character::lambda_alpha(), 3, rat(2));
    CHECK(!bad_report.pass);
    // symbolic grams are nondegenerate
    CHECK(!gram(Character::lambda_alpha(), 4, ExecMode::Serial).degenerate);
}

TEST_CASE("degree orthogonality and descent to the quotient") {
    for (const Character& chi : {Character::lambda_alpha(), Character::lambda_one()}) {
        CHECK(check_degree_orthogonality(chi, 4).pass);
        CHECK(check_pairing_descends(chi, 5, ExecMode::Serial).pass);
    }
    Character chi = Character::lambda_alpha();
    CHECK(bessel_fischer(chi, SuperPoly::gen(1), z1pow(2)).is_zero());
}

TEST_CASE("superhermitian identity") {
    for (const Character& chi : {Character::lambda_alpha(), Character::lambda_one()}) {
        CheckReport r = check_superhermitian(chi, 4, ExecMode::Serial);
        std::string first = r.failures.empty() ? std::string() : r.failures.front();
        INFO(first);
        CHECK(r.pass);
    }
    // a complex-coefficient spot check
    Character chi = Character::lambda_alpha();
    SuperPoly p = SuperPoly::gen(1).scaled(Scalar::i()) + z1pow(1);
    SuperPoly q = SuperPoly::gen(1);
    CHECK(bessel_fischer(chi, p, q) == bessel_fischer(chi, q, p).conj());
}

TEST_CASE("adjunction between multiplication and bessel operators") {
    for (const Character& chi : {Character::lambda_alpha(), Character::lambda_one()})
        CHECK(check_adjunction(chi, 40, 20240819).pass);
}

TEST_CASE("skew supersymmetry of the fock action") {
    for (const Character& chi : {Character::lambda_alpha(), Character::lambda_one()}) {
        CheckReport r = check_skew_supersymmetry(chi, 3, ExecMode::Serial);
        std::string first = r.failures.empty() ? std::string() : r.failures.front();
        INFO(first);
        CHECK(r.pass);
    }
    // alpha = -1 with the d operators
    CheckReport r = check_skew_supersymmetry(Character::lambda_alpha(Scalar(-1)), 3, ExecMode::Serial);
    std::string first = r.failures.empty() ? std::string() : r.failures.front();
    INFO(first);
    CHECK(r.pass);
}

TEST_CASE("euler-type pairing identities") {
    CheckReport r = check_lem_eulerish(Character::lambda_alpha(), 6);
    std::string first = r.failures.empty() ? std::string() : r.failures.front();
    INFO(first);
    CHECK(r.pass);
}

TEST_CASE("bipoly sign rule") {
    // (z|w)^2 must produce -1/2 z3 z4 w3 w4 (anticommuting cross factors)
    BiPoly zw = zw_pairing(A);
    BiPoly sq = zw * zw;
    Scalar c = Scalar();
    for (const auto& [key, coeff] : sq.terms())
        if (key.first == Mono{0, 0, 1, 1} && key.second == Mono{0, 0, 1, 1}) c = coeff;
    CHECK(c == Scalar(Rat(-1, 2)));
    // and 2 alpha z1 z2 w1 w2
    Scalar c2 = Scalar();
    for (const auto& [key, coeff] : sq.terms())
        if (key.first == Mono{1, 1, 0, 0} && key.second == Mono{1, 1, 0, 0}) c2 = coeff;
    CHECK(c2 == Scalar(2) * A);
}

TEST_CASE("kernel reproduces point evaluation") {
    for (const Character& chi : {Character::lambda_alpha(), Character::lambda_one()}) {
        CheckReport r = check_reproducing(chi, 4, ExecMode::Serial);
        std::string first = r.failures.empty() ? std::string() : r.failures.front();
        INFO(first);
        CHECK(r.pass);
    }
    // spot values: <z1, K_1> = w1; <1, K_0> = 1; <z1 z3, K_2> = w1 w3
    Character chi = Character::lambda_alpha();
    CHECK(pair_against_kernel(chi, SuperPoly(Scalar(1)), kernel_component(chi, 0)) == SuperPoly(Scalar(1)));
    CHECK(pair_against_kernel(chi, SuperPoly::gen(1), kernel_component(chi, 1)) == SuperPoly::gen(1));
    SuperPoly z1z3 = mono(1, 0, 1, 0);
    CHECK(reduce_mod_I(chi, pair_against_kernel(chi, z1z3, kernel_component(chi, 2))) == z1z3);
}

TEST_CASE("kernel poles at excluded parameters") {
    Character bad = Character::lambda_alpha(Scalar(2));
    CHECK_THROWS_AS(kernel_component(bad, 3), parameter_error);
    CHECK_NOTHROW(kernel_component(Character::lambda_alpha(Scalar(rat(1, 2))), 3));
}

TEST_CASE("pairing at alpha = 0 is degenerate") {
    // recorded evidence: the gram kernel is nonzero at alpha = 0
    Character chi = Character::lambda_alpha(Scalar(0));
    GramMatrix g = gram(chi, 1, ExecMode::Serial);
    CHECK(g.degenerate);
}
