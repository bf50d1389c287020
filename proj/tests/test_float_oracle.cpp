// High-precision floating cross-checks of the exact closed forms, kept out of
// the core: the renormalized Bessel series coefficients against direct Gamma
// evaluation, and the Kummer polynomials against their hypergeometric series.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include "d21a/kummer.hpp"
#include "d21a/pairing.hpp"

using namespace d21a;

namespace {

constexpr mpfr_prec_t kPrec = 256;

struct Real {
    mpfr_t v;
    Real() { mpfr_init2(v, kPrec); }
    explicit Real(double d) {
        mpfr_init2(v, kPrec);
        mpfr_set_d(v, d, MPFR_RNDN);
    }
    Real(const Real& o) {
        mpfr_init2(v, kPrec);
        mpfr_set(v, o.v, MPFR_RNDN);
    }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v, o.v, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v); }
};

Real from_rat(const Rat& q) {
    Real r;
    mpfr_set_q(r.v, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real eval_scalar(const Scalar& s, const Rat& alpha0) {
    GaussianRational g = s.eval_at(alpha0);
    REQUIRE(g.is_real());
    return from_rat(g.re());
}

bool close_rel(const Real& a, const Real& b, double rel = 1e-30) {
    Real diff, scale;
    mpfr_sub(diff.v, a.v, b.v, MPFR_RNDN);
    mpfr_abs(diff.v, diff.v, MPFR_RNDN);
    mpfr_abs(scale.v, a.v, MPFR_RNDN);
    if (mpfr_cmp_d(scale.v, 1.0) < 0) mpfr_set_d(scale.v, 1.0, MPFR_RNDN);
    mpfr_mul_d(scale.v, scale.v, rel, MPFR_RNDN);
    return mpfr_cmp(diff.v, scale.v) <= 0;
}

} // namespace

TEST_CASE("kernel coefficients against direct gamma evaluation") {
    // Gamma(-alpha) / (k! Gamma(k - alpha)) must equal 1 / (k! (-alpha)_k)
    Character chi = Character::lambda_alpha(Scalar(rat(1, 2)));
    Rat alpha0 = rat(1, 2);
    for (unsigned k = 0; k <= 10; ++k) {
        Real g_top, g_bot, lhs;
        Real ma = from_rat(-alpha0);
        mpfr_gamma(g_top.v, ma.v, MPFR_RNDN);
        Real karg = from_rat(Rat(static_cast<long>(k)) - alpha0);
        mpfr_gamma(g_bot.v, karg.v, MPFR_RNDN);
        mpfr_div(lhs.v, g_top.v, g_bot.v, MPFR_RNDN);
        Real kfact = from_rat(Rat(1));
        for (unsigned j = 2; j <= k; ++j) mpfr_mul_ui(kfact.v, kfact.v, j, MPFR_RNDN);
        mpfr_div(lhs.v, lhs.v, kfact.v, MPFR_RNDN);

        Scalar exact = (factorial_scalar(k) * pochhammer(-Scalar::param(), k)).inverse();
        CHECK(close_rel(lhs, eval_scalar(exact, alpha0)));
    }
}

TEST_CASE("renormalized bessel series sums against the kernel coefficients") {
    // Gamma(-alpha) I~_{-1-alpha}(2 sqrt t) = sum_k t^k / (k! (-alpha)_k): compare a
    // partial sum of the defining series of I_gamma with the exact coefficients.
    Rat alpha0 = rat(1, 2);
    double t = 0.35;
    // direct series: sum_k Gamma(-a)/ (k! Gamma(k - a)) t^k
    Real direct(0.0);
    Real ma = from_rat(-alpha0);
    for (unsigned k = 0; k < 40; ++k) {
        Real term, g_top, g_bot;
        mpfr_gamma(g_top.v, ma.v, MPFR_RNDN);
        Real karg = from_rat(Rat(static_cast<long>(k)) - alpha0);
        mpfr_gamma(g_bot.v, karg.v, MPFR_RNDN);
        mpfr_div(term.v, g_top.v, g_bot.v, MPFR_RNDN);
        for (unsigned j = 1; j <= k; ++j) mpfr_div_ui(term.v, term.v, j, MPFR_RNDN);
        Real tp(1.0);
        for (unsigned j = 0; j < k; ++j) mpfr_mul_d(tp.v, tp.v, t, MPFR_RNDN);
        mpfr_mul(term.v, term.v, tp.v, MPFR_RNDN);
        mpfr_add(direct.v, direct.v, term.v, MPFR_RNDN);
    }
    // exact coefficients summed the same way
    Real exact(0.0);
    for (unsigned k = 0; k < 40; ++k) {
        Scalar c = (factorial_scalar(k) * pochhammer(-Scalar::param(), k)).inverse();
        Real term = eval_scalar(c, alpha0);
        Real tp(1.0);
        for (unsigned j = 0; j < k; ++j) mpfr_mul_d(tp.v, tp.v, t, MPFR_RNDN);
        mpfr_mul(term.v, term.v, tp.v, MPFR_RNDN);
        mpfr_add(exact.v, exact.v, term.v, MPFR_RNDN);
    }
    CHECK(close_rel(direct, exact));
}

TEST_CASE("kummer polynomial against its hypergeometric series") {
    // U(-k, b, c) = c^{-(-k)} 2F0(-k, 1 - k - b; -1/c) for polynomial cases:
    // evaluate omega_k at rational points and compare with the series.
    Character chi = Character::lambda_alpha(Scalar(rat(1, 2)));
    Rat alpha0 = rat(1, 2);
    for (unsigned k = 1; k <= 6; ++k) {
        KummerPoly om = omega(chi, k);
        Rat x0 = rat(3, 7);
        // exact polynomial value
        Scalar val;
        Scalar xs(x0);
        for (std::size_t j = 0; j < om.coeffs().size(); ++j) val += om.coeff(j) * xs.pow(static_cast<unsigned>(j));
        Real exact = eval_scalar(val, alpha0);
        // series: c^k sum_i (-k)_i (1 - k + alpha)_i / i! (-1/c)^i with c = 4 x0
        Rat c = 4 * x0;
        Real acc(0.0);
        Rat term(1);
        Rat minus_inv_c = Rat(-1) / c;
        Rat poch1(1), poch2(1), fact(1);
        for (unsigned i = 0; i <= k; ++i) {
            if (i > 0) {
                poch1 *= Rat(-static_cast<long>(k)) + Rat(static_cast<long>(i) - 1);
                poch2 *= Rat(1 - static_cast<long>(k)) + alpha0 + Rat(static_cast<long>(i) - 1);
                fact *= static_cast<long>(i);
            }
            Rat contrib = poch1 * poch2 / fact;
            for (unsigned j = 0; j < i; ++j) contrib *= minus_inv_c;
            term = contrib;
            Real tr = from_rat(term);
            mpfr_add(acc.v, acc.v, tr.v, MPFR_RNDN);
        }
        Real ck(1.0);
        Real cr = from_rat(c);
        for (unsigned j = 0; j < k; ++j) mpfr_mul(ck.v, ck.v, cr.v, MPFR_RNDN);
        mpfr_mul(acc.v, acc.v, ck.v, MPFR_RNDN);
        CHECK(close_rel(acc, exact));
    }
}
