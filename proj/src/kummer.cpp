#include "d21a/kummer.hpp"

#include "d21a/errors.hpp"

namespace d21a {

namespace {

Scalar binom_scalar(unsigned n, unsigned k) {
    Rat acc(1);
    for (unsigned j = 1; j <= k; ++j) acc *= Rat(static_cast<long>(n - k + j), static_cast<long>(j));
    return Scalar(acc);
}

// Dense univariate polynomials over Scalar, used for the recurrence checks.
using UniPoly = std::vector<Scalar>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) r[j] += b[j];
    uni_trim(r);
    return r;
}

UniPoly uni_scale(const UniPoly& a, const Scalar& c) {
    UniPoly r = a;
    for (auto& x : r) x *= c;
    uni_trim(r);
    return r;
}

UniPoly uni_shift_x(const UniPoly& a) { // multiply by x
    UniPoly r(a.size() + 1);
    for (std::size_t j = 0; j < a.size(); ++j) r[j + 1] = a[j];
    uni_trim(r);
    return r;
}

UniPoly uni_deriv(const UniPoly& a) {
    if (a.empty()) return {};
    UniPoly r(a.size() - 1);
    for (std::size_t j = 1; j < a.size(); ++j) r[j - 1] = a[j] * Scalar(static_cast<long>(j));
    uni_trim(r);
    return r;
}

bool uni_zero(const UniPoly& a) {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace

KummerPoly::KummerPoly(unsigned k, Scalar b) : k_(k), b_(std::move(b)) {
    coeff_.assign(k + 1, Scalar());
    Scalar shift = -b_ - Scalar(static_cast<long>(k)) + Scalar(1);
    for (unsigned i = 0; i <= k; ++i) {
        Scalar c = pochhammer(shift, i) * pochhammer(Scalar(-static_cast<long>(k)), i) /
                   factorial_scalar(i) * Scalar(4).pow(k - i);
        if (i % 2) c = -c;
        coeff_[k - i] = std::move(c);
    }
}

KummerPoly KummerPoly::derivative() const {
    KummerPoly d;
    d.k_ = k_ > 0 ? k_ - 1 : 0;
    d.b_ = b_;
    d.coeff_.assign(coeff_.size() > 1 ? coeff_.size() - 1 : 1, Scalar());
    for (std::size_t j = 1; j < coeff_.size(); ++j)
        d.coeff_[j - 1] = coeff_[j] * Scalar(static_cast<long>(j));
    return d;
}

SuperPoly KummerPoly::to_poly(int var) const {
    SuperPoly p;
    for (std::size_t j = 0; j < coeff_.size(); ++j) {
        if (coeff_[j].is_zero()) continue;
        Mono m;
        if (var == 1)
            m.d1 = static_cast<std::uint32_t>(j);
        else
            m.d2 = static_cast<std::uint32_t>(j);
        p.add_term(m, coeff_[j]);
    }
    return p;
}

namespace {
Scalar branch_bar(const Character& chi) {
    return chi.branch == Branch::LambdaAlpha ? chi.alpha : chi.alpha.inverse();
}
} // namespace

KummerPoly omega(const Character& chi, unsigned k) { return KummerPoly(k, -branch_bar(chi)); }

KummerPoly theta(const Character& chi, unsigned k) {
    return KummerPoly(k, Scalar(1) - branch_bar(chi));
}

CheckReport check_kummer_ode(const Character& chi, unsigned max_k) {
    CheckReport report("kummer-ode");
    for (unsigned k = 0; k <= max_k; ++k) {
        for (bool odd_family : {false, true}) {
            KummerPoly u = odd_family ? theta(chi, k) : omega(chi, k);
            UniPoly up(u.coeffs());
            // x u'' + (b - 4x) u' + 4k u = 0
            UniPoly lhs = uni_shift_x(uni_deriv(uni_deriv(up)));
            lhs = uni_add(lhs, uni_scale(uni_deriv(up), u.b()));
            lhs = uni_add(lhs, uni_scale(uni_shift_x(uni_deriv(up)), Scalar(-4)));
            lhs = uni_add(lhs, uni_scale(up, Scalar(4 * static_cast<long>(k))));
            if (!uni_zero(lhs))
                report.fail(std::string(odd_family ? "theta" : "omega") + " fails its equation at k=" +
                            std::to_string(k));
        }
    }
    return report;
}

CheckReport check_recurrences(const Character& chi, unsigned max_k) {
    CheckReport report("kummer-recurrences");
    Scalar bar = branch_bar(chi);

    // closed-form spot values pin the defining sum
    {
        KummerPoly o1 = omega(chi, 1);
        if (o1.coeff(0) != bar || o1.coeff(1) != Scalar(4)) report.fail("omega_1 deviates from 4x + alpha");
        KummerPoly o2 = omega(chi, 2);
        bool ok = o2.coeff(2) == Scalar(16) && o2.coeff(1) == Scalar(8) * (bar - Scalar(1)) &&
                  o2.coeff(0) == bar * (bar - Scalar(1));
        if (!ok) report.fail("omega_2 deviates from 16x^2 + 8(alpha-1)x + alpha(alpha-1)");
    }

    std::vector<KummerPoly> om;
    for (unsigned k = 0; k <= max_k + 1; ++k) om.push_back(omega(chi, k));

    for (unsigned k = 1; k <= max_k; ++k) {
        Scalar kk(static_cast<long>(k));
        // omega_k = (4x + bar - k + 1) omega_{k-1} - x omega_{k-1}'
        UniPoly prev(om[k - 1].coeffs());
        UniPoly lhs(om[k].coeffs());
        UniPoly rhs = uni_add(uni_scale(uni_shift_x(prev), Scalar(4)),
                              uni_scale(prev, bar - kk + Scalar(1)));
        rhs = uni_add(rhs, uni_scale(uni_shift_x(uni_deriv(prev)), Scalar(-1)));
        if (!uni_zero(uni_add(lhs, uni_scale(rhs, Scalar(-1)))))
            report.fail("first differential recurrence fails at k=" + std::to_string(k));

        // k(k-1-bar) omega_{k-1} = -k omega_k + x omega_k'   (descending form)
        UniPoly cur(om[k].coeffs());
        UniPoly lhs2 = uni_scale(prev, kk * (kk - Scalar(1) - bar));
        UniPoly rhs2 = uni_add(uni_scale(cur, -kk), uni_shift_x(uni_deriv(cur)));
        if (!uni_zero(uni_add(lhs2, uni_scale(rhs2, Scalar(-1)))))
            report.fail("second differential recurrence fails at k=" + std::to_string(k));

        // omega_{k+1} + (2k - bar - 4x) omega_k - k(bar - k + 1) omega_{k-1} = 0
        UniPoly three = uni_add(UniPoly(om[k + 1].coeffs()),
                                uni_add(uni_scale(cur, Scalar(2) * kk - bar),
                                        uni_scale(uni_shift_x(cur), Scalar(-4))));
        three = uni_add(three, uni_scale(prev, -kk * (bar - kk + Scalar(1))));
        if (!uni_zero(three)) report.fail("three-term recurrence fails at k=" + std::to_string(k));

        // the same relations for U(-k, -bar, y) with y = 4x: coefficient of y^j is
        // coeff(x^j) / 4^j
        UniPoly uk(om[k].coeffs()), ukm(om[k - 1].coeffs()), ukp(om[k + 1].coeffs());
        for (std::size_t j = 0; j < uk.size(); ++j) uk[j] /= Scalar(4).pow(static_cast<unsigned>(j));
        for (std::size_t j = 0; j < ukm.size(); ++j) ukm[j] /= Scalar(4).pow(static_cast<unsigned>(j));
        for (std::size_t j = 0; j < ukp.size(); ++j) ukp[j] /= Scalar(4).pow(static_cast<unsigned>(j));
        // y U' = (y + bar - k) U - U_{k+1}
        {
            UniPoly lhs3 = uni_shift_x(uni_deriv(uk));
            UniPoly rhs3 = uni_add(uni_shift_x(uk), uni_scale(uk, bar - kk));
            rhs3 = uni_add(rhs3, uni_scale(ukp, Scalar(-1)));
            if (!uni_zero(uni_add(lhs3, uni_scale(rhs3, Scalar(-1)))))
                report.fail("ascending derivative relation fails at k=" + std::to_string(k));
        }
        // y U' = k U - k(bar - k + 1) U_{k-1}
        {
            UniPoly lhs3 = uni_shift_x(uni_deriv(uk));
            UniPoly rhs3 = uni_add(uni_scale(uk, kk), uni_scale(ukm, -kk * (bar - kk + Scalar(1))));
            if (!uni_zero(uni_add(lhs3, uni_scale(rhs3, Scalar(-1)))))
                report.fail("descending derivative relation fails at k=" + std::to_string(k));
        }
        // (y - 2k + bar) U = U_{k+1} - k(bar - k + 1) U_{k-1}
        {
            UniPoly lhs3 = uni_add(uni_shift_x(uk), uni_scale(uk, bar - Scalar(2) * kk));
            UniPoly rhs3 = uni_add(ukp, uni_scale(ukm, -kk * (bar - kk + Scalar(1))));
            if (!uni_zero(uni_add(lhs3, uni_scale(rhs3, Scalar(-1)))))
                report.fail("three-term relation in y fails at k=" + std::to_string(k));
        }
    }
    report.info["max_k"] = std::to_string(max_k);
    return report;
}

CheckReport check_lemsum(unsigned max_j, unsigned max_k, unsigned series_degree) {
    CheckReport report("euler-derivative-series");
    Scalar a = Scalar::param();

    for (unsigned k = 0; k <= max_k; ++k) {
        // exp(-x) x^k as a series, carried far enough for max_j derivative losses
        unsigned work = series_degree + max_j + 1;
        UniPoly series(work + 1);
        for (unsigned l = 0; k + l <= work; ++l) {
            Scalar c = Scalar(1) / factorial_scalar(l);
            if (l % 2) c = -c;
            series[k + l] = c;
        }
        UniPoly lhs = series;
        for (unsigned j = 0; j <= max_j; ++j) {
            if (j > 0) {
                // one application of (-alpha + E) d/dx
                lhs = uni_deriv(lhs);
                for (std::size_t n = 0; n < lhs.size(); ++n)
                    lhs[n] *= (-a + Scalar(static_cast<long>(n)));
            }
            // right-hand side: sum over l and i of
            //   binom(j,i) (-1)^{j-i} (-alpha + l + 2k - i)_{j-i} (-x)^l / l! * ((-alpha+E) d/dx)^i x^k
            UniPoly rhs(series_degree + 1);
            for (unsigned i = 0; i <= j; ++i) {
                UniPoly inner(k + 1);
                inner[k] = Scalar(1);
                for (unsigned rep = 0; rep < i; ++rep) {
                    inner = uni_deriv(inner);
                    for (std::size_t n = 0; n < inner.size(); ++n)
                        inner[n] *= (-a + Scalar(static_cast<long>(n)));
                }
                Scalar base = binom_scalar(j, i);
                if ((j - i) % 2) base = -base;
                for (unsigned l = 0; l <= series_degree; ++l) {
                    Scalar lc = base *
                                pochhammer(-a + Scalar(static_cast<long>(l + 2 * k) - static_cast<long>(i)),
                                           j - i) /
                                factorial_scalar(l);
                    if (l % 2) lc = -lc;
                    for (std::size_t n = 0; n < inner.size(); ++n) {
                        if (l + n > series_degree) break;
                        rhs[l + n] += lc * inner[n];
                    }
                }
            }
            for (unsigned n = 0; n <= series_degree; ++n) {
                Scalar lc = n < lhs.size() ? lhs[n] : Scalar();
                if (lc != rhs[n]) {
                    report.fail("series identity fails at j=" + std::to_string(j) + ", k=" + std::to_string(k) +
                                ", degree " + std::to_string(n));
                    break;
                }
            }
        }
    }
    report.info["truncation_degree"] = std::to_string(series_degree);
    return report;
}

} // namespace d21a
