#include "d21a/pairing.hpp"

#include <array>
#include <random>

#include "d21a/errors.hpp"

namespace d21a {

namespace {

std::array<DiffOp, 5> bessel_ops(const Character& chi) {
    return {DiffOp(), bessel(chi, 1), bessel(chi, 2), bessel(chi, 3), bessel(chi, 4)};
}

SuperPoly apply_bessel_monomial(const std::array<DiffOp, 5>& b, const Mono& m, SuperPoly target) {
    // p(B) for p = z1^d1 z2^d2 z3^e3 z4^e4: rightmost factor acts first.
    if (m.e4) target = b[4].apply(target);
    if (!target.is_zero() && m.e3) target = b[3].apply(target);
    for (std::uint32_t j = 0; j < m.d2 && !target.is_zero(); ++j) target = b[2].apply(target);
    for (std::uint32_t j = 0; j < m.d1 && !target.is_zero(); ++j) target = b[1].apply(target);
    return target;
}

} // namespace

Scalar bessel_fischer(const Character& chi, const SuperPoly& p, const SuperPoly& q) {
    std::array<DiffOp, 5> b = bessel_ops(chi);
    SuperPoly qbar = q.conj();
    Scalar out;
    for (const auto& [m, c] : p.terms()) {
        SuperPoly img = apply_bessel_monomial(b, m, qbar);
        if (img.is_zero()) continue;
        out += c * img.constant_term();
    }
    return out;
}

GramMatrix gram(const Character& chi, unsigned k, ExecMode mode) {
    chi.require_quotient();
    std::vector<SuperPoly> basis = normal_basis(chi.branch, k);
    std::size_t n = basis.size();
    GramMatrix g;
    g.degree = k;
    g.entries = mat_zero(n, n);
    std::vector<Scalar> slots(n * n);
    sweep_indices(n * n, mode, [&](std::size_t idx) {
        slots[idx] = bessel_fischer(chi, basis[idx / n], basis[idx % n]);
    });
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.entries[i][j] = slots[i * n + j];
    g.determinant = det(g.entries);
    g.degenerate = g.determinant.is_zero();
    return g;
}

Mat expected_gram(const Character& chi, unsigned k) {
    chi.require_quotient();
    bool alpha_branch = chi.branch == Branch::LambdaAlpha;
    Scalar bar = alpha_branch ? chi.alpha : chi.alpha.inverse();
    if (k == 0) {
        Mat m = mat_zero(1, 1);
        m[0][0] = Scalar(1);
        return m;
    }
    Mat m = mat_zero(4, 4);
    m[0][0] = factorial_scalar(k) * pochhammer(-bar, k);
    m[1][1] = -factorial_scalar(k - 1) * pochhammer(-bar, k - 1);
    // the odd-odd block; for lambda = 1 the sign is forced by B(z3) z4 = -2 lambda
    Scalar odd = Scalar(2) * factorial_scalar(k - 1) * pochhammer(-bar, k);
    if (!alpha_branch) odd = chi.alpha * odd;
    m[2][3] = odd;
    m[3][2] = -odd;
    return m;
}

CheckReport check_gram_closed_forms(const Character& chi, unsigned max_k, ExecMode mode) {
    CheckReport report("gram-closed-forms");
    for (unsigned k = 0; k <= max_k; ++k) {
        GramMatrix g = gram(chi, k, mode);
        Mat want = expected_gram(chi, k);
        if (g.entries != want) report.fail("gram matrix deviates from the closed form at degree " + std::to_string(k));
    }
    return report;
}

CheckReport check_superhermitian(const Character& chi, unsigned degree_bound, ExecMode mode) {
    CheckReport report("superhermitian");
    std::vector<SuperPoly> all;
    for (unsigned k = 0; k <= degree_bound; ++k)
        for (const SuperPoly& b : normal_basis(chi.branch, k)) all.push_back(b);
    std::size_t n = all.size();
    sweep_collect(report, n * n, mode, [&](std::size_t idx) -> std::string {
        const SuperPoly& p = all[idx / n];
        const SuperPoly& q = all[idx % n];
        Scalar lhs = bessel_fischer(chi, p, q);
        Scalar rhs = bessel_fischer(chi, q, p).conj();
        if (p.parity() == 1 && q.parity() == 1) rhs = -rhs;
        if (lhs != rhs) return "superhermitian identity fails on a degree pair (" +
                               std::to_string(p.degree()) + ", " + std::to_string(q.degree()) + ")";
        return "";
    });
    return report;
}

CheckReport check_nondegenerate(const Character& chi, unsigned degree_bound, const Rat& alpha0) {
    CheckReport report("nondegenerate(alpha=" + rat_to_string(alpha0) + ")");
    Character at = chi.branch == Branch::LambdaAlpha ? Character::lambda_alpha(Scalar(alpha0))
                                                     : Character::lambda_one(Scalar(alpha0));
    for (unsigned k = 0; k <= degree_bound; ++k) {
        GramMatrix g = gram(at, k, ExecMode::Serial);
        if (g.degenerate)
            report.fail("gram matrix is singular at degree " + std::to_string(k));
    }
    return report;
}

CheckReport check_adjunction(const Character& chi, unsigned trials, unsigned seed) {
    CheckReport report("multiplication-bessel-adjunction");
    std::mt19937 rng(seed);
    auto random_term = [&](int parity) {
        Mono m;
        m.d1 = rng() % 3;
        m.d2 = rng() % 2;
        if (parity) {
            m.e3 = rng() % 2;
            m.e4 = m.e3 ? 0 : 1;
        } else if (rng() % 2) {
            m.e3 = m.e4 = 1;
        }
        long num = static_cast<long>(rng() % 7) - 3;
        return SuperPoly::monomial(m, Scalar(num == 0 ? 1 : num));
    };
    for (unsigned t = 0; t < trials; ++t) {
        int pp = static_cast<int>(rng() % 2);
        SuperPoly p = random_term(pp) + random_term(pp);
        SuperPoly q = random_term(rng() % 2) + random_term(rng() % 2);
        for (int i = 1; i <= 4; ++i) {
            Scalar lhs = bessel_fischer(chi, SuperPoly::gen(i) * p, q);
            Scalar rhs = bessel_fischer(chi, p, bessel(chi, i).apply(q));
            if (i >= 3 && pp == 1) rhs = -rhs;
            if (lhs != rhs) {
                report.fail("adjunction fails for generator " + std::to_string(i));
                return report;
            }
        }
    }
    return report;
}

CheckReport check_pairing_descends(const Character& chi, unsigned degree_bound, ExecMode mode) {
    CheckReport report("pairing-descends");
    std::vector<SuperPoly> span;
    for (const SuperPoly& v : v_lambda_generators(chi))
        for (unsigned d1 = 0; d1 + 2 <= degree_bound; ++d1)
            for (unsigned d2 = 0; d1 + d2 + 2 <= degree_bound; ++d2)
                for (unsigned e3 = 0; e3 <= 1; ++e3)
                    for (unsigned e4 = 0; e4 <= 1; ++e4) {
                        if (d1 + d2 + e3 + e4 + 2 > degree_bound) continue;
                        Mono m{d1, d2, static_cast<std::uint8_t>(e3), static_cast<std::uint8_t>(e4)};
                        SuperPoly el = SuperPoly::monomial(m) * v;
                        if (!el.is_zero()) span.push_back(el);
                    }
    std::vector<SuperPoly> basis;
    for (unsigned k = 0; k <= degree_bound; ++k)
        for (const SuperPoly& b : normal_basis(chi.branch, k)) basis.push_back(b);

    sweep_collect(report, span.size() * basis.size(), mode, [&](std::size_t idx) -> std::string {
        const SuperPoly& c = span[idx / basis.size()];
        const SuperPoly& p = basis[idx % basis.size()];
        if (!bessel_fischer(chi, c, p).is_zero()) return "submodule element pairs nontrivially on the left";
        if (!bessel_fischer(chi, p, c).is_zero()) return "submodule element pairs nontrivially on the right";
        return "";
    });
    report.info["spanning_elements"] = std::to_string(span.size());
    return report;
}

CheckReport check_degree_orthogonality(const Character& chi, unsigned degree_bound) {
    CheckReport report("degree-orthogonality");
    for (unsigned k = 0; k <= degree_bound; ++k)
        for (unsigned l = 0; l <= degree_bound; ++l) {
            if (k == l) continue;
            for (const SuperPoly& p : normal_basis(chi.branch, k))
                for (const SuperPoly& q : normal_basis(chi.branch, l))
                    if (!bessel_fischer(chi, p, q).is_zero())
                        report.fail("degrees " + std::to_string(k) + " and " + std::to_string(l) + " pair nontrivially");
        }
    return report;
}

CheckReport check_skew_supersymmetry(const Character& chi, unsigned degree_bound, ExecMode mode) {
    CheckReport report("skew-supersymmetry");
    ModelOps ops(chi);
    std::vector<SuperPoly> all;
    for (unsigned k = 0; k <= degree_bound; ++k)
        for (const SuperPoly& b : normal_basis(chi.branch, k)) all.push_back(b);
    std::size_t n = all.size();
    report.info["pairs"] = std::to_string(n * n * tkk::DIM);
    sweep_collect(report, n * n * tkk::DIM, mode, [&](std::size_t idx) -> std::string {
        std::size_t x = idx / (n * n);
        const SuperPoly& p = all[(idx / n) % n];
        const SuperPoly& q = all[idx % n];
        SuperPoly xp = reduce_mod_I(chi, ops.rho[x].apply(p));
        SuperPoly xq = reduce_mod_I(chi, ops.rho[x].apply(q));
        Scalar lhs = bessel_fischer(chi, xp, q);
        Scalar rhs = bessel_fischer(chi, p, xq);
        int sign = (ops.table.info(x).parity && p.parity() == 1) ? 1 : -1;
        Scalar want = sign < 0 ? -rhs : rhs;
        if (lhs != want)
            return "skew identity fails for " + ops.table.info(x).name + " on degrees (" +
                   std::to_string(p.degree()) + ", " + std::to_string(q.degree()) + ")";
        return "";
    });
    return report;
}

CheckReport check_lem_eulerish(const Character& chi, unsigned max_k) {
    CheckReport report("euler-pairing-identities");
    if (chi.branch != Branch::LambdaAlpha) {
        report.fail("identities are stated for the lambda = alpha branch");
        return report;
    }
    // partner index: z^1..z^4 = z1, z2, z4, z3
    auto dual = [](int i) { return i <= 2 ? i : (i == 3 ? 4 : 3); };
    for (unsigned k = 1; k <= max_k; ++k) {
        std::vector<SuperPoly> basis = normal_basis(chi.branch, k);
        auto coeff_of = [&](const SuperPoly& p, int slot1to4) {
            return p.coeff(basis[static_cast<std::size_t>(slot1to4 - 1)].terms().begin()->first);
        };
        Scalar g_top = bessel_fischer(chi, basis[0], basis[0]);   // <z1^k, z1^k>
        Scalar g_z2 = bessel_fischer(chi, basis[1], basis[1]);    // <z1^{k-1}z2, same>
        Scalar g_odd = bessel_fischer(chi, basis[2], basis[3]);   // <z1^{k-1}z3, z1^{k-1}z4>
        for (const SuperPoly& p : basis)
            for (const SuperPoly& q : basis) {
                Scalar pq = bessel_fischer(chi, p, q);
                // line 1: i in 1..4, j != 1
                for (int i = 1; i <= 4; ++i)
                    for (int j = 2; j <= 4; ++j) {
                        SuperPoly moved = SuperPoly::gen(i) * partial(j, p);
                        Scalar lhs = bessel_fischer(chi, moved, q);
                        SuperPoly pair_i = SuperPoly::monomial(Mono{k - 1, 0, 0, 0}) * SuperPoly::gen(i);
                        SuperPoly pair_dual = SuperPoly::monomial(Mono{k - 1, 0, 0, 0}) * SuperPoly::gen(dual(i));
                        Scalar rhs = coeff_of(p, j) * coeff_of(q, dual(i)).conj() *
                                     bessel_fischer(chi, reduce_mod_I(chi, pair_i), reduce_mod_I(chi, pair_dual));
                        if (lhs != rhs) report.fail("moved-variable identity fails at k=" + std::to_string(k));
                    }
                Scalar kk(static_cast<long>(k));
                // line 2
                {
                    Scalar lhs = bessel_fischer(chi, SuperPoly::gen(1) * partial(1, p), q);
                    Scalar rhs = (kk - Scalar(1)) * pq + coeff_of(p, 1) * coeff_of(q, 1).conj() * g_top;
                    if (lhs != rhs) report.fail("euler identity fails at k=" + std::to_string(k));
                }
                // line 3
                {
                    Scalar lhs = bessel_fischer(chi, SuperPoly::gen(2) * partial(1, p), q);
                    Scalar rhs = kk * coeff_of(p, 1) * coeff_of(q, 2).conj() * g_z2;
                    if (lhs != rhs) report.fail("z2-shift identity fails at k=" + std::to_string(k));
                }
                // lines 4 and 5
                {
                    Scalar lhs = bessel_fischer(chi, SuperPoly::gen(3) * partial(1, p), q);
                    Scalar rhs = kk * coeff_of(p, 1) * coeff_of(q, 4).conj() * g_odd -
                                 Scalar(2) * (kk - Scalar(1)) * coeff_of(p, 4) * coeff_of(q, 2).conj() * g_z2;
                    if (lhs != rhs) report.fail("z3-shift identity fails at k=" + std::to_string(k));
                }
                {
                    Scalar lhs = bessel_fischer(chi, SuperPoly::gen(4) * partial(1, p), q);
                    Scalar rhs = -kk * coeff_of(p, 1) * coeff_of(q, 3).conj() * g_odd +
                                 Scalar(2) * (kk - Scalar(1)) * coeff_of(p, 3) * coeff_of(q, 2).conj() * g_z2;
                    if (lhs != rhs) report.fail("z4-shift identity fails at k=" + std::to_string(k));
                }
            }
    }
    return report;
}

// ---- BiPoly ----

BiPoly BiPoly::term(const Mono& zm, const Mono& wm, Scalar c) {
    BiPoly p;
    p.add_term(zm, wm, c);
    return p;
}

void BiPoly::add_term(const Mono& zm, const Mono& wm, const Scalar& c) {
    if (c.is_zero()) return;
    Key key{zm, wm};
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly operator+(const BiPoly& f, const BiPoly& g) {
    BiPoly r = f;
    for (const auto& [key, c] : g.terms_) r.add_term(key.first, key.second, c);
    return r;
}

BiPoly operator*(const BiPoly& f, const BiPoly& g) {
    BiPoly r;
    for (const auto& [k1, c1] : f.terms_)
        for (const auto& [k2, c2] : g.terms_) {
            Mono zm, wm;
            int sz, sw;
            if (!mono_mul(k1.first, k2.first, zm, sz)) continue;
            if (!mono_mul(k1.second, k2.second, wm, sw)) continue;
            // w part of the first factor passes the z part of the second
            int cross = (k1.second.parity() && k2.first.parity()) ? -1 : 1;
            Scalar c = c1 * c2;
            if (sz * sw * cross < 0) c = -c;
            r.add_term(zm, wm, c);
        }
    return r;
}

BiPoly BiPoly::scaled(const Scalar& c) const {
    BiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [key, t] : terms_) r.add_term(key.first, key.second, t * c);
    return r;
}

BiPoly BiPoly::conj() const {
    BiPoly r;
    for (const auto& [key, t] : terms_) r.terms_[key] = t.conj();
    return r;
}

BiPoly BiPoly::pow(unsigned k) const {
    BiPoly acc(Scalar(1));
    for (unsigned j = 0; j < k; ++j) acc = acc * (*this);
    return acc;
}

BiPoly BiPoly::apply_z(const DiffOp& op) const {
    // The z part sits to the left, so operators act on it with no extra sign.
    BiPoly out;
    for (const auto& [key, c] : terms_) {
        SuperPoly img = op.apply(SuperPoly::monomial(key.first, c));
        for (const auto& [zm, cc] : img.terms()) out.add_term(zm, key.second, cc);
    }
    return out;
}

SuperPoly BiPoly::at_z_zero() const {
    SuperPoly out;
    for (const auto& [key, c] : terms_)
        if (key.first.is_one()) out.add_term(key.second, c);
    return out;
}

BiPoly zw_pairing(const Scalar& alpha) {
    BiPoly p;
    Scalar half(Rat(1, 2));
    p.add_term(Mono{1, 0, 0, 0}, Mono{1, 0, 0, 0}, Scalar(1));
    p.add_term(Mono{0, 1, 0, 0}, Mono{0, 1, 0, 0}, alpha);
    p.add_term(Mono{0, 0, 1, 0}, Mono{0, 0, 0, 1}, -half);
    p.add_term(Mono{0, 0, 0, 1}, Mono{0, 0, 1, 0}, half);
    return p;
}

BiPoly kernel_component(const Character& chi, unsigned k) {
    chi.require_quotient();
    bool alpha_branch = chi.branch == Branch::LambdaAlpha;
    Scalar bar = alpha_branch ? chi.alpha : chi.alpha.inverse();
    Scalar poch = pochhammer(bar - Scalar(static_cast<long>(k)) + Scalar(1), k);
    if (poch.is_zero())
        throw parameter_error("kernel component " + std::to_string(k) + " is excluded at this alpha");
    Scalar coeff = Scalar((k % 2) ? -1 : 1) / factorial_scalar(k) / poch;
    if (!alpha_branch) coeff = coeff / chi.alpha.pow(k);
    return zw_pairing(chi.alpha).pow(k).scaled(coeff);
}

SuperPoly pair_against_kernel(const Character& chi, const SuperPoly& p, const BiPoly& kernel) {
    std::array<DiffOp, 5> b = bessel_ops(chi);
    BiPoly target = kernel.conj();
    SuperPoly out;
    for (const auto& [m, c] : p.terms()) {
        BiPoly img = target;
        if (m.e4) img = img.apply_z(b[4]);
        if (m.e3) img = img.apply_z(b[3]);
        for (std::uint32_t j = 0; j < m.d2; ++j) img = img.apply_z(b[2]);
        for (std::uint32_t j = 0; j < m.d1; ++j) img = img.apply_z(b[1]);
        SuperPoly w = img.at_z_zero();
        out += w.scaled(c);
    }
    return out;
}

CheckReport check_reproducing(const Character& chi, unsigned max_k, ExecMode mode) {
    CheckReport report("reproducing-kernel");
    bool alpha_branch = chi.branch == Branch::LambdaAlpha;
    Scalar bar = alpha_branch ? chi.alpha : chi.alpha.inverse();
    // Pochhammer form of the renormalized series coefficients:
    // (-1)^k (bar - k + 1)_k = (-bar)_k
    for (unsigned k = 0; k <= max_k; ++k) {
        Scalar lhs = pochhammer(bar - Scalar(static_cast<long>(k)) + Scalar(1), k);
        if (k % 2) lhs = -lhs;
        if (lhs != pochhammer(-bar, k)) report.fail("series coefficient form fails at k=" + std::to_string(k));
    }

    struct Item {
        SuperPoly p;
        unsigned k;
    };
    std::vector<Item> items;
    for (unsigned k = 0; k <= max_k; ++k)
        for (const SuperPoly& b : normal_basis(chi.branch, k)) items.push_back({b, k});
    std::vector<BiPoly> kernels;
    for (unsigned k = 0; k <= max_k; ++k) kernels.push_back(kernel_component(chi, k));

    sweep_collect(report, items.size(), mode, [&](std::size_t idx) -> std::string {
        const Item& item = items[idx];
        SuperPoly got = reduce_mod_I(chi, pair_against_kernel(chi, item.p, kernels[item.k]));
        if (got != item.p)
            return "kernel does not reproduce a degree-" + std::to_string(item.k) + " basis element";
        return "";
    });
    return report;
}

} // namespace d21a
