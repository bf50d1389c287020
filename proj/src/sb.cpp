#include "d21a/sb.hpp"

#include "d21a/errors.hpp"

namespace d21a {

namespace {

const Scalar kI = Scalar::i();
const Scalar kHalf(Rat(1, 2));

Mat ad_of_vector(const StructureTable& t, const Vec& v) {
    std::size_t n = t.dim();
    Mat m = mat_zero(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej(n);
        ej[j] = Scalar(1);
        Vec img = t.bracket_vec(v, ej);
        for (std::size_t r = 0; r < n; ++r) m[r][j] = img[r];
    }
    return m;
}

Mat nilpotent_exp(const Mat& n) {
    std::size_t d = n.size();
    Mat n2 = mat_mul(n, n);
    Mat n3 = mat_mul(n2, n);
    if (!mat_is_zero(n3)) throw structure_error("ad is not three-step nilpotent");
    return mat_add(mat_identity(d), mat_add(n, mat_scaled(n2, kHalf)));
}

int primary_gen(const Character& chi) { return chi.branch == Branch::LambdaAlpha ? 1 : 2; }
int secondary_gen(const Character& chi) { return chi.branch == Branch::LambdaAlpha ? 2 : 1; }

} // namespace

CayleyTransform cayley(const Character& chi) {
    StructureTable t = build_tkk(JordanAlgebra(chi.alpha), chi.d_mode);
    Vec e(tkk::DIM), f(tkk::DIM);
    e[tkk::E1] = e[tkk::E2] = Scalar(1);
    f[tkk::F1] = f[tkk::F2] = Scalar(1);
    Mat ad_e = ad_of_vector(t, e);
    Mat ad_f = ad_of_vector(t, f);
    CayleyTransform c;
    c.forward = mat_mul(nilpotent_exp(mat_scaled(ad_f, kI * kHalf)), nilpotent_exp(mat_scaled(ad_e, kI)));
    c.inverse = mat_mul(nilpotent_exp(mat_scaled(ad_e, -kI)), nilpotent_exp(mat_scaled(ad_f, -kI * kHalf)));
    return c;
}

Mat cayley_closed_form(const Character&) {
    using namespace tkk;
    Mat m = mat_zero(DIM, DIM);
    Scalar quarter(Rat(1, 4));
    for (std::size_t j = 0; j < 4; ++j) {
        // g-minus column: (a/4, i L_a, a)
        m[F1 + j][F1 + j] = quarter;
        m[LE1 + j][F1 + j] = kI * kHalf;
        m[E1 + j][F1 + j] = Scalar(1);
        // L-type structure column 2L_a: (i a/2, 0, -2 i a)
        m[F1 + j][LE1 + j] = kI * kHalf;
        m[E1 + j][LE1 + j] = Scalar(-2) * kI;
        // g-plus column: (a/4, -i L_a, a)
        m[F1 + j][E1 + j] = quarter;
        m[LE1 + j][E1 + j] = -kI * kHalf;
        m[E1 + j][E1 + j] = Scalar(1);
    }
    for (std::size_t slot : ModelOps::k0_slots()) m[slot][slot] = Scalar(1);
    return m;
}

CheckReport check_cayley(const Character& chi) {
    CheckReport report("cayley-transform");
    CayleyTransform c = cayley(chi);
    if (c.forward != cayley_closed_form(chi)) report.fail("series differs from the closed form");
    std::size_t n = tkk::DIM;
    if (mat_mul(c.forward, c.inverse) != mat_identity(n)) report.fail("inverse composition is not the identity");

    ModelOps ops(chi);
    // the compact part maps into the structure algebra: c(a, I, -a) = I + 2 i L_a
    for (const Vec& kb : ops.k_basis()) {
        Vec img = mat_apply(c.forward, kb);
        for (std::size_t j = 0; j < 4; ++j)
            if (!img[tkk::F1 + j].is_zero() || !img[tkk::E1 + j].is_zero()) {
                report.fail("compact element does not land in the structure algebra");
                break;
            }
    }
    // defining twist: rho(X) = pi(c(X)) on every basis element
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei(n);
        ei[i] = Scalar(1);
        if (ops.rho[i] != ops.pi_vec(mat_apply(c.forward, ei)))
            report.fail("twist fails on " + ops.table.info(i).name);
    }
    return report;
}

SuperPoly w_canonicalize(const Character& chi, const ExpPoly& f) {
    chi.require_quotient();
    bool alpha_branch = chi.branch == Branch::LambdaAlpha;
    SuperPoly acc;
    for (const auto& [mu, p] : f.summands()) {
        const Rat& primary = alpha_branch ? mu.first : mu.second;
        const Rat& secondary = alpha_branch ? mu.second : mu.first;
        if (primary != -2)
            throw structure_error("exponential key outside the representable family");
        Rat t = secondary + 2;
        SuperPoly factor(Scalar(1));
        if (t != 0) {
            // exp(t x_s) = 1 + t x_s modulo the square of the secondary variable
            factor.add_term(alpha_branch ? Mono{0, 1, 0, 0} : Mono{1, 0, 0, 0}, Scalar(t));
        }
        acc += reduce_mod_I(chi, p * factor);
    }
    return reduce_mod_I(chi, acc);
}

WElem w_apply(const Character& chi, const DiffOp& op, const WElem& w) {
    ExpPoly f(ExpPoly::Key{rat(-2), rat(-2)}, w.poly);
    ExpPoly img = op.apply_exp(f);
    WElem out;
    out.tag_const = w.tag_const;
    out.tag_mu = w.tag_mu;
    out.poly = w_canonicalize(chi, img);
    return out;
}

WElem c_inverse_vacuum(const Character& chi) {
    chi.require_quotient();
    WElem w;
    w.poly = SuperPoly(Scalar(1));
    return w;
}

CheckReport check_vacuum_line(const Character& chi) {
    CheckReport report("vacuum-line");
    ModelOps ops(chi);
    WElem vac = c_inverse_vacuum(chi);
    std::vector<Vec> kb = ops.k_basis();
    for (std::size_t j = 0; j < kb.size(); ++j) {
        WElem img = w_apply(chi, ops.pi_vec(kb[j]), vac);
        Scalar expected;
        if (j == 0) expected = kI * chi.c1;
        if (j == 1) expected = kI * chi.c2;
        if (img.poly != vac.poly.scaled(expected))
            report.fail("vacuum is not an eigenvector of compact element " + std::to_string(j));
    }
    return report;
}

WElem c_inverse_on_basis(const Character& chi, unsigned k, int slot) {
    chi.require_quotient();
    if (k == 0) {
        if (slot != 0) throw structure_error("level zero has a single basis element");
        return c_inverse_vacuum(chi);
    }
    bool alpha_branch = chi.branch == Branch::LambdaAlpha;
    int main_var = primary_gen(chi);
    Rat m2(-2);
    auto key = [&](const Rat& secondary) {
        return alpha_branch ? ExpPoly::Key{m2, secondary} : ExpPoly::Key{secondary, m2};
    };
    ExpPoly f;
    switch (slot) {
        case 0:
            f.add_summand(key(rat(-2)), omega(chi, k).to_poly(main_var));
            break;
        case 1:
            f.add_summand(key(rat(2)), omega(chi, k - 1).to_poly(main_var));
            break;
        case 2:
        case 3: {
            SuperPoly odd = SuperPoly::gen(slot + 1) * theta(chi, k - 1).to_poly(main_var);
            f.add_summand(key(rat(0)), odd.scaled(Scalar(4)));
            break;
        }
        default: throw structure_error("slot out of range");
    }
    WElem w;
    w.poly = w_canonicalize(chi, f);
    return w;
}

WElem c_inverse_via_ladder(const Character& chi, unsigned k, int slot) {
    ModelOps ops(chi);
    return c_inverse_via_ladder(ops, k, slot);
}

WElem c_inverse_via_ladder(const ModelOps& ops, unsigned k, int slot) {
    const Character& chi = ops.chi;
    chi.require_quotient();
    using namespace tkk;
    auto ladder_op = [&](int gen) {
        // Y_gen = f_gen + e_gen - i (2 L_gen); rho(Y_gen) is -2i times
        // multiplication by the generator
        std::size_t off = static_cast<std::size_t>(gen - 1);
        DiffOp y = ops.pi[F1 + off] + ops.pi[E1 + off] + ops.pi[LE1 + off].scaled(-kI);
        return y.scaled(kI * kHalf);
    };
    int main_var = primary_gen(chi);
    WElem w = c_inverse_vacuum(chi);
    unsigned main_steps = (slot == 0) ? k : k - 1;
    for (unsigned j = 0; j < main_steps; ++j) w = w_apply(chi, ladder_op(main_var), w);
    if (slot == 1) w = w_apply(chi, ladder_op(secondary_gen(chi)), w);
    if (slot == 2) w = w_apply(chi, ladder_op(3), w);
    if (slot == 3) w = w_apply(chi, ladder_op(4), w);
    return w;
}

CheckReport check_intertwiner_closed_forms(const Character& chi, unsigned max_k, ExecMode mode) {
    CheckReport report("intertwiner-closed-forms");
    ModelOps ops(chi);
    std::vector<std::pair<unsigned, int>> items;
    items.emplace_back(0, 0);
    for (unsigned k = 1; k <= max_k; ++k)
        for (int slot = 0; slot < 4; ++slot) items.emplace_back(k, slot);
    sweep_collect(report, items.size(), mode, [&](std::size_t idx) -> std::string {
        auto [k, slot] = items[idx];
        WElem closed = c_inverse_on_basis(chi, k, slot);
        WElem ladder = c_inverse_via_ladder(ops, k, slot);
        if (!(closed == ladder))
            return "ladder and closed form disagree at level " + std::to_string(k) + ", slot " +
                   std::to_string(slot);
        return "";
    });
    return report;
}

WElem sb_inverse(const Character& chi, const SuperPoly& p) {
    chi.require_quotient();
    SuperPoly reduced = reduce_mod_I(chi, p);
    WElem out;
    if (reduced.is_zero()) {
        out.poly = SuperPoly();
        return out;
    }
    int max_deg = reduced.degree();
    for (int k = 0; k <= max_deg; ++k) {
        std::vector<SuperPoly> basis = normal_basis(chi.branch, static_cast<unsigned>(k));
        for (std::size_t slot = 0; slot < basis.size(); ++slot) {
            Scalar c = reduced.coeff(basis[slot].terms().begin()->first);
            if (c.is_zero()) continue;
            out.poly += c_inverse_on_basis(chi, static_cast<unsigned>(k), static_cast<int>(slot))
                            .poly.scaled(c);
        }
    }
    return out;
}

SuperPoly sb_forward(const Character& chi, const WElem& w) {
    chi.require_quotient();
    if (w.tag_mu != -1) throw parameter_error("tag exponent outside the inverse image of the transform");
    Rat shift = w.tag_const + 1;
    if (shift.get_den() != 1) throw parameter_error("non-integer power-of-two tag");
    Scalar scale(1);
    {
        long s = static_cast<long>(shift.get_num().get_si());
        Scalar two(2);
        scale = s >= 0 ? two.pow(static_cast<unsigned>(s)) : two.pow(static_cast<unsigned>(-s)).inverse();
    }

    SuperPoly residual = w.poly;
    SuperPoly result;
    int max_deg = residual.degree();
    for (int d = max_deg; d >= 1; --d) {
        std::vector<SuperPoly> basis = normal_basis(chi.branch, static_cast<unsigned>(d));
        Scalar lead = Scalar(4).pow(static_cast<unsigned>(d));
        for (std::size_t slot = 0; slot < 4; ++slot) {
            Scalar c = residual.coeff(basis[slot].terms().begin()->first);
            if (c.is_zero()) continue;
            Scalar q = c / lead;
            result += basis[slot].scaled(q);
            residual -= c_inverse_on_basis(chi, static_cast<unsigned>(d), static_cast<int>(slot))
                            .poly.scaled(q);
        }
    }
    // level zero: the vacuum polynomial part is 1
    Scalar c0 = residual.constant_term();
    if (!c0.is_zero()) {
        result += SuperPoly(c0);
        residual -= SuperPoly(c0);
    }
    if (!residual.is_zero()) throw structure_error("element is outside the image of the transform");
    return result.scaled(scale);
}

CheckReport check_sb_round_trip(const Character& chi, unsigned max_k) {
    CheckReport report("transform-round-trip");
    for (unsigned k = 0; k <= max_k; ++k)
        for (const SuperPoly& b : normal_basis(chi.branch, k)) {
            WElem w = sb_inverse(chi, b);
            if (sb_forward(chi, w) != b) report.fail("round trip fails at level " + std::to_string(k));
        }
    // tags cancel: a shifted tag scales the forward image by a power of two
    WElem shifted = sb_inverse(chi, SuperPoly(Scalar(1)));
    shifted.tag_const += 3;
    if (sb_forward(chi, shifted) != SuperPoly(Scalar(8))) report.fail("tag arithmetic fails");
    return report;
}

CheckReport check_intertwining(const Character& chi, unsigned max_k, ExecMode mode) {
    CheckReport report("intertwining");
    ModelOps ops(chi);
    struct Item {
        std::size_t x;
        unsigned k;
        std::size_t slot;
    };
    std::vector<Item> items;
    for (std::size_t x = 0; x < tkk::DIM; ++x)
        for (unsigned k = 0; k <= max_k; ++k)
            for (std::size_t slot = 0; slot < (k == 0 ? 1u : 4u); ++slot) items.push_back({x, k, slot});
    report.info["cases"] = std::to_string(items.size());
    sweep_collect(report, items.size(), mode, [&](std::size_t idx) -> std::string {
        const Item& it = items[idx];
        SuperPoly p = normal_basis(chi.branch, it.k)[it.slot];
        WElem w = sb_inverse(chi, p);
        SuperPoly lhs = sb_forward(chi, w_apply(chi, ops.pi[it.x], w));
        SuperPoly rhs = reduce_mod_I(chi, ops.rho[it.x].apply(p));
        if (lhs != rhs)
            return "intertwining fails for " + ops.table.info(it.x).name + " at level " +
                   std::to_string(it.k) + ", slot " + std::to_string(it.slot);
        return "";
    });
    return report;
}

Scalar w_form(const Character& chi, const WElem& f, const WElem& g) {
    return bessel_fischer(chi, sb_forward(chi, f), sb_forward(chi, g));
}

CheckReport check_w_form(const Character& chi, unsigned max_k) {
    CheckReport report("form-preservation");
    for (unsigned k = 0; k <= max_k; ++k) {
        std::vector<SuperPoly> basis = normal_basis(chi.branch, k);
        std::size_t n = basis.size();
        // tautological route: the transform preserves the form by definition
        Mat gw = mat_zero(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                gw[i][j] = w_form(chi, sb_inverse(chi, basis[i]), sb_inverse(chi, basis[j]));
        GramMatrix gf = gram(chi, k, ExecMode::Serial);
        if (gw != gf.entries) {
            report.fail("pullback form deviates from the Fock form at degree " + std::to_string(k));
            continue;
        }
        if (k == 0) continue;
        // independent congruence route through a different basis of the level
        Mat c = mat_zero(n, n); // columns: header, top line, odd pair
        c[0][0] = Scalar(1);
        c[1][0] = Scalar(static_cast<long>(k) - 1) - (chi.branch == Branch::LambdaAlpha
                                                          ? chi.alpha
                                                          : chi.alpha.inverse());
        c[0][1] = Scalar(1);
        c[1][1] = Scalar(static_cast<long>(k));
        c[2][2] = Scalar(1);
        c[3][3] = Scalar(1);
        Mat gw2 = mat_zero(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                SuperPoly pi_, pj;
                for (std::size_t r = 0; r < n; ++r) {
                    pi_ += basis[r].scaled(c[r][i]);
                    pj += basis[r].scaled(c[r][j]);
                }
                gw2[i][j] = w_form(chi, sb_inverse(chi, pi_), sb_inverse(chi, pj));
            }
        Mat congruent = mat_mul(mat_transpose(c), mat_mul(gf.entries, mat_conj(c)));
        if (gw2 != congruent) report.fail("congruence route fails at degree " + std::to_string(k));
    }
    return report;
}

CheckReport check_w_decomposition(const Character& chi, unsigned k) {
    CheckReport report("w-level-decomposition(k=" + std::to_string(k) + ")");
    if (k == 0) {
        report.fail("level must be positive");
        return report;
    }
    bool alpha_branch = chi.branch == Branch::LambdaAlpha;
    Scalar bar = alpha_branch ? chi.alpha : chi.alpha.inverse();
    int main_var = primary_gen(chi);
    Rat m2(-2);
    auto key = [&](const Rat& secondary) {
        return alpha_branch ? ExpPoly::Key{m2, secondary} : ExpPoly::Key{secondary, m2};
    };
    std::vector<SuperPoly> basis = normal_basis(chi.branch, k);

    // top line image matches Omega_k e + k Omega_{k-1} e' after normalization
    {
        SuperPoly top = basis[0] + basis[1].scaled(Scalar(static_cast<long>(k)));
        SuperPoly got = sb_inverse(chi, top).poly;
        ExpPoly displayed;
        displayed.add_summand(key(rat(-2)), omega(chi, k).to_poly(main_var));
        displayed.add_summand(key(rat(2)),
                              omega(chi, k - 1).to_poly(main_var).scaled(Scalar(static_cast<long>(k))));
        if (got != w_canonicalize(chi, displayed)) report.fail("top-line image deviates from the display");
    }
    // complement header image
    {
        SuperPoly header = basis[0] + basis[1].scaled(Scalar(static_cast<long>(k) - 1) - bar);
        SuperPoly got = sb_inverse(chi, header).poly;
        ExpPoly displayed;
        displayed.add_summand(key(rat(-2)), omega(chi, k).to_poly(main_var));
        displayed.add_summand(key(rat(2)), omega(chi, k - 1)
                                               .to_poly(main_var)
                                               .scaled(Scalar(static_cast<long>(k) - 1) - bar));
        if (got != w_canonicalize(chi, displayed)) report.fail("header image deviates from the display");
    }
    // odd members x3/x4 Theta_{k-1} exp(-2 x_main)
    for (int slot = 2; slot < 4; ++slot) {
        SuperPoly got = sb_inverse(chi, basis[static_cast<std::size_t>(slot)]).poly;
        ExpPoly displayed;
        SuperPoly odd = SuperPoly::gen(slot + 1) * theta(chi, k - 1).to_poly(main_var);
        displayed.add_summand(key(rat(0)), odd.scaled(Scalar(4)));
        if (got != w_canonicalize(chi, displayed)) report.fail("odd image deviates from the display");
    }

    // direct sum and invariance in monomial coordinates
    {
        std::vector<Mono> monos = normal_monos_upto(chi.branch, k);
        auto coords = [&](const SuperPoly& p) {
            Vec v(monos.size());
            for (std::size_t i = 0; i < monos.size(); ++i) v[i] = p.coeff(monos[i]);
            return v;
        };
        SuperPoly top = basis[0] + basis[1].scaled(Scalar(static_cast<long>(k)));
        SuperPoly header = basis[0] + basis[1].scaled(Scalar(static_cast<long>(k) - 1) - bar);
        Mat k_rows, r_rows;
        k_rows.push_back(coords(sb_inverse(chi, header).poly));
        k_rows.push_back(coords(sb_inverse(chi, basis[2]).poly));
        k_rows.push_back(coords(sb_inverse(chi, basis[3]).poly));
        r_rows.push_back(coords(sb_inverse(chi, top).poly));
        Mat joined = k_rows;
        joined.push_back(r_rows[0]);
        if (rank(joined) != 4) report.fail("sum of the two pieces is not direct");

        // k0 invariance of both pieces under the polynomial-model action
        ModelOps ops(chi);
        auto invariant = [&](const Mat& rows) {
            Mat span = row_echelon_basis(rows);
            for (const Vec& v : rows) {
                SuperPoly p;
                for (std::size_t i = 0; i < monos.size(); ++i)
                    if (!v[i].is_zero()) p.add_term(monos[i], v[i]);
                WElem w;
                w.poly = p;
                for (std::size_t slot : ModelOps::k0_slots()) {
                    WElem img = w_apply(chi, ops.pi[slot], w);
                    Mat joined2 = span;
                    joined2.push_back(coords(img.poly));
                    if (row_echelon_basis(joined2).size() != span.size()) return false;
                }
            }
            return true;
        };
        if (!invariant(k_rows)) report.fail("complement piece is not invariant");
        if (!invariant(r_rows)) report.fail("top-line piece is not invariant");
    }
    return report;
}

CheckReport check_ladder_operators(const Character& chi) {
    CheckReport report("fock-ladder-operators");
    ModelOps ops(chi);
    CayleyTransform c = cayley(chi);
    int g = primary_gen(chi);
    std::size_t minus_slot = tkk::F1 + static_cast<std::size_t>(g - 1);
    std::size_t plus_slot = tkk::E1 + static_cast<std::size_t>(g - 1);

    Vec raise_arg(tkk::DIM), lower_arg(tkk::DIM);
    raise_arg[minus_slot] = -kHalf;
    lower_arg[plus_slot] = Scalar(-2);
    DiffOp raise = ops.rho_vec(mat_apply(c.inverse, raise_arg));
    DiffOp lower = ops.rho_vec(mat_apply(c.inverse, lower_arg));
    if (raise != DiffOp::mult(SuperPoly::gen(g)).scaled(kI)) report.fail("raising operator is not i z");
    if (lower != bessel(chi, g).scaled(kI)) report.fail("lowering operator is not i B(z)");
    return report;
}

} // namespace d21a
