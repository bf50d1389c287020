#include "d21a/jordan.hpp"

#include "d21a/errors.hpp"

namespace d21a {

JordanAlgebra::JordanAlgebra(Scalar alpha)
    : alpha_(std::move(alpha)), names_{"e1", "e2", "xi", "eta"}, table_(jrd::DIM * jrd::DIM, Vec(jrd::DIM)) {
    using namespace jrd;
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, Scalar c) { table_[i * DIM + j][k] = std::move(c); };
    Scalar half = Scalar(Rat(1, 2));
    set(E1, E1, E1, Scalar(1));
    set(E2, E2, E2, Scalar(1));
    // e1 e2 = 0
    for (std::size_t e : {E1, E2}) {
        set(e, XI, XI, half);
        set(XI, e, XI, half);
        set(e, ETA, ETA, half);
        set(ETA, e, ETA, half);
    }
    set(XI, ETA, E1, Scalar(1));
    set(XI, ETA, E2, alpha_);
    set(ETA, XI, E1, Scalar(-1));
    set(ETA, XI, E2, -alpha_);
    // xi xi = eta eta = 0
}

Vec JordanAlgebra::mul_vec(const Vec& x, const Vec& y) const {
    Vec out(jrd::DIM);
    for (std::size_t i = 0; i < jrd::DIM; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < jrd::DIM; ++j) {
            if (y[j].is_zero()) continue;
            const Vec& m = mul(i, j);
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < jrd::DIM; ++k)
                if (!m[k].is_zero()) out[k] += c * m[k];
        }
    }
    return out;
}

Mat JordanAlgebra::l_matrix(std::size_t i) const {
    Mat m = mat_zero(jrd::DIM, jrd::DIM);
    for (std::size_t j = 0; j < jrd::DIM; ++j) {
        const Vec& prod = mul(i, j);
        for (std::size_t k = 0; k < jrd::DIM; ++k) m[k][j] = prod[k];
    }
    return m;
}

Mat JordanAlgebra::l_matrix_vec(const Vec& x) const {
    Mat m = mat_zero(jrd::DIM, jrd::DIM);
    for (std::size_t i = 0; i < jrd::DIM; ++i) {
        if (x[i].is_zero()) continue;
        Mat li = l_matrix(i);
        for (std::size_t r = 0; r < jrd::DIM; ++r)
            for (std::size_t c = 0; c < jrd::DIM; ++c) m[r][c] += x[i] * li[r][c];
    }
    return m;
}

Mat supermat_bracket(const Mat& a, int pa, const Mat& b, int pb) {
    Mat ab = mat_mul(a, b);
    Mat ba = mat_mul(b, a);
    return (pa & pb) ? mat_add(ab, ba) : mat_sub(ab, ba);
}

CheckReport JordanAlgebra::check_jordan_identity() const {
    CheckReport report("jordan-identity");
    using namespace jrd;
    // table invariants first: supercommutativity and the unit e1 + e2
    for (std::size_t x = 0; x < DIM; ++x)
        for (std::size_t y = 0; y < DIM; ++y) {
            const Vec& xy = mul(x, y);
            const Vec& yx = mul(y, x);
            int sign = (parity(x) & parity(y)) ? -1 : 1;
            for (std::size_t k = 0; k < DIM; ++k)
                if (xy[k] != (sign < 0 ? -yx[k] : yx[k])) {
                    report.fail("supercommutativity fails at (" + names_[x] + ", " + names_[y] + ")");
                    break;
                }
        }
    {
        Vec one(DIM);
        one[E1] = Scalar(1);
        one[E2] = Scalar(1);
        for (std::size_t k = 0; k < DIM; ++k) {
            Vec ek(DIM);
            ek[k] = Scalar(1);
            if (mul_vec(one, ek) != ek) report.fail("e1 + e2 is not a left unit at " + names_[k]);
        }
    }
    std::vector<Mat> l(DIM);
    for (std::size_t i = 0; i < DIM; ++i) l[i] = l_matrix(i);
    for (std::size_t x = 0; x < DIM; ++x)
        for (std::size_t y = 0; y < DIM; ++y)
            for (std::size_t z = 0; z < DIM; ++z) {
                int px = parity(x), py = parity(y), pz = parity(z);
                auto cyclic = [&](std::size_t u, std::size_t v, std::size_t w, int sign) {
                    Mat lvw = l_matrix_vec(mul(v, w));
                    Mat br = supermat_bracket(l[u], parity(u), lvw, (parity(v) + parity(w)) & 1);
                    return sign < 0 ? mat_scaled(br, Scalar(-1)) : br;
                };
                Mat acc = cyclic(x, y, z, (px & pz) ? -1 : 1);
                acc = mat_add(acc, cyclic(y, z, x, (py & px) ? -1 : 1));
                acc = mat_add(acc, cyclic(z, x, y, (pz & py) ? -1 : 1));
                if (!mat_is_zero(acc))
                    report.fail("jordan identity fails at (" + names_[x] + ", " + names_[y] + ", " + names_[z] + ")");
            }
    return report;
}

JordanAlgebra JordanAlgebra::perturbed() const {
    // One table entry bumped: xi*eta = e1 + (alpha+1) e2 while eta*xi keeps the
    // old value, so the product is no longer supercommutative.
    JordanAlgebra j = *this;
    j.table_[jrd::XI * jrd::DIM + jrd::ETA][jrd::E2] = alpha_ + Scalar(1);
    return j;
}

StrBasis build_str(const JordanAlgebra& j, bool d_mode) {
    StrBasis s;
    const Scalar minus_one(-1);
    bool at_minus_one = (j.alpha() == minus_one);
    if (d_mode && !at_minus_one)
        throw structure_error("the d-basis of str exists only at alpha = -1");

    Mat le1 = j.l_matrix(jrd::E1), le2 = j.l_matrix(jrd::E2);
    Mat lxi = j.l_matrix(jrd::XI), leta = j.l_matrix(jrd::ETA);
    auto twice = [](const Mat& m) { return mat_scaled(m, Scalar(2)); };
    auto four_bracket = [](const Mat& a, int pa, const Mat& b, int pb) {
        return mat_scaled(supermat_bracket(a, pa, b, pb), Scalar(4));
    };

    s.mats = {twice(le1), twice(le2), twice(lxi), twice(leta),
              four_bracket(le1, 0, lxi, 1), four_bracket(le1, 0, leta, 1),
              four_bracket(lxi, 1, lxi, 1), four_bracket(leta, 1, leta, 1),
              four_bracket(lxi, 1, leta, 1)};
    s.names = {"2L(e1)", "2L(e2)", "2L(xi)", "2L(eta)",
               "4[L(e1),L(xi)]", "4[L(e1),L(eta)]",
               "4[L(xi),L(xi)]", "4[L(eta),L(eta)]", "4[L(xi),L(eta)]"};
    s.parities = {0, 0, 1, 1, 1, 1, 0, 0, 0};
    s.is_l_type = {true, true, true, true, false, false, false, false, false};

    if (at_minus_one && !d_mode)
        s.warnings.push_back("[L(xi),L(xi)] = [L(eta),L(eta)] = [L(xi),L(eta)] = 0 at alpha = -1; "
                             "the generic inner-derivation trio degenerates");

    if (d_mode) {
        Mat dm = mat_zero(4, 4), dp = mat_zero(4, 4), d0 = mat_zero(4, 4);
        dm[2][3] = Scalar(1);
        dp[3][2] = Scalar(1);
        d0[2][2] = Scalar(-1);
        d0[3][3] = Scalar(1);
        s.mats[6] = dm;
        s.mats[7] = dp;
        s.mats[8] = d0;
        s.names[6] = "d-";
        s.names[7] = "d+";
        s.names[8] = "d0";
    }
    return s;
}

namespace {

Vec vectorize(const Mat& m) {
    Vec v;
    v.reserve(16);
    for (const auto& row : m)
        for (const auto& x : row) v.push_back(x);
    return v;
}

struct StrDecomposer {
    Mat system; // 16 x 9
    explicit StrDecomposer(const StrBasis& s) {
        system = mat_zero(16, 9);
        for (std::size_t k = 0; k < 9; ++k) {
            Vec col = vectorize(s.mats[k]);
            for (std::size_t r = 0; r < 16; ++r) system[r][k] = col[r];
        }
        if (rank(system) != 9)
            throw structure_error("structure-algebra basis is degenerate at this alpha; use the d-basis");
    }
    Vec decompose(const Mat& m) const {
        auto x = solve(system, vectorize(m));
        if (!x) throw structure_error("matrix outside the span of the structure-algebra basis");
        return *x;
    }
};

} // namespace

StructureTable build_tkk(const JordanAlgebra& j, bool d_mode) {
    using namespace tkk;
    StrBasis s = build_str(j, d_mode);
    StrDecomposer dec(s);

    std::vector<BasisInfo> basis(DIM);
    const char* minus_names[4] = {"f1", "f2", "zeta", "theta"};
    const char* plus_names[4] = {"e1", "e2", "xi", "eta"};
    for (std::size_t k = 0; k < 4; ++k) {
        basis[F1 + k] = BasisInfo{minus_names[k], static_cast<int>(k >= 2), -2};
        basis[PLUS0 + k] = BasisInfo{plus_names[k], static_cast<int>(k >= 2), 2};
    }
    for (std::size_t k = 0; k < 9; ++k) basis[STR0 + k] = BasisInfo{s.names[k], s.parities[k], 0};

    std::vector<Vec> br(DIM * DIM, Vec(DIM));
    auto bracket_at = [&](std::size_t i, std::size_t j2) -> Vec& { return br[i * DIM + j2]; };
    auto parity_of = [&](std::size_t i) { return basis[i].parity; };

    std::vector<Mat> lmat(4);
    for (std::size_t k = 0; k < 4; ++k) lmat[k] = j.l_matrix(k);

    // str x str
    for (std::size_t a = 0; a < 9; ++a)
        for (std::size_t b = 0; b < 9; ++b) {
            Mat m = supermat_bracket(s.mats[a], s.parities[a], s.mats[b], s.parities[b]);
            Vec coords = dec.decompose(m);
            for (std::size_t k = 0; k < 9; ++k) bracket_at(STR0 + a, STR0 + b)[STR0 + k] = coords[k];
        }

    // str acting on the +/- copies
    for (std::size_t a = 0; a < 9; ++a) {
        for (std::size_t x = 0; x < 4; ++x) {
            Vec ex(4);
            ex[x] = Scalar(1);
            Vec img = mat_apply(s.mats[a], ex);
            int sgn = (s.parities[a] & parity_of(PLUS0 + x)) ? 1 : -1;
            for (std::size_t k = 0; k < 4; ++k) {
                // [S, x] = S(x) in the + copy
                bracket_at(STR0 + a, PLUS0 + x)[PLUS0 + k] = img[k];
                bracket_at(PLUS0 + x, STR0 + a)[PLUS0 + k] = sgn < 0 ? -img[k] : img[k];
            }
            // [L_a, u] = -a u, [I, u] = I u in the - copy
            Vec img_minus = img;
            if (s.is_l_type[a])
                for (auto& c : img_minus) c = -c;
            for (std::size_t k = 0; k < 4; ++k) {
                bracket_at(STR0 + a, F1 + x)[F1 + k] = img_minus[k];
                bracket_at(F1 + x, STR0 + a)[F1 + k] = sgn < 0 ? -img_minus[k] : img_minus[k];
            }
        }
    }

    // [x, u] = 2 L_{xu} + 2 [L_x, L_u] for x in the + copy, u in the - copy
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t u = 0; u < 4; ++u) {
            const Vec& prod = j.mul(x, u);
            Mat m = mat_scaled(j.l_matrix_vec(prod), Scalar(2));
            Mat inner = supermat_bracket(lmat[x], j.parity(x), lmat[u], j.parity(u));
            m = mat_add(m, mat_scaled(inner, Scalar(2)));
            Vec coords = dec.decompose(m);
            int sgn = (j.parity(x) & j.parity(u)) ? 1 : -1;
            for (std::size_t k = 0; k < 9; ++k) {
                bracket_at(PLUS0 + x, F1 + u)[STR0 + k] = coords[k];
                bracket_at(F1 + u, PLUS0 + x)[STR0 + k] = sgn < 0 ? -coords[k] : coords[k];
            }
        }

    return StructureTable(std::move(basis), std::move(br));
}

Mat tkk_dictionary(bool d_mode) {
    using namespace tkk;
    Scalar a = Scalar::param();
    Mat phi = mat_zero(gam::DIM, DIM);
    auto set = [&](std::size_t col, std::size_t row, Scalar c) { phi[row][col] = std::move(c); };

    set(F1, gam::F2, Scalar(1));
    set(F2, gam::F3, Scalar(1));
    set(ZETA, gam::U_MMM, Scalar(-1));
    set(THETA, gam::U_PMM, Scalar(-2));
    set(E1, gam::E2, Scalar(1));
    set(E2, gam::E3, Scalar(1));
    set(XI, gam::U_MPP, Scalar(1));
    set(ETA, gam::U_PPP, Scalar(2));
    set(LE1, gam::H2, Scalar(1));
    set(LE2, gam::H3, Scalar(1));
    set(LXI, gam::U_MMP, Scalar(-1));
    set(LXI, gam::U_MPM, Scalar(-1));
    set(LETA, gam::U_PMP, Scalar(-2));
    set(LETA, gam::U_PPM, Scalar(-2));
    set(DE1XI, gam::U_MMP, Scalar(1));
    set(DE1XI, gam::U_MPM, Scalar(-1));
    set(DE1ETA, gam::U_PMP, Scalar(2));
    set(DE1ETA, gam::U_PPM, Scalar(-2));
    if (d_mode) {
        // Normalizations forced by bracket preservation: the generic lines give
        // 4[L_xi,L_xi] = 4(1+alpha) d_- mapping to 2(1+alpha) F1, hence
        // d_- = F1/2, and symmetrically d_+ = 2 E1, d_0 = H1.
        set(DXIXI, gam::F1, Scalar(Rat(1, 2)));
        set(DETAETA, gam::E1, Scalar(2));
        set(DXIETA, gam::H1, Scalar(1));
    } else {
        Scalar c = Scalar(2) * (Scalar(1) + a);
        set(DXIXI, gam::F1, c);
        set(DETAETA, gam::E1, Scalar(-4) * c);
        set(DXIETA, gam::H1, c);
    }
    return phi;
}

CheckReport check_tkk_isomorphism(bool d_mode, ExecMode mode) {
    CheckReport report(d_mode ? "tkk-isomorphism(alpha=-1)" : "tkk-isomorphism");
    Scalar alpha = d_mode ? Scalar(-1) : Scalar::param();
    JordanAlgebra j(alpha);
    StructureTable t = build_tkk(j, d_mode);
    StructureTable g = d_mode ? build_d21a().specialize(rat(-1)) : build_d21a();
    Mat phi = tkk_dictionary(d_mode);
    if (d_mode)
        for (auto& row : phi)
            for (auto& c : row)
                if (!c.is_zero()) c = Scalar(c.eval_at(rat(-1)));

    std::size_t n = t.dim();
    // parity and grading preservation, and injectivity of the dictionary
    for (std::size_t i = 0; i < n; ++i) {
        int gp = -1, gg = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (phi[r][i].is_zero()) continue;
            if (gp == -1) {
                gp = g.info(r).parity;
                gg = g.info(r).grading;
            } else if (gp != g.info(r).parity || gg != g.info(r).grading) {
                report.fail("dictionary image of " + t.info(i).name + " is not homogeneous");
            }
        }
        if (gp == -1) {
            report.fail("dictionary image of " + t.info(i).name + " vanishes");
        } else {
            if (gp != t.info(i).parity) report.fail("parity mismatch for " + t.info(i).name);
            if (gg != t.info(i).grading) report.fail("grading mismatch for " + t.info(i).name);
        }
    }
    if (rank(phi) != n) report.fail("dictionary is not a bijection");

    auto column = [&](std::size_t i) {
        Vec v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = phi[r][i];
        return v;
    };

    sweep_collect(report, n * n, mode, [&](std::size_t idx) -> std::string {
        std::size_t i = idx / n, k = idx % n;
        const Vec& tij = t.bracket(i, k);
        Vec lhs = mat_apply(phi, tij);
        Vec rhs = g.bracket_vec(column(i), column(k));
        for (std::size_t r = 0; r < n; ++r)
            if (lhs[r] != rhs[r])
                return "bracket mismatch at (" + t.info(i).name + ", " + t.info(k).name + "): component " +
                       g.info(r).name + " is " + lhs[r].str() + " vs " + rhs[r].str();
        return "";
    });
    report.info["pairs"] = std::to_string(n * n);
    return report;
}

CheckReport check_gplus_jordan_product() {
    CheckReport report("gplus-jordan-product");
    StructureTable g = build_d21a();
    std::size_t n = g.dim();
    Vec f(n);
    f[gam::F2] = Scalar(1);
    f[gam::F3] = Scalar(1);

    JordanAlgebra j;
    Mat phi = tkk_dictionary(false);
    auto embed = [&](std::size_t jordan_idx) {
        Vec v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = phi[r][tkk::PLUS0 + jordan_idx];
        return v;
    };

    Scalar half = Scalar(Rat(1, 2));
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
            Vec lhs = g.bracket_vec(g.bracket_vec(embed(x), f), embed(y));
            for (auto& c : lhs) c *= half;
            const Vec& prod = j.mul(x, y);
            Vec rhs(n);
            for (std::size_t k = 0; k < 4; ++k) {
                if (prod[k].is_zero()) continue;
                Vec ek = embed(k);
                for (std::size_t r = 0; r < n; ++r) rhs[r] += prod[k] * ek[r];
            }
            if (lhs != rhs)
                report.fail("half-bracket Jordan product disagrees with the multiplication table at (" +
                            j.name(x) + ", " + j.name(y) + ")");
        }
    return report;
}

} // namespace d21a
