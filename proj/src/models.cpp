#include "d21a/models.hpp"

#include <algorithm>

#include "d21a/errors.hpp"

namespace d21a {

namespace {

const Scalar kHalf(Rat(1, 2));
const Scalar kI = Scalar::i();

DiffOp M(int i) { return DiffOp::mult(SuperPoly::gen(i)); }
DiffOp Dv(int i) { return DiffOp::deriv(i); }
DiffOp MD(int i, int j) { return compose(M(i), Dv(j)); }

} // namespace

Character Character::lambda_alpha(Scalar alpha) {
    Character chi;
    chi.c1 = alpha;
    chi.c2 = Scalar(1);
    chi.alpha = std::move(alpha);
    chi.branch = Branch::LambdaAlpha;
    chi.d_mode = (chi.alpha == Scalar(-1));
    return chi;
}

Character Character::lambda_one(Scalar alpha) {
    if (alpha.is_zero()) throw parameter_error("lambda = 1 with alpha = 0 requires the zero mode");
    Character chi;
    chi.c1 = Scalar(1);
    chi.c2 = alpha.inverse();
    chi.alpha = std::move(alpha);
    chi.branch = Branch::LambdaOne;
    chi.d_mode = (chi.alpha == Scalar(-1));
    return chi;
}

Character Character::zero(Scalar lambda) {
    Character chi;
    chi.alpha = Scalar(0);
    chi.c1 = Scalar(0);
    chi.c2 = std::move(lambda);
    chi.zero_mode = true;
    return chi;
}

void Character::require_quotient() const {
    if (zero_mode) throw parameter_error("quotient operations are not defined in the alpha = 0 mode");
    if (alpha == Scalar(1)) throw parameter_error("quotient operations exclude lambda = alpha = 1");
}

DiffOp bessel(const Character& chi, int gen) {
    const Scalar& al = chi.alpha;
    switch (gen) {
        case 1:
            return compose(DiffOp(-chi.c1) + MD(1, 1) + MD(3, 3) + MD(4, 4), Dv(1)) -
                   compose(M(2), compose(Dv(3), Dv(4))).scaled(Scalar(2) * al);
        case 2:
            return compose(DiffOp(-chi.c2) + MD(2, 2) + MD(3, 3) + MD(4, 4), Dv(2)) -
                   compose(M(1), compose(Dv(3), Dv(4))).scaled(Scalar(2));
        case 3:
            return compose(DiffOp(Scalar(-2) * chi.c1) + MD(1, 1).scaled(Scalar(2)) +
                               MD(2, 2).scaled(Scalar(2) * al) + MD(3, 3).scaled(Scalar(2) * (Scalar(1) + al)),
                           Dv(4)) +
                   compose(M(3), compose(Dv(1), Dv(2)));
        case 4:
            return compose(DiffOp(Scalar(2) * chi.c1) - MD(1, 1).scaled(Scalar(2)) -
                               MD(2, 2).scaled(Scalar(2) * al) - MD(4, 4).scaled(Scalar(2) * (Scalar(1) + al)),
                           Dv(3)) +
                   compose(M(4), compose(Dv(1), Dv(2)));
    }
    throw structure_error("bessel generator index out of range");
}

namespace {

// First-order parts shared between the models.
DiffOp q_op(const Character& chi, int g) {
    const Scalar& al = chi.alpha;
    switch (g) {
        case 1: return DiffOp(-chi.c1) + MD(1, 1).scaled(Scalar(2)) + MD(3, 3) + MD(4, 4);
        case 2: return DiffOp(-chi.c2) + MD(2, 2).scaled(Scalar(2)) + MD(3, 3) + MD(4, 4);
        case 3: return MD(3, 1) + MD(2, 4).scaled(Scalar(2) * al) + MD(3, 2) + MD(1, 4).scaled(Scalar(2));
        case 4: return MD(4, 1) - MD(2, 3).scaled(Scalar(2) * al) + MD(4, 2) - MD(1, 3).scaled(Scalar(2));
    }
    throw structure_error("index out of range");
}

DiffOp k0_op(const Character& chi, std::size_t slot) {
    const Scalar& al = chi.alpha;
    Scalar one_plus = Scalar(1) + al;
    switch (slot) {
        case tkk::DE1XI:
            return compose(M(3), Dv(2) - Dv(1)) +
                   compose(DiffOp::mult(SuperPoly::gen(1) - SuperPoly::gen(2).scaled(al)), Dv(4)).scaled(Scalar(2));
        case tkk::DE1ETA:
            return compose(M(4), Dv(2) - Dv(1)) -
                   compose(DiffOp::mult(SuperPoly::gen(1) - SuperPoly::gen(2).scaled(al)), Dv(3)).scaled(Scalar(2));
        case tkk::DXIXI:
            return chi.d_mode ? MD(3, 4) : MD(3, 4).scaled(Scalar(4) * one_plus);
        case tkk::DETAETA:
            return chi.d_mode ? MD(4, 3) : MD(4, 3).scaled(Scalar(-4) * one_plus);
        case tkk::DXIETA:
            return chi.d_mode ? MD(4, 4) - MD(3, 3)
                              : (MD(3, 3) - MD(4, 4)).scaled(Scalar(-2) * one_plus);
    }
    throw structure_error("not a k0 slot");
}

} // namespace

DiffOp schrodinger_action(const Character& chi, std::size_t idx) {
    using namespace tkk;
    const Scalar& al = chi.alpha;
    switch (idx) {
        case F1: return M(1).scaled(Scalar(-2) * kI);
        case F2: return M(2).scaled(Scalar(-2) * kI);
        case ZETA: return M(3).scaled(Scalar(-2) * kI);
        case THETA: return M(4).scaled(Scalar(-2) * kI);
        case LE1: return DiffOp(chi.c1) - MD(1, 1).scaled(Scalar(2)) - MD(3, 3) - MD(4, 4);
        case LE2: return DiffOp(chi.c2) - MD(2, 2).scaled(Scalar(2)) - MD(3, 3) - MD(4, 4);
        case LXI:
            return -compose(M(3), Dv(1) + Dv(2)) -
                   compose(DiffOp::mult(SuperPoly::gen(1) + SuperPoly::gen(2).scaled(al)), Dv(4)).scaled(Scalar(2));
        case LETA:
            return -compose(M(4), Dv(1) + Dv(2)) +
                   compose(DiffOp::mult(SuperPoly::gen(1) + SuperPoly::gen(2).scaled(al)), Dv(3)).scaled(Scalar(2));
        case DE1XI:
        case DE1ETA:
        case DXIXI:
        case DETAETA:
        case DXIETA: return k0_op(chi, idx);
        case E1: return bessel(chi, 1).scaled(-kI * kHalf);
        case E2: return bessel(chi, 2).scaled(-kI * kHalf);
        case XI: return bessel(chi, 3).scaled(-kI * kHalf);
        case ETA: return bessel(chi, 4).scaled(-kI * kHalf);
    }
    throw structure_error("basis index out of range");
}

DiffOp fock_action(const Character& chi, std::size_t idx) {
    using namespace tkk;
    auto zb = [&](int g) { return M(g) + bessel(chi, g); };
    switch (idx) {
        case F1: return (zb(1) + q_op(chi, 1)).scaled(-kI * kHalf);
        case F2: return (zb(2) + q_op(chi, 2)).scaled(-kI * kHalf);
        case ZETA: return (zb(3) + q_op(chi, 3)).scaled(-kI * kHalf);
        case THETA: return (zb(4) + q_op(chi, 4)).scaled(-kI * kHalf);
        case LE1: return M(1) - bessel(chi, 1);
        case LE2: return M(2) - bessel(chi, 2);
        case LXI: return M(3) - bessel(chi, 3);
        case LETA: return M(4) - bessel(chi, 4);
        case DE1XI:
        case DE1ETA:
        case DXIXI:
        case DETAETA:
        case DXIETA: return k0_op(chi, idx);
        case E1: return (-(zb(1)) + q_op(chi, 1)).scaled(kI * kHalf);
        case E2: return (-(zb(2)) + q_op(chi, 2)).scaled(kI * kHalf);
        case XI: return (-(zb(3)) + q_op(chi, 3)).scaled(kI * kHalf);
        case ETA: return (-(zb(4)) + q_op(chi, 4)).scaled(kI * kHalf);
    }
    throw structure_error("basis index out of range");
}

ModelOps::ModelOps(const Character& c)
    : chi(c), table(build_tkk(JordanAlgebra(c.alpha), c.d_mode)) {
    pi.reserve(tkk::DIM);
    rho.reserve(tkk::DIM);
    for (std::size_t i = 0; i < tkk::DIM; ++i) {
        pi.push_back(schrodinger_action(chi, i));
        rho.push_back(fock_action(chi, i));
    }
}

DiffOp ModelOps::pi_vec(const Vec& coords) const {
    DiffOp out;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) out += pi[i].scaled(coords[i]);
    return out;
}

DiffOp ModelOps::rho_vec(const Vec& coords) const {
    DiffOp out;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) out += rho[i].scaled(coords[i]);
    return out;
}

std::vector<Vec> ModelOps::k_basis() const {
    std::vector<Vec> out;
    for (std::size_t j = 0; j < 4; ++j) {
        Vec v(tkk::DIM);
        v[tkk::F1 + j] = Scalar(1);
        v[tkk::E1 + j] = Scalar(-1);
        out.push_back(std::move(v));
    }
    for (std::size_t slot : k0_slots()) {
        Vec v(tkk::DIM);
        v[slot] = Scalar(1);
        out.push_back(std::move(v));
    }
    return out;
}

const std::vector<std::size_t>& ModelOps::k0_slots() {
    static const std::vector<std::size_t> slots = {tkk::DE1XI, tkk::DE1ETA, tkk::DXIXI, tkk::DETAETA,
                                                   tkk::DXIETA};
    return slots;
}

CheckReport check_representation(const Character& chi, ExecMode mode) {
    CheckReport report("representation-property");
    ModelOps ops(chi);
    std::size_t n = tkk::DIM;
    report.info["pairs"] = std::to_string(n * n);
    sweep_collect(report, n * n * 2, mode, [&](std::size_t idx) -> std::string {
        bool fock = idx >= n * n;
        std::size_t rest = idx % (n * n);
        std::size_t i = rest / n, j = rest % n;
        const std::vector<DiffOp>& act = fock ? ops.rho : ops.pi;
        DiffOp lhs = supercommutator(act[i], act[j]);
        DiffOp rhs = fock ? ops.rho_vec(ops.table.bracket(i, j)) : ops.pi_vec(ops.table.bracket(i, j));
        if (lhs != rhs)
            return std::string(fock ? "rho" : "pi") + ": bracket mismatch at (" + ops.table.info(i).name +
                   ", " + ops.table.info(j).name + ")";
        return "";
    });
    return report;
}

CheckReport check_bessel_supercommutativity(const Character& chi) {
    CheckReport report("bessel-supercommutativity");
    const int parity[5] = {0, 0, 0, 1, 1};
    for (int g = 1; g <= 4; ++g)
        for (int h = 1; h <= 4; ++h) {
            DiffOp lhs = compose(bessel(chi, g), bessel(chi, h));
            DiffOp rhs = compose(bessel(chi, h), bessel(chi, g));
            if (parity[g] && parity[h]) rhs = -rhs;
            if (lhs != rhs)
                report.fail("bessel operators " + std::to_string(g) + " and " + std::to_string(h) +
                            " do not supercommute");
        }
    return report;
}

bool is_normal_mono(Branch branch, const Mono& m) {
    if (branch == Branch::LambdaAlpha)
        return m.d2 <= 1 && !(m.d2 == 1 && (m.e3 || m.e4)) && !(m.e3 && m.e4);
    return m.d1 <= 1 && !(m.d1 == 1 && (m.e3 || m.e4)) && !(m.e3 && m.e4);
}

SuperPoly reduce_mod_I(const Character& chi, const SuperPoly& p) {
    chi.require_quotient();
    SuperPoly out;
    for (const auto& [m, c] : p.terms()) {
        Mono n = m;
        Scalar coeff = c;
        if (chi.branch == Branch::LambdaAlpha) {
            if (n.e3 && n.e4) {
                // z3 z4 = -2 z1 z2 in the quotient
                coeff *= Scalar(-2);
                n.e3 = n.e4 = 0;
                n.d1 += 1;
                n.d2 += 1;
            }
            if (n.d2 >= 2) continue;
            if (n.d2 == 1 && (n.e3 || n.e4)) continue;
        } else {
            if (n.e3 && n.e4) {
                coeff *= Scalar(-2) * chi.alpha;
                n.e3 = n.e4 = 0;
                n.d1 += 1;
                n.d2 += 1;
            }
            if (n.d1 >= 2) continue;
            if (n.d1 == 1 && (n.e3 || n.e4)) continue;
        }
        out.add_term(n, coeff);
    }
    return out;
}

std::vector<SuperPoly> v_lambda_generators(const Character& chi) {
    chi.require_quotient();
    SuperPoly z1 = SuperPoly::gen(1), z2 = SuperPoly::gen(2), z3 = SuperPoly::gen(3), z4 = SuperPoly::gen(4);
    if (chi.branch == Branch::LambdaAlpha)
        return {(z1 * z2).scaled(Scalar(2)) + z3 * z4, z2 * z2, z2 * z3, z2 * z4};
    return {(z1 * z2).scaled(Scalar(2) * chi.alpha) + z3 * z4, z1 * z1, z1 * z3, z1 * z4};
}

std::vector<SuperPoly> normal_basis(Branch branch, unsigned k) {
    if (k == 0) return {SuperPoly(Scalar(1))};
    std::vector<SuperPoly> out;
    bool alpha_branch = (branch == Branch::LambdaAlpha);
    auto mono = [&](unsigned main, unsigned other, unsigned e3, unsigned e4) {
        Mono m;
        m.d1 = alpha_branch ? main : other;
        m.d2 = alpha_branch ? other : main;
        m.e3 = static_cast<std::uint8_t>(e3);
        m.e4 = static_cast<std::uint8_t>(e4);
        return SuperPoly::monomial(m);
    };
    out.push_back(mono(k, 0, 0, 0));
    out.push_back(mono(k - 1, 1, 0, 0));
    out.push_back(mono(k - 1, 0, 1, 0));
    out.push_back(mono(k - 1, 0, 0, 1));
    return out;
}

std::vector<Mono> normal_monos_upto(Branch branch, unsigned max_degree) {
    std::vector<Mono> out;
    out.push_back(Mono{});
    for (unsigned k = 1; k <= max_degree; ++k)
        for (const SuperPoly& b : normal_basis(branch, k)) out.push_back(b.terms().begin()->first);
    return out;
}

CheckReport check_I_invariance(const Character& chi, unsigned degree_bound, ExecMode mode) {
    CheckReport report("submodule-invariance");
    ModelOps ops(chi);
    std::vector<SuperPoly> gens = v_lambda_generators(chi);

    // Bessel operators kill the V generators exactly.
    for (int g = 1; g <= 4; ++g)
        for (const SuperPoly& v : gens)
            if (!bessel(chi, g).apply(v).is_zero())
                report.fail("bessel operator " + std::to_string(g) + " does not kill a V generator");

    // Spanning elements m * v of I up to the degree bound stay in I under pi.
    std::vector<SuperPoly> span;
    for (unsigned d1 = 0; d1 + 2 <= degree_bound; ++d1)
        for (unsigned d2 = 0; d1 + d2 + 2 <= degree_bound; ++d2)
            for (unsigned e3 = 0; e3 <= 1 && d1 + d2 + e3 + 2 <= degree_bound; ++e3)
                for (unsigned e4 = 0; e4 <= 1 && d1 + d2 + e3 + e4 + 2 <= degree_bound; ++e4) {
                    Mono m{d1, d2, static_cast<std::uint8_t>(e3), static_cast<std::uint8_t>(e4)};
                    for (const SuperPoly& v : gens) {
                        SuperPoly el = SuperPoly::monomial(m) * v;
                        if (!el.is_zero()) span.push_back(el);
                    }
                }
    report.info["spanning_elements"] = std::to_string(span.size());

    sweep_collect(report, span.size() * tkk::DIM, mode, [&](std::size_t idx) -> std::string {
        std::size_t s = idx / tkk::DIM, x = idx % tkk::DIM;
        if (!reduce_mod_I(chi, span[s]).is_zero()) return "spanning element does not reduce to zero";
        SuperPoly img = ops.pi[x].apply(span[s]);
        if (!reduce_mod_I(chi, img).is_zero())
            return "pi(" + ops.table.info(x).name + ") leaves the submodule on a degree-" +
                   std::to_string(span[s].degree()) + " element";
        return "";
    });
    return report;
}

namespace {

struct MonoIndexer {
    std::vector<Mono> monos;
    explicit MonoIndexer(Branch branch, unsigned max_degree) : monos(normal_monos_upto(branch, max_degree)) {}
    std::size_t size() const { return monos.size(); }
    Vec coords(const SuperPoly& p) const {
        Vec v(monos.size());
        std::size_t found = 0;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            Scalar c = p.coeff(monos[i]);
            if (!c.is_zero()) ++found;
            v[i] = std::move(c);
        }
        if (found != p.terms().size()) throw structure_error("polynomial has non-normal monomials");
        return v;
    }
};

} // namespace

std::vector<std::size_t> gk_growth(const Character& chi, unsigned max_k) {
    chi.require_quotient();
    ModelOps ops(chi);
    MonoIndexer idx(chi.branch, max_k + 1);
    auto poly_of = [&](const Vec& row) {
        SuperPoly p;
        for (std::size_t i = 0; i < row.size(); ++i)
            if (!row[i].is_zero()) p.add_term(idx.monos[i], row[i]);
        return p;
    };

    std::vector<std::size_t> dims;
    // images of a spanning set span the next filtration step, so it is enough
    // to keep an echelon basis between generations
    Mat echelon = row_echelon_basis({idx.coords(SuperPoly(Scalar(1)))});
    dims.push_back(echelon.size());
    for (unsigned k = 1; k <= max_k; ++k) {
        Mat candidate = echelon;
        for (const Vec& row : echelon) {
            SuperPoly v = poly_of(row);
            for (std::size_t x = 0; x < tkk::DIM; ++x) {
                SuperPoly img = reduce_mod_I(chi, ops.rho[x].apply(v));
                if (!img.is_zero()) candidate.push_back(idx.coords(img));
            }
        }
        echelon = row_echelon_basis(std::move(candidate));
        dims.push_back(echelon.size());
    }
    return dims;
}

Mat op_matrix_on_level(const Character& chi, const DiffOp& op, unsigned k) {
    std::vector<SuperPoly> basis = normal_basis(chi.branch, k);
    std::size_t n = basis.size();
    Mat m = mat_zero(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        SuperPoly img = reduce_mod_I(chi, op.apply(basis[j]));
        std::size_t found = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Scalar c = img.coeff(basis[i].terms().begin()->first);
            if (!c.is_zero()) ++found;
            m[i][j] = std::move(c);
        }
        if (found != img.terms().size())
            throw structure_error("operator does not preserve the level-" + std::to_string(k) + " component");
    }
    return m;
}

std::vector<Mat> fock_level_matrices(const Character& chi, unsigned k) {
    ModelOps ops(chi);
    std::vector<Mat> out;
    for (std::size_t slot : ModelOps::k0_slots()) out.push_back(op_matrix_on_level(chi, ops.rho[slot], k));
    return out;
}

std::vector<Mat> expected_k0_matrices(unsigned k, const Scalar& alpha) {
    // Basis order: z1^k, z1^{k-1}z2, z1^{k-1}z3, z1^{k-1}z4.
    Scalar kk(static_cast<long>(k));
    Scalar amk1 = alpha - kk + Scalar(1);
    Scalar onep = Scalar(1) + alpha;
    Mat de1xi = mat_zero(4, 4), de1eta = mat_zero(4, 4), dxixi = mat_zero(4, 4), detaeta = mat_zero(4, 4),
        dxieta = mat_zero(4, 4);
    de1xi[2][0] = -kk;
    de1xi[2][1] = Scalar(1);
    de1xi[0][3] = Scalar(2);
    de1xi[1][3] = Scalar(-2) * amk1;
    de1eta[3][0] = -kk;
    de1eta[3][1] = Scalar(1);
    de1eta[1][2] = Scalar(2) * amk1;
    de1eta[0][2] = Scalar(-2);
    dxixi[2][3] = Scalar(4) * onep;
    detaeta[3][2] = Scalar(-4) * onep;
    dxieta[2][2] = Scalar(-2) * onep;
    dxieta[3][3] = Scalar(2) * onep;
    return {de1xi, de1eta, dxixi, detaeta, dxieta};
}

namespace {

// Coordinates of span{vectors} closure under matrices, via orbit iteration.
Mat orbit_span(const std::vector<Mat>& mats, Mat seed) {
    Mat span = row_echelon_basis(std::move(seed));
    for (;;) {
        Mat candidate = span;
        for (const Vec& v : span)
            for (const Mat& m : mats) candidate.push_back(mat_apply(m, v));
        Mat next = row_echelon_basis(std::move(candidate));
        if (next.size() == span.size()) return next;
        span = std::move(next);
    }
}

bool subspace_invariant(const std::vector<Mat>& mats, const Mat& basis_rows) {
    Mat span = row_echelon_basis(basis_rows);
    for (const Vec& v : basis_rows)
        for (const Mat& m : mats) {
            Mat joined = span;
            joined.push_back(mat_apply(m, v));
            if (row_echelon_basis(joined).size() != span.size()) return false;
        }
    return true;
}

Vec h_header(unsigned k, const Scalar& alpha) {
    // z1^{k-1}(z1 + (k-1-alpha) z2) in level coordinates
    Vec v(4);
    v[0] = Scalar(1);
    v[1] = Scalar(static_cast<long>(k - 1)) - alpha;
    return v;
}

Vec top_line(unsigned k) {
    // (z1+z2)^k = z1^{k-1}(z1 + k z2) modulo the submodule
    Vec v(4);
    v[0] = Scalar(1);
    v[1] = Scalar(static_cast<long>(k));
    return v;
}

} // namespace

CheckReport check_fock_decomposition(const Character& chi, unsigned k) {
    CheckReport report("fock-level-decomposition(k=" + std::to_string(k) + ")");
    if (k == 0) {
        report.fail("level must be positive");
        return report;
    }
    std::vector<Mat> mats = fock_level_matrices(chi, k);

    if (chi.branch == Branch::LambdaAlpha && !chi.d_mode) {
        std::vector<Mat> expected = expected_k0_matrices(k, chi.alpha);
        static const char* names[5] = {"4[L(e1),L(xi)]", "4[L(e1),L(eta)]", "4[L(xi),L(xi)]",
                                       "4[L(eta),L(eta)]", "4[L(xi),L(eta)]"};
        for (std::size_t g = 0; g < 5; ++g)
            if (mats[g] != expected[g]) report.fail(std::string("k0 matrix of ") + names[g] + " deviates from the closed form");
    }

    Mat h_rows;
    h_rows.push_back(h_header(k, chi.alpha));
    {
        Vec v(4);
        v[2] = Scalar(1);
        h_rows.push_back(v);
    }
    {
        Vec v(4);
        v[3] = Scalar(1);
        h_rows.push_back(v);
    }
    Mat r_rows;
    r_rows.push_back(top_line(k));

    if (!subspace_invariant(mats, h_rows)) report.fail("H component is not k0-invariant");
    if (!subspace_invariant(mats, r_rows)) report.fail("top line is not k0-invariant");

    Mat joined = h_rows;
    joined.push_back(r_rows[0]);
    if (row_echelon_basis(joined).size() != 4) report.fail("H + top line does not fill the level");
    return report;
}

CheckReport check_fock_irreducibility(const Character& chi, unsigned k) {
    CheckReport report("fock-level-irreducibility(k=" + std::to_string(k) + ")");
    ModelOps ops(chi);
    std::vector<Mat> mats;
    for (const Vec& kb : ops.k_basis()) mats.push_back(op_matrix_on_level(chi, ops.rho_vec(kb), k));

    std::size_t n = k == 0 ? 1 : 4;
    // orbit of every basis vector spans the level
    for (std::size_t j = 0; j < n; ++j) {
        Vec e(n);
        e[j] = Scalar(1);
        if (orbit_span(mats, {e}).size() != n)
            report.fail("orbit of basis vector " + std::to_string(j) + " does not span the level");
    }
    // a couple of mixed vectors as well
    {
        Vec v(n, Scalar(1));
        if (orbit_span(mats, {v}).size() != n) report.fail("orbit of the all-ones vector does not span");
    }
    // Schur-style evidence: the joint commutant is one-dimensional
    if (n == 4) {
        Mat system;
        for (const Mat& m : mats)
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c) {
                    Vec row(16);
                    for (std::size_t s = 0; s < 4; ++s) {
                        row[r * 4 + s] += m[s][c];
                        row[s * 4 + c] -= m[r][s];
                    }
                    system.push_back(std::move(row));
                }
        std::size_t commutant_dim = nullspace(std::move(system)).size();
        report.info["commutant_dim"] = std::to_string(commutant_dim);
        if (commutant_dim != 1) report.fail("joint commutant has dimension " + std::to_string(commutant_dim));
    }
    return report;
}

CheckReport check_fock_indecomposable_minus_one(unsigned k) {
    CheckReport report("fock-level-indecomposability(alpha=-1,k=" + std::to_string(k) + ")");
    Character chi = Character::lambda_alpha(Scalar(-1));
    std::vector<Mat> mats = fock_level_matrices(chi, k);

    Mat r_rows;
    r_rows.push_back(top_line(k));
    if (!subspace_invariant(mats, r_rows)) report.fail("top line is not invariant at alpha = -1");

    // the generic complement header collapses into the top line
    Vec h = h_header(k, chi.alpha);
    Mat joined = r_rows;
    joined.push_back(h);
    if (row_echelon_basis(joined).size() != 1) report.fail("generic complement header stays independent");

    // 2[L(e1),L(xi)] maps z1^{k-1} z4 onto the top line
    Mat m0 = mats[0]; // 4[L(e1),L(xi)]
    Vec e4(4);
    e4[3] = Scalar(1);
    Vec img = mat_apply(m0, e4);
    for (auto& c : img) c *= Scalar(Rat(1, 2));
    Mat check = r_rows;
    check.push_back(img);
    bool img_nonzero = false;
    for (const auto& c : img) img_nonzero |= !c.is_zero();
    if (!img_nonzero || row_echelon_basis(check).size() != 1)
        report.fail("odd generator image does not land on the top line");

    // no invariant complement: a complement would give a joint left eigenvector
    // matching the eigenvalues on the top line
    Vec r = top_line(k);
    Mat stacked;
    for (const Mat& m : mats) {
        Vec mr = mat_apply(m, r);
        // eigenvalue of the invariant line
        Scalar mu;
        for (std::size_t i = 0; i < 4; ++i)
            if (!r[i].is_zero()) {
                mu = mr[i] / r[i];
                break;
            }
        Mat shifted = mat_transpose(m);
        for (std::size_t i = 0; i < 4; ++i) shifted[i][i] -= mu;
        for (auto& row : shifted) stacked.push_back(row);
    }
    // a complement exists only for a joint left eigenvector not vanishing on the line
    Mat candidates = nullspace(std::move(stacked));
    for (const Vec& fvec : candidates) {
        Scalar pairing;
        for (std::size_t i = 0; i < 4; ++i) pairing += fvec[i] * r[i];
        if (!pairing.is_zero()) report.fail("an invariant complement to the top line exists");
    }
    return report;
}

CheckReport check_sl2_triple_action(const Character& chi, unsigned max_k) {
    CheckReport report("sl2-triple-action");
    ModelOps ops(chi);
    Vec e(tkk::DIM), f(tkk::DIM), h(tkk::DIM);
    e[tkk::E1] = e[tkk::E2] = Scalar(1);
    f[tkk::F1] = f[tkk::F2] = Scalar(1);
    h[tkk::LE1] = h[tkk::LE2] = Scalar(1);
    DiffOp rho_f = ops.pi_vec(f), rho_h = ops.pi_vec(h), rho_e = ops.pi_vec(e);

    SuperPoly z1p2 = SuperPoly::gen(1) + SuperPoly::gen(2);
    Scalar lam_h = chi.c1 + chi.c2;
    SuperPoly power(Scalar(1));
    for (unsigned k = 0; k <= max_k; ++k) {
        SuperPoly pk = reduce_mod_I(chi, power);
        Scalar kk(static_cast<long>(k));
        // h acts by lambda(h) - 2k on the top line
        SuperPoly got_h = reduce_mod_I(chi, rho_h.apply(pk));
        if (got_h != pk.scaled(lam_h - Scalar(2) * kk)) report.fail("h eigenvalue wrong at k=" + std::to_string(k));
        // f raises
        SuperPoly got_f = reduce_mod_I(chi, rho_f.apply(pk));
        SuperPoly want_f = reduce_mod_I(chi, (z1p2 * power)).scaled(Scalar(-2) * kI);
        if (got_f != want_f) report.fail("f action wrong at k=" + std::to_string(k));
        // e lowers with the closed-form factor
        SuperPoly prev = k == 0 ? SuperPoly() : reduce_mod_I(chi, [&] {
            SuperPoly p(Scalar(1));
            for (unsigned j = 0; j + 1 < k; ++j) p = p * z1p2;
            return p;
        }());
        SuperPoly got_e = reduce_mod_I(chi, rho_e.apply(pk));
        SuperPoly want_e = prev.scaled(-kI * kHalf * kk * (-lam_h + kk - Scalar(1)));
        if (got_e != want_e) report.fail("e action wrong at k=" + std::to_string(k));
        power = power * z1p2;
    }

    // action on the complement headers; the lambda = 1 branch mirrors with
    // the roles of the even variables swapped and alpha inverted
    {
        bool alpha_branch = chi.branch == Branch::LambdaAlpha;
        Scalar bar = alpha_branch ? chi.alpha : chi.alpha.inverse();
        SuperPoly main_gen = SuperPoly::gen(alpha_branch ? 1 : 2);
        SuperPoly other_gen = SuperPoly::gen(alpha_branch ? 2 : 1);
        for (unsigned k = 1; k + 1 <= max_k; ++k) {
            Scalar kk(static_cast<long>(k));
            auto header = [&](unsigned level) {
                SuperPoly p = main_gen + other_gen.scaled(Scalar(static_cast<long>(level)) - Scalar(1) - bar);
                for (unsigned j = 0; j + 1 < level; ++j) p = p * main_gen;
                return reduce_mod_I(chi, p);
            };
            SuperPoly hk = header(k);
            SuperPoly got_f = reduce_mod_I(chi, rho_f.apply(hk));
            if (got_f != header(k + 1).scaled(Scalar(-2) * kI))
                report.fail("f on the header wrong at k=" + std::to_string(k));
            SuperPoly got_h = reduce_mod_I(chi, rho_h.apply(hk));
            if (got_h != hk.scaled(Scalar(1) + bar - Scalar(2) * kk))
                report.fail("h on the header wrong at k=" + std::to_string(k));
            SuperPoly got_e = reduce_mod_I(chi, rho_e.apply(hk));
            SuperPoly want_e = (k == 1 ? SuperPoly() : header(k - 1))
                                   .scaled(-kI * kHalf * (kk - Scalar(1)) * (kk - Scalar(1) - bar));
            if (got_e != want_e) report.fail("e on the header wrong at k=" + std::to_string(k));
        }
    }
    return report;
}

CheckReport check_euler_identity(const Character& chi) {
    CheckReport report("euler-identity");
    ModelOps ops(chi);
    Vec h(tkk::DIM);
    h[tkk::LE1] = h[tkk::LE2] = Scalar(1);
    DiffOp euler = MD(1, 1) + MD(2, 2) + MD(3, 3) + MD(4, 4);
    DiffOp rhs = DiffOp(chi.c1 + chi.c2) - euler.scaled(Scalar(2));
    if (ops.pi_vec(h) != rhs) report.fail("pi(h) differs from lambda(h) - 2E");
    return report;
}

CheckReport check_rho_exchange(const Character& chi, unsigned max_k) {
    CheckReport report("level-exchange-maps");
    ModelOps ops(chi);
    using namespace tkk;
    DiffOp f2e2 = ops.rho[F2] - ops.rho[E2];
    DiffOp f1e1 = ops.rho[F1] - ops.rho[E1];
    DiffOp de1xi_half = ops.rho[DE1XI].scaled(kHalf);

    for (unsigned k = 1; k <= max_k; ++k) {
        Scalar kk(static_cast<long>(k));
        DiffOp rho_k = compose(de1xi_half, ops.rho[DE1ETA]) -
                       compose(f2e2, f2e2).scaled(Scalar(1) + chi.alpha);
        Scalar denom = Scalar(2) * (chi.alpha - Scalar(2) * kk + Scalar(1));
        DiffOp rho_k_prime =
            compose(f2e2.scaled(denom.inverse()),
                    f2e2.scaled(Scalar(2) * kk - chi.alpha) + f1e1);

        SuperPoly from = normal_basis(chi.branch, k)[1]; // z1^{k-1} z2
        Vec target = top_line(k);
        SuperPoly target_poly;
        {
            auto basis = normal_basis(chi.branch, k);
            target_poly = basis[0].scaled(target[0]) + basis[1].scaled(target[1]);
        }
        // rho_k sends z1^{k-1} z2 to a nonzero multiple of the top line
        SuperPoly img = reduce_mod_I(chi, rho_k.apply(from));
        const Mono& probe = target_poly.terms().begin()->first;
        Scalar mu = img.coeff(probe) / target_poly.coeff(probe);
        if (mu.is_zero() || img != target_poly.scaled(mu))
            report.fail("forward exchange fails at k=" + std::to_string(k));
        // rho'_k sends the top line back to a nonzero multiple of z1^{k-1} z2
        SuperPoly back = reduce_mod_I(chi, rho_k_prime.apply(target_poly));
        Scalar cb = back.coeff(from.terms().begin()->first);
        if (back.is_zero() || back != from.scaled(cb) || cb.is_zero())
            report.fail("reverse exchange fails at k=" + std::to_string(k));
    }
    return report;
}

} // namespace d21a
