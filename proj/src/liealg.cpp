#include "d21a/liealg.hpp"

#include <array>

#include "d21a/errors.hpp"

namespace d21a {

StructureTable::StructureTable(std::vector<BasisInfo> basis, std::vector<Vec> brackets)
    : basis_(std::move(basis)), brackets_(std::move(brackets)) {
    if (brackets_.size() != basis_.size() * basis_.size())
        throw structure_error("bracket table size mismatch");
}

Vec StructureTable::bracket_vec(const Vec& x, const Vec& y) const {
    std::size_t n = dim();
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Vec& b = bracket(i, j);
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!b[k].is_zero()) out[k] += c * b[k];
        }
    }
    return out;
}

std::size_t StructureTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return i;
    throw structure_error("unknown basis element '" + name + "'");
}

StructureTable StructureTable::specialize(const Rat& alpha0) const {
    std::vector<Vec> br = brackets_;
    for (auto& v : br)
        for (auto& c : v) c = Scalar(c.eval_at(alpha0));
    return StructureTable(basis_, std::move(br));
}

Mat StructureTable::ad(std::size_t i) const {
    std::size_t n = dim();
    Mat m = mat_zero(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec& b = bracket(i, j);
        for (std::size_t k = 0; k < n; ++k) m[k][j] = b[k];
    }
    return m;
}

namespace {

// One sl(2) copy acting on u_+ = 0, u_- = 1.
// E: u- -> u+;  F: u+ -> u-;  H: u_s -> (+-1) u_s.
struct SlAction {
    // returns coefficient and image sign slot; false when killed
    static bool act(char gen, int s, int& out_s, int& coeff) {
        switch (gen) {
            case 'E':
                if (s == 1) {
                    out_s = 0;
                    coeff = 1;
                    return true;
                }
                return false;
            case 'F':
                if (s == 0) {
                    out_s = 1;
                    coeff = 1;
                    return true;
                }
                return false;
            case 'H':
                out_s = s;
                coeff = (s == 0) ? 1 : -1;
                return true;
        }
        return false;
    }
};

std::size_t odd_index(int s1, int s2, int s3) {
    return gam::U_PPP + static_cast<std::size_t>(s1 * 4 + s2 * 2 + s3);
}

int psi(int s, int t) {
    // psi(u+, u-) = 1, psi(u-, u+) = -1, zero otherwise.
    if (s == 0 && t == 1) return 1;
    if (s == 1 && t == 0) return -1;
    return 0;
}

// p_i(u_s, u_t) as a vector over {E_i, H_i, F_i}: p(u+,u+) = 2E, p(u+,u-) = p(u-,u+) = -H, p(u-,u-) = -2F.
void p_pair(int s, int t, int& cE, int& cH, int& cF) {
    cE = cH = cF = 0;
    if (s == 0 && t == 0)
        cE = 2;
    else if (s == 1 && t == 1)
        cF = -2;
    else
        cH = -1;
}

std::string sign_name(int s) { return s == 0 ? "+" : "-"; }

} // namespace

StructureTable build_gamma(const Scalar& s1, const Scalar& s2, const Scalar& s3) {
    using namespace gam;
    const std::size_t n = DIM;
    std::vector<BasisInfo> basis(n);
    const char* even_names[9] = {"H1", "H2", "H3", "E1", "E2", "E3", "F1", "F2", "F3"};
    for (std::size_t i = 0; i < 9; ++i) basis[i] = BasisInfo{even_names[i], 0, 0};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                std::size_t idx = odd_index(a, b, c);
                basis[idx] = BasisInfo{"u(" + sign_name(a) + "," + sign_name(b) + "," + sign_name(c) + ")", 1, 0};
            }
    // gradings: ad(H2+H3) eigenvalues
    basis[E2].grading = basis[E3].grading = 2;
    basis[F2].grading = basis[F3].grading = -2;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                basis[odd_index(a, b, c)].grading = (b == 0 ? 1 : -1) + (c == 0 ? 1 : -1);

    std::vector<Vec> br(n * n, Vec(n));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, Scalar c) { br[i * n + j][k] += std::move(c); };

    // sl(2) x sl(2) x sl(2) relations
    for (std::size_t copy = 0; copy < 3; ++copy) {
        std::size_t H = H1 + copy, E = E1 + copy, F = F1 + copy;
        set(H, E, E, Scalar(2));
        set(E, H, E, Scalar(-2));
        set(H, F, F, Scalar(-2));
        set(F, H, F, Scalar(2));
        set(E, F, H, Scalar(1));
        set(F, E, H, Scalar(-1));
    }

    // outer tensor action of the even part on the odd cube
    struct Gen {
        std::size_t idx;
        char type;
        int slot;
    };
    std::vector<Gen> gens;
    for (int copy = 0; copy < 3; ++copy) {
        gens.push_back({H1 + static_cast<std::size_t>(copy), 'H', copy});
        gens.push_back({E1 + static_cast<std::size_t>(copy), 'E', copy});
        gens.push_back({F1 + static_cast<std::size_t>(copy), 'F', copy});
    }
    for (const Gen& g : gens) {
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c) {
                    int s[3] = {a, b, c};
                    int out_s, coeff;
                    if (!SlAction::act(g.type, s[g.slot], out_s, coeff)) continue;
                    int t[3] = {a, b, c};
                    t[g.slot] = out_s;
                    std::size_t from = odd_index(a, b, c);
                    std::size_t to = odd_index(t[0], t[1], t[2]);
                    set(g.idx, from, to, Scalar(coeff));
                    // odd-even bracket by graded antisymmetry (|odd||even| = 0)
                    set(from, g.idx, to, Scalar(-coeff));
                }
    }

    // odd-odd brackets via the symmetric morphism p
    const Scalar sigma[3] = {s1, s2, s3};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int a2 = 0; a2 < 2; ++a2)
                    for (int b2 = 0; b2 < 2; ++b2)
                        for (int c2 = 0; c2 < 2; ++c2) {
                            std::size_t i = odd_index(a, b, c);
                            std::size_t j = odd_index(a2, b2, c2);
                            int x[3] = {a, b, c};
                            int y[3] = {a2, b2, c2};
                            for (int slot = 0; slot < 3; ++slot) {
                                int o1 = (slot + 1) % 3, o2 = (slot + 2) % 3;
                                int w = psi(x[o1], y[o1]) * psi(x[o2], y[o2]);
                                if (w == 0) continue;
                                int cE, cH, cF;
                                p_pair(x[slot], y[slot], cE, cH, cF);
                                Scalar weight = sigma[slot] * Scalar(w);
                                if (cE) set(i, j, E1 + static_cast<std::size_t>(slot), weight * Scalar(cE));
                                if (cH) set(i, j, H1 + static_cast<std::size_t>(slot), weight * Scalar(cH));
                                if (cF) set(i, j, F1 + static_cast<std::size_t>(slot), weight * Scalar(cF));
                            }
                        }

    return StructureTable(std::move(basis), std::move(br));
}

StructureTable build_d21a() {
    Scalar a = Scalar::param();
    Scalar half = Scalar(Rat(1, 2));
    return build_gamma((Scalar(1) + a) * half, -half, -a * half);
}

CheckReport check_super_jacobi(const StructureTable& t, ExecMode mode) {
    CheckReport report("super-jacobi");
    std::size_t n = t.dim();
    report.info["triples"] = std::to_string(n * n * n);

    // antisymmetry first
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int sign = (t.info(i).parity & t.info(j).parity) ? 1 : -1;
            const Vec& ij = t.bracket(i, j);
            const Vec& ji = t.bracket(j, i);
            for (std::size_t k = 0; k < n; ++k) {
                Scalar rhs = sign < 0 ? -ji[k] : ji[k];
                if (ij[k] != rhs) {
                    report.fail("antisymmetry fails at (" + t.info(i).name + ", " + t.info(j).name + ")");
                    break;
                }
            }
        }

    sweep_collect(report, n * n * n, mode, [&](std::size_t idx) -> std::string {
        std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
        int pi = t.info(i).parity, pj = t.info(j).parity, pk = t.info(k).parity;
        // (-1)^{|i||k|} [[i,j],k] + (-1)^{|j||i|} [[j,k],i] + (-1)^{|k||j|} [[k,i],j] = 0
        Vec acc(n);
        auto add_cyclic = [&](std::size_t x, std::size_t y, std::size_t z, int sign) {
            const Vec& inner = t.bracket(x, y);
            for (std::size_t m = 0; m < n; ++m) {
                if (inner[m].is_zero()) continue;
                const Vec& outer = t.bracket(m, z);
                for (std::size_t r = 0; r < n; ++r) {
                    if (outer[r].is_zero()) continue;
                    Scalar c = inner[m] * outer[r];
                    acc[r] += sign < 0 ? -c : c;
                }
            }
        };
        add_cyclic(i, j, k, (pi & pk) ? -1 : 1);
        add_cyclic(j, k, i, (pj & pi) ? -1 : 1);
        add_cyclic(k, i, j, (pk & pj) ? -1 : 1);
        for (std::size_t r = 0; r < n; ++r)
            if (!acc[r].is_zero())
                return "jacobi fails at (" + t.info(i).name + ", " + t.info(j).name + ", " + t.info(k).name +
                       "): component " + t.info(r).name + " = " + acc[r].str();
        return "";
    });
    return report;
}

CheckReport check_grading_compatibility(const StructureTable& t) {
    CheckReport report("grading-compatibility");
    std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int g = t.info(i).grading + t.info(j).grading;
            const Vec& b = t.bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (b[k].is_zero()) continue;
                if (g < -2 || g > 2) {
                    report.fail("nonzero bracket outside the grading range at (" + t.info(i).name + ", " +
                                t.info(j).name + ")");
                    break;
                }
                if (t.info(k).grading != g) {
                    report.fail("grading mismatch at (" + t.info(i).name + ", " + t.info(j).name + ") -> " +
                                t.info(k).name);
                    break;
                }
            }
        }
    return report;
}

GradingDecomposition grading_decomposition(const StructureTable& t) {
    std::size_t n = t.dim();
    std::size_t h2 = t.index_of("H2"), h3 = t.index_of("H3");
    GradingDecomposition dec;
    for (std::size_t j = 0; j < n; ++j) {
        const Vec& v2 = t.bracket(h2, j);
        const Vec& v3 = t.bracket(h3, j);
        // [h, b_j] must be a multiple of b_j
        Scalar eig;
        for (std::size_t k = 0; k < n; ++k) {
            Scalar c = v2[k] + v3[k];
            if (c.is_zero()) continue;
            if (k != j) throw structure_error("ad(H2+H3) is not diagonal on basis element " + t.info(j).name);
            eig = c;
        }
        if (eig == Scalar(-2))
            dec.minus.push_back(j);
        else if (eig.is_zero())
            dec.zero.push_back(j);
        else if (eig == Scalar(2))
            dec.plus.push_back(j);
        else
            throw structure_error("unexpected ad(H2+H3) eigenvalue " + eig.str() + " at " + t.info(j).name);
    }
    return dec;
}

CheckReport check_short_sl2(const StructureTable& t) {
    CheckReport report("short-sl2");
    std::size_t n = t.dim();
    Vec e(n), f(n), h(n);
    e[t.index_of("E2")] = Scalar(1);
    e[t.index_of("E3")] = Scalar(1);
    f[t.index_of("F2")] = Scalar(1);
    f[t.index_of("F3")] = Scalar(1);
    h[t.index_of("H2")] = Scalar(1);
    h[t.index_of("H3")] = Scalar(1);

    auto expect = [&](const Vec& got, const Vec& want, const std::string& what) {
        for (std::size_t k = 0; k < n; ++k)
            if (got[k] != want[k]) {
                report.fail("short subalgebra relation " + what + " fails");
                return;
            }
    };
    Vec two_e = e, minus_two_f = f;
    for (auto& c : two_e) c *= Scalar(2);
    for (auto& c : minus_two_f) c *= Scalar(-2);
    expect(t.bracket_vec(h, e), two_e, "[h,e]=2e");
    expect(t.bracket_vec(h, f), minus_two_f, "[h,f]=-2f");
    expect(t.bracket_vec(e, f), h, "[e,f]=h");
    return report;
}

} // namespace d21a
