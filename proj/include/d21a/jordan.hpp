#pragma once

#include <string>
#include <vector>

#include "d21a/liealg.hpp"
#include "d21a/linalg.hpp"
#include "d21a/report.hpp"

namespace d21a {

/// Basis order of the Jordan superalgebra D_alpha: e1, e2 (even), xi, eta (odd).
namespace jrd {
enum : std::size_t { E1 = 0, E2, XI, ETA, DIM };
}

/// The (2|2)-dimensional Jordan superalgebra with xi*eta = e1 + alpha*e2.
class JordanAlgebra {
public:
    explicit JordanAlgebra(Scalar alpha = Scalar::param());

    const Scalar& alpha() const { return alpha_; }
    int parity(std::size_t i) const { return i >= jrd::XI; }
    const std::string& name(std::size_t i) const { return names_[i]; }

    /// Product of basis elements as a coordinate vector.
    const Vec& mul(std::size_t i, std::size_t j) const { return table_[i * jrd::DIM + j]; }
    Vec mul_vec(const Vec& x, const Vec& y) const;

    /// Left multiplication operator L_x for a basis element (4x4 supermatrix).
    Mat l_matrix(std::size_t i) const;
    Mat l_matrix_vec(const Vec& x) const;

    /// Graded Jordan identity over all basis triples.
    CheckReport check_jordan_identity() const;

    /// Table with the product xi*eta perturbed; a negative control for the identity check.
    JordanAlgebra perturbed() const;

private:
    Scalar alpha_;
    std::vector<std::string> names_;
    std::vector<Vec> table_; // table_[i*4+j] = coordinates of b_i * b_j
};

/// Supermatrix bracket A B - (-1)^{|A||B|} B A.
Mat supermat_bracket(const Mat& a, int pa, const Mat& b, int pb);

/// Basis of the structure algebra str(D_alpha) as 4x4 supermatrices.
/// Generic mode: 2L_{e1}, 2L_{e2}, 2L_xi, 2L_eta, 4[L_{e1},L_xi], 4[L_{e1},L_eta],
/// 4[L_xi,L_xi], 4[L_eta,L_eta], 4[L_xi,L_eta].
/// At alpha = -1 the last three inner derivations vanish and are replaced by the
/// outer derivations d_minus, d_plus, d_zero.
struct StrBasis {
    std::vector<Mat> mats;
    std::vector<std::string> names;
    std::vector<int> parities;
    std::vector<bool> is_l_type; // true for the pure multiplication generators
    std::vector<std::string> warnings;
};
StrBasis build_str(const JordanAlgebra& j, bool d_mode);

/// Basis order of the TKK algebra: f1 f2 zeta theta | str(9) | e1 e2 xi eta.
namespace tkk {
enum : std::size_t {
    F1 = 0, F2, ZETA, THETA,
    LE1, LE2, LXI, LETA, DE1XI, DE1ETA, DXIXI, DETAETA, DXIETA,
    E1, E2, XI, ETA,
    DIM
};
inline constexpr std::size_t STR0 = LE1;
inline constexpr std::size_t PLUS0 = E1;
} // namespace tkk

/// The 3-graded Lie superalgebra built on D_alpha^- + str(D_alpha) + D_alpha^+.
StructureTable build_tkk(const JordanAlgebra& j, bool d_mode = false);

/// Verifies the explicit dictionary between the TKK table and the Scheunert-type
/// table: bracket, parity and grading preservation on all ordered pairs.
/// With d_mode the comparison runs at alpha = -1 with the d_-, d_+, d_0 dictionary.
CheckReport check_tkk_isomorphism(bool d_mode = false, ExecMode mode = ExecMode::Parallel);

/// The dictionary itself: column i = coordinates in the Gamma basis of the
/// image of TKK basis element i.
Mat tkk_dictionary(bool d_mode);

/// Cross-check of the Jordan product x.y = (1/2)[[x, F2+F3], y] on the +2 part
/// of the Scheunert-type table against the D_alpha multiplication table.
CheckReport check_gplus_jordan_product();

} // namespace d21a
