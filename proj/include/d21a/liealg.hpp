#pragma once

#include <string>
#include <vector>

#include "d21a/linalg.hpp"
#include "d21a/report.hpp"
#include "d21a/sweep.hpp"

namespace d21a {

struct BasisInfo {
    std::string name;
    int parity = 0;  // 0 even, 1 odd
    int grading = 0; // eigenvalue of ad(h): -2, 0, +2
};

/// A finite-dimensional Lie superalgebra given by structure constants over
/// Q(i)(a). Brackets are stored for all ordered basis pairs.
class StructureTable {
public:
    StructureTable(std::vector<BasisInfo> basis, std::vector<Vec> brackets);

    std::size_t dim() const { return basis_.size(); }
    const BasisInfo& info(std::size_t i) const { return basis_[i]; }
    const std::vector<BasisInfo>& basis() const { return basis_; }
    /// Coordinates of [b_i, b_j].
    const Vec& bracket(std::size_t i, std::size_t j) const { return brackets_[i * dim() + j]; }

    /// Bilinear extension to coordinate vectors.
    Vec bracket_vec(const Vec& x, const Vec& y) const;

    /// Index of a basis element by name; throws structure_error when missing.
    std::size_t index_of(const std::string& name) const;

    /// Exact substitution a := alpha0 in every structure constant.
    StructureTable specialize(const Rat& alpha0) const;

    /// ad of the basis element i as a dim x dim matrix (columns = images).
    Mat ad(std::size_t i) const;

private:
    std::vector<BasisInfo> basis_;
    std::vector<Vec> brackets_;
};

/// Basis order of the Scheunert-type construction: H1 H2 H3 E1 E2 E3 F1 F2 F3,
/// then the eight odd vectors u_{s1 s2 s3} in lexicographic sign order (+ first).
namespace gam {
enum : std::size_t {
    H1 = 0, H2, H3, E1, E2, E3, F1, F2, F3,
    U_PPP, U_PPM, U_PMP, U_PMM, U_MPP, U_MPM, U_MMP, U_MMM,
    DIM
};
}

/// The 17-dimensional algebra Gamma(sigma1, sigma2, sigma3) built from three
/// sl(2) copies and the symmetric morphism p on the odd cube.
StructureTable build_gamma(const Scalar& s1, const Scalar& s2, const Scalar& s3);

/// D(2,1;a) = Gamma((1+a)/2, -1/2, -a/2) with symbolic a.
StructureTable build_d21a();

/// Graded Jacobi identity on all basis triples; also validates the graded
/// antisymmetry of the table. Empty failure list = pass.
CheckReport check_super_jacobi(const StructureTable& t, ExecMode mode = ExecMode::Parallel);

/// Grading compatibility [g_i, g_j] in g_{i+j} (with g_{+-4} = 0).
CheckReport check_grading_compatibility(const StructureTable& t);

/// Decomposes the basis into ad(h)-eigenspaces for h = H2 + H3. Every basis
/// vector must be an eigenvector with eigenvalue -2, 0 or +2.
struct GradingDecomposition {
    std::vector<std::size_t> minus, zero, plus;
};
GradingDecomposition grading_decomposition(const StructureTable& t);

/// Relations of the short subalgebra {E2+E3, H2+H3, F2+F3}.
CheckReport check_short_sl2(const StructureTable& t);

} // namespace d21a
