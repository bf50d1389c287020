#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "d21a/scalar.hpp"

namespace d21a {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>; // row major

Mat mat_zero(std::size_t rows, std::size_t cols);
Mat mat_identity(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scaled(const Mat& a, const Scalar& c);
Mat mat_transpose(const Mat& a);
Mat mat_conj(const Mat& a);
Vec mat_apply(const Mat& a, const Vec& v);
bool mat_is_zero(const Mat& a);

Scalar det(Mat a);

/// Rank over the fraction field Q(i)(a) by Gaussian elimination.
std::size_t rank(Mat a);

/// Row space basis in echelon form (for span comparisons and intersections).
Mat row_echelon_basis(Mat a);

/// Solves A x = b exactly; empty when inconsistent.
std::optional<Vec> solve(Mat a, Vec b);

/// Nullspace basis of A (as rows).
Mat nullspace(Mat a);

/// Inverse of a square matrix; throws arithmetic_error when singular.
Mat mat_inverse(Mat a);

} // namespace d21a
