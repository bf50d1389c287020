#include "d21a/linalg.hpp"

#include "d21a/errors.hpp"

namespace d21a {

Mat mat_zero(std::size_t rows, std::size_t cols) { return Mat(rows, Vec(cols)); }

Mat mat_identity(std::size_t n) {
    Mat a = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) a[i][i] = Scalar(1);
    return a;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    Mat r = mat_zero(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b[l][j].is_zero()) continue;
                r[i][j] += a[i][l] * b[l][j];
            }
        }
    return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
    Mat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    Mat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

Mat mat_scaled(const Mat& a, const Scalar& c) {
    Mat r = a;
    for (auto& row : r)
        for (auto& x : row) x *= c;
    return r;
}

Mat mat_transpose(const Mat& a) {
    if (a.empty()) return a;
    Mat r = mat_zero(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

Mat mat_conj(const Mat& a) {
    Mat r = a;
    for (auto& row : r)
        for (auto& x : row) x = x.conj();
    return r;
}

Vec mat_apply(const Mat& a, const Vec& v) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) r[i] += a[i][j] * v[j];
    return r;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

namespace {

// In-place fraction-free-ish elimination; returns (rank, det sign flips, pivots).
struct Elim {
    std::size_t rank = 0;
    int sign = 1;
    std::vector<std::size_t> pivot_cols;
};

Elim eliminate(Mat& a, bool reduce_up) {
    Elim e;
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            e.sign = -e.sign;
        }
        Scalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        std::size_t start = reduce_up ? 0 : r + 1;
        for (std::size_t i = start; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    return e;
}

} // namespace

Scalar det(Mat a) {
    std::size_t n = a.size();
    if (n == 0) return Scalar(1);
    Scalar d(1);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (!a[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) return Scalar();
        if (piv != c) {
            std::swap(a[piv], a[c]);
            sign = -sign;
        }
        d *= a[c][c];
        Scalar inv = a[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            Scalar f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return sign < 0 ? -d : d;
}

std::size_t rank(Mat a) { return eliminate(a, false).rank; }

Mat row_echelon_basis(Mat a) {
    Elim e = eliminate(a, true);
    a.resize(e.rank);
    return a;
}

std::optional<Vec> solve(Mat a, Vec b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    Elim e = eliminate(a, true);
    Vec x(cols);
    for (std::size_t r = 0; r < e.rank; ++r) {
        std::size_t c = e.pivot_cols[r];
        if (c == cols) return std::nullopt; // pivot in the rhs column: inconsistent
        x[c] = a[r][cols];
    }
    return x;
}

Mat nullspace(Mat a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    Elim e = eliminate(a, true);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    Mat basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols);
        v[c] = Scalar(1);
        for (std::size_t r = 0; r < e.rank; ++r) v[e.pivot_cols[r]] = -a[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat mat_inverse(Mat a) {
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec id(n);
        id[i] = Scalar(1);
        a[i].insert(a[i].end(), id.begin(), id.end());
    }
    Elim e = eliminate(a, true);
    if (e.rank != n) throw arithmetic_error("matrix is singular");
    Mat inv = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

} // namespace d21a
