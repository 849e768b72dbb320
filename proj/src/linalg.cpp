#include "iwa/linalg.hpp"

#include <cassert>

namespace iwa {

Mat mat_zero(size_t rows, size_t cols) { return Mat(rows, Vec(cols, GScalar(0))); }

Mat mat_identity(size_t n) {
    Mat a = mat_zero(n, n);
    for (size_t i = 0; i < n; ++i) a[i][i] = GScalar(1);
    return a;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    assert(!a.empty() && !b.empty() && a[0].size() == b.size());
    Mat c = mat_zero(a.size(), b[0].size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Vec mat_apply(const Mat& a, const Vec& x) {
    assert(!a.empty() && a[0].size() == x.size());
    Vec y(a.size(), GScalar(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            if (!a[i][j].is_zero() && !x[j].is_zero()) y[i] += a[i][j] * x[j];
    return y;
}

Mat mat_transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t = mat_zero(a[0].size(), a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Mat mat_conj_transpose(const Mat& a) {
    Mat t = mat_transpose(a);
    for (auto& row : t)
        for (auto& z : row) z = z.conj();
    return t;
}

GScalar mat_det(Mat a) {
    assert(a.size() == (a.empty() ? 0 : a[0].size()));
    size_t n = a.size();
    GScalar det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return GScalar(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            GScalar f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

std::vector<size_t> rref(Mat& a) {
    std::vector<size_t> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        GScalar inv = GScalar(1) / a[row][col];
        for (size_t c = col; c < cols; ++c) a[row][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            GScalar f = a[r][col];
            for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    a.resize(row, Vec(cols, GScalar(0)));
    return pivots;
}

size_t rank(Mat a) { return rref(a).size(); }

std::vector<Vec> kernel_basis(const Mat& a) {
    if (a.empty()) return {};
    Mat r = a;
    std::vector<size_t> pivots = rref(r);
    size_t cols = a[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols, GScalar(0));
        v[free_col] = GScalar(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (a.empty()) {
        for (const auto& z : b)
            if (!z.is_zero()) return std::nullopt;
        return Vec{};
    }
    size_t cols = a[0].size();
    Mat aug = a;
    for (size_t i = 0; i < a.size(); ++i) aug[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(aug);
    Vec x(cols, GScalar(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return std::nullopt;  // inconsistent row 0 ... 0 | 1
        x[pivots[i]] = aug[i][cols];
    }
    return x;
}

Mat inverse(const Mat& a) {
    size_t n = a.size();
    Mat aug = a;
    for (size_t i = 0; i < n; ++i) {
        assert(a[i].size() == n);
        for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? GScalar(1) : GScalar(0));
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw FrameSingular("matrix not invertible");
    Mat inv = mat_zero(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return {};
    Mat a = vectors;
    rref(a);
    return a;
}

bool in_span(const Vec& v, const std::vector<Vec>& vectors) {
    Mat a = vectors;
    size_t r0 = rank(a);
    a = vectors;
    a.push_back(v);
    return rank(a) == r0;
}

std::optional<Vec> coordinates_in(const Vec& v, const std::vector<Vec>& basis) {
    if (basis.empty()) {
        for (const auto& z : v)
            if (!z.is_zero()) return std::nullopt;
        return Vec{};
    }
    return solve(mat_transpose(basis), v);
}

std::vector<Vec> span_sum(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    std::vector<Vec> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return span_basis(all);
}

std::vector<Vec> span_intersection(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.empty() || b.empty()) return {};
    // x in both spans: x = sum c_i a_i = sum d_j b_j; kernel of [A^T | -B^T].
    size_t dim = a[0].size();
    Mat sys = mat_zero(dim, a.size() + b.size());
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t i = 0; i < dim; ++i) sys[i][j] = a[j][i];
    for (size_t j = 0; j < b.size(); ++j)
        for (size_t i = 0; i < dim; ++i) sys[i][a.size() + j] = -b[j][i];
    std::vector<Vec> result;
    for (const Vec& k : kernel_basis(sys)) {
        Vec x(dim, GScalar(0));
        for (size_t j = 0; j < a.size(); ++j)
            for (size_t i = 0; i < dim; ++i) x[i] += k[j] * a[j][i];
        result.push_back(std::move(x));
    }
    return span_basis(result);
}

bool is_hermitian(const Mat& h) {
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = 0; j < h.size(); ++j)
            if (h[i][j] != h[j][i].conj()) return false;
    return true;
}

bool is_antisymmetric(const Mat& h) {
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = 0; j < h.size(); ++j)
            if (h[i][j] != -h[j][i]) return false;
    return true;
}

std::pair<int, int> hermitian_signature(Mat h) {
    size_t n = h.size();
    if (!is_hermitian(h)) throw std::runtime_error("signature of non-Hermitian matrix");
    int minus = 0, plus = 0;
    // B(x,y) = x^T h conj(y); basis change x -> x + c e_k updates rows/cols.
    for (size_t k = 0; k < n; ++k) {
        if (h[k][k].is_zero()) {
            size_t sw = k + 1;
            for (; sw < n; ++sw)
                if (!h[sw][sw].is_zero()) break;
            if (sw < n) {
                std::swap(h[k], h[sw]);
                for (auto& row : h) std::swap(row[k], row[sw]);
            } else {
                // all remaining diagonal zero; use an off-diagonal entry
                size_t i = k, j = k;
                bool found = false;
                for (size_t a = k; a < n && !found; ++a)
                    for (size_t b = a + 1; b < n && !found; ++b)
                        if (!h[a][b].is_zero()) {
                            i = a;
                            j = b;
                            found = true;
                        }
                if (!found) break;  // identically zero block
                GScalar c = (h[i][j].re() != 0) ? GScalar(1) : GScalar::i();
                // e_i <- e_i + c e_j : row_i += c row_j, col_i += conj(c) col_j
                for (size_t b = 0; b < n; ++b) h[i][b] += c * h[j][b];
                for (size_t a = 0; a < n; ++a) h[a][i] += c.conj() * h[a][j];
                if (i != k) {
                    std::swap(h[k], h[i]);
                    for (auto& row : h) std::swap(row[k], row[i]);
                }
            }
        }
        if (h[k][k].is_zero()) break;
        if (h[k][k].im() != 0) throw std::runtime_error("Hermitian diagonal not real");
        if (h[k][k].re() > 0)
            ++plus;
        else
            ++minus;
        for (size_t r = k + 1; r < n; ++r) {
            if (h[r][k].is_zero()) continue;
            GScalar f = h[r][k] / h[k][k];
            for (size_t b = 0; b < n; ++b) h[r][b] -= f * h[k][b];
            for (size_t a = 0; a < n; ++a) h[a][r] -= f.conj() * h[a][k];
        }
    }
    return {minus, plus};
}

}  // namespace iwa
