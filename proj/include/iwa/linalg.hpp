#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iwa/rational.hpp"

namespace iwa {

using Vec = std::vector<GScalar>;
using Mat = std::vector<Vec>;

Mat mat_zero(size_t rows, size_t cols);
Mat mat_identity(size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& x);
Mat mat_transpose(const Mat& a);
Mat mat_conj_transpose(const Mat& a);
GScalar mat_det(Mat a);

// Row-reduced echelon form in place, deterministic lexicographic pivot order.
// Returns the pivot column of each surviving row.
std::vector<size_t> rref(Mat& a);

size_t rank(Mat a);
std::vector<Vec> kernel_basis(const Mat& a);          // right null space of a (a x = 0)
std::optional<Vec> solve(const Mat& a, const Vec& b); // any solution of a x = b
Mat inverse(const Mat& a);                            // throws FrameSingular if singular

// Canonical basis (RREF rows) of the span of the given vectors.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors);
bool in_span(const Vec& v, const std::vector<Vec>& vectors);
// Coordinates of v in the given (independent) spanning set; nullopt if outside.
std::optional<Vec> coordinates_in(const Vec& v, const std::vector<Vec>& basis);
std::vector<Vec> span_sum(const std::vector<Vec>& a, const std::vector<Vec>& b);
std::vector<Vec> span_intersection(const std::vector<Vec>& a, const std::vector<Vec>& b);

// Signature (n_minus, n_plus) of a Hermitian matrix by exact congruence
// diagonalization; the difference n - n_minus - n_plus counts null directions.
std::pair<int, int> hermitian_signature(Mat h);

bool is_hermitian(const Mat& h);
bool is_antisymmetric(const Mat& h);

}  // namespace iwa
