#pragma once

#include <vector>

#include "acp/bigreal.hpp"

namespace acp {

using Vec = std::vector<BigReal>;

// Dense row-major matrix of BigReal.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols, Precision p)
        : rows_(rows), cols_(cols), data_(rows * cols, BigReal(p)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    BigReal& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const BigReal& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

private:
    size_t rows_, cols_;
    std::vector<BigReal> data_;
};

BigReal inf_norm(const Vec& v);

// Solve A x = b by Gaussian elimination with partial pivoting.
// Throws SingularJacobian when a pivot vanishes.
Vec gauss_solve(Mat a, Vec b);

// Inverse via Gauss-Jordan; throws SingularJacobian when singular.
Mat invert(const Mat& a);

// Certified lower bound on the smallest singular value of a square matrix.
// Returns zero when the matrix is (numerically) singular.  The bound never
// exceeds the true sigma_min: it is derived from norm bounds on an approximate
// inverse B with a residual correction, sigma_min >= 1/sqrt(|A^-1|_1 |A^-1|_inf).
BigReal min_singular_value_lower_bound(const Mat& a);

}  // namespace acp
