#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "homlat/errors.hpp"

namespace homlat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <class T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Mat& other) const { return !(*this == other); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <class T>
Mat<T> transpose(const Mat<T>& a) {
    Mat<T> r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows()) throw invariant_error("DimensionMismatch", "matrix product shape mismatch");
    Mat<T> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

IntVec mat_vec(const IntMat& a, const IntVec& x);
// x^T G y, exact.
Int bilinear_form(const IntMat& g, const IntVec& x, const IntVec& y);

Rat make_rat(const Int& num, const Int& den);
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);
// Nearest integer, ties toward +infinity.
Int round_half_up(const Rat& q);
Int isqrt_floor(const Int& a);
Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, unsigned long e);
bool is_integral(const Rat& q);
// Requires den == 1.
Int int_checked(const Rat& q);

// Fraction-free determinant over Z (Bareiss with row pivoting).
Int det_bareiss(IntMat a);
// Exact determinant over Q (Gaussian elimination with pivoting).
Rat det_rat(RatMat a);
// minors[k] = det of the leading (k+1)x(k+1) block, k = 0..n-1.
std::vector<Int> leading_principal_minors(const IntMat& a);

// G = L D L^T with L unit lower triangular; pivots all positive iff G is PD.
struct Ldl {
    std::size_t n = 0;
    RatMat lower;
    RatVec pivots;
};
// Returns false as soon as a pivot <= 0 shows the matrix is not positive definite.
bool ldl_decompose(const RatMat& g, Ldl& out);

RatMat to_rat_mat(const IntMat& a);
bool invert_rat(const RatMat& a, RatMat& out);
bool solve_rat(const RatMat& a, const RatVec& b, RatVec& out);

std::string to_string(const Int& z);
std::string to_string(const Rat& q);  // "n" when integral, else "n/d"

}  // namespace homlat
