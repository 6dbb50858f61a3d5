#pragma once

#include <string>
#include <vector>

#include "homlat/bounds.hpp"

// Test-side oracles, all independent of the enumeration / MPFR paths they check.

namespace testsupport {

using homlat::Int;
using homlat::IntMat;
using homlat::IntVec;
using homlat::Mat;
using homlat::Order;
using homlat::OrderElement;
using homlat::Rat;

struct RatInterval {
    Rat lo, hi;
};

// atanh(z) = sum z^{2k+1}/(2k+1) for 0 < z < 1, with the geometric tail bound
// tail <= z^{2K+1} / ((2K+1)(1 - z^2)); everything in exact rationals.
inline RatInterval atanh_enclosure(const Rat& z, unsigned terms) {
    Rat sum = 0;
    Rat z_sq = z * z;
    Rat power = z;
    for (unsigned k = 0; k < terms; ++k) {
        sum += power / Rat(2 * k + 1);
        power *= z_sq;
    }
    Rat tail = power / (Rat(2 * terms + 1) * (Rat(1) - z_sq));
    return {sum, sum + tail};
}

// ln 2 = 2 atanh(1/3)
inline RatInterval ln2_enclosure(unsigned terms) {
    RatInterval a = atanh_enclosure(Rat(1, 3), terms);
    return {2 * a.lo, 2 * a.hi};
}

// ln 14 = 4 ln 2 - 2 atanh(1/15)   (since ln 7 = 3 ln 2 - ln(8/7))
inline RatInterval ln14_enclosure(unsigned terms) {
    RatInterval l2 = ln2_enclosure(terms);
    RatInterval a = atanh_enclosure(Rat(1, 15), terms);
    return {4 * l2.lo - 2 * a.hi, 4 * l2.hi - 2 * a.lo};
}

// Action of an order matrix on Z^{2r} in the basis (e_1..e_r, tau e_1..tau e_r):
// each entry a + b tau contributes the block [[a, -v b], [b, a - u b]]. Over Z
// the homology action is diag(M, M). det of this matrix is the degree oracle.
inline IntMat regular_representation(const Order& order, const Mat<OrderElement>& m) {
    const std::size_t r = m.rows();
    IntMat t(2 * r, 2 * r);
    if (!order.is_quadratic()) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                t(i, j) = m(i, j).a;
                t(i + r, j + r) = m(i, j).a;
            }
        return t;
    }
    const Int& u = order.u();
    const Int& v = order.v();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            t(i, j) = m(i, j).a;
            t(i, j + r) = -v * m(i, j).b;
            t(i + r, j) = m(i, j).b;
            t(i + r, j + r) = m(i, j).a - u * m(i, j).b;
        }
    return t;
}

inline IntVec vec(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline IntMat mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size(), c = rows.begin()->size();
    IntMat m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long x : row) m(i, j++) = Int(x);
        ++i;
    }
    return m;
}

// rank x rank hermitian matrix literal: each entry {a, b}
inline Mat<OrderElement> herm_entries(std::initializer_list<std::initializer_list<std::pair<long, long>>> rows) {
    std::size_t r = rows.size();
    Mat<OrderElement> m(r, r);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const auto& [a, b] : row) m(i, j++) = {Int(a), Int(b)};
        ++i;
    }
    return m;
}

}  // namespace testsupport
