#include "homlat/numeric.hpp"

namespace homlat {

IntVec mat_vec(const IntMat& a, const IntVec& x) {
    if (a.cols() != x.size()) throw invariant_error("DimensionMismatch", "matrix-vector shape mismatch");
    IntVec r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * x[j];
    return r;
}

Int bilinear_form(const IntMat& g, const IntVec& x, const IntVec& y) {
    if (g.rows() != x.size() || g.cols() != y.size())
        throw invariant_error("DimensionMismatch", "bilinear form shape mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < y.size(); ++j) row += g(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int round_half_up(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

Int isqrt_floor(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, unsigned long e) {
    return make_rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

bool is_integral(const Rat& q) { return q.get_den() == 1; }

Int int_checked(const Rat& q) {
    if (!is_integral(q)) throw compute_error("NonIntegralValue", "expected an integer, got " + to_string(q));
    return q.get_num();
}

Int det_bareiss(IntMat a) {
    if (a.rows() != a.cols()) throw invariant_error("DimensionMismatch", "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rat det_rat(RatMat a) {
    if (a.rows() != a.cols()) throw invariant_error("DimensionMismatch", "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

std::vector<Int> leading_principal_minors(const IntMat& a) {
    if (a.rows() != a.cols()) throw invariant_error("DimensionMismatch", "minors of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Int> minors(n);
    for (std::size_t k = 0; k < n; ++k) {
        IntMat sub(k + 1, k + 1);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= k; ++j) sub(i, j) = a(i, j);
        minors[k] = det_bareiss(sub);
    }
    return minors;
}

bool ldl_decompose(const RatMat& g, Ldl& out) {
    if (g.rows() != g.cols()) throw invariant_error("DimensionMismatch", "LDL of a non-square matrix");
    const std::size_t n = g.rows();
    out.n = n;
    out.lower = RatMat::identity(n);
    out.pivots.assign(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        Rat d = g(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= out.lower(j, k) * out.lower(j, k) * out.pivots[k];
        if (d <= 0) return false;
        out.pivots[j] = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rat s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= out.lower(i, k) * out.lower(j, k) * out.pivots[k];
            out.lower(i, j) = s / d;
        }
    }
    return true;
}

RatMat to_rat_mat(const IntMat& a) {
    RatMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

bool invert_rat(const RatMat& a, RatMat& out) {
    if (a.rows() != a.cols()) throw invariant_error("DimensionMismatch", "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RatMat work = a;
    out = RatMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && work(piv, k) == 0) ++piv;
        if (piv == n) return false;
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(k, j), work(piv, j));
                std::swap(out(k, j), out(piv, j));
            }
        Rat inv = Rat(1) / work(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            work(k, j) *= inv;
            out(k, j) *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || work(i, k) == 0) continue;
            Rat f = work(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= f * work(k, j);
                out(i, j) -= f * out(k, j);
            }
        }
    }
    return true;
}

bool solve_rat(const RatMat& a, const RatVec& b, RatVec& out) {
    RatMat inv;
    if (!invert_rat(a, inv)) return false;
    if (b.size() != a.rows()) throw invariant_error("DimensionMismatch", "solve shape mismatch");
    out.assign(a.rows(), Rat(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += inv(i, j) * b[j];
    return true;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace homlat
