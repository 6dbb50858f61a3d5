#pragma once

#include <optional>

#include "homlat/numeric.hpp"

namespace homlat {

enum class OrderKind { RationalIntegers, Quadratic };

// a + b*tau; b must vanish over the rational integers.
struct OrderElement {
    Int a = 0;
    Int b = 0;

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const OrderElement& o) const { return a == o.a && b == o.b; }
    bool operator!=(const OrderElement& o) const { return !(*this == o); }
};

// End_K(E): either Z, or Z + Z*tau with tau^2 + u*tau + v = 0, u^2 - 4v < 0
// and Im tau = sqrt(4v - u^2)/2 > 0.
class Order {
public:
    static Order rational_integers();
    // Throws invariant_error unless u^2 - 4v < 0.
    static Order quadratic(Int u, Int v);

    OrderKind kind() const { return kind_; }
    bool is_quadratic() const { return kind_ == OrderKind::Quadratic; }
    const Int& u() const;
    const Int& v() const;
    // u^2 - 4v (negative); nullopt over Z, where no discriminant applies.
    std::optional<Int> discriminant() const;
    // |D|/4 = (Im tau)^2 as an exact rational, quadratic orders only.
    Rat im_tau_sq() const;
    std::size_t rank_z() const { return kind_ == OrderKind::Quadratic ? 2 : 1; }

    void validate(const OrderElement& c) const;
    OrderElement conj(const OrderElement& c) const;
    OrderElement add(const OrderElement& x, const OrderElement& y) const;
    OrderElement sub(const OrderElement& x, const OrderElement& y) const;
    OrderElement mul(const OrderElement& x, const OrderElement& y) const;
    OrderElement neg(const OrderElement& x) const;
    // c * conj(c) = a^2 - a*b*u + b^2*v, a nonnegative integer, zero iff c = 0.
    Int norm(const OrderElement& c) const;
    Int trace(const OrderElement& c) const;

    bool operator==(const Order& o) const;
    bool operator!=(const Order& o) const { return !(*this == o); }

private:
    Order(OrderKind kind, Int u, Int v) : kind_(kind), u_(std::move(u)), v_(std::move(v)) {}

    OrderKind kind_;
    Int u_, v_;
};

// Exact arithmetic in Q[theta]/(theta^2 + u*theta + v); a field whenever the
// polynomial has no rational root (always the case for the orders used here).
struct QFieldElem {
    Rat a, b;  // a + b*theta

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const QFieldElem& o) const { return a == o.a && b == o.b; }
};

class QuadraticFieldQ {
public:
    QuadraticFieldQ(Rat u, Rat v);
    // theta = sqrt(d) for d < 0, i.e. x^2 - d.
    static QuadraticFieldQ sqrt_of(const Int& d);
    static QuadraticFieldQ of_order(const Order& order);

    const Rat& u() const { return u_; }
    const Rat& v() const { return v_; }

    QFieldElem from_rat(const Rat& x) const { return {x, Rat(0)}; }
    QFieldElem conj(const QFieldElem& x) const;
    QFieldElem add(const QFieldElem& x, const QFieldElem& y) const;
    QFieldElem sub(const QFieldElem& x, const QFieldElem& y) const;
    QFieldElem mul(const QFieldElem& x, const QFieldElem& y) const;
    QFieldElem neg(const QFieldElem& x) const;
    QFieldElem div(const QFieldElem& x, const QFieldElem& y) const;
    Rat field_norm(const QFieldElem& x) const;

    QFieldElem det(Mat<QFieldElem> m) const;

private:
    Rat u_, v_;
};

// The matrix M of a pulled-back polarization on E^r: entries in End_K(E),
// M[j][i] = conj(M[i][j]), real diagonal; positive definite for genuine
// polarizations (checked through the realification).
class HermitianForm {
public:
    HermitianForm(Order order, Mat<OrderElement> entries);

    const Order& order() const { return order_; }
    std::size_t rank() const { return entries_.rows(); }
    const OrderElement& at(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const Mat<OrderElement>& entries() const { return entries_; }

    // The symmetric rational matrix S with x* M x = z^T S z for
    // x = z_low + z_high * tau componentwise; M itself over Z.
    RatMat realify() const;
    bool is_positive_definite() const;
    // det M computed in O (x) Q; an integer since M is hermitian.
    // Throws NotPositiveDefinite when the realification fails the minor test.
    Int determinant() const;
    HermitianForm scaled(const Int& k) const;

    bool operator==(const HermitianForm& o) const { return order_ == o.order_ && entries_ == o.entries_; }

private:
    Int determinant_unchecked() const;

    Order order_;
    Mat<OrderElement> entries_;
};

// Lemma-style oracle: N = (A+B, sA+tB; tA+sB, st(A+B)) satisfies
// det N = (-1)^r (t-s)^{2r} det A det B. Both sides are evaluated exactly.
bool block_det_identity_check(const QuadraticFieldQ& field, const Mat<QFieldElem>& a,
                              const Mat<QFieldElem>& b, const QFieldElem& s, const QFieldElem& t);

}  // namespace homlat
