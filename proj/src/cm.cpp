#include "homlat/cm.hpp"

namespace homlat {

Order Order::rational_integers() { return Order(OrderKind::RationalIntegers, 0, 0); }

Order Order::quadratic(Int u, Int v) {
    Int disc = u * u - 4 * v;
    if (disc >= 0)
        throw invariant_error("NotImaginaryQuadratic",
                              "u^2 - 4v = " + to_string(disc) + " must be negative");
    return Order(OrderKind::Quadratic, std::move(u), std::move(v));
}

const Int& Order::u() const {
    if (kind_ != OrderKind::Quadratic) throw invariant_error("NotQuadraticOrder", "u is undefined over Z");
    return u_;
}

const Int& Order::v() const {
    if (kind_ != OrderKind::Quadratic) throw invariant_error("NotQuadraticOrder", "v is undefined over Z");
    return v_;
}

std::optional<Int> Order::discriminant() const {
    if (kind_ != OrderKind::Quadratic) return std::nullopt;
    return u_ * u_ - 4 * v_;
}

Rat Order::im_tau_sq() const {
    return make_rat(4 * v() - u() * u(), 4);
}

void Order::validate(const OrderElement& c) const {
    if (kind_ == OrderKind::RationalIntegers && c.b != 0)
        throw invariant_error("NonRationalElement", "element " + to_string(c.a) + " + " + to_string(c.b) +
                                                        "*tau does not lie in Z");
}

OrderElement Order::conj(const OrderElement& c) const {
    if (kind_ == OrderKind::RationalIntegers) return c;
    // tau + conj(tau) = -u
    return {c.a - c.b * u_, -c.b};
}

OrderElement Order::add(const OrderElement& x, const OrderElement& y) const { return {x.a + y.a, x.b + y.b}; }

OrderElement Order::sub(const OrderElement& x, const OrderElement& y) const { return {x.a - y.a, x.b - y.b}; }

OrderElement Order::mul(const OrderElement& x, const OrderElement& y) const {
    if (kind_ == OrderKind::RationalIntegers) return {x.a * y.a, 0};
    // tau^2 = -u*tau - v
    return {x.a * y.a - v_ * x.b * y.b, x.a * y.b + x.b * y.a - u_ * x.b * y.b};
}

OrderElement Order::neg(const OrderElement& x) const { return {-x.a, -x.b}; }

Int Order::norm(const OrderElement& c) const {
    if (kind_ == OrderKind::RationalIntegers) return c.a * c.a;
    return c.a * c.a - c.a * c.b * u_ + c.b * c.b * v_;
}

Int Order::trace(const OrderElement& c) const {
    if (kind_ == OrderKind::RationalIntegers) return 2 * c.a;
    return 2 * c.a - c.b * u_;
}

bool Order::operator==(const Order& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == OrderKind::RationalIntegers) return true;
    return u_ == o.u_ && v_ == o.v_;
}

QuadraticFieldQ::QuadraticFieldQ(Rat u, Rat v) : u_(std::move(u)), v_(std::move(v)) {
    Rat disc = u_ * u_ - 4 * v_;
    if (disc >= 0)
        throw invariant_error("NotImaginaryQuadratic", "field polynomial must have negative discriminant");
}

QuadraticFieldQ QuadraticFieldQ::sqrt_of(const Int& d) {
    if (d >= 0) throw invariant_error("NotImaginaryQuadratic", "sqrt_of expects a negative integer");
    return QuadraticFieldQ(Rat(0), Rat(-d));
}

QuadraticFieldQ QuadraticFieldQ::of_order(const Order& order) {
    return QuadraticFieldQ(Rat(order.u()), Rat(order.v()));
}

QFieldElem QuadraticFieldQ::conj(const QFieldElem& x) const { return {x.a - x.b * u_, -x.b}; }

QFieldElem QuadraticFieldQ::add(const QFieldElem& x, const QFieldElem& y) const {
    return {x.a + y.a, x.b + y.b};
}

QFieldElem QuadraticFieldQ::sub(const QFieldElem& x, const QFieldElem& y) const {
    return {x.a - y.a, x.b - y.b};
}

QFieldElem QuadraticFieldQ::mul(const QFieldElem& x, const QFieldElem& y) const {
    return {x.a * y.a - v_ * x.b * y.b, x.a * y.b + x.b * y.a - u_ * x.b * y.b};
}

QFieldElem QuadraticFieldQ::neg(const QFieldElem& x) const { return {-x.a, -x.b}; }

Rat QuadraticFieldQ::field_norm(const QFieldElem& x) const {
    return x.a * x.a - x.a * x.b * u_ + x.b * x.b * v_;
}

QFieldElem QuadraticFieldQ::div(const QFieldElem& x, const QFieldElem& y) const {
    Rat n = field_norm(y);
    if (n == 0) throw compute_error("DivisionByZero", "division by zero field element");
    QFieldElem t = mul(x, conj(y));
    return {t.a / n, t.b / n};
}

QFieldElem QuadraticFieldQ::det(Mat<QFieldElem> m) const {
    if (m.rows() != m.cols()) throw invariant_error("DimensionMismatch", "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    QFieldElem result = from_rat(Rat(1));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return from_rat(Rat(0));
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            result = neg(result);
        }
        result = mul(result, m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            QFieldElem f = div(m(i, k), m(k, k));
            for (std::size_t j = k; j < n; ++j) m(i, j) = sub(m(i, j), mul(f, m(k, j)));
        }
    }
    return result;
}

HermitianForm::HermitianForm(Order order, Mat<OrderElement> entries)
    : order_(std::move(order)), entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
        throw invariant_error("InvalidRank", "hermitian matrix must be square of positive rank");
    for (std::size_t i = 0; i < entries_.rows(); ++i)
        for (std::size_t j = 0; j < entries_.cols(); ++j) {
            order_.validate(entries_(i, j));
            if (entries_(j, i) != order_.conj(entries_(i, j)))
                throw invariant_error("NotHermitian", "entry (" + std::to_string(j) + "," + std::to_string(i) +
                                                          ") is not the conjugate of its transpose");
        }
}

RatMat HermitianForm::realify() const {
    const std::size_t r = rank();
    if (!order_.is_quadratic()) {
        RatMat s(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) s(i, j) = Rat(entries_(i, j).a);
        return s;
    }
    const Rat u(order_.u()), v(order_.v());
    const Rat half_u = u / 2;
    // Basis e_1..e_r, tau*e_1..tau*e_r:
    //   S = ( Re M        Re(tau M)      )
    //       ( Re(conj(tau) M)  |tau|^2 Re M )
    RatMat s(2 * r, 2 * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Rat a(entries_(i, j).a), b(entries_(i, j).b);
            Rat re = a - b * half_u;                        // Re(a + b tau)
            Rat re_tau = -b * v - half_u * (a - b * u);     // Re(tau (a + b tau))
            Rat re_taubar = b * v - a * half_u;             // Re(conj(tau) (a + b tau))
            s(i, j) = re;
            s(i, j + r) = re_tau;
            s(i + r, j) = re_taubar;
            s(i + r, j + r) = v * re;
        }
    return s;
}

bool HermitianForm::is_positive_definite() const {
    Ldl ldl;
    return ldl_decompose(realify(), ldl);
}

Int HermitianForm::determinant_unchecked() const {
    if (!order_.is_quadratic()) {
        IntMat m(rank(), rank());
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) m(i, j) = entries_(i, j).a;
        return det_bareiss(m);
    }
    QuadraticFieldQ field = QuadraticFieldQ::of_order(order_);
    Mat<QFieldElem> m(rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            m(i, j) = {Rat(entries_(i, j).a), Rat(entries_(i, j).b)};
    QFieldElem d = field.det(m);
    if (d.b != 0)
        throw compute_error("NonrealDeterminant", "hermitian determinant has a nonzero tau part");
    return int_checked(d.a);
}

Int HermitianForm::determinant() const {
    if (!is_positive_definite())
        throw compute_error("NotPositiveDefinite", "hermitian form is not positive definite");
    return determinant_unchecked();
}

HermitianForm HermitianForm::scaled(const Int& k) const {
    Mat<OrderElement> m(rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) m(i, j) = {k * entries_(i, j).a, k * entries_(i, j).b};
    return HermitianForm(order_, std::move(m));
}

bool block_det_identity_check(const QuadraticFieldQ& field, const Mat<QFieldElem>& a,
                              const Mat<QFieldElem>& b, const QFieldElem& s, const QFieldElem& t) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw invariant_error("DimensionMismatch", "blocks must be square of equal size");
    const std::size_t r = a.rows();
    Mat<QFieldElem> n(2 * r, 2 * r);
    QFieldElem st = field.mul(s, t);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            QFieldElem sum = field.add(a(i, j), b(i, j));
            n(i, j) = sum;
            n(i, j + r) = field.add(field.mul(s, a(i, j)), field.mul(t, b(i, j)));
            n(i + r, j) = field.add(field.mul(t, a(i, j)), field.mul(s, b(i, j)));
            n(i + r, j + r) = field.mul(st, sum);
        }
    QFieldElem lhs = field.det(n);

    QFieldElem diff = field.sub(t, s);
    QFieldElem factor = field.from_rat(Rat(1));
    for (std::size_t k = 0; k < 2 * r; ++k) factor = field.mul(factor, diff);
    if (r % 2 == 1) factor = field.neg(factor);
    QFieldElem rhs = field.mul(factor, field.mul(field.det(a), field.det(b)));
    return lhs == rhs;
}

}  // namespace homlat
