#include "homlat/generator.hpp"

namespace homlat {

long InstanceGenerator::uniform(long lo, long hi) {
    if (lo > hi) throw invariant_error("InvalidRange", "uniform range is empty");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
}

Order InstanceGenerator::order_for_discriminant(long d) {
    // D = 0 mod 4: x^2 + |D|/4; D = 1 mod 4: x^2 - x + (|D|+1)/4
    if (d >= 0) throw invariant_error("NotImaginaryQuadratic", "discriminant must be negative");
    long a = -d;
    if (a % 4 == 0) return Order::quadratic(0, a / 4);
    if (a % 4 == 3) return Order::quadratic(-1, (a + 1) / 4);
    throw invariant_error("NotImaginaryQuadratic", "no order with discriminant " + std::to_string(d));
}

Order InstanceGenerator::random_order(bool allow_rational) {
    static const long discs[] = {-3, -4, -7, -8, -11, -20};
    long pick = uniform(0, allow_rational ? 6 : 5);
    if (allow_rational && pick == 6) return Order::rational_integers();
    return order_for_discriminant(discs[pick]);
}

HermitianForm InstanceGenerator::random_hermitian(const Order& order, std::size_t rank, long entry_bound) {
    Mat<OrderElement> lower(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            long a = uniform(-entry_bound, entry_bound);
            long b = order.is_quadratic() ? uniform(-entry_bound, entry_bound) : 0;
            lower(i, j) = {Int(a), Int(b)};
        }
    // M = L* L + I
    Mat<OrderElement> m(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            OrderElement acc{0, 0};
            for (std::size_t k = 0; k < rank; ++k)
                acc = order.add(acc, order.mul(order.conj(lower(k, i)), lower(k, j)));
            if (i == j) acc = order.add(acc, {1, 0});
            m(i, j) = acc;
        }
    return HermitianForm(order, std::move(m));
}

IntMat InstanceGenerator::random_unimodular(std::size_t n, int ops, long coef_bound) {
    IntMat u = IntMat::identity(n);
    if (n < 2) return u;
    for (int step = 0; step < ops; ++step) {
        std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
        if (i == j) {
            for (std::size_t k = 0; k < n; ++k) u(k, i) = -u(k, i);
            continue;
        }
        Int c(uniform(-coef_bound, coef_bound));
        for (std::size_t k = 0; k < n; ++k) u(k, i) += c * u(k, j);
    }
    return u;
}

GramLattice InstanceGenerator::random_gram(std::size_t n, long entry_bound) {
    IntMat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Int(uniform(-entry_bound, entry_bound));
    IntMat g = mat_mul(transpose(a), a);
    for (std::size_t i = 0; i < n; ++i) g(i, i) += 1;
    return GramLattice(std::move(g));
}

InstanceGenerator::Generated InstanceGenerator::random_instance(std::size_t max_rank, bool with_coset) {
    Order order = random_order(true);
    std::size_t max_by_dim = GramLattice::max_dim / order.rank_z();
    std::size_t rank = static_cast<std::size_t>(
        uniform(1, static_cast<long>(std::min(max_rank, max_by_dim))));
    HermitianForm herm = random_hermitian(order, rank);

    bool x_point = coin();
    bool y_point = x_point || coin();
    Int period = x_point ? Int(1) : Int(uniform(1, 3));
    std::optional<CosetData> coset;
    std::size_t n = rank * order.rank_z();
    if (with_coset && !x_point) {
        IntMat u = random_unimodular(n);
        IntMat h(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            Int d = coin() ? period : Int(1);
            for (std::size_t k = 0; k < n; ++k) h(k, i) = u(k, i) * d;
        }
        IntVec w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = Int(uniform(-1, 1));
        coset = CosetData{h, mat_vec(h, w)};
    }

    unsigned long genus = static_cast<unsigned long>(rank) + static_cast<unsigned long>(uniform(0, 1));
    CurveBoundData data;
    data.genus_x = genus;
    data.degree_k = static_cast<unsigned long>(uniform(1, 2));
    const Rat heights[] = {Rat(1), make_rat(7, 10), make_rat(3, 2), Rat(2)};
    data.faltings_height = heights[uniform(0, 3)];
    data.period_p = period;
    data.chi_rho = herm.determinant();
    data.c_omega = 1;
    data.r = rank;
    data.order = order;

    HomInstance inst(std::move(herm), period, x_point, y_point, std::move(coset), genus);
    return {std::move(inst), std::move(data)};
}

InstanceGenerator::Generated InstanceGenerator::random_coset_instance(long period, std::size_t max_rank) {
    Order order = random_order(true);
    std::size_t max_by_dim = GramLattice::max_dim / order.rank_z();
    std::size_t rank = static_cast<std::size_t>(
        uniform(1, static_cast<long>(std::min(max_rank, max_by_dim))));
    HermitianForm herm = random_hermitian(order, rank);
    std::size_t n = rank * order.rank_z();
    Int p(period);

    IntMat u = random_unimodular(n);
    IntMat h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Int d = coin() ? p : Int(1);
        for (std::size_t k = 0; k < n; ++k) h(k, i) = u(k, i) * d;
    }
    IntVec w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = Int(uniform(-1, 1));
    CosetData coset{h, mat_vec(h, w)};

    CurveBoundData data;
    data.genus_x = rank;
    data.degree_k = 1;
    data.faltings_height = Rat(1);
    data.period_p = p;
    data.chi_rho = herm.determinant();
    data.c_omega = 1;
    data.r = rank;
    data.order = order;

    HomInstance inst(std::move(herm), p, false, true, std::move(coset), rank);
    return {std::move(inst), std::move(data)};
}

InstanceGenerator::Generated InstanceGenerator::planted_instance(const Int& degree, const Order& order,
                                                                 std::size_t rank) {
    if (degree < 1) throw invariant_error("InvalidDegree", "planted degree must be positive");
    Mat<OrderElement> diag(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) diag(i, j) = {0, 0};
    diag(0, 0) = {degree, 0};
    for (std::size_t i = 1; i < rank; ++i) diag(i, i) = {degree + uniform(0, 3), 0};

    // conjugate by elementary unimodular matrices over the order: x -> E* x E
    // preserves both hermitian symmetry and the value set {x* M x}
    Mat<OrderElement> m = diag;
    int ops = 2 * static_cast<int>(rank);
    for (int step = 0; step < ops && rank > 1; ++step) {
        std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(rank) - 1));
        std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(rank) - 1));
        if (i == j) continue;
        long a = uniform(-1, 1);
        long b = order.is_quadratic() ? uniform(-1, 1) : 0;
        OrderElement c{Int(a), Int(b)};
        // column op: col_i += c * col_j, then row_i += conj(c) * row_j
        for (std::size_t k = 0; k < rank; ++k) m(k, i) = order.add(m(k, i), order.mul(m(k, j), c));
        OrderElement cc = order.conj(c);
        for (std::size_t k = 0; k < rank; ++k) m(i, k) = order.add(m(i, k), order.mul(cc, m(j, k)));
    }
    HermitianForm herm(order, std::move(m));

    CurveBoundData data;
    data.genus_x = rank;
    data.degree_k = 1;
    data.faltings_height = Rat(1);
    data.period_p = 1;
    data.chi_rho = herm.determinant();
    data.c_omega = 1;
    data.r = rank;
    data.order = order;

    HomInstance inst(std::move(herm), 1, true, true, std::nullopt, rank);
    return {std::move(inst), std::move(data)};
}

}  // namespace homlat
