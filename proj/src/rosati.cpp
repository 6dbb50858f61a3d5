#include "homlat/rosati.hpp"

namespace homlat {

namespace {

// p * H^{-1} must be integral for H to contain p * Z^n.
bool contains_scaled_lattice(const IntMat& h, const Int& p) {
    Int det = det_bareiss(h);
    if (det == 0) return false;
    RatMat inv;
    if (!invert_rat(to_rat_mat(h), inv)) return false;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (!is_integral(Rat(p) * inv(i, j))) return false;
    return true;
}

bool offset_in_subgroup(const IntMat& h, const IntVec& offset) {
    RatVec rhs(offset.size()), sol;
    for (std::size_t i = 0; i < offset.size(); ++i) rhs[i] = Rat(offset[i]);
    if (!solve_rat(to_rat_mat(h), rhs, sol)) return false;
    for (const Rat& x : sol)
        if (!is_integral(x)) return false;
    return true;
}

}  // namespace

HomInstance::HomInstance(HermitianForm herm, Int period_p, bool x_has_rational_point,
                         bool y_has_rational_point, std::optional<CosetData> coset, unsigned long genus_x)
    : herm_(std::move(herm)),
      period_p_(std::move(period_p)),
      x_point_(x_has_rational_point),
      y_point_(y_has_rational_point),
      coset_(std::move(coset)),
      genus_x_(genus_x) {
    if (genus_x_ == 0) throw invariant_error("InvalidGenus", "genus_x must be positive");
    if (herm_.rank() > genus_x_)
        throw invariant_error("RankExceedsGenus", "rank " + std::to_string(herm_.rank()) +
                                                      " exceeds genus " + std::to_string(genus_x_));
    if (period_p_ < 1) throw invariant_error("InvalidPeriod", "period must be a positive integer");
    if (x_point_ && period_p_ != 1)
        throw invariant_error("PeriodRationalPointMismatch",
                              "a rational point on X forces period 1, got " + to_string(period_p_));
    if (ambient_dim() > GramLattice::max_dim)
        throw invariant_error("DimensionTooLarge", "ambient dimension exceeds the supported 16");
    if (coset_) {
        const std::size_t n = ambient_dim();
        if (coset_->h_basis.rows() != n || coset_->h_basis.cols() != n || coset_->offset.size() != n)
            throw invariant_error("DimensionMismatch", "coset data does not match the ambient dimension");
        if (det_bareiss(coset_->h_basis) == 0)
            throw invariant_error("SingularSubgroupBasis", "coset subgroup basis is singular");
        if (!contains_scaled_lattice(coset_->h_basis, period_p_))
            throw invariant_error("CosetMissesPeriodLattice",
                                  "H must contain p(X) * Omega for p = " + to_string(period_p_));
        if (x_point_) {
            // X(K) nonempty forces U = H = Omega
            Int det = det_bareiss(coset_->h_basis);
            if (det != 1 && det != -1)
                throw invariant_error("CosetNotFullLattice",
                                      "a rational point on X forces H = Omega, got index " +
                                          to_string(Int(abs(det))));
            if (!offset_in_subgroup(coset_->h_basis, coset_->offset))
                throw invariant_error("CosetNotFullLattice",
                                      "a rational point on X forces offset in H");
        }
    }
}

GramLattice rosati_gram(const HomInstance& inst) {
    RatMat s = inst.hermitian().realify();
    IntMat g(s.rows(), s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) g(i, j) = int_checked(2 * s(i, j));
    return GramLattice(std::move(g));
}

Int endo_degree(const Order& order, const Mat<OrderElement>& m) {
    if (m.rows() != m.cols()) throw invariant_error("DimensionMismatch", "endomorphism matrix must be square");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) order.validate(m(i, j));
    if (!order.is_quadratic()) {
        IntMat a(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).a;
        Int d = det_bareiss(a);
        return d * d;
    }
    QuadraticFieldQ field = QuadraticFieldQ::of_order(order);
    Mat<QFieldElem> fm(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) fm(i, j) = {Rat(m(i, j).a), Rat(m(i, j).b)};
    QFieldElem d = field.det(fm);
    return int_checked(field.field_norm(d));
}

Int rosati_norm_sq_scalar(const Order& order, const OrderElement& c) {
    order.validate(c);
    return 2 * order.norm(c);
}

Int degree_of_hom(const HomInstance& inst, const IntVec& x) {
    GramLattice gram = rosati_gram(inst);
    if (x.size() != gram.dim())
        throw invariant_error("DimensionMismatch", "coordinate vector does not match the Rosati lattice");
    Int q = gram.q(x);
    // q-values of the Rosati form are even
    Int half;
    mpz_divexact_ui(half.get_mpz_t(), q.get_mpz_t(), 2);
    return half;
}

DegreeResult minimal_degree(const HomInstance& inst) {
    if (inst.rank() == 0) throw compute_error("ZeroModule", "Omega = 0 admits no nonconstant morphism");
    GramLattice gram = rosati_gram(inst);

    auto half = [](const Int& q) {
        Int h;
        mpz_divexact_ui(h.get_mpz_t(), q.get_mpz_t(), 2);
        return h;
    };

    DegreeResult result;
    if (inst.x_has_rational_point()) {
        SvpResult sv = shortest_vector(gram);
        result.case_tag = DegreeCase::ExactRationalPointX;
        result.exact = true;
        result.mu = half(sv.q_value);
        result.lower = result.upper = Rat(result.mu);
        result.witness = sv.coords;
        return result;
    }
    if (inst.coset()) {
        auto cm = coset_minimum(gram, inst.coset()->h_basis, inst.coset()->offset);
        if (!cm) throw compute_error("ZeroModule", "coset contains no nonzero element");
        result.case_tag = DegreeCase::ExactCosetGiven;
        result.exact = true;
        result.mu = half(cm->q_value);
        result.lower = result.upper = Rat(result.mu);
        result.witness = cm->coords;
        return result;
    }
    const Rat p_sq(inst.period() * inst.period());
    if (inst.y_has_rational_point()) {
        SvpResult sv = shortest_vector(gram);
        result.case_tag = DegreeCase::UpperYRational;
        result.exact = false;
        result.lower = Rat(half(sv.q_value));
        result.upper = result.lower * p_sq;
        return result;
    }
    LatticeReport report = lattice_report(gram);
    result.case_tag = DegreeCase::UpperYNoPoint;
    result.exact = false;
    result.lower = Rat(half(report.lambda_sq));
    result.upper = p_sq * report.covering_radius_sq_upper / 2;
    return result;
}

Int class_index_bound(const Order& order, unsigned long r) {
    if (!order.is_quadratic()) return 1;
    Int pow = pow_int(abs(*order.discriminant()), r);
    Int root = isqrt_floor(pow);
    if (root * root < pow) ++root;  // ceil of |D|^{r/2}
    return root;
}

const char* degree_case_name(DegreeCase c) {
    switch (c) {
        case DegreeCase::ExactRationalPointX: return "exact_rational_point_x";
        case DegreeCase::ExactCosetGiven: return "exact_coset_given";
        case DegreeCase::UpperYRational: return "upper_y_rational";
        case DegreeCase::UpperYNoPoint: return "upper_y_no_point";
        case DegreeCase::LowerOnly: return "lower_only";
    }
    return "unknown";
}

}  // namespace homlat
