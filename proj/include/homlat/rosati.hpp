#pragma once

#include <optional>

#include "homlat/cm.hpp"
#include "homlat/lattice.hpp"

namespace homlat {

struct CosetData {
    IntMat h_basis;  // columns generate the finite-index subgroup H
    IntVec offset;
    bool operator==(const CosetData& o) const { return h_basis == o.h_basis && offset == o.offset; }
};

// Omega = Hom_K(J(X), E) presented as a free End_K(E)-module O^r with the
// hermitian matrix M of the pulled-back polarization; the Rosati form is
// q(x) = 2 x* M x. Period, rational-point flags and coset data are inputs.
class HomInstance {
public:
    HomInstance(HermitianForm herm, Int period_p, bool x_has_rational_point, bool y_has_rational_point,
                std::optional<CosetData> coset, unsigned long genus_x);

    const Order& order() const { return herm_.order(); }
    const HermitianForm& hermitian() const { return herm_; }
    std::size_t rank() const { return herm_.rank(); }
    std::size_t ambient_dim() const { return herm_.rank() * order().rank_z(); }
    const Int& period() const { return period_p_; }
    bool x_has_rational_point() const { return x_point_; }
    bool y_has_rational_point() const { return y_point_; }
    const std::optional<CosetData>& coset() const { return coset_; }
    unsigned long genus_x() const { return genus_x_; }

private:
    HermitianForm herm_;
    Int period_p_;
    bool x_point_;
    bool y_point_;
    std::optional<CosetData> coset_;
    unsigned long genus_x_;
};

enum class DegreeCase {
    ExactRationalPointX,
    ExactCosetGiven,
    UpperYRational,
    UpperYNoPoint,
    LowerOnly,  // part of the wire format; the four dispatch cases above cover every instance
};

const char* degree_case_name(DegreeCase c);

struct DegreeResult {
    DegreeCase case_tag;
    bool exact;
    Int mu;           // meaningful when exact
    Rat lower, upper; // always set; lower == upper == mu when exact
    std::optional<IntVec> witness;
};

// The integer Gram matrix 2 * realify(M); even diagonal, even values.
GramLattice rosati_gram(const HomInstance& inst);

// deg(phi) = |det M|^2 for the endomorphism of E^r given by M.
Int endo_degree(const Order& order, const Mat<OrderElement>& m);

// Squared Rosati norm of a scalar endomorphism: 2 |c|^2.
Int rosati_norm_sq_scalar(const Order& order, const OrderElement& c);

// Degree of the morphism with coordinate vector x: (1/2) x^T G x.
Int degree_of_hom(const HomInstance& inst, const IntVec& x);

// mu_K(X, Y) per the four-way case split: exact when X(K) != 0 or coset data
// is given, an interval otherwise.
DegreeResult minimal_degree(const HomInstance& inst);

// c(Omega) <= |D(O)|^{r/2}, and exactly 1 over a principal ideal domain.
Int class_index_bound(const Order& order, unsigned long r);

}  // namespace homlat
