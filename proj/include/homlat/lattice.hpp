#pragma once

#include <optional>

#include "homlat/numeric.hpp"

namespace homlat {

// q(z) = z^T G z for a symmetric positive definite integer matrix G.
// Dimensions above 16 are a hard error; everything here is desk scale.
class GramLattice {
public:
    static constexpr std::size_t max_dim = 16;

    explicit GramLattice(IntMat gram);

    std::size_t dim() const { return gram_.rows(); }
    const IntMat& gram() const { return gram_; }
    Int q(const IntVec& z) const;

    bool operator==(const GramLattice& o) const { return gram_ == o.gram_; }

private:
    IntMat gram_;
};

struct SvpResult {
    IntVec coords;  // witness in the lattice's own basis
    Int q_value;
};

struct LllResult {
    GramLattice reduced;   // U^T G U
    IntMat transform;      // unimodular U
};

// Gram-matrix LLL, delta = 3/4, exact rational Gram-Schmidt data.
LllResult lll_reduce(const GramLattice& lattice);

// lambda(Omega)^2 with a deterministic witness: among all minimizers, signs are
// normalized so the first nonzero coordinate is positive, then the
// lexicographically smallest vector is returned.
SvpResult shortest_vector(const GramLattice& lattice);

// Lambda(Omega)^2: n-th successive minimum squared, by enumerating every vector
// below the proven bound max_i of the LLL-reduced diagonal and greedily
// extracting linearly independent vectors in (q, lex) order.
Int successive_minimum_n(const GramLattice& lattice);

struct LatticeReport {
    Int lambda_sq;
    Int Lambda_sq;
    Rat covering_radius_sq_upper;  // (n/4) * Lambda^2, the only bound used downstream
    Int covolume_sq;
    IntVec lambda_witness;
    IntVec Lambda_witness;
};

LatticeReport lattice_report(const GramLattice& lattice);

// min q over nonzero u in offset + H Z^n. H must be nonsingular.
std::optional<SvpResult> coset_minimum(const GramLattice& lattice, const IntMat& h_basis,
                                       const IntVec& offset);

// det G, exact.
Int covolume_sq(const GramLattice& lattice);

// Independent oracle: exhaustive scan of the coefficient box [-box, box]^n.
// The caller is responsible for proving the box large enough; n <= 8 enforced.
SvpResult brute_force_minimum(const GramLattice& lattice, const Int& box_bound);

// Exhaustive coset counterpart: scans w in [-box, box]^n, u = offset + H w != 0.
SvpResult coset_brute_force(const GramLattice& lattice, const IntMat& h_basis, const IntVec& offset,
                            const Int& box_bound);

// A provably sufficient scan box for brute_force_minimum: any q-minimizer z
// satisfies z_k^2 <= C * (G^{-1})_kk with C = min_i G_ii.
Int sound_enumeration_box(const GramLattice& lattice);

// Same derivation for the coset scan, around the rational target -H^{-1} offset.
Int sound_coset_box(const GramLattice& lattice, const IntMat& h_basis, const IntVec& offset);

// Sign normalization used by every witness: flips z so its first nonzero
// coordinate is positive.
IntVec normalize_sign(IntVec z);
bool lex_less(const IntVec& a, const IntVec& b);

}  // namespace homlat
