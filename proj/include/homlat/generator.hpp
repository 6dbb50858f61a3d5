#pragma once

#include <cstdint>
#include <random>

#include "homlat/bounds.hpp"

namespace homlat {

// Deterministic instance generation: mt19937_64 plus modulo mapping only, so
// the same seed reproduces the same stream on every platform.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t raw() { return rng_(); }
    long uniform(long lo, long hi);  // inclusive
    bool coin() { return (rng_() & 1) != 0; }

    // One of Z and the orders with D in {-3, -4, -7, -8, -11, -20}.
    Order random_order(bool allow_rational = true);
    static Order order_for_discriminant(long d);

    // L* L + I for a random lower-triangular L over the order: hermitian and
    // positive definite by construction.
    HermitianForm random_hermitian(const Order& order, std::size_t rank, long entry_bound = 2);

    // Random unimodular matrix built from elementary column operations.
    IntMat random_unimodular(std::size_t n, int ops = 6, long coef_bound = 2);

    struct Generated {
        HomInstance instance;
        CurveBoundData curve;
    };

    // A full random instance with consistent curve data (chi_rho = det M).
    Generated random_instance(std::size_t max_rank = 3, bool with_coset = false);

    // Coset instance with H containing p * Z^n and offset inside H, so the
    // sandwich lambda^2/2 <= mu <= p^2 lambda^2 / 2 is provable.
    Generated random_coset_instance(long period, std::size_t max_rank = 2);

    // Diagonal plant conjugated by a unimodular change of basis: the minimal
    // degree is exactly `degree` and stays so after the mixing.
    Generated planted_instance(const Int& degree, const Order& order, std::size_t rank);

    // Random PD integer Gram matrix A^T A + I with small A, entries well under 50.
    GramLattice random_gram(std::size_t n, long entry_bound = 2);

private:
    std::mt19937_64 rng_;
};

}  // namespace homlat
