#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlat/rosati.hpp"

namespace homlat {

// Working precision for the log-space intervals. The kappa exponents overflow
// any fixed-width representation, so the linear-scale values never exist.
struct IntervalContext {
    long decimal_digits = 50;
    long prec_bits() const;
};

// Outward-rounded enclosure with exact rational endpoints (dyadic in practice:
// they come from directed MPFR operations). Sums and scalar multiples are
// exact, so rounding happens only inside ln and n-th roots.
class RealInterval {
public:
    RealInterval() = default;
    RealInterval(Rat lo, Rat hi);
    static RealInterval point(const Rat& x) { return RealInterval(x, x); }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat width() const { return hi_ - lo_; }
    Rat relative_width() const;

    RealInterval operator+(const RealInterval& o) const { return RealInterval(lo_ + o.lo_, hi_ + o.hi_); }
    // scalar must be nonnegative
    RealInterval scaled(const Rat& k) const;

    // certified comparisons: true only when the intervals are disjoint
    bool certified_le(const RealInterval& o) const { return hi_ <= o.lo_; }
    bool certified_lt(const RealInterval& o) const { return hi_ < o.lo_; }

    bool operator==(const RealInterval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

private:
    Rat lo_, hi_;
};

using LogValue = RealInterval;

// Natural log of a positive rational, outward rounded.
RealInterval ln_interval(const Rat& x, const IntervalContext& ctx);
// Natural log of a positive interval.
RealInterval ln_interval(const RealInterval& x, const IntervalContext& ctx);
// x^{1/n} for x >= 0, outward rounded.
RealInterval nth_root_interval(const Rat& x, unsigned long n, const IntervalContext& ctx);

// Exact directed decimal rendering with the requested significant digits;
// toward_plus_inf selects the rounding direction of the printed value.
std::string decimal_string_directed(const Rat& x, long digits, bool toward_plus_inf);

// Inputs to the explicit bound chain; heights, periods and chi * rho are
// opaque instance data, never computed from geometry.
struct CurveBoundData {
    unsigned long genus_x = 1;
    unsigned long degree_k = 1;
    Rat faltings_height;  // stable, original Faltings normalization
    Int period_p = 1;
    std::optional<Int> chi_rho;
    Int c_omega = 1;
    unsigned long r = 1;
    Order order = Order::rational_integers();
};

void validate(const CurveBoundData& data);

// ln kappa(A) = 2^10 g^3 (64 g^2 ln(14 g) + ln[k:Q] + 2 ln max(h_F, ln[k:Q], 1)).
LogValue kappa_log(unsigned long g, unsigned long deg_k, const Rat& h_f, const IntervalContext& ctx);

// 500 [K:Q]^2 max(h_F, 1)^2, exact.
Rat discriminant_bound(unsigned long deg_k, const Rat& h_f);

// vol(Omega)^2: 2^r chi_rho over Z, |D|^r chi_rho^2 / c^2 otherwise.
Rat covolume_formula(const Order& order, const Int& chi_rho, const Int& c_omega, unsigned long r);

struct InequalityChain {
    RealInterval lambda_sq_max;  // n * (vol^2)^{1/n}
    Rat Lambda_sq_max;           // n^n vol^2
    Rat R_sq_max;                // (1/4) n^{n+1} vol^2
    Rat mu_factor;               // (1/8) n^{n+1} vol^2; mu_K <= p^2 * mu_factor
};

InequalityChain inequality_chain(unsigned long n, const Rat& vol_sq, const IntervalContext& ctx);

struct TheoremBound {
    LogValue log_mu_bound;  // ln(p^2 kappa^3)
    std::optional<LogValue> log_intermediate;
    std::optional<Rat> intermediate_bound;  // p^2 (2g)^{2g+1} vol^2, exact, needs chi_rho
};

TheoremBound theorem_bound_log(const CurveBoundData& data, const IntervalContext& ctx);

// Hurwitz / Riemann-Roch degree bounds away from genus one.
std::optional<Int> non_genus_one_bound(unsigned long genus_x, unsigned long genus_y, bool x_has_point);

struct CheckResult {
    std::string name;
    bool pass;
    std::string lhs, rhs;
};

struct CertificationReport {
    std::vector<CheckResult> checks;
    DegreeResult degree;
    LatticeReport lattice;
    Rat vol_sq;
    Rat intermediate_bound;
    LogValue kappa;
    LogValue theorem_log_bound;

    bool all_pass() const;
};

// Runs the whole chain on one instance: exact minima from the lattice side,
// the covolume formula cross-check, the section-5 inequalities, and the
// certified log-space comparison against the theorem bound.
CertificationReport certify(const HomInstance& inst, const CurveBoundData& data,
                            const IntervalContext& ctx);

}  // namespace homlat
