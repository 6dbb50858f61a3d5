#include "homlat/bounds.hpp"

#include <mpfr.h>

#include <algorithm>

namespace homlat {

long IntervalContext::prec_bits() const {
    // log2(10) < 3.322; the constant slack absorbs the handful of rounded ops
    return static_cast<long>(decimal_digits * 3.322) + 32;
}

RealInterval::RealInterval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw compute_error("EmptyInterval", "interval endpoints out of order");
}

Rat RealInterval::relative_width() const {
    Rat scale = std::max(abs(lo_), abs(hi_));
    if (scale == 0) return width();
    return width() / scale;
}

RealInterval RealInterval::scaled(const Rat& k) const {
    if (k < 0) throw invariant_error("NegativeScale", "interval scaling expects a nonnegative factor");
    return RealInterval(lo_ * k, hi_ * k);
}

namespace {

struct MpfrValue {
    mpfr_t x;
    explicit MpfrValue(long prec) { mpfr_init2(x, prec); }
    ~MpfrValue() { mpfr_clear(x); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
};

Rat mpfr_to_rat(const mpfr_t x) {
    Rat q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

Rat directed_log(const Rat& x, long prec, mpfr_rnd_t rnd) {
    MpfrValue t(prec);
    mpfr_set_q(t.x, x.get_mpq_t(), rnd);
    mpfr_log(t.x, t.x, rnd);
    return mpfr_to_rat(t.x);
}

Rat directed_root(const Rat& x, unsigned long n, long prec, mpfr_rnd_t rnd) {
    MpfrValue t(prec);
    mpfr_set_q(t.x, x.get_mpq_t(), rnd);
    mpfr_rootn_ui(t.x, t.x, n, rnd);
    return mpfr_to_rat(t.x);
}

}  // namespace

RealInterval ln_interval(const Rat& x, const IntervalContext& ctx) {
    if (x <= 0) throw compute_error("LogOfNonpositive", "ln expects a positive argument");
    long prec = ctx.prec_bits();
    return RealInterval(directed_log(x, prec, MPFR_RNDD), directed_log(x, prec, MPFR_RNDU));
}

RealInterval ln_interval(const RealInterval& x, const IntervalContext& ctx) {
    if (x.lo() <= 0) throw compute_error("LogOfNonpositive", "ln expects a positive interval");
    long prec = ctx.prec_bits();
    return RealInterval(directed_log(x.lo(), prec, MPFR_RNDD), directed_log(x.hi(), prec, MPFR_RNDU));
}

RealInterval nth_root_interval(const Rat& x, unsigned long n, const IntervalContext& ctx) {
    if (x < 0) throw compute_error("RootOfNegative", "n-th root expects a nonnegative argument");
    if (n == 0) throw invariant_error("InvalidRoot", "root index must be positive");
    long prec = ctx.prec_bits();
    return RealInterval(directed_root(x, n, prec, MPFR_RNDD), directed_root(x, n, prec, MPFR_RNDU));
}

namespace {

std::string render_magnitude(const Rat& x, long digits, bool round_up) {
    // 10^e <= x < 10^{e+1}
    long e = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 10));
    auto pow10 = [](long k) { return pow_int(Int(10), static_cast<unsigned long>(k)); };
    auto cmp_pow10 = [&](long k) {
        // x <=> 10^k
        if (k >= 0) return cmp(x, Rat(pow10(k)));
        return cmp(x, make_rat(1, pow10(-k)));
    };
    while (cmp_pow10(e + 1) >= 0) ++e;
    while (cmp_pow10(e) < 0) --e;

    Rat scaled;
    long shift = digits - 1 - e;
    if (shift >= 0)
        scaled = x * Rat(pow10(shift));
    else
        scaled = x / Rat(pow10(-shift));
    Int mantissa = round_up ? ceil_rat(scaled) : floor_rat(scaled);
    Int cap = pow10(digits);
    if (mantissa == cap) {
        mantissa = pow10(digits - 1);
        ++e;
    }
    std::string m = mantissa.get_str();
    std::string out;
    out += m[0];
    if (m.size() > 1) {
        out += '.';
        out += m.substr(1);
    }
    out += 'e';
    out += (e < 0 ? '-' : '+');
    out += std::to_string(e < 0 ? -e : e);
    return out;
}

}  // namespace

std::string decimal_string_directed(const Rat& x, long digits, bool toward_plus_inf) {
    if (digits < 1) throw invariant_error("InvalidPrecision", "need at least one digit");
    if (x == 0) return "0";
    if (x < 0) return "-" + render_magnitude(-x, digits, !toward_plus_inf);
    return render_magnitude(x, digits, toward_plus_inf);
}

void validate(const CurveBoundData& data) {
    if (data.genus_x == 0) throw invariant_error("InvalidGenus", "genus_x must be positive");
    if (data.degree_k == 0) throw invariant_error("InvalidDegree", "degree_k must be positive");
    if (data.period_p < 1) throw invariant_error("InvalidPeriod", "period must be positive");
    if (data.r == 0 || data.r > data.genus_x)
        throw invariant_error("RankExceedsGenus", "need 1 <= r <= genus_x");
    if (data.c_omega < 1) throw invariant_error("InvalidClassIndex", "c_omega must be positive");
    if (data.chi_rho && *data.chi_rho < 1)
        throw invariant_error("InvalidChiRho", "chi_rho must be positive");
}

LogValue kappa_log(unsigned long g, unsigned long deg_k, const Rat& h_f, const IntervalContext& ctx) {
    if (g == 0) throw invariant_error("InvalidGenus", "kappa needs g >= 1");
    if (deg_k == 0) throw invariant_error("InvalidDegree", "kappa needs [k:Q] >= 1");
    Rat gr(static_cast<unsigned long>(g));
    RealInterval ln_14g = ln_interval(Rat(14) * gr, ctx);
    RealInterval ln_k = ln_interval(Rat(static_cast<unsigned long>(deg_k)), ctx);
    Rat max_lo = std::max({h_f, ln_k.lo(), Rat(1)});
    Rat max_hi = std::max({h_f, ln_k.hi(), Rat(1)});
    RealInterval ln_max = ln_interval(RealInterval(max_lo, max_hi), ctx);
    RealInterval inner = ln_14g.scaled(Rat(64) * gr * gr) + ln_k + ln_max.scaled(Rat(2));
    return inner.scaled(Rat(pow_int(2, 10)) * gr * gr * gr);
}

Rat discriminant_bound(unsigned long deg_k, const Rat& h_f) {
    if (deg_k == 0) throw invariant_error("InvalidDegree", "degree must be positive");
    Rat d(static_cast<unsigned long>(deg_k));
    Rat h = std::max(h_f, Rat(1));
    return Rat(500) * d * d * h * h;
}

Rat covolume_formula(const Order& order, const Int& chi_rho, const Int& c_omega, unsigned long r) {
    if (r == 0) throw invariant_error("InvalidRank", "rank must be positive");
    if (chi_rho < 1) throw invariant_error("InvalidChiRho", "chi_rho must be positive");
    if (c_omega < 1) throw compute_error("InvalidClassIndex", "c_omega must be positive");
    if (!order.is_quadratic()) {
        if (c_omega != 1)
            throw compute_error("InvalidClassIndex", "c(Omega) = 1 over a principal ideal domain");
        return Rat(pow_int(2, r) * chi_rho);
    }
    if (c_omega > class_index_bound(order, r))
        throw compute_error("InvalidClassIndex",
                            "c_omega exceeds the class index bound " +
                                to_string(class_index_bound(order, r)));
    Rat num(pow_int(abs(*order.discriminant()), r) * chi_rho * chi_rho);
    return num / Rat(c_omega * c_omega);
}

InequalityChain inequality_chain(unsigned long n, const Rat& vol_sq, const IntervalContext& ctx) {
    if (n == 0) throw invariant_error("InvalidDimension", "n must be positive");
    if (vol_sq <= 0) throw invariant_error("InvalidCovolume", "vol^2 must be positive");
    InequalityChain out;
    Rat nr(static_cast<unsigned long>(n));
    out.lambda_sq_max = nth_root_interval(vol_sq, n, ctx).scaled(nr);
    out.Lambda_sq_max = Rat(pow_int(Int(static_cast<unsigned long>(n)), n)) * vol_sq;
    Rat n_pow = Rat(pow_int(Int(static_cast<unsigned long>(n)), n + 1));
    out.R_sq_max = n_pow * vol_sq / 4;
    out.mu_factor = n_pow * vol_sq / 8;
    return out;
}

TheoremBound theorem_bound_log(const CurveBoundData& data, const IntervalContext& ctx) {
    validate(data);
    TheoremBound out;
    LogValue kappa = kappa_log(data.genus_x, data.degree_k, data.faltings_height, ctx);
    RealInterval ln_p = ln_interval(Rat(data.period_p), ctx);
    out.log_mu_bound = ln_p.scaled(Rat(2)) + kappa.scaled(Rat(3));
    if (data.chi_rho) {
        Rat vol_sq = covolume_formula(data.order, *data.chi_rho, data.c_omega, data.r);
        Rat two_g(2 * static_cast<unsigned long>(data.genus_x));
        Rat factor = Rat(pow_int(Int(2 * static_cast<unsigned long>(data.genus_x)),
                                 2 * data.genus_x + 1));
        out.intermediate_bound = Rat(data.period_p * data.period_p) * factor * vol_sq;
        out.log_intermediate = ln_p.scaled(Rat(2)) +
                               ln_interval(two_g, ctx).scaled(Rat(2 * data.genus_x + 1)) +
                               ln_interval(vol_sq, ctx);
    }
    return out;
}

std::optional<Int> non_genus_one_bound(unsigned long genus_x, unsigned long genus_y, bool x_has_point) {
    if (genus_x == 0) throw invariant_error("InvalidGenus", "genus_x must be positive");
    if (genus_y == 1)
        throw compute_error("GenusOneNotHandledHere",
                            "genus-one targets go through the Rosati lattice pipeline");
    if (genus_y >= 2) return Int(static_cast<unsigned long>(genus_x)) - 1;
    if (x_has_point) return Int(static_cast<unsigned long>(genus_x)) + 1;
    return std::nullopt;
}

bool CertificationReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

CertificationReport certify(const HomInstance& inst, const CurveBoundData& data,
                            const IntervalContext& ctx) {
    validate(data);
    if (!(inst.order() == data.order) || inst.rank() != data.r || inst.period() != data.period_p ||
        inst.genus_x() != data.genus_x)
        throw invariant_error("InconsistentInstance",
                              "instance and curve data disagree on order, rank, period or genus");

    CertificationReport report;
    GramLattice gram = rosati_gram(inst);
    report.lattice = lattice_report(gram);
    report.degree = minimal_degree(inst);
    report.vol_sq = Rat(report.lattice.covolume_sq);

    const unsigned long n = inst.ambient_dim();
    const Int n_int(static_cast<unsigned long>(n));
    const Int n_pow_n = pow_int(n_int, n);

    auto push = [&](std::string name, bool pass, std::string lhs, std::string rhs) {
        report.checks.push_back({std::move(name), pass, std::move(lhs), std::move(rhs)});
    };

    if (data.chi_rho) {
        Rat formula = covolume_formula(data.order, *data.chi_rho, data.c_omega, data.r);
        push("covolume_formula_matches_gram_det", formula == report.vol_sq, to_string(formula),
             to_string(report.vol_sq));
    }

    Int lambda_n = pow_int(report.lattice.lambda_sq, n);
    Int chain_rhs = n_pow_n * report.lattice.covolume_sq;
    push("lambda_pow_2n_le_npow_volsq", lambda_n <= chain_rhs, to_string(lambda_n), to_string(chain_rhs));

    Int mixed = pow_int(report.lattice.lambda_sq, n - 1) * report.lattice.Lambda_sq;
    push("lambda_mixed_le_npow_volsq", mixed <= chain_rhs, to_string(mixed), to_string(chain_rhs));

    push("lambda_sq_le_Lambda_sq", report.lattice.lambda_sq <= report.lattice.Lambda_sq,
         to_string(report.lattice.lambda_sq), to_string(report.lattice.Lambda_sq));

    Rat half_lambda = Rat(report.lattice.lambda_sq) / 2;
    push("mu_lower_ge_half_lambda_sq", report.degree.lower >= half_lambda, to_string(report.degree.lower),
         to_string(half_lambda));

    Rat hurwitz_factor = Rat(pow_int(Int(2 * static_cast<unsigned long>(data.genus_x)),
                                     2 * data.genus_x + 1));
    report.intermediate_bound = Rat(data.period_p * data.period_p) * hurwitz_factor * report.vol_sq;
    push("mu_upper_le_intermediate", report.degree.upper <= report.intermediate_bound,
         to_string(report.degree.upper), to_string(report.intermediate_bound));

    report.kappa = kappa_log(data.genus_x, data.degree_k, data.faltings_height, ctx);
    RealInterval ln_p = ln_interval(Rat(data.period_p), ctx);
    report.theorem_log_bound = ln_p.scaled(Rat(2)) + report.kappa.scaled(Rat(3));

    RealInterval ln_intermediate = ln_interval(report.intermediate_bound, ctx);
    push("intermediate_le_theorem_bound", ln_intermediate.certified_le(report.theorem_log_bound),
         decimal_string_directed(ln_intermediate.hi(), ctx.decimal_digits, true),
         decimal_string_directed(report.theorem_log_bound.lo(), ctx.decimal_digits, false));

    RealInterval ln_mu = ln_interval(report.degree.upper, ctx);
    push("mu_le_theorem_bound", ln_mu.certified_le(report.theorem_log_bound),
         decimal_string_directed(ln_mu.hi(), ctx.decimal_digits, true),
         decimal_string_directed(report.theorem_log_bound.lo(), ctx.decimal_digits, false));

    if (inst.order().is_quadratic()) {
        RealInterval ln_disc = ln_interval(Rat(abs(*inst.order().discriminant())), ctx);
        RealInterval kappa_power = report.kappa.scaled(make_rat(1, Int(2 * data.genus_x)));
        push("discriminant_le_kappa_power", ln_disc.certified_le(kappa_power),
             decimal_string_directed(ln_disc.hi(), ctx.decimal_digits, true),
             decimal_string_directed(kappa_power.lo(), ctx.decimal_digits, false));
    }

    return report;
}

}  // namespace homlat
