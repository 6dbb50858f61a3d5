#include "doctest.h"

#include "homlat/bounds.hpp"
#include "homlat/generator.hpp"

#include "support.hpp"

using namespace homlat;
using testsupport::herm_entries;
using testsupport::ln14_enclosure;
using testsupport::RatInterval;

namespace {

IntervalContext ctx50;  // default 50 digits

bool contains(const RealInterval& x, const RatInterval& oracle) {
    return x.lo() <= oracle.hi && oracle.lo <= x.hi();
}

}  // namespace

TEST_CASE("interval primitives") {
    RealInterval ln2 = ln_interval(Rat(2), ctx50);
    CHECK(ln2.lo() < ln2.hi());
    CHECK(ln2.lo() > make_rat(69, 100));
    CHECK(ln2.hi() < make_rat(70, 100));
    CHECK(ln_interval(Rat(1), ctx50).lo() == 0);
    CHECK(ln_interval(Rat(1), ctx50).hi() == 0);
    CHECK_THROWS_AS(ln_interval(Rat(0), ctx50), compute_error);

    RealInterval root = nth_root_interval(Rat(8), 3, ctx50);
    CHECK(root.lo() <= 2);
    CHECK(root.hi() >= 2);
    CHECK(root.relative_width() < make_rat(1, pow_int(10, 40)));
}

TEST_CASE("directed decimal rendering") {
    CHECK(decimal_string_directed(Rat(0), 5, true) == "0");
    CHECK(decimal_string_directed(Rat(1), 3, false) == "1.00e+0");
    CHECK(decimal_string_directed(make_rat(1, 3), 3, false) == "3.33e-1");
    CHECK(decimal_string_directed(make_rat(1, 3), 3, true) == "3.34e-1");
    CHECK(decimal_string_directed(make_rat(-1, 3), 3, false) == "-3.34e-1");
    CHECK(decimal_string_directed(make_rat(-1, 3), 3, true) == "-3.33e-1");
    CHECK(decimal_string_directed(Rat(999999), 3, true) == "1.00e+6");
    CHECK(decimal_string_directed(Rat(999999), 3, false) == "9.99e+5");
}

TEST_CASE("kappa log against the independent series evaluation") {
    // ln kappa(g=1, [k:Q]=1, h=1) = 65536 ln 14
    LogValue kappa = kappa_log(1, 1, Rat(1), ctx50);
    RatInterval ln14 = ln14_enclosure(120);
    RatInterval oracle{Rat(65536) * ln14.lo, Rat(65536) * ln14.hi};
    CHECK(contains(kappa, oracle));
    CHECK(kappa.relative_width() < make_rat(1, pow_int(10, 30)));
    Rat oracle_width = (oracle.hi - oracle.lo) / oracle.hi;
    CHECK(oracle_width < make_rat(1, pow_int(10, 30)));

    // the max clamps at 1: h = 1/2 gives the identical interval
    CHECK(kappa_log(1, 1, make_rat(1, 2), ctx50) == kappa);

    // g = 2: 8192 * 256 * ln 28 (sanity: between 6.9e6 and 7.0e6)
    LogValue kappa2 = kappa_log(2, 1, Rat(1), ctx50);
    CHECK(kappa2.lo() > Rat(6900000));
    CHECK(kappa2.hi() < Rat(7000000));
}

TEST_CASE("doubling the precision shrinks the kappa interval") {
    IntervalContext wide;
    wide.decimal_digits = 100;
    LogValue coarse = kappa_log(2, 3, make_rat(7, 10), ctx50);
    LogValue fine = kappa_log(2, 3, make_rat(7, 10), wide);
    CHECK(fine.width() < coarse.width());
    CHECK(fine.lo() >= coarse.lo());
    CHECK(fine.hi() <= coarse.hi());
}

TEST_CASE("discriminant bound grid") {
    CHECK(discriminant_bound(1, make_rat(1, 2)) == 500);
    CHECK(discriminant_bound(1, Rat(1)) == 500);
    CHECK(discriminant_bound(2, Rat(3)) == 18000);
    const unsigned long degrees[] = {1, 2, 3, 5};
    const Rat heights[] = {make_rat(1, 2), make_rat(7, 10), Rat(1), Rat(3), make_rat(22, 7)};
    for (unsigned long d : degrees)
        for (const Rat& h : heights) {
            Rat expected = Rat(500) * Rat(d) * Rat(d) * std::max(h, Rat(1)) * std::max(h, Rat(1));
            CHECK(discriminant_bound(d, h) == expected);
            // monotone in both arguments
            CHECK(discriminant_bound(d + 1, h) >= discriminant_bound(d, h));
            CHECK(discriminant_bound(d, h + 1) >= discriminant_bound(d, h));
        }
}

TEST_CASE("every test CM order sits below the discriminant bound at unit height") {
    for (long d : {-3L, -4L, -7L, -8L, -11L, -20L}) {
        Order order = InstanceGenerator::order_for_discriminant(d);
        CHECK(Rat(abs(*order.discriminant())) <= discriminant_bound(1, Rat(1)));
    }
}

TEST_CASE("covolume formula frozen examples") {
    CHECK(covolume_formula(Order::rational_integers(), 1, 1, 2) == 4);
    CHECK(covolume_formula(Order::quadratic(0, 1), 1, 1, 1) == 4);
    CHECK(covolume_formula(Order::quadratic(-1, 1), 2, 1, 1) == 12);
    // cross-check against the doubled realification of M = (2) over D = -3
    HermitianForm two(Order::quadratic(-1, 1), herm_entries({{{2, 0}}}));
    RatMat s = two.realify();
    IntMat g(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) g(i, j) = int_checked(2 * s(i, j));
    CHECK(Rat(det_bareiss(g)) == covolume_formula(Order::quadratic(-1, 1), 2, 1, 1));

    CHECK_THROWS_AS(covolume_formula(Order::rational_integers(), 1, 2, 1), compute_error);
    CHECK_THROWS_AS(covolume_formula(Order::quadratic(0, 1), 1, 100, 2), compute_error);
}

TEST_CASE("inequality chain frozen examples") {
    InequalityChain one = inequality_chain(1, Rat(4), ctx50);
    CHECK(one.Lambda_sq_max == 4);
    CHECK(one.R_sq_max == 1);
    CHECK(one.lambda_sq_max.lo() <= 4);
    CHECK(one.lambda_sq_max.hi() >= 4);

    InequalityChain two = inequality_chain(2, Rat(4), ctx50);
    CHECK(two.Lambda_sq_max == 16);
    CHECK(two.R_sq_max == 8);
    CHECK(two.mu_factor == 4);

    // lambda^2 = 2 for the hexagonal-like Gram [[2,1],[1,2]]: 2 <= 2 sqrt(3)
    InequalityChain hex = inequality_chain(2, Rat(3), ctx50);
    CHECK(hex.lambda_sq_max.lo() > 2);
}

TEST_CASE("theorem bound log") {
    CurveBoundData data;
    data.genus_x = 1;
    data.degree_k = 1;
    data.faltings_height = Rat(1);
    data.period_p = 1;
    data.r = 1;
    data.order = Order::rational_integers();

    TheoremBound plain = theorem_bound_log(data, ctx50);
    LogValue kappa = kappa_log(1, 1, Rat(1), ctx50);
    CHECK(plain.log_mu_bound == kappa.scaled(Rat(3)));
    CHECK_FALSE(plain.intermediate_bound.has_value());

    data.period_p = 2;
    TheoremBound shifted = theorem_bound_log(data, ctx50);
    RealInterval diff(shifted.log_mu_bound.lo() - plain.log_mu_bound.hi(),
                      shifted.log_mu_bound.hi() - plain.log_mu_bound.lo());
    RealInterval two_ln2 = ln_interval(Rat(2), ctx50).scaled(Rat(2));
    CHECK(diff.lo() <= two_ln2.hi());
    CHECK(diff.hi() >= two_ln2.lo());

    data.period_p = 1;
    data.chi_rho = Int(1);
    TheoremBound with_intermediate = theorem_bound_log(data, ctx50);
    REQUIRE(with_intermediate.intermediate_bound.has_value());
    CHECK(*with_intermediate.intermediate_bound == 16);  // (2g)^{2g+1} vol^2 = 8 * 2
    REQUIRE(with_intermediate.log_intermediate.has_value());
    CHECK(with_intermediate.log_intermediate->lo() <= ln_interval(Rat(16), ctx50).hi());
    CHECK(with_intermediate.log_intermediate->hi() >= ln_interval(Rat(16), ctx50).lo());
}

TEST_CASE("non genus one bounds") {
    CHECK(*non_genus_one_bound(3, 2, false) == 2);
    CHECK(*non_genus_one_bound(2, 0, true) == 3);
    CHECK_FALSE(non_genus_one_bound(5, 0, false).has_value());
    CHECK_THROWS_AS(non_genus_one_bound(3, 1, true), compute_error);
}

TEST_CASE("certify the trivial instance") {
    HermitianForm one(Order::rational_integers(), herm_entries({{{1, 0}}}));
    HomInstance inst(one, 1, true, true, std::nullopt, 1);
    CurveBoundData data;
    data.genus_x = 1;
    data.degree_k = 1;
    data.faltings_height = Rat(1);
    data.period_p = 1;
    data.chi_rho = Int(1);
    data.c_omega = 1;
    data.r = 1;
    data.order = Order::rational_integers();

    CertificationReport report = certify(inst, data, ctx50);
    CHECK(report.all_pass());
    CHECK(report.degree.mu == 1);
    CHECK(report.vol_sq == 2);
    CHECK(report.intermediate_bound == 16);

    // cross-module covolume equality over Z[i]
    HermitianForm zi(Order::quadratic(0, 1), herm_entries({{{1, 0}}}));
    HomInstance inst2(zi, 1, true, true, std::nullopt, 1);
    CurveBoundData data2 = data;
    data2.order = Order::quadratic(0, 1);
    CertificationReport report2 = certify(inst2, data2, ctx50);
    CHECK(report2.all_pass());
    CHECK(report2.vol_sq == 4);

    // mismatched rank
    CurveBoundData bad = data;
    bad.r = 2;
    bad.genus_x = 2;
    CHECK_THROWS_AS(certify(inst, bad, ctx50), invariant_error);
}

TEST_CASE("certify random instances end to end") {
    InstanceGenerator gen(71);
    for (int trial = 0; trial < 25; ++trial) {
        auto made = gen.random_instance(3, false);
        CertificationReport report = certify(made.instance, made.curve, ctx50);
        CHECK(report.all_pass());
    }
}
