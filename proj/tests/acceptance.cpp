// Acceptance suite: every criterion prints exactly one PASS/FAIL line and the
// binary exits nonzero if any of them fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "homlat/battery.hpp"
#include "homlat/generator.hpp"
#include "homlat/report.hpp"

#include "support.hpp"

using namespace homlat;
using testsupport::ln14_enclosure;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("CRITERION %2d %-34s %s (%s)\n", number, name.c_str(), pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass) ++failures;
}

std::vector<Order> quadratic_orders() {
    std::vector<Order> orders;
    for (long d : {-3, -4, -7, -8, -11, -20}) orders.push_back(InstanceGenerator::order_for_discriminant(d));
    return orders;
}

// 1. det(realify(M)) = (Im tau)^{2r} (det M)^2, 200 randomized hermitian PD
//    forms, r in {1,2,3,4}, six CM orders, exact equality, under 5 s.
void criterion_1() {
    Timer timer;
    InstanceGenerator gen(1001);
    auto orders = quadratic_orders();
    int checked = 0, good = 0;
    for (int i = 0; i < 200; ++i) {
        const Order& order = orders[static_cast<std::size_t>(i) % orders.size()];
        std::size_t r = static_cast<std::size_t>(1 + i % 4);
        HermitianForm form = gen.random_hermitian(order, r);
        Rat lhs = det_rat(form.realify());
        Int det = form.determinant();
        Rat rhs = pow_rat(order.im_tau_sq(), r) * Rat(det) * Rat(det);
        ++checked;
        if (lhs == rhs) ++good;
    }
    double s = timer.seconds();
    std::ostringstream detail;
    detail << good << "/" << checked << " exact, " << s << "s";
    report(1, "realified determinant identity", good == checked && s < 5.0, detail.str());
}

// 2. |det M|^2 equals |det| of the realified 2r x 2r integer action matrix,
//    100 random M per order, r <= 3, under 5 s.
void criterion_2() {
    Timer timer;
    InstanceGenerator gen(1002);
    std::vector<Order> orders = quadratic_orders();
    orders.push_back(Order::rational_integers());
    long checked = 0, good = 0;
    for (const Order& order : orders) {
        for (int i = 0; i < 100; ++i) {
            std::size_t r = static_cast<std::size_t>(1 + i % 3);
            Mat<OrderElement> m(r, r);
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = 0; b < r; ++b)
                    m(a, b) = {Int(gen.uniform(-3, 3)),
                               order.is_quadratic() ? Int(gen.uniform(-3, 3)) : Int(0)};
            Int lhs = endo_degree(order, m);
            Int rhs = abs(det_bareiss(testsupport::regular_representation(order, m)));
            ++checked;
            if (lhs == rhs) ++good;
        }
    }
    double s = timer.seconds();
    std::ostringstream detail;
    detail << good << "/" << checked << " exact, " << s << "s";
    report(2, "endomorphism degree (Lemma side)", good == checked && s < 5.0, detail.str());
}

// 3. shortest_vector equals brute force on 100 random PD Gram matrices,
//    n <= 6, entries bounded by 50, under 60 s.
void criterion_3() {
    Timer timer;
    InstanceGenerator gen(1003);
    int good = 0;
    Int max_entry = 0;
    for (int i = 0; i < 100; ++i) {
        std::size_t n = static_cast<std::size_t>(1 + i % 6);
        GramLattice l = gen.random_gram(n, n <= 5 ? 3 : 2);  // keeps entries under 50
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) max_entry = std::max(max_entry, Int(abs(l.gram()(a, b))));
        SvpResult enumerated = shortest_vector(l);
        SvpResult scanned = brute_force_minimum(l, sound_enumeration_box(l));
        if (enumerated.q_value == scanned.q_value) ++good;
    }
    double s = timer.seconds();
    std::ostringstream detail;
    detail << good << "/100 equal, max entry " << to_string(max_entry) << ", " << s << "s";
    report(3, "SVP oracle equivalence", good == 100 && s < 60.0 && max_entry <= 50, detail.str());
}

// 4. covolume formula (d_gamma = 1, c = 1) equals det(rosati_gram) on the
//    criterion-1 population plus pure-Z instances.
void criterion_4() {
    InstanceGenerator gen(1001);  // same stream as criterion 1
    auto orders = quadratic_orders();
    long checked = 0, good = 0;
    for (int i = 0; i < 200; ++i) {
        const Order& order = orders[static_cast<std::size_t>(i) % orders.size()];
        std::size_t r = static_cast<std::size_t>(1 + i % 4);
        HermitianForm form = gen.random_hermitian(order, r);
        HomInstance inst(form, 1, true, true, std::nullopt, r);
        ++checked;
        if (covolume_formula(order, form.determinant(), 1, r) == Rat(covolume_sq(rosati_gram(inst))))
            ++good;
    }
    InstanceGenerator zgen(1004);
    for (int i = 0; i < 60; ++i) {
        std::size_t r = static_cast<std::size_t>(1 + i % 4);
        HermitianForm form = zgen.random_hermitian(Order::rational_integers(), r);
        HomInstance inst(form, 1, true, true, std::nullopt, r);
        ++checked;
        if (covolume_formula(Order::rational_integers(), form.determinant(), 1, r) ==
            Rat(covolume_sq(rosati_gram(inst))))
            ++good;
    }
    std::ostringstream detail;
    detail << good << "/" << checked << " exact";
    report(4, "covolume formula agreement", good == checked, detail.str());
}

// 5. 50 planted instances with known minimal degree, including 1, 2, 3, 5, 12.
void criterion_5() {
    InstanceGenerator gen(1005);
    const long degrees[] = {1, 2, 3, 5, 12};
    int good = 0, total = 0;
    for (int i = 0; i < 50; ++i) {
        long d = degrees[i % 5];
        Order order = gen.random_order(true);
        std::size_t max_rank = order.is_quadratic() ? 3 : 4;
        std::size_t r = static_cast<std::size_t>(gen.uniform(1, static_cast<long>(max_rank)));
        auto made = gen.planted_instance(Int(d), order, r);
        DegreeResult result = minimal_degree(made.instance);
        ++total;
        bool ok = result.exact && result.mu == d && result.witness &&
                  degree_of_hom(made.instance, *result.witness) == d;
        if (ok) ++good;
    }
    std::ostringstream detail;
    detail << good << "/" << total << " recovered exactly";
    report(5, "planted minimal degrees", good == total, detail.str());
}

// 6. coset_minimum equals the coset brute force on 50 instances with
//    p in {2, 3}, n <= 4, and the sandwich bounds hold on each.
void criterion_6() {
    InstanceGenerator gen(1006);
    int good = 0, total = 0;
    for (int i = 0; i < 50; ++i) {
        long p = 2 + i % 2;
        auto made = gen.random_coset_instance(p, 2);
        GramLattice gram = rosati_gram(made.instance);
        if (gram.dim() > 4) continue;
        const CosetData& coset = *made.instance.coset();
        auto exact = coset_minimum(gram, coset.h_basis, coset.offset);
        SvpResult scan = coset_brute_force(gram, coset.h_basis, coset.offset,
                                           sound_coset_box(gram, coset.h_basis, coset.offset));
        DegreeResult degree = minimal_degree(made.instance);
        Int lambda_sq = shortest_vector(gram).q_value;
        Rat lo = Rat(lambda_sq) / 2;
        Rat hi = Rat(Int(p) * Int(p)) * Rat(lambda_sq) / 2;
        ++total;
        bool ok = exact && exact->q_value == scan.q_value && degree.exact &&
                  lo <= Rat(degree.mu) && Rat(degree.mu) <= hi;
        if (ok) ++good;
    }
    std::ostringstream detail;
    detail << good << "/" << total << " matched with sandwich bounds";
    report(6, "coset minima", good == total && total >= 50, detail.str());
}

// 7. the section-5 inequalities hold exactly on at least 300 instances.
void criterion_7() {
    InstanceGenerator gen(1007);
    long checked = 0, good = 0;
    for (int i = 0; i < 300; ++i) {
        auto made = gen.random_instance(3, i % 4 == 3);
        GramLattice gram = rosati_gram(made.instance);
        LatticeReport rep = lattice_report(gram);
        unsigned long n = gram.dim();
        Int rhs = pow_int(Int(n), n) * rep.covolume_sq;
        bool ok = pow_int(rep.lambda_sq, n) <= rhs &&
                  pow_int(rep.lambda_sq, n - 1) * rep.Lambda_sq <= rhs;
        ++checked;
        if (ok) ++good;
    }
    std::ostringstream detail;
    detail << good << "/" << checked << " exact integer inequalities";
    report(7, "section-5 inequality chain", good == checked && checked >= 300, detail.str());
}

// 8. certify passes on every instance with curve data, and the kappa log for
//    (g=1, [K:Q]=1, h=1) matches the independent series evaluation of
//    65536 ln 14 to 30 significant digits.
void criterion_8() {
    IntervalContext ctx;
    InstanceGenerator gen(1008);
    int good = 0, total = 0;
    for (int i = 0; i < 60; ++i) {
        auto made = (i % 3 == 2) ? gen.random_coset_instance(2 + i % 2) : gen.random_instance(3, false);
        CertificationReport rep = certify(made.instance, made.curve, ctx);
        ++total;
        if (rep.all_pass()) ++good;
    }

    LogValue kappa = kappa_log(1, 1, Rat(1), ctx);
    auto series = ln14_enclosure(120);
    Rat lo = Rat(65536) * series.lo, hi = Rat(65536) * series.hi;
    Rat tol = make_rat(1, pow_int(10, 30));
    bool kappa_ok = kappa.lo() <= hi && lo <= kappa.hi() && kappa.relative_width() <= tol &&
                    (hi - lo) / hi <= tol;

    std::ostringstream detail;
    detail << good << "/" << total << " certified, kappa vs series "
           << (kappa_ok ? "agree to 30 digits" : "DISAGREE");
    report(8, "theorem certification", good == total && kappa_ok, detail.str());
}

// 9. discriminant bound on a 20-point grid, exact rationals, clamps included.
void criterion_9() {
    const unsigned long degrees[] = {1, 2, 3, 5};
    const Rat heights[] = {make_rat(1, 2), make_rat(7, 10), Rat(1), Rat(3), make_rat(22, 7)};
    int good = 0, total = 0;
    for (unsigned long d : degrees)
        for (const Rat& h : heights) {
            Rat clamped = h < 1 ? Rat(1) : h;
            Rat expected = Rat(500) * Rat(d) * Rat(d) * clamped * clamped;
            ++total;
            if (discriminant_bound(d, h) == expected) ++good;
        }
    std::ostringstream detail;
    detail << good << "/" << total << " grid points exact";
    report(9, "discriminant bound grid", good == total && total == 20, detail.str());
}

// 10. `verify --random 42 100` is byte-identical across runs and unaffected by
//     thread-count environment variables.
void criterion_10() {
    auto run = [](const std::string& env_prefix, const std::string& tag) {
        std::string out_path = "acceptance_verify_" + tag + ".out";
        std::string cmd = env_prefix + std::string(HOMLAT_CLI_PATH) + " verify --random 42 100 > " +
                          out_path + " 2> /dev/null";
        int status = std::system(cmd.c_str());
        std::ifstream in(out_path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        std::remove(out_path.c_str());
        return std::make_pair(WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str());
    };
    auto first = run("", "a");
    auto second = run("", "b");
    auto threaded = run("OMP_NUM_THREADS=4 ", "c");
    bool ok = first.first == 0 && first.second == second.second && first.second == threaded.second &&
              !first.second.empty();
    std::ostringstream detail;
    detail << "exit " << first.first << ", " << first.second.size() << " bytes, identical="
           << (ok ? "yes" : "no");
    report(10, "verify determinism", ok, detail.str());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0) {
        std::printf("ACCEPTANCE: all 10 criteria passed\n");
        return 0;
    }
    std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
    return 1;
}
