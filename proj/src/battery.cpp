#include "homlat/battery.hpp"

#include <sstream>

namespace homlat {

CheckStat& BatterySummary::stat(const std::string& name) {
    for (CheckStat& c : checks)
        if (c.name == name) return c;
    checks.push_back({name, 0, 0});
    return checks.back();
}

bool BatterySummary::all_pass() const {
    for (const CheckStat& c : checks)
        if (c.pass != c.run) return false;
    return true;
}

ordered_json BatterySummary::to_json() const {
    ordered_json doc;
    ordered_json arr = ordered_json::array();
    for (const CheckStat& c : checks) {
        ordered_json row;
        row["name"] = c.name;
        row["run"] = c.run;
        row["pass"] = c.pass;
        arr.push_back(std::move(row));
    }
    doc["checks"] = std::move(arr);
    doc["all_pass"] = all_pass();
    return doc;
}

std::string BatterySummary::to_text() const {
    std::ostringstream out;
    for (const CheckStat& c : checks)
        out << c.name << ": " << c.pass << "/" << c.run << (c.pass == c.run ? " pass" : " FAIL") << "\n";
    out << (all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return out.str();
}

namespace {

void record(BatterySummary& summary, const std::string& name, bool ok) {
    CheckStat& s = summary.stat(name);
    ++s.run;
    if (ok) ++s.pass;
}

// det(realify(M)) = (Im tau)^{2r} (det M)^2, and det(realify(M)) = det M over Z.
bool realified_det_identity_holds(const HermitianForm& herm) {
    Rat real_det = det_rat(herm.realify());
    Int det = herm.determinant();
    if (!herm.order().is_quadratic()) return real_det == Rat(det);
    Rat factor = pow_rat(herm.order().im_tau_sq(), herm.rank());
    return real_det == factor * Rat(det) * Rat(det);
}

void check_instance(BatterySummary& summary, const HomInstance& inst,
                    const std::optional<CurveBoundData>& curve, const IntervalContext& ctx) {
    const HermitianForm& herm = inst.hermitian();
    record(summary, "realified_det_identity", realified_det_identity_holds(herm));

    GramLattice gram = rosati_gram(inst);
    Rat formula = covolume_formula(inst.order(), herm.determinant(), 1, herm.rank());
    record(summary, "covolume_formula_matches_gram_det", formula == Rat(covolume_sq(gram)));

    LatticeReport report = lattice_report(gram);
    const unsigned long n = gram.dim();
    Int chain_rhs = pow_int(Int(n), n) * report.covolume_sq;
    record(summary, "lambda_bound_holds", pow_int(report.lambda_sq, n) <= chain_rhs);
    record(summary, "lambda_mixed_bound_holds",
           pow_int(report.lambda_sq, n - 1) * report.Lambda_sq <= chain_rhs);

    bool even_ok = report.lambda_sq > 0 && report.lambda_sq % 2 == 0 && report.Lambda_sq % 2 == 0;
    record(summary, "rosati_values_even", even_ok);

    if (gram.dim() <= 6) {
        SvpResult scan = brute_force_minimum(gram, sound_enumeration_box(gram));
        record(summary, "svp_matches_brute_force", scan.q_value == report.lambda_sq);
    }

    DegreeResult degree = minimal_degree(inst);
    record(summary, "mu_lower_ge_half_lambda_sq", degree.lower >= Rat(report.lambda_sq) / 2);
    if (degree.exact && degree.witness)
        record(summary, "witness_degree_matches", degree_of_hom(inst, *degree.witness) == degree.mu);

    if (inst.coset()) {
        const CosetData& coset = *inst.coset();
        auto exact = coset_minimum(gram, coset.h_basis, coset.offset);
        if (gram.dim() <= 4) {
            SvpResult scan = coset_brute_force(gram, coset.h_basis, coset.offset,
                                               sound_coset_box(gram, coset.h_basis, coset.offset));
            record(summary, "coset_matches_brute_force", exact && exact->q_value == scan.q_value);
        }
        // offset lies in H for generated instances, so mu <= p^2 lambda^2 / 2
        Rat mu = Rat(degree.mu);
        Rat lo = Rat(report.lambda_sq) / 2;
        Rat hi = Rat(inst.period() * inst.period()) * Rat(report.lambda_sq) / 2;
        record(summary, "coset_mu_sandwich", degree.exact && lo <= mu && mu <= hi);
    }

    if (curve) {
        CertificationReport cert = certify(inst, *curve, ctx);
        record(summary, "certify_all_checks", cert.all_pass());
    }
}

}  // namespace

BatterySummary run_random_battery(std::uint64_t seed, long count, const IntervalContext& ctx) {
    BatterySummary summary;
    InstanceGenerator gen(seed);
    for (long i = 0; i < count; ++i) {
        // every third instance carries coset data with the sandwich guarantee
        if (i % 3 == 2) {
            long period = 2 + (i % 2);
            auto made = gen.random_coset_instance(period);
            check_instance(summary, made.instance, made.curve, ctx);
        } else {
            auto made = gen.random_instance(3, false);
            check_instance(summary, made.instance, made.curve, ctx);
        }
    }
    return summary;
}

BatterySummary run_file_battery(const ParsedInstance& parsed, const IntervalContext& ctx) {
    BatterySummary summary;
    check_instance(summary, parsed.instance, parsed.curve, ctx);
    return summary;
}

}  // namespace homlat
