#include "homlat/report.hpp"

namespace homlat {

namespace {

ordered_json int_vector_to_json(const IntVec& v) {
    ordered_json arr = ordered_json::array();
    for (const Int& z : v) arr.push_back(to_string(z));
    return arr;
}

ordered_json int_matrix_to_json(const IntMat& m) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        arr.push_back(std::move(row));
    }
    return arr;
}

ordered_json lattice_to_json(const GramLattice& gram, const LatticeReport& report) {
    ordered_json out;
    out["n"] = gram.dim();
    out["gram"] = int_matrix_to_json(gram.gram());
    out["covolume_sq"] = to_string(report.covolume_sq);
    out["lambda_sq"] = to_string(report.lambda_sq);
    out["Lambda_sq"] = to_string(report.Lambda_sq);
    out["covering_radius_sq_upper"] = to_string(report.covering_radius_sq_upper);
    out["lambda_witness"] = int_vector_to_json(report.lambda_witness);
    out["Lambda_witness"] = int_vector_to_json(report.Lambda_witness);
    return out;
}

ordered_json bounds_to_json(const ParsedInstance& parsed, const TheoremBound& bound,
                            const LogValue& kappa, const IntervalContext& ctx) {
    const CurveBoundData& data = *parsed.curve;
    ordered_json out;
    out["discriminant_bound"] = to_string(discriminant_bound(data.degree_k, data.faltings_height));
    out["kappa_log"] = interval_to_json(kappa, ctx);
    out["theorem_log_bound"] = interval_to_json(bound.log_mu_bound, ctx);
    if (bound.intermediate_bound)
        out["intermediate_bound"] = to_string(*bound.intermediate_bound);
    else
        out["intermediate_bound"] = nullptr;
    if (bound.log_intermediate)
        out["intermediate_log"] = interval_to_json(*bound.log_intermediate, ctx);
    else
        out["intermediate_log"] = nullptr;
    if (parsed.genus_y && *parsed.genus_y != 1) {
        auto b = non_genus_one_bound(data.genus_x, *parsed.genus_y,
                                     parsed.instance.x_has_rational_point());
        out["non_genus_one_bound"] = b ? ordered_json(to_string(*b)) : ordered_json(nullptr);
    }
    return out;
}

}  // namespace

ordered_json interval_to_json(const RealInterval& x, const IntervalContext& ctx) {
    ordered_json out;
    out["lo"] = decimal_string_directed(x.lo(), ctx.decimal_digits, false);
    out["hi"] = decimal_string_directed(x.hi(), ctx.decimal_digits, true);
    out["precision"] = ctx.decimal_digits;
    return out;
}

ordered_json degree_to_json(const DegreeResult& degree) {
    ordered_json out;
    out["case"] = degree_case_name(degree.case_tag);
    out["exact"] = degree.exact;
    if (degree.exact) {
        out["mu"] = to_string(degree.mu);
    } else {
        ordered_json interval;
        interval["lower"] = to_string(degree.lower);
        interval["upper"] = to_string(degree.upper);
        out["mu"] = std::move(interval);
    }
    out["witness"] = degree.witness ? int_vector_to_json(*degree.witness) : ordered_json(nullptr);
    return out;
}

ordered_json checks_to_json(const std::vector<CheckResult>& checks) {
    ordered_json arr = ordered_json::array();
    for (const CheckResult& c : checks) {
        ordered_json row;
        row["name"] = c.name;
        row["pass"] = c.pass;
        row["lhs"] = c.lhs;
        row["rhs"] = c.rhs;
        arr.push_back(std::move(row));
    }
    return arr;
}

ordered_json build_analyze_report(const ParsedInstance& parsed, const std::string& input_hash,
                                  const IntervalContext& ctx) {
    ordered_json doc;
    doc["schema_version"] = instance_schema_version;
    doc["input_fnv1a64"] = input_hash;
    GramLattice gram = rosati_gram(parsed.instance);
    if (parsed.curve) {
        CertificationReport cert = certify(parsed.instance, *parsed.curve, ctx);
        doc["lattice"] = lattice_to_json(gram, cert.lattice);
        doc["degree"] = degree_to_json(cert.degree);
        TheoremBound bound = theorem_bound_log(*parsed.curve, ctx);
        doc["bounds"] = bounds_to_json(parsed, bound, cert.kappa, ctx);
        doc["checks"] = checks_to_json(cert.checks);
    } else {
        LatticeReport report = lattice_report(gram);
        doc["lattice"] = lattice_to_json(gram, report);
        doc["degree"] = degree_to_json(minimal_degree(parsed.instance));
        doc["checks"] = ordered_json::array();
    }
    return doc;
}

ordered_json build_bound_report(const ParsedInstance& parsed, const std::string& input_hash,
                                const IntervalContext& ctx) {
    if (!parsed.curve)
        throw invariant_error("MissingCurveData", "the bound command needs curve_data in the instance");
    ordered_json doc;
    doc["schema_version"] = instance_schema_version;
    doc["input_fnv1a64"] = input_hash;
    const CurveBoundData& data = *parsed.curve;
    TheoremBound bound = theorem_bound_log(data, ctx);
    LogValue kappa = kappa_log(data.genus_x, data.degree_k, data.faltings_height, ctx);
    doc["bounds"] = bounds_to_json(parsed, bound, kappa, ctx);
    doc["checks"] = ordered_json::array();
    return doc;
}

ordered_json build_oracle_report(const ParsedInstance& parsed, const std::string& input_hash,
                                 const std::optional<Int>& box_override) {
    GramLattice gram = rosati_gram(parsed.instance);
    if (gram.dim() > 8)
        throw invariant_error("DimensionTooLarge",
                              "oracle comparison is limited to dimension 8, got " +
                                  std::to_string(gram.dim()));
    ordered_json doc;
    doc["schema_version"] = instance_schema_version;
    doc["input_fnv1a64"] = input_hash;
    ordered_json rows = ordered_json::array();

    Int box = box_override ? *box_override : sound_enumeration_box(gram);
    SvpResult enumerated = shortest_vector(gram);
    SvpResult scanned = brute_force_minimum(gram, box);
    {
        ordered_json row;
        row["problem"] = "shortest_vector";
        row["box"] = to_string(box);
        row["enumeration_q"] = to_string(enumerated.q_value);
        row["brute_force_q"] = to_string(scanned.q_value);
        row["match"] = enumerated.q_value == scanned.q_value;
        rows.push_back(std::move(row));
    }
    if (parsed.instance.coset()) {
        const CosetData& coset = *parsed.instance.coset();
        Int cbox = box_override ? *box_override : sound_coset_box(gram, coset.h_basis, coset.offset);
        auto exact = coset_minimum(gram, coset.h_basis, coset.offset);
        SvpResult cscan = coset_brute_force(gram, coset.h_basis, coset.offset, cbox);
        ordered_json row;
        row["problem"] = "coset_minimum";
        row["box"] = to_string(cbox);
        row["enumeration_q"] = exact ? ordered_json(to_string(exact->q_value)) : ordered_json(nullptr);
        row["brute_force_q"] = to_string(cscan.q_value);
        row["match"] = exact && exact->q_value == cscan.q_value;
        rows.push_back(std::move(row));
    }
    doc["comparisons"] = std::move(rows);
    return doc;
}

std::string render_report(const ordered_json& doc, bool pretty) {
    return (pretty ? doc.dump(2) : doc.dump()) + "\n";
}

bool oracle_report_matches(const ordered_json& doc) {
    for (const auto& row : doc.at("comparisons"))
        if (!row.at("match").get<bool>()) return false;
    return true;
}

}  // namespace homlat
