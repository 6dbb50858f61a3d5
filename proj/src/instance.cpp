#include "homlat/instance.hpp"

#include <cctype>
#include <set>

namespace homlat {

namespace {

void require_keys(const ordered_json& obj, const std::string& where,
                  const std::set<std::string>& required, const std::set<std::string>& optional) {
    if (!obj.is_object()) throw parse_error("SchemaViolation", where + " must be a JSON object");
    for (const auto& [key, _] : obj.items())
        if (!required.count(key) && !optional.count(key))
            throw parse_error("SchemaViolation", where + ": unknown field '" + key + "'");
    for (const std::string& key : required)
        if (!obj.contains(key))
            throw parse_error("SchemaViolation", where + ": missing field '" + key + "'");
}

Int parse_int(const ordered_json& value, const std::string& where) {
    if (value.is_number_integer()) return Int(static_cast<long>(value.get<std::int64_t>()));
    if (value.is_number_unsigned()) {
        std::uint64_t u = value.get<std::uint64_t>();
        Int r;
        mpz_import(r.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
        return r;
    }
    if (value.is_string()) {
        const std::string& s = value.get_ref<const std::string&>();
        if (s.empty()) throw parse_error("SchemaViolation", where + ": empty integer string");
        std::size_t start = s[0] == '-' ? 1 : 0;
        if (start == s.size()) throw parse_error("SchemaViolation", where + ": malformed integer");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw parse_error("SchemaViolation", where + ": malformed integer '" + s + "'");
        return Int(s);
    }
    if (value.is_number_float())
        throw parse_error("SchemaViolation", where + ": floats are not accepted, use an integer or string");
    throw parse_error("SchemaViolation", where + ": expected an integer");
}

unsigned long parse_small_positive(const ordered_json& value, const std::string& where,
                                   unsigned long max_value) {
    Int z = parse_int(value, where);
    if (z < 1 || z > Int(max_value))
        throw parse_error("SchemaViolation",
                          where + " must lie in [1, " + std::to_string(max_value) + "]");
    return z.get_ui();
}

bool parse_bool(const ordered_json& value, const std::string& where) {
    if (!value.is_boolean()) throw parse_error("SchemaViolation", where + ": expected a boolean");
    return value.get<bool>();
}

Rat parse_rational_json(const ordered_json& value, const std::string& where) {
    if (value.is_number_integer() || value.is_number_unsigned()) return Rat(parse_int(value, where));
    if (value.is_number_float())
        throw parse_error("SchemaViolation",
                          where + ": binary floats are not accepted, use a decimal or fraction string");
    if (!value.is_string()) throw parse_error("SchemaViolation", where + ": expected a rational");
    try {
        return parse_rational(value.get_ref<const std::string&>());
    } catch (const parse_error& e) {
        throw parse_error("SchemaViolation", where + ": " + e.what());
    }
}

IntMat parse_int_matrix(const ordered_json& value, const std::string& where) {
    if (!value.is_array() || value.empty())
        throw parse_error("SchemaViolation", where + ": expected a nonempty array of rows");
    const std::size_t rows = value.size();
    const std::size_t cols = value[0].is_array() ? value[0].size() : 0;
    if (cols == 0) throw parse_error("SchemaViolation", where + ": rows must be nonempty arrays");
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!value[i].is_array() || value[i].size() != cols)
            throw parse_error("SchemaViolation", where + ": ragged matrix");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = parse_int(value[i][j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    return m;
}

IntVec parse_int_vector(const ordered_json& value, const std::string& where) {
    if (!value.is_array()) throw parse_error("SchemaViolation", where + ": expected an array");
    IntVec v(value.size());
    for (std::size_t i = 0; i < value.size(); ++i)
        v[i] = parse_int(value[i], where + "[" + std::to_string(i) + "]");
    return v;
}

Order parse_order(const ordered_json& value) {
    require_keys(value, "order", {"kind"}, {"u", "v"});
    if (!value["kind"].is_string()) throw parse_error("SchemaViolation", "order.kind must be a string");
    const std::string kind = value["kind"].get<std::string>();
    if (kind == "RationalIntegers") {
        if (value.contains("u") || value.contains("v"))
            throw parse_error("SchemaViolation", "order over Z takes no u or v");
        return Order::rational_integers();
    }
    if (kind == "Quadratic") {
        if (!value.contains("u") || !value.contains("v"))
            throw parse_error("SchemaViolation", "quadratic order needs u and v");
        return Order::quadratic(parse_int(value["u"], "order.u"), parse_int(value["v"], "order.v"));
    }
    throw parse_error("SchemaViolation", "order.kind must be 'RationalIntegers' or 'Quadratic'");
}

Mat<OrderElement> parse_hermitian(const ordered_json& value, std::size_t rank) {
    if (!value.is_array() || value.size() != rank)
        throw parse_error("SchemaViolation", "hermitian must be a rank_O x rank_O array");
    Mat<OrderElement> m(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) {
        if (!value[i].is_array() || value[i].size() != rank)
            throw parse_error("SchemaViolation", "hermitian must be a rank_O x rank_O array");
        for (std::size_t j = 0; j < rank; ++j) {
            const std::string where = "hermitian[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            require_keys(value[i][j], where, {"a", "b"}, {});
            m(i, j) = {parse_int(value[i][j]["a"], where + ".a"), parse_int(value[i][j]["b"], where + ".b")};
        }
    }
    return m;
}

std::string order_kind_name(const Order& order) {
    return order.is_quadratic() ? "Quadratic" : "RationalIntegers";
}

}  // namespace

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("MalformedRational", "empty rational");
    std::size_t slash = text.find('/');
    auto check_digits = [&](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t start = (allow_sign && s[0] == '-') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!check_digits(num, true) || !check_digits(den, false))
            throw parse_error("MalformedRational", "malformed fraction '" + text + "'");
        Int d(den);
        if (d == 0) throw parse_error("MalformedRational", "zero denominator in '" + text + "'");
        return make_rat(Int(num), d);
    }
    std::size_t dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
        bool negative = !head.empty() && head[0] == '-';
        if (negative) head = head.substr(1);
        if (head.empty()) head = "0";
        if (!check_digits(head, false) || !check_digits(tail, false))
            throw parse_error("MalformedRational", "malformed decimal '" + text + "'");
        Int scale = pow_int(10, static_cast<unsigned long>(tail.size()));
        Int value = Int(head) * scale + Int(tail);
        Rat q = make_rat(value, scale);
        return negative ? -q : q;
    }
    if (!check_digits(text, true))
        throw parse_error("MalformedRational", "malformed rational '" + text + "'");
    return Rat(Int(text));
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

ParsedInstance parse_instance_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("MalformedJson", e.what());
    }
    return parse_instance_json(doc);
}

ParsedInstance parse_instance_json(const ordered_json& doc) {
    require_keys(doc, "instance",
                 {"schema_version", "order", "rank_O", "hermitian", "period_p", "x_rational_point",
                  "y_rational_point"},
                 {"coset", "curve_data"});
    if (!doc["schema_version"].is_string() ||
        doc["schema_version"].get<std::string>() != instance_schema_version)
        throw parse_error("UnknownSchemaVersion", "schema_version must be the string '" +
                                                      std::string(instance_schema_version) + "'");

    Order order = parse_order(doc["order"]);
    unsigned long rank = parse_small_positive(doc["rank_O"], "rank_O", GramLattice::max_dim);
    HermitianForm herm(order, parse_hermitian(doc["hermitian"], rank));
    Int period = parse_int(doc["period_p"], "period_p");
    bool x_point = parse_bool(doc["x_rational_point"], "x_rational_point");
    bool y_point = parse_bool(doc["y_rational_point"], "y_rational_point");

    std::optional<CosetData> coset;
    if (doc.contains("coset")) {
        require_keys(doc["coset"], "coset", {"h_basis", "offset"}, {});
        coset = CosetData{parse_int_matrix(doc["coset"]["h_basis"], "coset.h_basis"),
                          parse_int_vector(doc["coset"]["offset"], "coset.offset")};
    }

    std::optional<CurveBoundData> curve;
    std::optional<unsigned long> genus_y;
    unsigned long genus_x = rank;
    bool genus_defaulted = true;
    if (doc.contains("curve_data")) {
        const ordered_json& cd = doc["curve_data"];
        require_keys(cd, "curve_data", {"genus_x", "degree_k", "faltings_height"},
                     {"chi_rho", "c_omega", "genus_y"});
        genus_x = parse_small_positive(cd["genus_x"], "curve_data.genus_x", 1000000);
        genus_defaulted = false;
        CurveBoundData data;
        data.genus_x = genus_x;
        data.degree_k = parse_small_positive(cd["degree_k"], "curve_data.degree_k", 1000000);
        data.faltings_height = parse_rational_json(cd["faltings_height"], "curve_data.faltings_height");
        data.period_p = period;
        if (cd.contains("chi_rho")) data.chi_rho = parse_int(cd["chi_rho"], "curve_data.chi_rho");
        if (cd.contains("c_omega")) data.c_omega = parse_int(cd["c_omega"], "curve_data.c_omega");
        data.r = rank;
        data.order = order;
        validate(data);
        curve = std::move(data);
        if (cd.contains("genus_y")) {
            Int gy = parse_int(cd["genus_y"], "curve_data.genus_y");
            if (gy < 0 || gy > Int(1000000ul))
                throw parse_error("SchemaViolation", "curve_data.genus_y out of range");
            genus_y = gy.get_ui();
        }
    }

    if (!herm.is_positive_definite())
        throw compute_error("NotPositiveDefinite", "hermitian form is not positive definite");
    HomInstance inst(std::move(herm), std::move(period), x_point, y_point, std::move(coset), genus_x);
    return ParsedInstance{std::move(inst), std::move(curve), genus_y, genus_defaulted};
}

ordered_json instance_to_json(const ParsedInstance& parsed) {
    const HomInstance& inst = parsed.instance;
    ordered_json doc;
    doc["schema_version"] = instance_schema_version;
    ordered_json order;
    order["kind"] = order_kind_name(inst.order());
    if (inst.order().is_quadratic()) {
        order["u"] = to_string(inst.order().u());
        order["v"] = to_string(inst.order().v());
    }
    doc["order"] = std::move(order);
    doc["rank_O"] = inst.rank();
    ordered_json herm = ordered_json::array();
    for (std::size_t i = 0; i < inst.rank(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < inst.rank(); ++j) {
            ordered_json cell;
            cell["a"] = to_string(inst.hermitian().at(i, j).a);
            cell["b"] = to_string(inst.hermitian().at(i, j).b);
            row.push_back(std::move(cell));
        }
        herm.push_back(std::move(row));
    }
    doc["hermitian"] = std::move(herm);
    doc["period_p"] = to_string(inst.period());
    doc["x_rational_point"] = inst.x_has_rational_point();
    doc["y_rational_point"] = inst.y_has_rational_point();
    if (inst.coset()) {
        ordered_json coset;
        ordered_json basis = ordered_json::array();
        for (std::size_t i = 0; i < inst.coset()->h_basis.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < inst.coset()->h_basis.cols(); ++j)
                row.push_back(to_string(inst.coset()->h_basis(i, j)));
            basis.push_back(std::move(row));
        }
        coset["h_basis"] = std::move(basis);
        ordered_json offset = ordered_json::array();
        for (const Int& z : inst.coset()->offset) offset.push_back(to_string(z));
        coset["offset"] = std::move(offset);
        doc["coset"] = std::move(coset);
    }
    if (parsed.curve) {
        ordered_json cd;
        cd["genus_x"] = parsed.curve->genus_x;
        cd["degree_k"] = parsed.curve->degree_k;
        cd["faltings_height"] = to_string(parsed.curve->faltings_height);
        if (parsed.curve->chi_rho) cd["chi_rho"] = to_string(*parsed.curve->chi_rho);
        cd["c_omega"] = to_string(parsed.curve->c_omega);
        if (parsed.genus_y) cd["genus_y"] = *parsed.genus_y;
        doc["curve_data"] = std::move(cd);
    }
    return doc;
}

}  // namespace homlat
