#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "homlat/battery.hpp"
#include "homlat/report.hpp"

namespace {

using namespace homlat;

constexpr int exit_ok = 0;
constexpr int exit_parse = 1;
constexpr int exit_invariant = 2;
constexpr int exit_compute = 3;
constexpr int exit_property = 4;

void emit_error(int code, const std::string& kind, const std::string& message) {
    ordered_json err;
    err["error"]["exit_code"] = code;
    err["error"]["kind"] = kind;
    err["error"]["message"] = message;
    std::cerr << err.dump() << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("FileNotReadable", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    bool pretty = false;
    long precision = 50;
};

IntervalContext context_for(const Options& opt) {
    IntervalContext ctx;
    ctx.decimal_digits = opt.precision;
    return ctx;
}

int run_analyze(const std::string& path, const Options& opt) {
    std::string text = read_file(path);
    ParsedInstance parsed = parse_instance_text(text);
    ordered_json doc = build_analyze_report(parsed, fnv1a64_hex(text), context_for(opt));
    std::cout << render_report(doc, opt.pretty);
    return exit_ok;
}

int run_bound(const std::string& path, const Options& opt) {
    std::string text = read_file(path);
    ParsedInstance parsed = parse_instance_text(text);
    ordered_json doc = build_bound_report(parsed, fnv1a64_hex(text), context_for(opt));
    std::cout << render_report(doc, opt.pretty);
    return exit_ok;
}

int run_verify_file(const std::string& path, const Options& opt) {
    std::string text = read_file(path);
    ParsedInstance parsed = parse_instance_text(text);
    BatterySummary summary = run_file_battery(parsed, context_for(opt));
    if (opt.pretty)
        std::cout << summary.to_text();
    else
        std::cout << summary.to_json().dump() << "\n";
    return summary.all_pass() ? exit_ok : exit_property;
}

int run_verify_random(std::uint64_t seed, long count, const Options& opt) {
    BatterySummary summary = run_random_battery(seed, count, context_for(opt));
    if (opt.pretty)
        std::cout << summary.to_text();
    else
        std::cout << summary.to_json().dump() << "\n";
    return summary.all_pass() ? exit_ok : exit_property;
}

int run_oracle(const std::string& path, const Options& opt, const std::optional<Int>& box) {
    std::string text = read_file(path);
    ParsedInstance parsed = parse_instance_text(text);
    ordered_json doc = build_oracle_report(parsed, fnv1a64_hex(text), box);
    std::cout << render_report(doc, opt.pretty);
    return oracle_report_matches(doc) ? exit_ok : exit_property;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact minimal-degree and bound computations on Rosati Hom-lattices"};
    app.require_subcommand(1);

    Options opt;
    bool json_flag = false;
    app.add_flag("--json", json_flag, "machine-readable output (default)");
    app.add_flag("--pretty", opt.pretty, "human-readable output");
    app.add_option("--precision", opt.precision, "significant decimal digits for log intervals")
        ->check(CLI::Range(10L, 10000L));

    std::string analyze_path, bound_path, verify_path, oracle_path;
    auto* analyze = app.add_subcommand("analyze", "lattice analysis and minimal degree");
    analyze->add_option("file", analyze_path, "instance JSON file")->required();

    auto* bound = app.add_subcommand("bound", "explicit bound chain (needs curve_data)");
    bound->add_option("file", bound_path, "instance JSON file")->required();

    auto* verify = app.add_subcommand("verify", "property battery on a file or random instances");
    verify->add_option("file", verify_path, "instance JSON file");
    std::vector<std::string> random_args;
    verify->add_option("--random", random_args, "SEED COUNT: reproducible random battery")
        ->expected(2);

    auto* oracle = app.add_subcommand("oracle", "enumeration vs exhaustive brute force");
    oracle->add_option("file", oracle_path, "instance JSON file")->required();
    std::string box_text;
    oracle->add_option("--box", box_text, "override the scan box bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(analyze_path, opt);
        if (*bound) return run_bound(bound_path, opt);
        if (*verify) {
            if (!random_args.empty()) {
                std::uint64_t seed = std::stoull(random_args[0]);
                long count = std::stol(random_args[1]);
                if (count < 1) throw parse_error("SchemaViolation", "count must be positive");
                return run_verify_random(seed, count, opt);
            }
            if (verify_path.empty())
                throw parse_error("SchemaViolation", "verify needs a file or --random SEED COUNT");
            return run_verify_file(verify_path, opt);
        }
        if (*oracle) {
            std::optional<Int> box;
            if (!box_text.empty()) {
                Int b(box_text);
                if (b < 1) throw parse_error("SchemaViolation", "box must be positive");
                box = b;
            }
            return run_oracle(oracle_path, opt, box);
        }
    } catch (const parse_error& e) {
        emit_error(exit_parse, e.kind(), e.what());
        return exit_parse;
    } catch (const invariant_error& e) {
        emit_error(exit_invariant, e.kind(), e.what());
        return exit_invariant;
    } catch (const compute_error& e) {
        emit_error(exit_compute, e.kind(), e.what());
        return exit_compute;
    } catch (const std::invalid_argument& e) {
        emit_error(exit_parse, "MalformedArgument", e.what());
        return exit_parse;
    } catch (const std::exception& e) {
        emit_error(exit_compute, "Internal", e.what());
        return exit_compute;
    }
    return exit_ok;
}
