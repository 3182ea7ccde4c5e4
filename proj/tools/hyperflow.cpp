#include "hyperflow/derivation.hpp"
#include "hyperflow/jet.hpp"
#include "hyperflow/lambda.hpp"
#include "hyperflow/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef HYPERFLOW_GOLDEN_DIR
#define HYPERFLOW_GOLDEN_DIR "data/golden"
#endif

namespace {

using hyperflow::Assignment;
using hyperflow::Coordinate;
using hyperflow::Derivation;
using hyperflow::FlowSpec;
using hyperflow::FlowTable;
using hyperflow::LambdaTable;
using hyperflow::OpIndex;
using hyperflow::Rational;
using hyperflow::VerificationReport;

constexpr int kExitVerified = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_odd(const char* name, int value) {
    if (value < 1 || value % 2 == 0) {
        throw UsageError(std::string(name) + " must be odd and positive, got " +
                         std::to_string(value));
    }
}

Assignment load_initial_point(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open init file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("init file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw UsageError("init file must be a JSON object of coordinate values");
    Assignment point;
    try {
        for (const auto& [key, value] : doc.items()) {
            const Coordinate c = Coordinate::parse(key);
            if (value.is_string()) {
                point.set(c, Rational::parse(value.get<std::string>()));
            } else if (value.is_number_integer()) {
                point.set(c, Rational(value.get<long>()));
            } else {
                throw UsageError("value of " + key + " must be a rational string like \"3/2\"");
            }
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("init file: ") + e.what());
    }
    return point;
}

std::vector<Coordinate> parse_coordinate_list(const std::string& text) {
    // comma-separated "b[i,j]" entries; the commas inside brackets belong to
    // the coordinates
    std::vector<Coordinate> out;
    std::string current;
    int depth = 0;
    auto flush = [&]() {
        if (current.empty()) return;
        out.push_back(Coordinate::parse(current));
        current.clear();
    };
    for (char ch : text) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            current += ch;
        }
    }
    flush();
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

int emit_report(const VerificationReport& report, const std::string& report_path) {
    std::cout << report.to_text();
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw UsageError("cannot write report file '" + report_path + "'");
        out << report.to_json().dump(2) << "\n";
    }
    return report.all_pass() ? kExitVerified : kExitCheckFailed;
}

int cmd_lambda(int max_j, const std::string& format) {
    if (max_j < 1) throw UsageError("--max-j must be >= 1");
    const LambdaTable table(max_j);
    if (format == "json") {
        std::cout << table.to_json().dump(2) << "\n";
    } else {
        std::cout << table.to_text();
    }
    return kExitVerified;
}

int cmd_verify(const std::string& suite, int max_k, int max_l, int max_j, int order,
               const std::string& report_path) {
    std::optional<VerificationReport> report;
    if (suite == "commute") {
        require_odd("--max-k", max_k);
        require_odd("--max-l", max_l);
        require_odd("--max-j", max_j);
        report = hyperflow::run_commute_suite(max_k, max_l, max_j);
    } else if (suite == "lambda") {
        require_odd("--max-k", max_k);
        if (max_j < 1) throw UsageError("--max-j must be >= 1");
        report = hyperflow::run_annihilation_suite(max_k, max_j);
    } else if (suite == "closed-forms") {
        require_odd("--max-k", max_k);
        require_odd("--max-j", max_j);
        report = hyperflow::run_closed_forms_suite(max_k, max_j);
    } else if (suite == "series") {
        require_odd("--max-k", max_k);
        if (order < 2 || order < max_k) throw UsageError("--order must be >= 2 and >= --max-k");
        report = hyperflow::run_series_suite(max_k, order);
    } else if (suite == "j1-specials") {
        require_odd("--max-k", max_k);
        report = hyperflow::run_j1_special_suite(max_k);
    } else {
        throw UsageError("unknown suite '" + suite +
                         "'; expected commute|lambda|closed-forms|series|j1-specials");
    }
    return emit_report(*report, report_path);
}

int cmd_flow(int k, const std::string& init_path, int order, double t0, double t1, int steps,
             const std::string& coords_text, const std::string& lambdas_text,
             const std::string& format, const std::string& out_path) {
    require_odd("--k", k);
    if (order < 1) throw UsageError("--order must be >= 1");
    if (steps < 1) throw UsageError("--steps must be >= 1");

    FlowSpec spec{OpIndex(k), load_initial_point(init_path), order, {}, {}, {}};
    try {
        if (coords_text.empty()) {
            for (const auto& [c, v] : spec.initial.values()) spec.coordinates.push_back(c);
        } else {
            spec.coordinates = parse_coordinate_list(coords_text);
        }
        spec.lambda_indices = lambdas_text.empty() ? std::vector<int>{1, 2}
                                                   : parse_int_list(lambdas_text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad flag value: ") + e.what());
    }
    for (int j : spec.lambda_indices) {
        if (j < 1) throw UsageError("--lambdas entries must be >= 1");
    }
    for (int i = 0; i <= steps; ++i) {
        spec.times.push_back(t0 + (t1 - t0) * static_cast<double>(i) / steps);
    }

    const FlowTable table = hyperflow::flow_sample(spec);
    const std::string payload =
        format == "json" ? table.to_json().dump(2) + "\n" : table.to_csv();
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot write output file '" + out_path + "'");
        out << payload;
    }
    return table.jets_conserved ? kExitVerified : kExitCheckFailed;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open golden file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_selftest(const std::string& golden_dir) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;

    const auto report_line = [&](const VerificationReport& r) {
        std::cout << "selftest " << r.suite() << ": " << (r.all_pass() ? "pass" : "FAIL") << " ("
                  << r.case_count() << " cases)\n";
        if (!r.all_pass()) {
            ok = false;
            std::cout << r.to_text();
        }
    };

    report_line(hyperflow::run_commute_suite(3, 3, 5));
    report_line(hyperflow::run_annihilation_suite(3, 3));
    report_line(hyperflow::run_series_suite(3, 6));

    const LambdaTable table(2);
    for (int j = 1; j <= 2; ++j) {
        const std::string name = "lambda_" + std::to_string(2 * j + 2);
        std::string expected = read_file(golden_dir + "/" + name + ".txt");
        while (!expected.empty() && (expected.back() == '\n' || expected.back() == '\r')) {
            expected.pop_back();
        }
        const std::string actual = table.get(j).str();
        if (expected == actual) {
            std::cout << "selftest golden " << name << ": pass\n";
        } else {
            ok = false;
            std::cout << "selftest golden " << name << ": FAIL\n  expected: " << expected
                      << "\n  actual:   " << actual << "\n";
        }
    }

    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << "selftest " << (ok ? "passed" : "FAILED") << " in " << ms << " ms\n";
    return ok ? kExitVerified : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperflow: exact verification of the commuting derivation family D_k,\n"
                 "its integral polynomials lambda_{2j+2}, and conservation along jet flows"};
    app.require_subcommand(1);

    // lambda
    auto* lambda_cmd = app.add_subcommand("lambda", "print the lambda polynomial table");
    int lambda_max_j = 4;
    std::string lambda_format = "text";
    lambda_cmd->add_option("--max-j", lambda_max_j, "largest j; prints lambda_4..lambda_{2j+2}");
    lambda_cmd->add_option("--format", lambda_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int max_k = 5, max_l = 5, max_j = 7, order = 12;
    std::string report_path;
    verify_cmd->add_option("suite", suite, "commute|lambda|closed-forms|series|j1-specials")
        ->required();
    verify_cmd->add_option("--max-k", max_k, "bound on k (odd)");
    verify_cmd->add_option("--max-l", max_l, "bound on l (odd, commute only)");
    verify_cmd->add_option("--max-j", max_j, "bound on j");
    verify_cmd->add_option("--order,-M", order, "series truncation order");
    verify_cmd->add_option("--report", report_path, "write the report as JSON to this file");

    // flow
    auto* flow_cmd = app.add_subcommand("flow", "sample coordinate and lambda jets along a flow");
    int flow_k = 1, flow_order = 8, flow_steps = 10;
    double flow_t0 = 0.0, flow_t1 = 0.1;
    std::string flow_init, flow_coords, flow_lambdas, flow_format = "csv", flow_out;
    flow_cmd->add_option("--k", flow_k, "operator index (odd)")->required();
    flow_cmd->add_option("--init", flow_init, "JSON file {\"b[1,1]\": \"3/2\", ...}")->required();
    flow_cmd->add_option("--order", flow_order, "jet truncation order N");
    flow_cmd->add_option("--t0", flow_t0, "first grid time");
    flow_cmd->add_option("--t1", flow_t1, "last grid time");
    flow_cmd->add_option("--steps", flow_steps, "number of grid intervals");
    flow_cmd->add_option("--coords", flow_coords,
                         "comma-separated coordinates to sample (default: init support)");
    flow_cmd->add_option("--lambdas", flow_lambdas,
                         "comma-separated j values for lambda_{2j+2} columns (default: 1,2)");
    flow_cmd->add_option("--format", flow_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    flow_cmd->add_option("--out", flow_out, "output file (default: stdout)");

    // selftest
    auto* selftest_cmd = app.add_subcommand("selftest", "fixed small verification battery");
    std::string golden_dir = HYPERFLOW_GOLDEN_DIR;
    selftest_cmd->add_option("--golden-dir", golden_dir, "directory with frozen lambda outputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (lambda_cmd->parsed()) return cmd_lambda(lambda_max_j, lambda_format);
        if (verify_cmd->parsed()) {
            return cmd_verify(suite, max_k, max_l, max_j, order, report_path);
        }
        if (flow_cmd->parsed()) {
            return cmd_flow(flow_k, flow_init, flow_order, flow_t0, flow_t1, flow_steps,
                            flow_coords, flow_lambdas, flow_format, flow_out);
        }
        if (selftest_cmd->parsed()) return cmd_selftest(golden_dir);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
