// Acceptance suite: every criterion prints one pass/fail line; the binary
// exits nonzero if any criterion fails. Budgets and tolerances are fixed here.

#include "hyperflow/derivation.hpp"
#include "hyperflow/jet.hpp"
#include "hyperflow/lambda.hpp"
#include "hyperflow/parallel.hpp"
#include "hyperflow/suites.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef HYPERFLOW_CLI_PATH
#error "HYPERFLOW_CLI_PATH must be defined"
#endif
#ifndef HYPERFLOW_GOLDEN_DIR
#error "HYPERFLOW_GOLDEN_DIR must be defined"
#endif

using namespace hyperflow;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;  // <= 0: no budget
    std::function<bool(std::string&)> run;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return "<missing file: " + path + ">";
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool check_report(const VerificationReport& report, std::string& detail) {
    detail = std::to_string(report.case_count() - report.failed_count()) + "/" +
             std::to_string(report.case_count()) + " cases";
    if (!report.all_pass()) {
        for (const auto& c : report.cases()) {
            if (!c.pass) {
                detail += "; first failure: " + c.label();
                if (!c.residual.empty()) detail += " residual " + c.residual;
                break;
            }
        }
        return false;
    }
    return true;
}

// -- criterion bodies ---------------------------------------------------

bool commutation(std::string& detail) {
    return check_report(run_commute_suite(9, 9, 11), detail);
}

bool annihilation(std::string& detail) {
    return check_report(run_annihilation_suite(9, 10), detail);
}

bool closed_forms(std::string& detail) {
    return check_report(run_closed_forms_suite(9, 11), detail);
}

bool j1_specials(std::string& detail) {
    return check_report(run_j1_special_suite(15), detail);
}

bool series_identities(std::string& detail) {
    return check_report(run_series_suite(9, 12), detail);
}

bool lambda_goldens(std::string& detail) {
    for (int j = 1; j <= 2; ++j) {
        const std::string name = "lambda_" + std::to_string(2 * j + 2);
        const std::string expected =
            read_file(std::string(HYPERFLOW_GOLDEN_DIR) + "/" + name + ".txt");
        const std::string actual = lambda_poly(j).str() + "\n";
        if (expected != actual) {
            detail = name + " mismatch: golden '" + expected + "' computed '" + actual + "'";
            return false;
        }
    }
    for (int j = 1; j <= 12; ++j) {
        if (!lambda_poly(j).homogeneity().has_weight(2 * j + 2)) {
            detail = "lambda_" + std::to_string(2 * j + 2) + " is not homogeneous of weight " +
                     std::to_string(2 * j + 2);
            return false;
        }
    }
    detail = "golden lambda_4, lambda_6 byte-identical; homogeneity through j=12";
    return true;
}

bool generating_series_structure(std::string& detail) {
    for (int order : {1, 2, 5, 9, 12}) {
        const LaurentSeries s = lambda_generating_series(order);
        if (!(s.at(-1) == Polynomial::constant(Rational(4)))) {
            detail = "xi^-1 coefficient differs from 4 at order " + std::to_string(order);
            return false;
        }
        if (!s.at(0).is_zero()) {
            detail = "xi^0 coefficient nonzero at order " + std::to_string(order);
            return false;
        }
    }
    detail = "xi^-1 = 4 and xi^0 = 0 across truncations {1,2,5,9,12}";
    return true;
}

bool jet_conservation(std::string& detail) {
    const int order = 8;
    const int max_lambda = 4;
    const std::vector<int> ks{1, 3, 5};
    const std::vector<double> times{-0.1, -0.05, 0.0, 0.025, 0.05, 0.1};

    std::mt19937_64 rng(0x5eed2026);
    std::vector<Assignment> points;
    for (int p = 0; p < 20; ++p) {
        Assignment a;
        for (int row = 1; row <= 3; ++row) {
            for (int index = 1; index <= 9; index += 2) {
                std::uniform_int_distribution<long> den(1, 8);
                const long d = den(rng);
                std::uniform_int_distribution<long> num(-2 * d, 2 * d);
                a.set(Coordinate(row, index), Rational(num(rng), d));
            }
        }
        points.push_back(std::move(a));
    }

    struct Job {
        int point;
        int k;
    };
    std::vector<Job> jobs;
    for (int p = 0; p < static_cast<int>(points.size()); ++p) {
        for (int k : ks) jobs.push_back({p, k});
    }

    std::vector<std::string> failures(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        const Job& job = jobs[i];
        FlowSpec spec{OpIndex(job.k), points[job.point], order, {}, {}, times};
        for (int j = 1; j <= max_lambda; ++j) spec.lambda_indices.push_back(j);
        const FlowTable table = flow_sample(spec);
        if (!table.jets_conserved) {
            failures[i] = "point " + std::to_string(job.point) + " k " + std::to_string(job.k) +
                          ": a lambda jet has a nonzero coefficient beyond a0";
            return;
        }
        const std::size_t drift_start = table.columns.size() - max_lambda;
        double worst = 0.0;
        for (const auto& row : table.rows) {
            for (std::size_t c = drift_start; c < row.size(); ++c) {
                worst = std::max(worst, row[c]);
            }
        }
        if (worst > 1e-8) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3e", worst);
            failures[i] = "point " + std::to_string(job.point) + " k " + std::to_string(job.k) +
                          ": drift " + buf + " exceeds 1e-8";
        }
    });

    for (const auto& f : failures) {
        if (!f.empty()) {
            detail = f;
            return false;
        }
    }
    detail = "20 points x k in {1,3,5}: exact lambda jets constant, drift <= 1e-8 for |t| <= 0.1";
    return true;
}

bool determinism(std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hyperflow_acceptance";
    fs::create_directories(dir);
    const fs::path r1 = dir / "r1.json";
    const fs::path r2 = dir / "r2.json";
    for (const fs::path& r : {r1, r2}) {
        const std::string command = std::string(HYPERFLOW_CLI_PATH) +
                                    " verify commute --max-k 5 --max-l 5 --max-j 7 --report " +
                                    r.string() + " > /dev/null";
        const int status = std::system(command.c_str());
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
            detail = "verify run did not exit 0";
            return false;
        }
    }
    auto normalized = [](const fs::path& p) {
        auto doc = nlohmann::ordered_json::parse(read_file(p.string()));
        doc.erase("duration_ms");
        return doc.dump(2);
    };
    if (normalized(r1) != normalized(r2)) {
        detail = "reports differ beyond the duration field";
        return false;
    }
    detail = "two runs byte-identical modulo duration_ms";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"commutation: [D_k,D_l] = 0 on generators, k,l <= 9, j <= 11", 180.0, commutation},
        {"annihilation: D_k(lambda_{2j+2}) = 0, k <= 9, j <= 10", 120.0, annihilation},
        {"closed forms match the compositional definition, k <= 9, j <= 11", -1.0, closed_forms},
        {"j = 1 specials: D_k(b[1,1]) = b[2,k], D_k(b[2,1]) = b[3,k], k <= 15", -1.0, j1_specials},
        {"series identities, coefficientwise at order 12, k in {3,5,7,9}", -1.0, series_identities},
        {"lambda goldens byte-for-byte; homogeneity of weight 2j+2, j <= 12", -1.0, lambda_goldens},
        {"generating series: xi^-1 coefficient 4, xi^0 coefficient 0", -1.0,
         generating_series_structure},
        {"jet conservation: exact lambda jets and float drift <= 1e-8", 120.0, jet_conservation},
        {"determinism: byte-identical verify reports modulo duration", -1.0, determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && criteria[i].budget_seconds > 0 && seconds > criteria[i].budget_seconds) {
            ok = false;
            detail += "; exceeded budget of " + std::to_string(criteria[i].budget_seconds) + " s";
        }
        if (!ok) ++failures;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", seconds);
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
                  << criteria[i].name << " (" << timing << ")";
        if (!detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
    }
    if (failures == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return 1;
}
