#include "hyperflow/suites.hpp"

#include "hyperflow/derivation.hpp"
#include "hyperflow/lambda.hpp"
#include "hyperflow/parallel.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

namespace hyperflow {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_odd_bound(const char* name, int value) {
    if (value < 1 || value % 2 == 0) {
        throw std::invalid_argument(std::string(name) + " must be odd and positive, got " +
                                    std::to_string(value));
    }
}

void require_positive(const char* name, int value) {
    if (value < 1) {
        throw std::invalid_argument(std::string(name) + " must be positive, got " +
                                    std::to_string(value));
    }
}

std::map<int, Derivation> derivation_pool(int max_k) {
    std::map<int, Derivation> pool;
    for (int k = 1; k <= max_k; k += 2) pool.emplace(k, Derivation(OpIndex(k)));
    return pool;
}

/// Runs `compute` over the prebuilt case list in parallel, then assembles
/// records in list order.
template <typename Case, typename Fn>
void run_cases(VerificationReport& report, const std::vector<Case>& list, Fn&& compute) {
    std::vector<CaseRecord> records(list.size());
    parallel_for(list.size(), [&](std::size_t i) { records[i] = compute(list[i]); });
    for (auto& r : records) report.add_case(std::move(r));
}

}  // namespace

VerificationReport run_commute_suite(int max_k, int max_l, int max_j) {
    require_odd_bound("max_k", max_k);
    require_odd_bound("max_l", max_l);
    require_odd_bound("max_j", max_j);
    const auto start = Clock::now();
    VerificationReport report("commute", {{"max_k", max_k}, {"max_l", max_l}, {"max_j", max_j}});

    const auto pool = derivation_pool(std::max(max_k, max_l));

    struct Case {
        int k, l, row, index;
    };
    std::vector<Case> list;
    for (int k = 1; k <= max_k; k += 2) {
        for (int l = 1; l <= max_l; l += 2) {
            for (int row = 1; row <= 3; ++row) {
                for (int j = 1; j <= max_j; j += 2) list.push_back({k, l, row, j});
            }
        }
    }

    run_cases(report, list, [&](const Case& c) {
        const Polynomial residual =
            commutator_on_generator(pool.at(c.k), pool.at(c.l), Coordinate(c.row, c.index));
        CaseRecord record;
        record.id = {{"k", c.k}, {"l", c.l}, {"row", c.row}, {"index", c.index}};
        record.pass = residual.is_zero();
        if (!record.pass) record.residual = residual.str();
        return record;
    });

    report.set_duration_ms(elapsed_ms(start));
    return report;
}

VerificationReport run_annihilation_suite(int max_k, int max_j) {
    require_odd_bound("max_k", max_k);
    require_positive("max_j", max_j);
    const auto start = Clock::now();
    VerificationReport report("lambda", {{"max_k", max_k}, {"max_j", max_j}});

    const auto pool = derivation_pool(max_k);
    const LambdaTable table(max_j);

    struct Case {
        int k, j;
    };
    std::vector<Case> list;
    for (int k = 1; k <= max_k; k += 2) {
        for (int j = 1; j <= max_j; ++j) list.push_back({k, j});
    }

    run_cases(report, list, [&](const Case& c) {
        const Polynomial residual = pool.at(c.k).apply(table.get(c.j));
        CaseRecord record;
        record.id = {{"k", c.k}, {"j", c.j}};
        record.pass = residual.is_zero();
        if (!record.pass) record.residual = residual.str();
        return record;
    });

    report.set_duration_ms(elapsed_ms(start));
    return report;
}

VerificationReport run_closed_forms_suite(int max_k, int max_j) {
    require_odd_bound("max_k", max_k);
    require_odd_bound("max_j", max_j);
    const auto start = Clock::now();
    VerificationReport report("closed-forms", {{"max_k", max_k}, {"max_j", max_j}});

    struct Case {
        int k, j;
    };
    std::vector<Case> list;
    for (int k = 3; k <= max_k; k += 2) {
        for (int j = 1; j <= max_j; j += 2) list.push_back({k, j});
    }

    run_cases(report, list, [&](const Case& c) {
        CaseRecord record;
        record.id = {{"k", c.k}, {"j", c.j}};
        record.pass = check_closed_forms(OpIndex(c.k), c.j);
        return record;
    });

    report.set_duration_ms(elapsed_ms(start));
    return report;
}

VerificationReport run_series_suite(int max_k, int order) {
    require_odd_bound("max_k", max_k);
    if (order < 2 || order < max_k) {
        throw std::invalid_argument("order must be >= 2 and >= max_k");
    }
    const auto start = Clock::now();
    VerificationReport report("series", {{"max_k", max_k}, {"order", order}});

    std::vector<int> ks{1};
    for (int k = 3; k <= max_k; k += 2) ks.push_back(k);

    std::vector<std::vector<IdentityCheckCase>> results(ks.size());
    parallel_for(ks.size(), [&](std::size_t i) {
        results[i] = ks[i] == 1 ? check_d1_series_identities(order)
                                : check_dk_series_identities(OpIndex(ks[i]), order);
    });

    for (std::size_t i = 0; i < ks.size(); ++i) {
        for (const IdentityCheckCase& c : results[i]) {
            CaseRecord record;
            record.id = {{"k", ks[i]}, {"row", c.identity_row}, {"exponent", c.exponent}};
            record.pass = c.pass;
            if (!c.pass) record.residual = c.difference.str();
            report.add_case(std::move(record));
        }
    }

    report.set_duration_ms(elapsed_ms(start));
    return report;
}

VerificationReport run_j1_special_suite(int max_k) {
    require_odd_bound("max_k", max_k);
    const auto start = Clock::now();
    VerificationReport report("j1-specials", {{"max_k", max_k}});

    struct Case {
        int k, row;
    };
    std::vector<Case> list;
    for (int k = 1; k <= max_k; k += 2) {
        for (int row = 1; row <= 2; ++row) list.push_back({k, row});
    }

    run_cases(report, list, [&](const Case& c) {
        const Derivation d{OpIndex(c.k)};
        const Polynomial expected = Polynomial::coordinate(Coordinate(c.row + 1, c.k));
        const Polynomial residual = d.image(Coordinate(c.row, 1)) - expected;
        CaseRecord record;
        record.id = {{"k", c.k}, {"row", c.row}};
        record.pass = residual.is_zero();
        if (!record.pass) record.residual = residual.str();
        return record;
    });

    report.set_duration_ms(elapsed_ms(start));
    return report;
}

}  // namespace hyperflow
