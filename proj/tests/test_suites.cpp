#include "hyperflow/suites.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace hyperflow;

TEST_CASE("commute suite") {
    const VerificationReport report = run_commute_suite(3, 3, 3);
    CHECK(report.all_pass());
    CHECK(report.case_count() == 2 * 2 * 3 * 2);
    CHECK(report.suite() == "commute");

    // deterministic lexicographic case order
    const auto& cases = report.cases();
    CHECK(cases.front().label() == "k=1 l=1 row=1 index=1");
    CHECK(cases.back().label() == "k=3 l=3 row=3 index=3");

    CHECK_THROWS_AS(run_commute_suite(4, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(run_commute_suite(3, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(run_commute_suite(3, 3, 6), std::invalid_argument);
}

TEST_CASE("annihilation suite") {
    const VerificationReport report = run_annihilation_suite(3, 3);
    CHECK(report.all_pass());
    CHECK(report.case_count() == 2 * 3);
    CHECK_THROWS_AS(run_annihilation_suite(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(run_annihilation_suite(3, 0), std::invalid_argument);
}

TEST_CASE("closed-forms suite") {
    const VerificationReport report = run_closed_forms_suite(5, 5);
    CHECK(report.all_pass());
    CHECK(report.case_count() == 2 * 3);  // k in {3,5}, j in {1,3,5}
    CHECK(run_closed_forms_suite(1, 5).case_count() == 0);
}

TEST_CASE("series suite") {
    const VerificationReport report = run_series_suite(3, 6);
    CHECK(report.all_pass());
    CHECK(report.case_count() > 0);
    CHECK_THROWS_AS(run_series_suite(3, 2), std::invalid_argument);
}

TEST_CASE("j1 specials suite") {
    const VerificationReport report = run_j1_special_suite(9);
    CHECK(report.all_pass());
    CHECK(report.case_count() == 10);
}

TEST_CASE("report serialization") {
    const VerificationReport report = run_commute_suite(3, 3, 3);
    const auto json = report.to_json();
    CHECK(json["suite"] == "commute");
    CHECK(json["bounds"]["max_k"] == 3);
    CHECK(json["summary"]["status"] == "pass");
    CHECK(json["summary"]["failed"] == 0);
    CHECK(json["cases"].size() == report.case_count());
    CHECK(json.contains("duration_ms"));

    const std::string text = report.to_text();
    CHECK(text.find("suite: commute") == 0);
    CHECK(text.find("summary: 24/24 pass") != std::string::npos);
}

TEST_CASE("reports are deterministic apart from the duration") {
    auto strip = [](const VerificationReport& r) {
        auto j = r.to_json();
        j.erase("duration_ms");
        return j.dump(2);
    };
    CHECK(strip(run_commute_suite(3, 3, 5)) == strip(run_commute_suite(3, 3, 5)));
    CHECK(strip(run_series_suite(3, 6)) == strip(run_series_suite(3, 6)));
}
