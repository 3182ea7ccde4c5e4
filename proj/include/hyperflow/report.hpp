#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hyperflow {

/// One verified case: an ordered list of identifying integers (k, l, row,
/// index, exponent, ...), a status, and the offending polynomial in canonical
/// text when the case failed.
struct CaseRecord {
    std::vector<std::pair<std::string, long long>> id;
    bool pass = false;
    std::string residual;  // empty when pass

    std::string label() const;
};

/// Result of one verification sweep. Case ordering is deterministic
/// (lexicographic in the identifiers, enforced by construction), so two runs
/// with the same inputs render byte-identical apart from the duration field.
class VerificationReport {
public:
    VerificationReport(std::string suite, std::vector<std::pair<std::string, long long>> bounds);

    void add_case(CaseRecord record);
    void set_duration_ms(double ms) { duration_ms_ = ms; }

    const std::string& suite() const { return suite_; }
    const std::vector<CaseRecord>& cases() const { return cases_; }
    std::size_t case_count() const { return cases_.size(); }
    std::size_t failed_count() const;
    bool all_pass() const { return failed_count() == 0; }
    double duration_ms() const { return duration_ms_; }

    std::string to_text() const;
    nlohmann::ordered_json to_json() const;

private:
    std::string suite_;
    std::vector<std::pair<std::string, long long>> bounds_;
    std::vector<CaseRecord> cases_;
    double duration_ms_ = 0.0;
};

}  // namespace hyperflow
