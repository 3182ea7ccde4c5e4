#include "hyperflow/report.hpp"

#include <cstdio>

namespace hyperflow {

std::string CaseRecord::label() const {
    std::string out;
    for (const auto& [name, value] : id) {
        if (!out.empty()) out += " ";
        out += name + "=" + std::to_string(value);
    }
    return out;
}

VerificationReport::VerificationReport(std::string suite,
                                       std::vector<std::pair<std::string, long long>> bounds)
    : suite_(std::move(suite)), bounds_(std::move(bounds)) {}

void VerificationReport::add_case(CaseRecord record) { cases_.push_back(std::move(record)); }

std::size_t VerificationReport::failed_count() const {
    std::size_t failed = 0;
    for (const auto& c : cases_) {
        if (!c.pass) ++failed;
    }
    return failed;
}

std::string VerificationReport::to_text() const {
    std::string out = "suite: " + suite_;
    if (!bounds_.empty()) {
        out += " (";
        for (std::size_t i = 0; i < bounds_.size(); ++i) {
            if (i) out += " ";
            out += bounds_[i].first + "=" + std::to_string(bounds_[i].second);
        }
        out += ")";
    }
    out += "\n";
    for (const auto& c : cases_) {
        out += "  " + c.label() + "  " + (c.pass ? "pass" : "FAIL");
        if (!c.pass && !c.residual.empty()) out += "  residual: " + c.residual;
        out += "\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", duration_ms_);
    out += "summary: " + std::to_string(case_count() - failed_count()) + "/" +
           std::to_string(case_count()) + " pass (" + buf + " ms)\n";
    return out;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json out;
    out["suite"] = suite_;
    nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
    for (const auto& [name, value] : bounds_) bounds[name] = value;
    out["bounds"] = bounds;
    nlohmann::ordered_json summary;
    summary["cases"] = case_count();
    summary["passed"] = case_count() - failed_count();
    summary["failed"] = failed_count();
    summary["status"] = all_pass() ? "pass" : "fail";
    out["summary"] = summary;
    out["duration_ms"] = duration_ms_;
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& c : cases_) {
        nlohmann::ordered_json jc = nlohmann::ordered_json::object();
        for (const auto& [name, value] : c.id) jc[name] = value;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.pass) jc["residual"] = c.residual;
        cases.push_back(std::move(jc));
    }
    out["cases"] = std::move(cases);
    return out;
}

}  // namespace hyperflow
