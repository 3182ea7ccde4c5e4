#include "hyperflow/jet.hpp"

#include "hyperflow/lambda.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace hyperflow {

TimeJet::TimeJet(int order) {
    if (order < 0) throw std::invalid_argument("TimeJet: order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational());
}

TimeJet TimeJet::constant(const Rational& value, int order) {
    TimeJet jet(order);
    jet.coeffs_[0] = value;
    return jet;
}

const Rational& TimeJet::coeff(int n) const {
    if (n < 0 || n > order()) throw std::out_of_range("TimeJet: coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(n)];
}

void TimeJet::set_coeff(int n, Rational value) {
    if (n < 0 || n > order()) throw std::out_of_range("TimeJet: coefficient index out of range");
    coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

bool TimeJet::is_constant() const {
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        if (!coeffs_[n].is_zero()) return false;
    }
    return true;
}

TimeJet operator+(const TimeJet& a, const TimeJet& b) {
    TimeJet out(std::min(a.order(), b.order()));
    for (int n = 0; n <= out.order(); ++n) out.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return out;
}

TimeJet operator*(const TimeJet& a, const TimeJet& b) {
    TimeJet out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= out.order(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TimeJet TimeJet::scaled(const Rational& c) const {
    TimeJet out(order());
    for (int n = 0; n <= order(); ++n) out.coeffs_[n] = coeffs_[n] * c;
    return out;
}

TimeJet TimeJet::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("TimeJet: negative exponent");
    TimeJet out = TimeJet::constant(Rational(1), order());
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

double TimeJet::evaluate(double t) const {
    double acc = 0.0;
    for (std::size_t n = coeffs_.size(); n-- > 0;) {
        acc = acc * t + coeffs_[n].to_double();
    }
    return acc;
}

FlowJets::FlowJets(Derivation d, Assignment initial, int order)
    : d_(std::move(d)), initial_(std::move(initial)), order_(order) {
    if (order < 0) throw std::invalid_argument("FlowJets: order must be >= 0");
}

TimeJet FlowJets::jet(Coordinate c) {
    ensure_targets({c});
    return jets_.at(c);
}

TimeJet FlowJets::jet_of_polynomial(const Polynomial& p) {
    std::set<Coordinate> coords;
    for (const auto& [m, coeff] : p.terms()) {
        for (const auto& [c, e] : m.factors()) coords.insert(c);
    }
    ensure_targets(std::vector<Coordinate>(coords.begin(), coords.end()));
    return compose(p, order_);
}

TimeJet FlowJets::compose(const Polynomial& p, int truncate_at) const {
    TimeJet out(truncate_at);
    for (const auto& [m, coeff] : p.terms()) {
        TimeJet term = TimeJet::constant(coeff, truncate_at);
        for (const auto& [c, e] : m.factors()) {
            const auto it = jets_.find(c);
            if (it == jets_.end() || it->second.order() < truncate_at) {
                throw std::logic_error("FlowJets: dependency " + c.str() +
                                       " missing from the active family");
            }
            TimeJet factor(truncate_at);
            for (int n = 0; n <= truncate_at; ++n) factor.set_coeff(n, it->second.coeff(n));
            term = term * factor.pow(e);
        }
        out = out + term;
    }
    return out;
}

void FlowJets::ensure_targets(const std::vector<Coordinate>& targets) {
    bool changed = false;
    for (const Coordinate& c : targets) {
        const auto it = required_.find(c);
        if (it == required_.end() || it->second < order_) {
            required_[c] = order_;
            changed = true;
        }
    }
    if (!changed) return;

    // dependency closure: a coordinate needed to order r pulls the
    // coordinates of its vector-field image in to order r-1
    int max_target_index = 0;
    for (const auto& [c, r] : required_) {
        if (r == order_) max_target_index = std::max(max_target_index, c.index);
    }
    const int step = d_.index().value() + 1;

    std::vector<Coordinate> frontier;
    for (const auto& [c, r] : required_) frontier.push_back(c);
    while (!frontier.empty()) {
        std::vector<Coordinate> next;
        for (const Coordinate& c : frontier) {
            const int r = required_.at(c);
            if (r == 0) continue;
            for (const auto& [m, coeff] : d_.image(c).terms()) {
                for (const auto& [dep, e] : m.factors()) {
                    const auto it = required_.find(dep);
                    if (it == required_.end() || it->second < r - 1) {
                        const int depth = order_ - (r - 1);
                        if (dep.index > max_target_index + depth * step) {
                            throw std::logic_error("FlowJets: index growth bound violated at " +
                                                   dep.str());
                        }
                        required_[dep] = r - 1;
                        next.push_back(dep);
                    }
                }
            }
        }
        frontier = std::move(next);
    }

    // propagate orders bottom-up over the whole family
    jets_.clear();
    for (const auto& [c, r] : required_) {
        jets_.emplace(c, TimeJet::constant(initial_.get(c), r));
    }
    for (int n = 0; n < order_; ++n) {
        for (auto& [c, jet] : jets_) {
            if (jet.order() < n + 1) continue;
            const TimeJet rhs = compose(d_.image(c), n);
            jet.set_coeff(n + 1, rhs.coeff(n) / Rational(n + 1));
        }
    }
}

TimeJet taylor_jet(const Derivation& d, const Assignment& initial, Coordinate c, int order) {
    FlowJets jets(d, initial, order);
    return jets.jet(c);
}

TimeJet lambda_jet(const Derivation& d, const Assignment& initial, int j, int order) {
    if (order < 1) throw std::invalid_argument("lambda_jet: order must be >= 1");
    FlowJets jets(d, initial, order);
    return jets.jet_of_polynomial(lambda_poly(j));
}

namespace {

std::string csv_field(const std::string& name) {
    if (name.find(',') == std::string::npos) return name;
    return "\"" + name + "\"";
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string FlowTable::to_csv() const {
    std::string out;
    for (const auto& w : warnings) out += "# warning: " + w + "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ",";
        out += csv_field(columns[i]);
    }
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += format_double(row[i]);
        }
        out += "\n";
    }
    return out;
}

nlohmann::ordered_json FlowTable::to_json() const {
    nlohmann::ordered_json out;
    out["warnings"] = warnings;
    out["columns"] = columns;
    out["rows"] = rows;
    out["jets_conserved"] = jets_conserved;
    return out;
}

FlowTable flow_sample(const FlowSpec& spec) {
    if (spec.order < 1) throw std::invalid_argument("flow_sample: order must be >= 1");
    FlowJets jets(Derivation(spec.k), spec.initial, spec.order);

    std::vector<TimeJet> coordinate_jets;
    coordinate_jets.reserve(spec.coordinates.size());
    for (const Coordinate& c : spec.coordinates) coordinate_jets.push_back(jets.jet(c));

    std::vector<TimeJet> lambda_jets;
    for (int j : spec.lambda_indices) {
        if (j < 1) throw std::invalid_argument("flow_sample: lambda index must be >= 1");
        lambda_jets.push_back(jets.jet_of_polynomial(lambda_poly(j)));
    }

    FlowTable table;
    for (const TimeJet& jet : lambda_jets) {
        if (!jet.is_constant()) table.jets_conserved = false;
    }

    for (double t : spec.times) {
        if (std::abs(t) > 0.5) {
            table.warnings.push_back(
                "grid contains |t| > 0.5; truncation error of order t^" +
                std::to_string(spec.order + 1) + " may dominate the sampled values");
            break;
        }
    }

    table.columns.push_back("t");
    for (const Coordinate& c : spec.coordinates) table.columns.push_back(c.str());
    for (int j : spec.lambda_indices) table.columns.push_back("lambda_" + std::to_string(2 * j + 2));
    for (int j : spec.lambda_indices) table.columns.push_back("drift_" + std::to_string(2 * j + 2));

    std::vector<double> lambda_at_zero;
    lambda_at_zero.reserve(lambda_jets.size());
    for (const TimeJet& jet : lambda_jets) lambda_at_zero.push_back(jet.evaluate(0.0));

    for (double t : spec.times) {
        std::vector<double> row;
        row.push_back(t);
        for (const TimeJet& jet : coordinate_jets) row.push_back(jet.evaluate(t));
        std::vector<double> lambda_now;
        lambda_now.reserve(lambda_jets.size());
        for (const TimeJet& jet : lambda_jets) {
            lambda_now.push_back(jet.evaluate(t));
            row.push_back(lambda_now.back());
        }
        for (std::size_t i = 0; i < lambda_jets.size(); ++i) {
            row.push_back(std::abs(lambda_now[i] - lambda_at_zero[i]));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace hyperflow
