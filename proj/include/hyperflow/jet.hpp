#pragma once

#include "hyperflow/derivation.hpp"
#include "hyperflow/polynomial.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace hyperflow {

/// Truncated Taylor expansion in flow time t with exact rational
/// coefficients: coeff(n) is (1/n!) (d/dt)^n at t = 0.
class TimeJet {
public:
    explicit TimeJet(int order);
    static TimeJet constant(const Rational& value, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int n) const;
    void set_coeff(int n, Rational value);

    /// True when coeff(1) .. coeff(order) are all exactly zero.
    bool is_constant() const;

    friend TimeJet operator+(const TimeJet& a, const TimeJet& b);
    friend TimeJet operator*(const TimeJet& a, const TimeJet& b);
    TimeJet scaled(const Rational& c) const;
    TimeJet pow(int exponent) const;

    /// Horner evaluation in double precision; the exact coefficients remain
    /// the source of truth.
    double evaluate(double t) const;

    friend bool operator==(const TimeJet&, const TimeJet&) = default;

private:
    std::vector<Rational> coeffs_;  // size order+1
};

/// Exact time-Taylor jets of the coordinate family along a D_k flow from a
/// finitely supported initial point. Coefficients satisfy the flow recurrence
///   (n+1) a_{n+1}(c) = [t^n] (D_k b_c)(jets),
/// which reproduces a_n(c) = (1/n!) evaluate(D_k^n(b_c), initial) exactly.
/// Computing an order-N jet of b[i,j] touches only coordinates with index
/// <= j + N (k+1); this bound is checked during computation.
class FlowJets {
public:
    FlowJets(Derivation d, Assignment initial, int order);

    const Derivation& derivation() const { return d_; }
    int order() const { return order_; }

    /// Jet of a single coordinate, by value: extending the active family for
    /// a later request rebuilds the internal tables.
    TimeJet jet(Coordinate c);

    /// Jet of a polynomial observable: the polynomial composed with the
    /// coordinate jets in exact truncated arithmetic.
    TimeJet jet_of_polynomial(const Polynomial& p);

private:
    void ensure_targets(const std::vector<Coordinate>& targets);
    TimeJet compose(const Polynomial& p, int truncate_at) const;

    Derivation d_;
    Assignment initial_;
    int order_;
    std::map<Coordinate, int> required_;   // coordinate -> required jet order
    std::map<Coordinate, TimeJet> jets_;   // computed jets (order required_[c])
};

TimeJet taylor_jet(const Derivation& d, const Assignment& initial, Coordinate c, int order);

/// Jet of lambda_{2j+2} along the D_k flow. The annihilation theorem makes
/// every coefficient beyond the constant term exactly zero; a nonzero value
/// signals a defect.
TimeJet lambda_jet(const Derivation& d, const Assignment& initial, int j, int order);

struct FlowSpec {
    OpIndex k;
    Assignment initial;
    int order = 1;
    std::vector<Coordinate> coordinates;
    std::vector<int> lambda_indices;  // values of j; columns lambda_{2j+2}
    std::vector<double> times;
};

/// Sampled trajectory table. Every column is the Horner evaluation of the
/// corresponding exact jet: the coordinate jets move, while the composed
/// lambda jets are constant term by term, so the drift columns stay at zero
/// unless conservation is broken. `jets_conserved` carries the exact
/// statement: coefficients 1..order of every lambda jet vanish.
struct FlowTable {
    std::vector<std::string> warnings;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    bool jets_conserved = true;

    /// RFC 4180 style: fields containing commas are double-quoted; floats
    /// carry 17 significant digits.
    std::string to_csv() const;
    nlohmann::ordered_json to_json() const;
};

FlowTable flow_sample(const FlowSpec& spec);

}  // namespace hyperflow
