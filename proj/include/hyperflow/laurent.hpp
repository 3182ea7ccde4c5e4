#pragma once

#include "hyperflow/derivation.hpp"
#include "hyperflow/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hyperflow {

/// Truncated Laurent series in xi with Polynomial coefficients.
///
/// Every series carries a validity window: coefficients below `low` are
/// exactly zero, coefficients above `high` are unknown (lost to truncation).
/// A series with high == nullopt is exact, i.e. a Laurent polynomial with
/// every coefficient known. Arithmetic tracks the tightest valid window of
/// the result rather than padding with zeros:
///   add: low = min(l1, l2), high = min(h1, h2)
///   mul: low = l1 + l2,     high = min(h1 + l2, h2 + l1)
/// (an exact operand contributes no high constraint). A multiplication whose
/// resulting window is empty throws std::domain_error.
class LaurentSeries {
public:
    static LaurentSeries zero_truncated(int low, int high);
    static LaurentSeries exact_zero();
    static LaurentSeries exact_term(int exponent, Polynomial coeff);
    static LaurentSeries exact_constant(Polynomial coeff) {
        return exact_term(0, std::move(coeff));
    }

    int low() const { return low_; }
    std::optional<int> high() const { return high_; }
    bool is_exact() const { return !high_.has_value(); }

    /// Coefficient of xi^n. Returns the zero polynomial below the window and
    /// throws std::out_of_range beyond the truncation order.
    const Polynomial& at(int n) const;

    /// Builder: sets the coefficient of xi^n, widening `low` if needed.
    /// Throws std::out_of_range beyond the truncation order.
    LaurentSeries& set(int exponent, Polynomial coeff);

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator-() const;
    LaurentSeries scaled(const Rational& c) const;

    /// Multiplication by xi^d.
    LaurentSeries shifted(int d) const;

    /// Nonzero stored coefficients, ascending by exponent.
    const std::map<int, Polynomial>& coefficients() const { return coeff_; }

private:
    LaurentSeries(int low, std::optional<int> high) : low_(low), high_(high) {}

    int low_ = 0;
    std::optional<int> high_;
    std::map<int, Polynomial> coeff_;  // nonzero entries with exponents in [low, high]
};

/// Generating series of a coordinate row: the coefficient of xi^j is
/// b[row, 2j-1] for 1 <= j <= order. Window [1, order].
LaurentSeries b_series(int row, int order);

/// Applies a derivation to every coefficient; the window is unchanged.
LaurentSeries apply_derivation_series(const Derivation& d, const LaurentSeries& s);

struct SeriesMismatch {
    int exponent;
    Polynomial difference;  // a - b at this exponent
};

struct SeriesComparison {
    int from = 0;
    int to = -1;  // compared window; empty when to < from
    std::vector<SeriesMismatch> mismatches;
    bool equal() const { return mismatches.empty(); }
};

/// Compares two series coefficientwise on every exponent where both sides
/// are determined, i.e. from min(low_a, low_b) up to min(high_a, high_b).
SeriesComparison compare_series(const LaurentSeries& a, const LaurentSeries& b);

}  // namespace hyperflow
