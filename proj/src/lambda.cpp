#include "hyperflow/lambda.hpp"

#include <stdexcept>

namespace hyperflow {

namespace {

Polynomial gen(int row, int index) { return Polynomial::coordinate(Coordinate(row, index)); }

LaurentSeries one_minus_b1(int order) {
    return LaurentSeries::exact_constant(Polynomial::constant(1)) - b_series(1, order);
}

}  // namespace

LaurentSeries lambda_generating_series(int order) {
    if (order < 1) throw std::invalid_argument("lambda_generating_series: order must be >= 1");
    // built from b-series of order M+1 so that the xi^-1 factor still leaves
    // a window reaching xi^order
    const int m = order + 1;
    const LaurentSeries b1c = one_minus_b1(m);
    const LaurentSeries b2 = b_series(2, m);
    const LaurentSeries b3 = b_series(3, m);

    LaurentSeries xi_factor = LaurentSeries::exact_term(-1, Polynomial::constant(4));
    xi_factor.set(0, gen(1, 1).scaled(8));

    return b2 * b2 + (b3 * b1c).scaled(2) + xi_factor * (b1c * b1c);
}

Polynomial lambda_poly(int j) {
    if (j < 1) throw std::invalid_argument("lambda_poly: j must be >= 1");
    return lambda_generating_series(j).at(j).scaled(Rational(1, 4));
}

LambdaTable::LambdaTable(int max_j) {
    if (max_j < 1) throw std::invalid_argument("LambdaTable: max_j must be >= 1");
    const LaurentSeries series = lambda_generating_series(max_j);
    entries_.reserve(max_j);
    for (int j = 1; j <= max_j; ++j) {
        entries_.push_back(series.at(j).scaled(Rational(1, 4)));
    }
}

const Polynomial& LambdaTable::get(int j) const {
    if (j < 1 || j > max_j()) throw std::out_of_range("LambdaTable: index out of range");
    return entries_[j - 1];
}

std::string LambdaTable::to_text() const {
    std::string out;
    for (int j = 1; j <= max_j(); ++j) {
        out += "lambda_" + std::to_string(2 * j + 2) + " = " + get(j).str() + "\n";
    }
    return out;
}

nlohmann::ordered_json LambdaTable::to_json() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (int j = 1; j <= max_j(); ++j) {
        out["lambda_" + std::to_string(2 * j + 2)] = get(j).str();
    }
    return out;
}

Polynomial verify_annihilation(const Derivation& d, int j) { return d.apply(lambda_poly(j)); }

namespace {

void compare_into(std::vector<IdentityCheckCase>& cases, int identity_row,
                  const LaurentSeries& lhs, const LaurentSeries& rhs) {
    const SeriesComparison cmp = compare_series(lhs, rhs);
    auto mismatch = cmp.mismatches.begin();
    for (int n = cmp.from; n <= cmp.to; ++n) {
        if (mismatch != cmp.mismatches.end() && mismatch->exponent == n) {
            cases.push_back({identity_row, n, false, mismatch->difference});
            ++mismatch;
        } else {
            cases.push_back({identity_row, n, true, Polynomial()});
        }
    }
}

}  // namespace

std::vector<IdentityCheckCase> check_d1_series_identities(int order) {
    if (order < 2) throw std::invalid_argument("check_d1_series_identities: order must be >= 2");
    const Derivation d1{OpIndex(1)};
    const LaurentSeries b1 = b_series(1, order);
    const LaurentSeries b2 = b_series(2, order);
    const LaurentSeries b3 = b_series(3, order);

    std::vector<IdentityCheckCase> cases;
    compare_into(cases, 1, apply_derivation_series(d1, b1), b2);
    compare_into(cases, 2, apply_derivation_series(d1, b2), b3);

    // 4 (2 b[1,1] b2 + b[2,1] b1 + xi^-1 b2 - b[2,1])
    const LaurentSeries rhs = LaurentSeries::exact_constant(gen(1, 1).scaled(2)) * b2 +
                              LaurentSeries::exact_constant(gen(2, 1)) * b1 + b2.shifted(-1) -
                              LaurentSeries::exact_constant(gen(2, 1));
    compare_into(cases, 3, apply_derivation_series(d1, b3), rhs.scaled(Rational(4)));
    return cases;
}

namespace {

/// sum over s = 1..half of b[row, 2s-1] xi^(s-half), an exact Laurent polynomial
LaurentSeries row_tail_sum(int row, int half) {
    LaurentSeries out = LaurentSeries::exact_zero();
    for (int s = 1; s <= half; ++s) {
        out = out + LaurentSeries::exact_term(s - half, gen(row, 2 * s - 1));
    }
    return out;
}

}  // namespace

std::vector<IdentityCheckCase> check_dk_series_identities(OpIndex k, int order) {
    const int kk = k.value();
    if (kk < 3) throw std::invalid_argument("check_dk_series_identities: requires k >= 3");
    if (order < kk) throw std::invalid_argument("check_dk_series_identities: order must be >= k");
    const Derivation dk{k};
    const int half = (kk - 1) / 2;

    const LaurentSeries b1 = b_series(1, order);
    const LaurentSeries b2 = b_series(2, order);
    const LaurentSeries b3 = b_series(3, order);

    const LaurentSeries s1 = row_tail_sum(1, half);
    const LaurentSeries s2 = row_tail_sum(2, half);
    const LaurentSeries s3 = row_tail_sum(3, half);
    const LaurentSeries lead = LaurentSeries::exact_term(-half, Polynomial::constant(1)) - s1;

    std::vector<IdentityCheckCase> cases;

    compare_into(cases, 1, apply_derivation_series(dk, b1), b1 * s2 + b2 * lead - s2);
    compare_into(cases, 2, apply_derivation_series(dk, b2), b1 * s3 + b3 * lead - s3);

    // third identity:
    //   4 (b2 (2 b[1,1] + xi^-1) - b[2,1]) (xi^-half - s1)
    //   + 4 b1 (b[2,1] xi^-half + sum_s (2 b[1,1] b[2,2s-1] + b[2,2s+1]) xi^(s-half))
    //   + b2 s3 - b3 s2
    //   - 4 sum_p (2 b[1,1] b[2,2p-1] + b[2,1] b[1,2p-1] + b[2,2p+1]) xi^(p-half)
    const LaurentSeries b2_weighted =
        LaurentSeries::exact_constant(gen(1, 1).scaled(2)) * b2 + b2.shifted(-1) -
        LaurentSeries::exact_constant(gen(2, 1));

    LaurentSeries inner = LaurentSeries::exact_term(-half, gen(2, 1));
    for (int s = 1; s <= half; ++s) {
        inner = inner + LaurentSeries::exact_term(
                            s - half, (gen(1, 1) * gen(2, 2 * s - 1)).scaled(2) + gen(2, 2 * s + 1));
    }

    LaurentSeries tail = LaurentSeries::exact_zero();
    for (int p = 1; p <= half; ++p) {
        tail = tail + LaurentSeries::exact_term(p - half,
                                                (gen(1, 1) * gen(2, 2 * p - 1)).scaled(2) +
                                                    gen(2, 1) * gen(1, 2 * p - 1) + gen(2, 2 * p + 1));
    }

    const LaurentSeries rhs3 = (b2_weighted * lead).scaled(4) + (b1 * inner).scaled(4) + b2 * s3 -
                               b3 * s2 - tail.scaled(4);
    compare_into(cases, 3, apply_derivation_series(dk, b3), rhs3);
    return cases;
}

}  // namespace hyperflow
