#pragma once

#include "hyperflow/laurent.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hyperflow {

/// Generating series of the integral polynomials, valid on [-1, order]:
///
///   b2(xi)^2 + 2 b3(xi) (1 - b1(xi)) + 4 (xi^-1 + 2 b[1,1]) (1 - b1(xi))^2
///
/// where bi(xi) = sum_{j>=1} b[i,2j-1] xi^j. The coefficient of xi^-1 is the
/// constant 4, the coefficient of xi^0 vanishes, and the coefficient of xi^j
/// is 4 * lambda_{2j+2} for j >= 1.
LaurentSeries lambda_generating_series(int order);

/// The integral polynomial lambda_{2j+2} for j >= 1: one quarter of the xi^j
/// coefficient of the generating series. Mentions only coordinates with
/// index <= 2j+1 and is homogeneous of weight 2j+2.
Polynomial lambda_poly(int j);

/// Table of lambda_{4} .. lambda_{2*max_j+2} with text and JSON export.
class LambdaTable {
public:
    explicit LambdaTable(int max_j);

    int max_j() const { return static_cast<int>(entries_.size()); }
    const Polynomial& get(int j) const;

    /// One line per entry: "lambda_4 = 1/2*b[3,1] - 2*b[1,3] - 3*b[1,1]^2".
    std::string to_text() const;

    /// {"lambda_4": "...", "lambda_6": "...", ...} in ascending order.
    nlohmann::ordered_json to_json() const;

private:
    std::vector<Polynomial> entries_;  // entries_[j-1] = lambda_{2j+2}
};

/// D_k applied to lambda_{2j+2}; the annihilation theorem predicts the zero
/// polynomial for every odd k and j >= 1.
Polynomial verify_annihilation(const Derivation& d, int j);

struct IdentityCheckCase {
    int identity_row;  // which of the three series identities (1, 2, 3)
    int exponent;
    bool pass;
    Polynomial difference;  // lhs - rhs at this exponent (zero when pass)
};

/// Coefficientwise checks, at truncation `order` >= 2, of the three
/// first-order identities for the action on the generating series:
///   D1(b1) = b2,  D1(b2) = b3,
///   D1(b3) = 4 (2 b[1,1] b2 + b[2,1] b1 + xi^-1 b2 - b[2,1]).
/// Each side is built by an independent route (derivation of coefficients vs
/// series algebra) and compared on the common validity window.
std::vector<IdentityCheckCase> check_d1_series_identities(int order);

/// Coefficientwise checks, for odd k >= 3 at truncation `order` >= k, of the
/// three series identities expressing D_k(bi(xi)) through b1, b2, b3 and
/// Laurent polynomials in xi. The comparison windows follow from the
/// truncation algebra of each right-hand side.
std::vector<IdentityCheckCase> check_dk_series_identities(OpIndex k, int order);

}  // namespace hyperflow
