#pragma once

#include "hyperflow/coordinate.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hyperflow {

/// A product of coordinate powers with positive exponents, stored sorted by
/// coordinate. The empty product is the constant monomial 1 (weight 0).
class Monomial {
public:
    using Factor = std::pair<Coordinate, int>;

    Monomial() = default;
    static Monomial coordinate(Coordinate c, int exponent = 1);

    bool is_unit() const { return factors_.empty(); }
    const std::vector<Factor>& factors() const { return factors_; }

    /// Sum of exponent * weight(coordinate) over all factors.
    int weight() const { return weight_; }
    int degree() const;
    int exponent_of(Coordinate c) const;
    int max_index() const;

    Monomial times(const Monomial& other) const;

    /// Removes one power of c. Precondition: exponent_of(c) >= 1.
    Monomial divided_by_one(Coordinate c) const;

    /// "b[1,1]^2*b[2,3]"; the unit monomial prints as "1".
    std::string str() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;  // ascending by coordinate, exponents > 0
    int weight_ = 0;
};

/// Term order used everywhere (storage, printing, golden files): lower total
/// weight first; within a weight class, compare factor lists from the largest
/// coordinate downward, with larger coordinates (row-major) and then larger
/// exponents ordering first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace hyperflow
