#pragma once

#include "hyperflow/monomial.hpp"
#include "hyperflow/rational.hpp"

#include <functional>
#include <map>
#include <string>

namespace hyperflow {

/// A point of the coordinate space with finitely many nonzero coordinates.
/// Coordinates absent from the mapping read as zero.
class Assignment {
public:
    Assignment() = default;

    void set(Coordinate c, Rational value);
    Rational get(Coordinate c) const;
    bool empty() const { return values_.empty(); }
    const std::map<Coordinate, Rational>& values() const { return values_; }

private:
    std::map<Coordinate, Rational> values_;  // nonzero entries only
};

/// Homogeneity status of a polynomial under the weight grading.
struct Homogeneity {
    enum class Kind { inhomogeneous, graded, zero };

    Kind kind = Kind::inhomogeneous;
    int weight = 0;  // meaningful only when kind == graded

    bool is_homogeneous() const { return kind != Kind::inhomogeneous; }

    /// True when every monomial has weight w; the zero polynomial is
    /// homogeneous of every weight.
    bool has_weight(int w) const {
        return kind == Kind::zero || (kind == Kind::graded && weight == w);
    }
};

/// Sparse multivariate polynomial in the coordinates b[i,j] over exact
/// rationals. Canonical form is an invariant: no zero coefficient is ever
/// stored and terms are kept in MonomialOrder, so two polynomials are equal
/// iff their term maps are identical. Values are immutable in the sense that
/// no operation mutates its arguments.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;  // the zero polynomial
    static Polynomial constant(Rational c);
    static Polynomial coordinate(Coordinate c);
    static Polynomial term(Monomial m, Rational c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;

    /// Largest coordinate index mentioned; 0 for constants.
    int max_index() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;

    Rational evaluate(const Assignment& at) const;

    /// Leibniz extension of a generator rule: additive, and
    /// derive(pq) = derive(p) q + p derive(q). Exceptions thrown by the rule
    /// on a coordinate that occurs in the polynomial propagate unchanged.
    Polynomial derive(const std::function<Polynomial(const Coordinate&)>& image) const;

    Homogeneity homogeneity() const;

    /// Canonical text form, e.g. "1/2*b[3,1] - 2*b[1,3] - 3*b[1,1]^2".
    /// The zero polynomial prints as "0".
    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Debug check of the canonical-form invariant.
    bool is_canonical() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

}  // namespace hyperflow
