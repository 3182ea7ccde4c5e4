#pragma once

#include "hyperflow/polynomial.hpp"

#include <map>
#include <memory>
#include <shared_mutex>

namespace hyperflow {

/// Index of an operator in the family D_k; odd natural numbers only.
/// Even indices are rejected at construction.
class OpIndex {
public:
    explicit OpIndex(int k);
    int value() const { return k_; }
    friend auto operator<=>(const OpIndex&, const OpIndex&) = default;

private:
    int k_;
};

/// First-order rule on generators:
///   D1(b[1,j]) = b[2,j]
///   D1(b[2,j]) = b[3,j]
///   D1(b[3,j]) = 4 (2 b[1,1] b[2,j] + b[2,1] b[1,j] + b[2,j+2])
Polynomial first_order_image(Coordinate c);

/// Closed-form image of D_k on a generator, for any odd k. The summation
/// range 1..(k-1)/2 is empty at k = 1, where the formulas reduce to the
/// first-order rule (checked by tests). Every coordinate in the result has
/// an odd index in [1, j+k+1], and the result is homogeneous of weight
/// weight(c) + k.
Polynomial closed_form_image(OpIndex k, Coordinate c);

/// The derivation D_k of the coordinate ring: the generator rule extended by
/// linearity and Leibniz. Generator images are memoized; copies share the
/// memo table, and const access is safe from concurrent threads.
class Derivation {
public:
    explicit Derivation(OpIndex k);

    OpIndex index() const { return k_; }

    /// Memoized generator image.
    const Polynomial& image(Coordinate c) const;

    Polynomial apply(const Polynomial& p) const;

    /// n-fold application; n = 0 returns p unchanged.
    Polynomial apply_power(Polynomial p, int n) const;

private:
    struct Memo {
        mutable std::shared_mutex mutex;
        mutable std::map<Coordinate, Polynomial> images;
    };

    OpIndex k_;
    std::shared_ptr<Memo> memo_;
};

/// D_k(D_l(b)) - D_l(D_k(b)) on a generator. The commutation theorem for the
/// family predicts the zero polynomial; a nonzero result signals a defect.
Polynomial commutator_on_generator(const Derivation& dk, const Derivation& dl, Coordinate c);

/// Checks, for k >= 3 and odd j, that the closed forms for rows 2 and 3 agree
/// with the compositional definition D_k(b[2,j]) = D1(D_k(b[1,j])) and
/// D_k(b[3,j]) = D1(D_k(b[2,j])). A false return signals a transcription
/// defect in one of the closed forms.
bool check_closed_forms(OpIndex k, int j);

}  // namespace hyperflow
