#pragma once

#include "hyperflow/report.hpp"

namespace hyperflow {

/// Verification sweeps behind the CLI and the acceptance suite. All bounds
/// are validated (std::invalid_argument on violation); k/l bounds must be
/// odd. Cases run in parallel under the thread budget and are reported in a
/// fixed lexicographic order regardless of scheduling.

/// [D_k, D_l] = 0 on generators, for odd k <= max_k, odd l <= max_l,
/// rows 1..3 and odd indices j <= max_j.
VerificationReport run_commute_suite(int max_k, int max_l, int max_j);

/// D_k(lambda_{2j+2}) = 0 for odd k <= max_k and 1 <= j <= max_j.
VerificationReport run_annihilation_suite(int max_k, int max_j);

/// Closed forms for rows 2 and 3 match the compositional definition, for odd
/// k in [3, max_k] and odd j <= max_j.
VerificationReport run_closed_forms_suite(int max_k, int max_j);

/// Coefficientwise series identities: the first-order identities plus the
/// D_k identities for odd k in [3, max_k], at the given truncation order.
VerificationReport run_series_suite(int max_k, int order);

/// D_k(b[1,1]) = b[2,k] and D_k(b[2,1]) = b[3,k] for odd k <= max_k.
VerificationReport run_j1_special_suite(int max_k);

}  // namespace hyperflow
