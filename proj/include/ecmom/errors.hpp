#pragma once

#include <stdexcept>

namespace ecmom {

// count_points and j_invariant require 4a^3 + 27b^2 != 0 (mod p)
struct singular_curve_error : std::domain_error {
    using std::domain_error::domain_error;
};

// histogram check called with a mismatched domain kind
struct wrong_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// quadratic form with det(A) = 0 (mod p)
struct degenerate_form_error : std::domain_error {
    using std::domain_error::domain_error;
};

// solution-count formula is stated for an even number of indeterminates
struct odd_dimension_error : std::domain_error {
    using std::domain_error::domain_error;
};

// brute-force enumeration exceeds the p^n cap
struct too_large_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// identity requires p in a congruence class the given prime is not in
struct wrong_congruence_class_error : std::domain_error {
    using std::domain_error::domain_error;
};

// identity requires a nonzero parameter in F_p*
struct zero_parameter_error : std::domain_error {
    using std::domain_error::domain_error;
};

// the per-b values of f_k disagree; would falsify the b-independence claim
struct independence_violation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// one-parameter family whose j-invariant is constant on F_p
struct constant_j_invariant_error : std::domain_error {
    using std::domain_error::domain_error;
};

// a floating-point value landed too far from every admissible answer
struct numeric_instability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ecmom
