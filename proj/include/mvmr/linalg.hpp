#pragma once

#include "mvmr/types.hpp"

namespace mvmr {

// Symmetric square root via eigendecomposition; eigenvalues in
// [-1e-10 * scale, 0) are clipped to zero, anything lower is NotPsdError.
Matrix symmetric_sqrt(const Matrix& a);

// Inverse of the symmetric square root of a positive definite matrix.
Matrix inverse_symmetric_sqrt(const Matrix& a);

// Largest absolute asymmetry relative to the largest absolute entry.
double relative_asymmetry(const Matrix& a);

}  // namespace mvmr
