/// Exact dense linear algebra over Scalar: row reduction, rank, kernel.
#ifndef PEND_LINSOLVE_HPP
#define PEND_LINSOLVE_HPP

#include <vector>

#include "pend/scalar.hpp"

namespace pend {

using SMatrix = std::vector<std::vector<Scalar>>;

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(SMatrix& m);

int rank(SMatrix m);

/// Kernel basis of the matrix (columns = unknowns), canonical order.
std::vector<std::vector<Scalar>> kernel_basis(const SMatrix& m);

}  // namespace pend

#endif
