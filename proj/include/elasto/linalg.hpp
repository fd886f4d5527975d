#pragma once

#include <vector>

#include "elasto/specfun.hpp"

namespace elasto {

using CMatrix = std::vector<std::vector<cplx>>;

struct DenseSolve {
  std::vector<cplx> x;
  double residual = 0.0;   // ||A x - b|| / ||b|| (0 when b = 0)
  double rcond = 0.0;      // reciprocal 1-norm condition estimate
};

// Partial-pivot LU. Throws SingularSystem when a pivot underflows 1e-300 after
// row equilibration; near-singular systems are solved and reported via rcond.
DenseSolve solve_dense(const CMatrix& A, const std::vector<cplx>& b);

cplx determinant(const CMatrix& A);

}  // namespace elasto
