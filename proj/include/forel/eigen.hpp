#pragma once

#include <complex>
#include <vector>

#include "forel/linalg.hpp"

namespace forel {

// Full spectrum of a real square matrix via balancing, Householder
// Hessenberg reduction and Francis double-shift QR iteration. Supports
// n <= 64; throws EigenFailureError if the iteration stalls.
std::vector<std::complex<double>> eigenvalues(const Matrix& m);

// Exposed for testing.
void balance_matrix(Matrix& a);
void hessenberg_reduce(Matrix& a);

} // namespace forel
