#pragma once

#include <complex>
#include <vector>

#include "torfan/rational_matrix.hpp"

namespace torfan {

struct EigenDecomposition {
  std::vector<std::complex<double>> values;
  // Column i is a unit eigenvector for values[i].
  ComplexMatrix vectors;
};

// Hessenberg reduction plus shifted QR. Every returned pair satisfies
// |Mv - lambda v| <= 1e-10 |M|; otherwise NonConvergence is thrown.
EigenDecomposition complex_eigen(const ComplexMatrix& m);

std::vector<std::complex<double>> eigenvalues(const ComplexMatrix& m);

// Order by modulus, then argument in (-pi, pi], both rounded to 1e-8.
bool modulus_arg_less(std::complex<double> a, std::complex<double> b);
void sort_by_modulus_then_arg(std::vector<std::complex<double>>& values);

// Groups values whose distance is within rel_tol * max(1, |value|); returns
// index groups.
std::vector<std::vector<std::size_t>> cluster_values(const std::vector<std::complex<double>>& values,
                                                     double rel_tol = 1e-6);

}  // namespace torfan
