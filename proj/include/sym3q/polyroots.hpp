#pragma once

#include <complex>
#include <span>
#include <vector>

namespace sym3q {

using Complex = std::complex<double>;

// Horner evaluation of sum_k coeffs[k] * z^k.
Complex evaluate_polynomial(std::span<const Complex> coeffs, Complex z);

// All roots of sum_k coeffs[k] * z^k. The leading coefficient must be nonzero
// and the degree at most 8. Degrees 1 and 2 are solved in closed form; higher
// degrees by simultaneous Aberth-Ehrlich iteration. Throws
// Error(NonConvergence) if the roots do not reach backward-stable accuracy.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

}  // namespace sym3q
