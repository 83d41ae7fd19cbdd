#pragma once

#include <complex>
#include <vector>

#include "weilcensus/intpoly.hpp"

namespace weilcensus {

using Complex = std::complex<long double>;

/// All complex roots of a nonconstant integer polynomial (Aberth-Ehrlich
/// iteration in long double, on the polynomial rescaled so the roots have
/// geometric-mean modulus one).
std::vector<Complex> complex_roots(const IntPolynomial& f);

/// Largest relative backward error |f(r)| / sum |c_i||r|^i over the roots.
long double max_relative_residual(const IntPolynomial& f, const std::vector<Complex>& roots);

/// Pairs roots r with the root closest to q/r; returns one index pair per
/// conjugate pair with the element of larger imaginary part first.
std::vector<std::pair<std::size_t, std::size_t>> pair_q_conjugates(const std::vector<Complex>& roots,
                                                                   long double q);

}  // namespace weilcensus
