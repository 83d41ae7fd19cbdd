#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

// Degrees of irreducible factors (with multiplicity, sorted) of a polynomial
// over F_p given by residues (constant first), by trial division with every
// monic polynomial of degree <= deg/2. Only for tiny p and degree.
std::vector<int> brute_factor_degrees(std::uint64_t p, std::vector<std::uint64_t> f);

}  // namespace oracle
