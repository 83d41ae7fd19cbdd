#include "oracles/signed_perm.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

namespace {

template <class Fn>
void for_each_element(unsigned g, Fn&& fn) {
  std::vector<unsigned> sigma(g);
  std::iota(sigma.begin(), sigma.end(), 0u);
  std::vector<unsigned> image(2 * g);
  do {
    for (std::uint32_t signs = 0; signs < (1u << g); ++signs) {
      for (unsigned i = 0; i < g; ++i) {
        const bool flip = signs >> i & 1;
        image[i] = flip ? sigma[i] + g : sigma[i];
        image[i + g] = flip ? sigma[i] : sigma[i] + g;
      }
      fn(image);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace

std::uint64_t count_single_cycles(unsigned g, unsigned ell) {
  std::uint64_t count = 0;
  for_each_element(g, [&](const std::vector<unsigned>& image) {
    std::vector<bool> seen(image.size(), false);
    unsigned long_cycles = 0, length = 0;
    for (unsigned s = 0; s < image.size(); ++s) {
      if (seen[s]) continue;
      unsigned len = 0;
      for (unsigned x = s; !seen[x]; x = image[x]) {
        seen[x] = true;
        ++len;
      }
      if (len > 1) {
        ++long_cycles;
        length = len;
      }
    }
    if (long_cycles == 1 && length == ell) ++count;
  });
  return count;
}

std::uint64_t group_order(unsigned g) {
  std::uint64_t n = 0;
  for_each_element(g, [&](const std::vector<unsigned>&) { ++n; });
  return n;
}

}  // namespace oracle
