#include "oracles/companion_roots.hpp"

#include <Eigen/Eigenvalues>

#include "weilcensus/bigint.hpp"

namespace oracle {

std::vector<std::complex<double>> companion_roots(const weilcensus::IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) return {};
  const double lead = weilcensus::to_long_double(f.leading());
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -static_cast<double>(weilcensus::to_long_double(f[i])) / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

}  // namespace oracle
