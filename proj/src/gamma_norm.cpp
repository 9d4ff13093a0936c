#include "lcrp/gamma_norm.hpp"

#include <cmath>
#include <numbers>

#include "lcrp/error.hpp"

namespace lcrp {

double gamma_norm(double beta, int n) {
  if (n < 1 || !(beta > 0.0) || !(beta < n))
    throw DomainError("gamma_norm requires 0 < beta < n");
  const double half_n = 0.5 * n;
  return std::tgamma(half_n - 0.5 * beta) /
         (std::pow(std::numbers::pi, half_n) * std::exp2(beta) * std::tgamma(0.5 * beta));
}

double log_potential_constant(int n) {
  if (n < 1) throw DomainError("dimension must be positive");
  const double half_n = 0.5 * n;
  return 1.0 / (std::pow(std::numbers::pi, half_n) * std::exp2(n - 1) * std::tgamma(half_n));
}

}  // namespace lcrp
