#pragma once

namespace lcrp {

// 1/gamma(beta) for the Riesz potential in R^n:
// Gamma((n - beta)/2) / (pi^{n/2} 2^beta Gamma(beta/2)).
// Throws DomainError unless 0 < beta < n.
double gamma_norm(double beta, int n = 2);

// 1 / (pi^{n/2} 2^{n-1} Gamma(n/2)), the constant of the logarithmic
// potential reached as beta -> n.
double log_potential_constant(int n = 2);

}  // namespace lcrp
