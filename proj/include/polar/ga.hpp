#pragma once

#include <span>
#include <vector>

#include "polar/code.hpp"

namespace polar {

// Mean leaf LLRs under the all-zero-codeword BPSK/AWGN Gaussian
// approximation (LLR_i ~ N(mu_i, 2 mu_i)).
struct GaProfile {
    std::vector<double> mu;
};

// Chung-style two-piece closed form for phi(mu) = 1 - E[tanh(L/2)], in the
// natural-log domain; piecewise boundary at mu = 10.
double ga_log_phi(double mu);
// Inverse of ga_log_phi: closed form below the boundary, bisection above.
double ga_log_phi_inv(double log_phi);

// Density-evolution recursion seeded with mu_root = 2/sigma^2, where
// sigma^2 = 1 / (2 R 10^(ebn0/10)) and R = K/N (CRC bits counted in K).
GaProfile ga_evolve(const PolarCode& code, double ebn0_db);

// Per-index first-error probability, 0.5 erfc(sqrt(mu)/2).
double pi_of(double mu);

// 1 - prod_{i in A} (1 - pi_i), accumulated in the log domain.
double fer_theoretical(const PolarCode& code, const GaProfile& profile);

// Same product restricted to the critical set.
double fer_hypothetical(const PolarCode& code, const GaProfile& profile,
                        std::span<const uint32_t> critical_set);

} // namespace polar
