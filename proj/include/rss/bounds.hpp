#pragma once

#include <stdexcept>

namespace rss {

// Thrown when a tail bound is evaluated below its entry threshold.
struct BoundInapplicableError : std::domain_error {
    using std::domain_error::domain_error;
};

// Constants of the combined tail bound. Natural log throughout.
inline constexpr double kKappa = 225.0;  // 15^2
double c_prime();                        // 60 / log(17/16)

// p_beta = 1 - 7 / (8 (1 - beta)), beta ∈ (0, 1/8) open; value in (0, 1/8).
double p_beta(double beta);

// Smallest integer i with epsilon * (1 + beta)^i >= 1/2, equal to
// ceil(log(1/(2 epsilon)) / log(1 + beta)). epsilon ∈ (0, 1/2), beta ∈ (0, 1/8).
int i_star(double epsilon, double beta);

// Derived parameter pack for a given (epsilon, beta).
struct BoundParams {
    double beta;
    double p_beta;
    int i_star;
    double kappa;
    double c_prime;

    static BoundParams make(double epsilon, double beta);
};

// Entry threshold i*/p_beta of the tau1 tail bound.
double tau1_bound_threshold(double epsilon, double beta);

// Pr[tau1 <= t] >= 1 - exp(-(2 p_beta^2 / t) (t - i*/p_beta)^2), valid for
// t >= i*/p_beta; throws BoundInapplicableError below the threshold.
double tau1_tail_bound(int t, double epsilon, double beta);

// Pr[tau2 <= t] >= 1 - (1/epsilon) (7/8)^t for t > 0. The value may be
// negative for small t; it is returned as-is (still a valid lower bound).
double tau2_tail_bound(int t, double epsilon);

// Entry threshold of the combined bound: max of C' log(1/epsilon) and the
// stronger condition (2/p_beta) * i* at beta = 1/16.
double tau_combined_threshold(double epsilon);

// Pr[tau <= t] >= 1 - 2 exp(-(1/(kappa t)) (t - C' log(1/epsilon))^2) with
// kappa = 225 and C' = 60/log(17/16); throws below the threshold.
double tau_combined_bound(int t, double epsilon);

}  // namespace rss
