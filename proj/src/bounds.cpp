#include "rss/bounds.hpp"

#include <cmath>

namespace rss {

double c_prime() { return 60.0 / std::log(17.0 / 16.0); }

double p_beta(double beta) {
    if (!(beta > 0.0) || !(beta < 0.125)) {
        throw std::invalid_argument("beta must lie in (0, 1/8)");
    }
    return 1.0 - 7.0 / (8.0 * (1.0 - beta));
}

int i_star(double epsilon, double beta) {
    if (!(epsilon > 0.0) || !(epsilon < 0.5)) {
        throw std::invalid_argument("epsilon must lie in (0, 1/2)");
    }
    if (!(beta > 0.0) || !(beta < 0.125)) {
        throw std::invalid_argument("beta must lie in (0, 1/8)");
    }
    auto reaches_half = [&](int i) {
        return epsilon * std::pow(1.0 + beta, i) >= 0.5;
    };
    int i = static_cast<int>(
        std::ceil(std::log(1.0 / (2.0 * epsilon)) / std::log1p(beta)));
    // The ceiling formula can land one off when the log ratio sits on an
    // integer boundary; settle against the defining inequality.
    while (i > 1 && reaches_half(i - 1)) --i;
    while (!reaches_half(i)) ++i;
    return i;
}

BoundParams BoundParams::make(double epsilon, double beta) {
    return BoundParams{beta, rss::p_beta(beta), rss::i_star(epsilon, beta),
                       kKappa, rss::c_prime()};
}

double tau1_bound_threshold(double epsilon, double beta) {
    return static_cast<double>(i_star(epsilon, beta)) / p_beta(beta);
}

double tau1_tail_bound(int t, double epsilon, double beta) {
    const double pb = p_beta(beta);
    const double threshold = static_cast<double>(i_star(epsilon, beta)) / pb;
    if (static_cast<double>(t) < threshold) {
        throw BoundInapplicableError("bound inapplicable: t < i*/p_beta");
    }
    const double shifted = static_cast<double>(t) - threshold;
    return 1.0 - std::exp(-(2.0 * pb * pb / static_cast<double>(t)) * shifted *
                          shifted);
}

double tau2_tail_bound(int t, double epsilon) {
    if (t <= 0) {
        throw std::invalid_argument("tau2 bound requires t > 0");
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("epsilon must be positive");
    }
    return 1.0 - std::pow(7.0 / 8.0, t) / epsilon;
}

double tau_combined_threshold(double epsilon) {
    const double beta = 1.0 / 16.0;
    const double entry =
        2.0 / p_beta(beta) * static_cast<double>(i_star(epsilon, beta));
    return std::max(c_prime() * std::log(1.0 / epsilon), entry);
}

double tau_combined_bound(int t, double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0 / 3.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1/3)");
    }
    if (static_cast<double>(t) < tau_combined_threshold(epsilon)) {
        throw BoundInapplicableError("bound inapplicable: t below threshold");
    }
    const double shifted =
        static_cast<double>(t) - c_prime() * std::log(1.0 / epsilon);
    return 1.0 -
           2.0 * std::exp(-shifted * shifted / (kKappa * static_cast<double>(t)));
}

}  // namespace rss
