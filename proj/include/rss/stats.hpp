#pragma once

namespace rss {

// Two-sided normal quantile for the 99% Wilson intervals used throughout.
inline constexpr double kZ99 = 2.5758293035489004;

struct WilsonInterval {
    double lo;
    double hi;
};

// Wilson score interval for a binomial proportion at normal quantile z.
WilsonInterval wilson_interval(long successes, long trials, double z);

// sqrt(p(1-p)/n) with p = successes/trials; 0 when trials == 0.
double proportion_std_error(long successes, long trials);

// Point estimate with uncertainty; Wilson construction for proportions,
// mean ± z * stderr for means.
struct EstimateReport {
    double point = 0.0;
    double std_error = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    long n_samples = 0;
    long censored_count = 0;
};

EstimateReport proportion_report(long successes, long trials, long censored);

}  // namespace rss
