#include "rss/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace rss {

WilsonInterval wilson_interval(long successes, long trials, double z) {
    if (trials <= 0 || successes < 0 || successes > trials) {
        throw std::invalid_argument("wilson_interval: need 0 <= successes <= trials, trials > 0");
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return WilsonInterval{center - half, center + half};
}

double proportion_std_error(long successes, long trials) {
    if (trials <= 0) return 0.0;
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    return std::sqrt(p * (1.0 - p) / n);
}

EstimateReport proportion_report(long successes, long trials, long censored) {
    EstimateReport report;
    report.n_samples = trials;
    report.censored_count = censored;
    if (trials > 0) {
        report.point = static_cast<double>(successes) / static_cast<double>(trials);
        report.std_error = proportion_std_error(successes, trials);
        WilsonInterval ci = wilson_interval(successes, trials, kZ99);
        report.ci_lo = ci.lo;
        report.ci_hi = ci.hi;
    }
    return report;
}

}  // namespace rss
