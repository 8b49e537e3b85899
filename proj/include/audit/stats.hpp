#pragma once

// Small distribution kernel shared by the inferential modules: standard
// normal CDF and the chi-squared survival function (via the regularized
// incomplete gamma function).

namespace audit {

double normal_cdf(double x);

// Two-sided p-value for a z statistic.
double normal_two_sided_p(double z);

// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

// Survival function of the chi-squared distribution with df degrees of
// freedom: P(X > x).
double chi2_sf(double x, double df);

}  // namespace audit
