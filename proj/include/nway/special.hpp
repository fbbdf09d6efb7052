#pragma once

namespace nway {

// Regularized incomplete gamma functions. P(a,x) + Q(a,x) = 1.
// Power series for x < a+1, Lentz continued fraction otherwise;
// absolute error below 1e-12 over the ranges used here.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper tail of the chi-square distribution: Q(df/2, x/2).
double chi_square_sf(double x, int df);

}  // namespace nway
