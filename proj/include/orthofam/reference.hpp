#pragma once

// Independent reference polynomials: Wilson polynomials from their terminating
// 4F3 series, and monic Jacobi polynomials.

#include "orthofam/recurrence.hpp"

#include <complex>

namespace orthofam {

struct WilsonParams {
    std::complex<double> a, b, c, d;
};

/// Principal sqrt(-sigma): real for sigma <= 0, i*sqrt(sigma) for sigma > 0.
std::complex<double> wilson_shift(double sigma);

/// Wilson parameters reproducing the second family:
///   a = c = (mu+1)/2,  b = (nu+1)/2 + s,  d = (nu+1)/2 - s,  s = sqrt(-sigma).
WilsonParams wilson_params_from(const Family2Params& p);

/// The mapping with (mu+1)/2 in place of (nu+1)/2 in b and d. It coincides
/// with wilson_params_from only when mu == nu; kept for diagnostics.
WilsonParams wilson_params_as_printed(const Family2Params& p);

/// W_n(x^2; a, b, c, d) as a function of x:
///   (a+b)_n (a+c)_n (a+d)_n 4F3(-n, n+a+b+c+d-1, a+ix, a-ix; a+b, a+c, a+d; 1).
/// Summed in Extended precision with incremental Pochhammer products.
std::complex<double> wilson_eval(const WilsonParams& w, int n, std::complex<double> x);

/// Extended-precision variant of wilson_eval's hypergeometric sum alone.
std::complex<Extended> wilson_hypergeometric(const WilsonParams& w, int n, std::complex<Extended> x);

/// Which role z/2 plays in the standard Wilson argument.
enum class WilsonArgument {
    XSquared, ///< x^2 = z/2
    X,        ///< x = z/2
};

/// The reading under which the identification with the second family holds.
inline constexpr WilsonArgument kWilsonArgument = WilsonArgument::XSquared;

const char* wilson_argument_name(WilsonArgument arg) noexcept;

/// Wilson-side value of G_n(z; sigma):
///   W_n(z/2; a,b,c,d) / ((a+b)_n (a+d)_n n!)  with wilson_params_from(p).
std::complex<Extended> g_from_wilson(const Family2Params& p, int n, const Extended& z,
                                     WilsonArgument arg = kWilsonArgument);

/// W_n(z/2)/((a+b)_n (a+d)_n) with wilson_params_as_printed(p), for diagnostics.
std::complex<Extended> g_from_wilson_as_printed(const Family2Params& p, int n, const Extended& z,
                                                WilsonArgument arg = kWilsonArgument);

/// Standard monic Jacobi coefficients for (1-x)^alpha_j (1+x)^beta_j.
MonicCoeffs monic_jacobi_coeffs(double alpha_j, double beta_j);
double monic_jacobi_eval(double alpha_j, double beta_j, int n, double z);

} // namespace orthofam
