#include "orthofam/reference.hpp"

#include <cmath>

namespace orthofam {
namespace {

using CExt = std::complex<Extended>;

CExt widen(std::complex<double> v) { return {Extended(v.real()), Extended(v.imag())}; }

CExt wilson_x(const Extended& z, WilsonArgument arg)
{
    const Extended half = z / 2;
    if (arg == WilsonArgument::X)
        return {half, Extended(0)};
    if (half >= 0)
        return {sqrt(half), Extended(0)};
    return {Extended(0), sqrt(-half)};
}

// (a+c)_n / n!
CExt rising_over_factorial(const CExt& base, int n)
{
    CExt v(Extended(1), Extended(0));
    for (int j = 0; j < n; ++j)
        v *= (base + Extended(j)) / Extended(j + 1);
    return v;
}

CExt rising(const CExt& base, int n)
{
    CExt v(Extended(1), Extended(0));
    for (int j = 0; j < n; ++j)
        v *= base + Extended(j);
    return v;
}

} // namespace

std::complex<double> wilson_shift(double sigma)
{
    if (sigma <= 0.0)
        return {std::sqrt(-sigma), 0.0};
    return {0.0, std::sqrt(sigma)};
}

WilsonParams wilson_params_from(const Family2Params& p)
{
    const std::complex<double> s = wilson_shift(p.sigma());
    const double a = 0.5 * (p.mu() + 1.0);
    const double center = 0.5 * (p.nu() + 1.0);
    return {a, center + s, a, center - s};
}

WilsonParams wilson_params_as_printed(const Family2Params& p)
{
    const std::complex<double> s = wilson_shift(p.sigma());
    const double a = 0.5 * (p.mu() + 1.0);
    return {a, a + s, a, a - s};
}

std::complex<Extended> wilson_hypergeometric(const WilsonParams& w, int n, std::complex<Extended> x)
{
    if (n < 0)
        throw PreconditionError("wilson_eval: degree must be >= 0");
    const CExt a = widen(w.a), b = widen(w.b), c = widen(w.c), d = widen(w.d);
    const CExt i_unit(Extended(0), Extended(1));
    const CExt top = Extended(n - 1) + a + b + c + d;
    const CExt ax_plus = a + i_unit * x;
    const CExt ax_minus = a - i_unit * x;
    CExt term(Extended(1), Extended(0));
    CExt sum = term;
    for (int j = 0; j < n; ++j) {
        const Extended jj(j);
        term *= (Extended(j - n) * (top + jj) * (ax_plus + jj) * (ax_minus + jj))
                / ((a + b + jj) * (a + c + jj) * (a + d + jj) * Extended(j + 1));
        sum += term;
    }
    return sum;
}

std::complex<double> wilson_eval(const WilsonParams& w, int n, std::complex<double> x)
{
    const CExt a = widen(w.a), b = widen(w.b), c = widen(w.c), d = widen(w.d);
    const CExt v = rising(a + b, n) * rising(a + c, n) * rising(a + d, n) * wilson_hypergeometric(w, n, widen(x));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

const char* wilson_argument_name(WilsonArgument arg) noexcept
{
    return arg == WilsonArgument::XSquared ? "x^2 = z/2" : "x = z/2";
}

std::complex<Extended> g_from_wilson(const Family2Params& p, int n, const Extended& z, WilsonArgument arg)
{
    const WilsonParams w = wilson_params_from(p);
    return rising_over_factorial(widen(w.a + w.c), n) * wilson_hypergeometric(w, n, wilson_x(z, arg));
}

std::complex<Extended> g_from_wilson_as_printed(const Family2Params& p, int n, const Extended& z, WilsonArgument arg)
{
    const WilsonParams w = wilson_params_as_printed(p);
    return rising(widen(w.a + w.c), n) * wilson_hypergeometric(w, n, wilson_x(z, arg));
}

MonicCoeffs monic_jacobi_coeffs(double alpha_j, double beta_j) { return MonicCoeffs(JacobiParams(alpha_j, beta_j)); }

double monic_jacobi_eval(double alpha_j, double beta_j, int n, double z)
{
    return eval_monic(monic_jacobi_coeffs(alpha_j, beta_j), n, z);
}

} // namespace orthofam
