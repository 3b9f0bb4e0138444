#include "orthofam/params.hpp"

#include "orthofam/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace orthofam {
namespace {

// A quadratic factor counts as vanishing when it is this small relative to its
// largest summand; beyond that the recurrence divides by rounding noise.
constexpr double kVanishingTolerance = 1e-12;

void require_jacobi_range(double mu, double nu, const char* mu_name, const char* nu_name)
{
    if (!std::isfinite(mu) || !(mu > -1.0))
        throw InvalidParameter(std::string(mu_name) + " must be finite and > -1, got " + std::to_string(mu));
    if (!std::isfinite(nu) || !(nu > -1.0))
        throw InvalidParameter(std::string(nu_name) + " must be finite and > -1, got " + std::to_string(nu));
}

// Finds the smallest n >= 0 with (n + shift)^2 + offset == 0 (up to tolerance),
// or -1 when there is none. Only n near the real roots can qualify.
long vanishing_index(double shift, double offset)
{
    if (offset > 0.0)
        return -1;
    const double root = std::sqrt(-offset);
    std::array<double, 2> candidates{-shift - root, -shift + root};
    long found = -1;
    for (double r : candidates) {
        for (double c : {std::floor(r), std::ceil(r)}) {
            if (c < 0.0)
                continue;
            const double m = c + shift;
            const double value = m * m + offset;
            if (std::abs(value) <= kVanishingTolerance * std::max(1.0, m * m)) {
                const auto n = static_cast<long>(c);
                if (found < 0 || n < found)
                    found = n;
            }
        }
    }
    return found;
}

} // namespace

Family1Params::Family1Params(double mu, double nu, double alpha, double theta)
    : mu_(mu), nu_(nu), alpha_(alpha), theta_(theta)
{
    require_jacobi_range(mu, nu, "mu", "nu");
    if (!std::isfinite(alpha))
        throw InvalidParameter("alpha must be finite");
    if (!std::isfinite(theta) || !(theta > 0.0) || !(theta < std::numbers::pi))
        throw InvalidParameter("theta must lie strictly inside (0, pi) so that sin(theta) != 0, got "
                               + std::to_string(theta));
    if (right_angle()) {
        sin_ = 1.0;
        cos_ = 0.0;
    } else {
        sin_ = std::sin(theta);
        cos_ = std::cos(theta);
    }
    if (const long n = vanishing_index(shift(), alpha); n >= 0)
        throw InvalidParameter("(n + (mu+nu+1)/2)^2 + alpha vanishes at n = " + std::to_string(n));
}

bool Family1Params::positive_definite() const noexcept
{
    const double s = shift();
    return s * s + alpha_ > 0.0;
}

Family2Params::Family2Params(double mu, double nu, double sigma) : mu_(mu), nu_(nu), sigma_(sigma)
{
    require_jacobi_range(mu, nu, "mu", "nu");
    if (!std::isfinite(sigma))
        throw InvalidParameter("sigma must be finite");
    if (const long n = vanishing_index(B(0), sigma); n >= 0)
        throw InvalidParameter("sigma + B_n^2 vanishes at n = " + std::to_string(n));
}

JacobiParams::JacobiParams(double alpha, double beta) : alpha_(alpha), beta_(beta)
{
    require_jacobi_range(alpha, beta, "alpha_j", "beta_j");
}

} // namespace orthofam
