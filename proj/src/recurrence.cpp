#include "orthofam/recurrence.hpp"

#include <algorithm>
#include <cmath>

namespace orthofam {

MonicCoeffs monic_coeffs_f1(const Family1Params& p) { return MonicCoeffs(p); }
MonicCoeffs monic_coeffs_f2(const Family2Params& p) { return MonicCoeffs(p); }

LeadingRatio leading_ratio_f1(const Family1Params& p) { return LeadingRatio(p); }
LeadingRatio leading_ratio_f2(const Family2Params& p) { return LeadingRatio(p); }

void MonicCoeffs::fill(int n, std::vector<double>& b_out, std::vector<double>& a_sq_out) const
{
    b_out.resize(static_cast<std::size_t>(std::max(n, 0)));
    a_sq_out.resize(b_out.size());
    const double scale = 1.0 + perturbation_;
    std::visit(
        [&](const auto& p) {
            const auto t = terms<double>(p);
            for (int k = 0; k < n; ++k) {
                b_out[k] = t.b(k);
                a_sq_out[k] = k == 0 ? 0.0 : t.a_sq(k) * scale;
            }
        },
        source_);
}

double eval_H(const Family1Params& p, int n, double z, Precision prec)
{
    if (prec == Precision::Extended)
        return static_cast<double>(basic_eval_H<Extended>(p, n, Extended(z)));
    return basic_eval_H<double>(p, n, z);
}

double eval_G(const Family2Params& p, int n, double z, Precision prec)
{
    if (prec == Precision::Extended)
        return static_cast<double>(basic_eval_G<Extended>(p, n, Extended(z)));
    return basic_eval_G<double>(p, n, z);
}

double eval_monic(const MonicCoeffs& c, int n, double z, Precision prec)
{
    if (prec == Precision::Extended)
        return static_cast<double>(basic_eval_monic<Extended>(c, n, Extended(z)));
    return basic_eval_monic<double>(c, n, z);
}

namespace {

constexpr int kDirectCutoff = 1 << 20;
constexpr double kRoundingMargin = 1e-12;

struct Remainder {
    double abs_b, a_sq, a;
};

// Bounds for sum_{n >= K}, valid once m_K = K + shift is large enough that the
// quadratic factor and the Jacobi brackets have settled. Returns false if K is
// too small for the estimates.
bool remainder_from(const Family1Params& p, long K, Remainder& out)
{
    const double s = p.mu() + p.nu();
    const double delta = p.mu() - p.nu();
    const double mK = static_cast<double>(K) + p.shift();
    const double uK = mK - 0.5;
    const double abs_alpha = std::abs(p.alpha());
    if (mK - 2.0 < 1.0 || (mK - 1.0) * (mK - 1.0) < 2.0 * abs_alpha)
        return false;
    if (4.0 * uK * uK < std::max({s * s, delta * delta, 2.0}))
        return false;

    const double rho = 1.0 - abs_alpha / ((mK - 1.0) * (mK - 1.0));
    const double sin_t = p.sin_theta();
    const double diag_bound = std::abs(p.nu() * p.nu() - p.mu() * p.mu()) / (4.0 * mK * mK - 1.0);
    const double cb = (std::abs(p.cos_theta()) + diag_bound) / (sin_t * rho);
    const double jmax = uK * uK / (4.0 * uK * uK - 1.0);
    const double ca = jmax / (sin_t * sin_t * rho * rho);

    out.abs_b = cb / (mK - 1.0);
    out.a_sq = ca / (3.0 * std::pow(mK - 2.0, 3));
    out.a = std::sqrt(ca) / (mK - 2.0);
    return true;
}

} // namespace

CoefficientTails coefficient_tails(const MonicCoeffs& c, int from)
{
    const auto* p = std::get_if<Family1Params>(&c.source());
    if (p == nullptr)
        throw PreconditionError("coefficient tails are defined for the first family only");
    if (from < 0)
        throw PreconditionError("coefficient_tails: start index must be >= 0");

    long cutoff = std::max<long>(from, kDirectCutoff);
    Remainder rem{};
    while (!remainder_from(*p, cutoff, rem))
        cutoff *= 2;

    const detail::Family1Terms<double> t(*p);
    long double sum_b = 0, sum_a_sq = 0, sum_a = 0;
    // Smallest terms first.
    for (long n = cutoff - 1; n >= from; --n) {
        const int k = static_cast<int>(n);
        sum_b += std::abs(t.b(k));
        if (k >= 1) {
            const double a2 = std::abs(t.a_sq(k));
            sum_a_sq += a2;
            sum_a += std::sqrt(a2);
        }
    }

    const double pert = std::max(c.perturbation(), 0.0);
    CoefficientTails out;
    out.from = from;
    out.abs_b = (static_cast<double>(sum_b) + rem.abs_b) * (1.0 + kRoundingMargin);
    out.a_sq = (static_cast<double>(sum_a_sq) + rem.a_sq) * (1.0 + pert) * (1.0 + kRoundingMargin);
    out.a = (static_cast<double>(sum_a) + rem.a) * std::sqrt(1.0 + pert) * (1.0 + kRoundingMargin);
    return out;
}

} // namespace orthofam
