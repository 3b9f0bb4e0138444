#include "orthofam/certify.hpp"

#include "orthofam/asymptotic_q.hpp"
#include "orthofam/kernels.hpp"
#include "orthofam/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>

namespace orthofam {
namespace {

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string describe(const Family1Params& p)
{
    return "mu=" + num(p.mu()) + " nu=" + num(p.nu()) + " alpha=" + num(p.alpha()) + " theta=" + num(p.theta());
}

double relative_gap(const std::complex<Extended>& a, const std::complex<Extended>& b)
{
    const Extended diff = abs(a - b);
    const Extended scale = std::max(abs(a), abs(b));
    if (scale == 0)
        return 0.0;
    return static_cast<double>(diff / scale);
}

CheckResult make(std::string id, std::string name, double worst, double threshold, bool pass, std::string detail)
{
    return {std::move(id), std::move(name), pass, worst, threshold, std::move(detail)};
}

// Points on |z| = R (count of them) plus interior rings.
std::vector<Complex> disk_points(double R, int circle, int interior)
{
    std::vector<Complex> pts;
    for (int i = 0; i < circle; ++i)
        pts.push_back(std::polar(R, 2.0 * std::numbers::pi * i / circle));
    pts.emplace_back(0.0, 0.0);
    for (int i = 1; i < interior; ++i) {
        const double rho = R * (0.2 + 0.75 * i / interior);
        pts.push_back(std::polar(rho, 2.0 * std::numbers::pi * (0.37 + 1.618 * i)));
    }
    return pts;
}

} // namespace

std::vector<double> linspace(double lo, double hi, int count)
{
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i)
        v[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    return v;
}

std::vector<Family1Params> standard_family1_grid()
{
    const double mus[] = {-0.9, -0.5, 0.0, 0.5, 2.0, 7.0};
    const double alphas[] = {-0.3, 0.0, 0.25, 1.0, 10.0};
    const double thetas[] = {std::numbers::pi / 3, std::numbers::pi / 2};
    std::vector<Family1Params> out;
    for (double th : thetas)
        for (double mu : mus)
            for (double nu : mus)
                for (double al : alphas) {
                    try {
                        Family1Params p(mu, nu, al, th);
                        if (p.positive_definite())
                            out.push_back(p);
                    } catch (const InvalidParameter&) {
                    }
                }
    return out;
}

Family1Params reference_family1() { return Family1Params(0.0, 0.0, 1.0, std::numbers::pi / 2); }

// --- Wilson ------------------------------------------------------------------

namespace {

template <class WilsonSide>
WilsonDeviation wilson_scan(const WilsonGrid& grid, double a_sq_perturbation, WilsonSide wilson_side)
{
    WilsonDeviation dev;
    for (double mu : grid.mu)
        for (double nu : grid.nu)
            for (double sigma : grid.sigma) {
                std::optional<Family2Params> p;
                try {
                    p.emplace(mu, nu, sigma);
                } catch (const InvalidParameter&) {
                    continue;
                }
                ++dev.parameter_sets;
                const auto coeffs = monic_coeffs_f2(*p).perturbed(a_sq_perturbation);
                const auto ratio = leading_ratio_f2(*p);
                for (int n = 0; n <= grid.n_max; ++n) {
                    const Extended k_n = ratio.leading<Extended>(n);
                    for (double zd : grid.z) {
                        const Extended z(zd);
                        const std::complex<Extended> w = wilson_side(*p, n, z);
                        const std::complex<Extended> direct(basic_eval_G<Extended>(*p, n, z), Extended(0));
                        const std::complex<Extended> monic(k_n * basic_eval_monic<Extended>(coeffs, n, z),
                                                           Extended(0));
                        const double gap = std::max(relative_gap(direct, w), relative_gap(monic, w));
                        if (gap > dev.worst || std::isnan(gap)) {
                            dev.worst = std::isnan(gap) ? std::numeric_limits<double>::infinity() : gap;
                            dev.worst_at = "mu=" + num(mu) + " nu=" + num(nu) + " sigma=" + num(sigma)
                                           + " n=" + std::to_string(n) + " z=" + num(zd);
                        }
                    }
                }
            }
    return dev;
}

} // namespace

WilsonDeviation wilson_deviation(const WilsonGrid& grid, WilsonArgument arg, double a_sq_perturbation)
{
    return wilson_scan(grid, a_sq_perturbation, [arg](const Family2Params& p, int n, const Extended& z) {
        return g_from_wilson(p, n, z, arg);
    });
}

WilsonDeviation wilson_deviation_as_printed(const WilsonGrid& grid, WilsonArgument arg)
{
    return wilson_scan(grid, 0.0, [arg](const Family2Params& p, int n, const Extended& z) {
        return g_from_wilson_as_printed(p, n, z, arg);
    });
}

// --- Jacobi limits -------------------------------------------------------------

double jacobi_limit_error_f1(double mu, double nu, double alpha, int n_max, const std::vector<double>& z)
{
    const Family1Params p(mu, nu, alpha, std::numbers::pi / 2);
    const auto coeffs = monic_coeffs_f1(p);
    const auto jac = monic_jacobi_coeffs(nu, mu);
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        Extended scale(1);
        for (int j = 0; j < n; ++j)
            scale *= Extended(alpha);
        for (double zd : z) {
            const Extended lhs = scale * basic_eval_monic<Extended>(coeffs, n, Extended(zd) / Extended(alpha));
            const Extended rhs = basic_eval_monic<Extended>(jac, n, Extended(zd));
            worst = std::max(worst, static_cast<double>(abs(lhs - rhs)));
        }
    }
    return worst;
}

double jacobi_limit_error_f2(double mu, double nu, double sigma, int n_max, const std::vector<double>& z)
{
    const Family2Params p(mu, nu, sigma);
    const auto coeffs = monic_coeffs_f2(p);
    const auto jac = monic_jacobi_coeffs(nu, mu);
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        Extended scale(1);
        for (int j = 0; j < n; ++j)
            scale /= Extended(sigma);
        for (double zd : z) {
            const Extended lhs = scale * basic_eval_monic<Extended>(coeffs, n, Extended(sigma) * Extended(zd));
            const Extended rhs = basic_eval_monic<Extended>(jac, n, Extended(zd) - 1);
            worst = std::max(worst, static_cast<double>(abs(lhs - rhs)));
        }
    }
    return worst;
}

// --- acceptance checks ---------------------------------------------------------

CheckResult check_wilson_identification(const CertifyOptions& opt)
{
    constexpr double kThreshold = 1e-9;
    const WilsonGrid grid;
    const auto dev = wilson_deviation(grid, kWilsonArgument, opt.a_sq_perturbation);
    const auto other = wilson_deviation(grid, WilsonArgument::X);
    std::string detail = "convention " + std::string(wilson_argument_name(kWilsonArgument)) + "; "
                         + std::to_string(dev.parameter_sets) + " parameter sets; worst at " + dev.worst_at
                         + "; alternative reading " + wilson_argument_name(WilsonArgument::X) + " deviates by "
                         + num(other.worst);
    return make("wilson", "Wilson identification of the second family", dev.worst, kThreshold,
                dev.worst <= kThreshold, detail);
}

namespace {

template <class ErrorFn>
CheckResult limit_check(std::string id, std::string name, ErrorFn error_at)
{
    constexpr double kAbsThreshold = 1e-2;
    constexpr double kRatioLo = 5.0, kRatioHi = 20.0;
    bool pass = true;
    double worst = 0.0;
    std::string detail;
    for (double mu : {0.0, 1.5})
        for (double nu : {0.0, 1.5}) {
            const double e2 = error_at(mu, nu, 1e2);
            const double e3 = error_at(mu, nu, 1e3);
            const double e4 = error_at(mu, nu, 1e4);
            const double r23 = e2 / e3, r34 = e3 / e4;
            const bool ok = e3 < kAbsThreshold && r23 >= kRatioLo && r23 <= kRatioHi && r34 >= kRatioLo
                            && r34 <= kRatioHi;
            pass = pass && ok;
            worst = std::max(worst, e3);
            detail += "(mu=" + num(mu) + ",nu=" + num(nu) + ": err@1e3=" + num(e3) + " ratios " + num(r23) + ","
                      + num(r34) + (ok ? "" : " FAIL") + ") ";
        }
    return make(std::move(id), std::move(name), worst, kAbsThreshold, pass, detail);
}

} // namespace

CheckResult check_jacobi_limit_f1()
{
    const auto z = linspace(-1.0, 1.0, 11);
    return limit_check("jacobi1", "Jacobi limit of the first family (alpha -> infinity)",
                       [&](double mu, double nu, double a) { return jacobi_limit_error_f1(mu, nu, a, 8, z); });
}

CheckResult check_jacobi_limit_f2()
{
    const auto z = linspace(0.0, 2.0, 11);
    return limit_check("jacobi2", "Jacobi limit of the second family (sigma -> infinity)",
                       [&](double mu, double nu, double s) { return jacobi_limit_error_f2(mu, nu, s, 8, z); });
}

CheckResult check_orthogonality_f1()
{
    constexpr int N = 40, kMaxDeg = 20;
    constexpr double kOffDiag = 1e-10, kDiag = 1e-9;
    double worst_off = 0.0, worst_diag = 0.0;
    std::string at_off, at_diag;
    const auto grid = standard_family1_grid();
    for (const auto& p : grid) {
        const auto r = gram_residuals(monic_coeffs_f1(p), N, kMaxDeg);
        if (r.off_diagonal >= worst_off) {
            worst_off = r.off_diagonal;
            at_off = describe(p) + " i=" + std::to_string(r.off_i) + " j=" + std::to_string(r.off_j);
        }
        if (r.diagonal >= worst_diag) {
            worst_diag = r.diagonal;
            at_diag = describe(p) + " i=" + std::to_string(r.diag_i);
        }
    }
    const bool pass = worst_off <= kOffDiag && worst_diag <= kDiag;
    return make("orthogonality", "Discrete orthogonality of the first family (N=40, degrees <= 20)", worst_off,
                kOffDiag, pass,
                std::to_string(grid.size()) + " parameter sets in 150-digit arithmetic; worst normalized off-diagonal "
                    + num(worst_off) + " at " + at_off + "; worst norm relative error " + num(worst_diag)
                    + " (limit " + num(kDiag) + ") at " + at_diag);
}

CheckResult check_q_convergence()
{
    constexpr int kDegree = 800;
    constexpr double kSlack = 1e-6;
    const auto coeffs = monic_coeffs_f1(reference_family1());
    const QCoeffTable table(coeffs, kDegree, 80);
    const auto pts = disk_points(1.0, 64, 20);

    std::vector<double> b, a_sq;
    coeffs.fill(kDegree, b, a_sq);
    std::vector<double> re(pts.size()), im(pts.size()), qre(pts.size()), qim(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        re[i] = pts[i].real();
        im[i] = pts[i].imag();
    }
    kernels::reversed_batch(b, a_sq, re, im, qre, qim, {});

    double worst_excess = -1.0, worst_gap = 0.0, worst_route = -1.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto lim = eval_Q_limit(table, pts[i], 1e-6);
        const double gap = std::abs(Complex(qre[i], qim[i]) - lim.value);
        worst_gap = std::max(worst_gap, gap);
        worst_excess = std::max(worst_excess, gap - (kSlack + lim.tail_bound));
        const auto route = eval_Q_series_route(coeffs, kDegree, pts[i]);
        worst_route = std::max(worst_route, std::abs(route.value - lim.value) - (route.tail_bound + lim.tail_bound));
    }
    const bool pass = worst_excess <= 0.0 && worst_route <= 0.0;
    return make("qconv", "Convergence of Q_n to the entire limit Q on |z| <= 1", worst_gap, kSlack, pass,
                "max |Q_800 - Q| = " + num(worst_gap) + "; worst excess over 1e-6 + tail = " + num(worst_excess)
                    + "; two-route worst excess over combined tails = " + num(worst_route));
}

CheckResult check_gronwall_envelope()
{
    constexpr int kDegree = 500;
    int violations = 0;
    double worst_ratio = 0.0;
    std::string at;
    auto grid = standard_family1_grid();
    for (const auto& p : grid) {
        const auto coeffs = monic_coeffs_f1(p);
        const auto sums = envelope_sums(coeffs);
        std::vector<double> b, a_sq;
        coeffs.fill(kDegree, b, a_sq);
        for (double R : {0.5, 1.0, 2.0}) {
            const auto env = gronwall_envelope(sums, R);
            const auto pts = disk_points(R, 64, 20);
            std::vector<double> re(pts.size()), im(pts.size()), qre(pts.size()), qim(pts.size()), mx(pts.size());
            for (std::size_t i = 0; i < pts.size(); ++i) {
                re[i] = pts[i].real();
                im[i] = pts[i].imag();
            }
            kernels::reversed_batch(b, a_sq, re, im, qre, qim, mx);
            for (double m : mx) {
                if (m > env.M)
                    ++violations;
                const double ratio = m / env.M;
                if (ratio > worst_ratio) {
                    worst_ratio = ratio;
                    at = describe(p) + " R=" + num(R);
                }
            }
        }
    }
    return make("gronwall", "Gronwall envelope |Q_n(z)| <= M(R), n <= 500, R in {0.5, 1, 2}", worst_ratio, 1.0,
                violations == 0,
                std::to_string(violations) + " violations over " + std::to_string(grid.size())
                    + " parameter sets; largest max|Q_n|/M = " + num(worst_ratio) + " at " + at);
}

CheckResult check_q_zeros()
{
    constexpr int N = 400;
    constexpr double kDistance = 1e-4, kResidual = 1e-8, kTol = 1e-8;
    constexpr std::size_t kMinZeros = 3;
    const auto coeffs = monic_coeffs_f1(reference_family1());
    const QCoeffTable table(coeffs, 10000, 300);
    const double radius = certified_radius(table, kTol);
    const auto matches = q_zero_spectrum_check(coeffs, table, N, kTol);
    std::size_t good = 0;
    double worst_distance = 0.0, worst_residual = 0.0;
    std::string zeros;
    for (const auto& m : matches) {
        worst_distance = std::max(worst_distance, m.distance);
        worst_residual = std::max(worst_residual, m.residual);
        if (m.distance <= kDistance && m.residual <= kResidual)
            ++good;
        zeros += num(m.zero) + " ";
    }
    const bool pass = good >= kMinZeros && good == matches.size();
    return make("qzeros", "Zeros of Q at reciprocals of the spectrum (N=400)", worst_distance, kDistance, pass,
                "certified radius " + num(radius) + "; zeros " + zeros + "; worst residual " + num(worst_residual)
                    + "; " + std::to_string(good) + " of " + std::to_string(matches.size()) + " within bounds");
}

CheckResult check_trace_class()
{
    constexpr double kThreshold = 1e-3;
    double worst = 0.0;
    int over_tail = 0;
    std::string at;
    const auto grid = standard_family1_grid();
    for (const auto& p : grid) {
        const auto coeffs = monic_coeffs_f1(p);
        const auto t200 = trace_diagnostic(coeffs, 200);
        const auto t400 = trace_diagnostic(coeffs, 400);
        const double diff = std::abs(t400.abs_eig_sum - t200.abs_eig_sum);
        if (diff > t200.tail_estimate)
            ++over_tail;
        if (diff > worst) {
            worst = diff;
            at = describe(p) + " (tail_estimate(200) = " + num(t200.tail_estimate) + ")";
        }
    }
    return make("trace", "Trace-class diagnostic |sum|x|(400) - sum|x|(200)|", worst, kThreshold,
                worst < kThreshold && over_tail == 0,
                "worst difference " + num(worst) + " at " + at + "; " + std::to_string(over_tail)
                    + " sets exceed tail_estimate(200)");
}

const std::vector<std::string>& check_ids()
{
    static const std::vector<std::string> ids{"wilson", "jacobi1",  "jacobi2", "orthogonality",
                                              "qconv",  "gronwall", "qzeros",  "trace"};
    return ids;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const CertifyOptions& opt)
{
    const auto& known = check_ids();
    for (const auto& id : ids)
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw PreconditionError("unknown check '" + id + "'");
    std::vector<CheckResult> out;
    for (const auto& id : known) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), id) == ids.end())
            continue;
        if (id == "wilson")
            out.push_back(check_wilson_identification(opt));
        else if (id == "jacobi1")
            out.push_back(check_jacobi_limit_f1());
        else if (id == "jacobi2")
            out.push_back(check_jacobi_limit_f2());
        else if (id == "orthogonality")
            out.push_back(check_orthogonality_f1());
        else if (id == "qconv")
            out.push_back(check_q_convergence());
        else if (id == "gronwall")
            out.push_back(check_gronwall_envelope());
        else if (id == "qzeros")
            out.push_back(check_q_zeros());
        else if (id == "trace")
            out.push_back(check_trace_class());
    }
    return out;
}

} // namespace orthofam
