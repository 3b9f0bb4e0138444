#include "orthofam/asymptotic_q.hpp"

#include "orthofam/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orthofam {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// log of M(R) (r/R)^(k+1) / (1 - r/R), the Cauchy estimate of
// sum_{j>k} |c_j| r^j, minimized over R > r.
double log_cauchy_tail(const EnvelopeSums& sums, int k_max, double r)
{
    auto log_bound = [&](double t) {
        const double R = r * std::exp(t);
        return R * sums.abs_b + R * R * sums.a_sq - (k_max + 1) * t - std::log1p(-std::exp(-t));
    };
    // Coarse scan of t = log(R/r), then golden-section refinement.
    double best_t = 1e-3, best = log_bound(best_t);
    for (int i = 1; i <= 400; ++i) {
        const double t = 1e-3 * std::pow(5e4, i / 400.0);
        const double v = log_bound(t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    double lo = best_t / 1.05, hi = best_t * 1.05;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int it = 0; it < 60; ++it) {
        const double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
        if (log_bound(a) < log_bound(b))
            hi = b;
        else
            lo = a;
    }
    return std::min(best, log_bound(0.5 * (lo + hi)));
}

// Horner form: underflowed high-order coefficients never meet an overflowed r^k.
double abs_series(const CoeffGrid<double>& g, int row, double r)
{
    double sum = 0.0;
    for (int k = g.k_max; k >= 0; --k)
        sum = sum * r + std::abs(g.at(row, k));
    return sum;
}

} // namespace

Complex eval_Qn(const MonicCoeffs& coeffs, int n, Complex z) { return basic_eval_Qn<double>(coeffs, n, z); }

EnvelopeSums envelope_sums(const MonicCoeffs& coeffs)
{
    const auto t0 = coefficient_tails(coeffs, 0);
    return {t0.abs_b, t0.a_sq};
}

GronwallEnvelope gronwall_envelope(const EnvelopeSums& sums, double R)
{
    if (!(R > 0.0))
        throw PreconditionError("gronwall_envelope: radius must be > 0");
    GronwallEnvelope g;
    g.R = R;
    g.log_M = R * sums.abs_b + R * R * sums.a_sq;
    g.M = std::exp(g.log_M);
    return g;
}

GronwallEnvelope gronwall_envelope(const MonicCoeffs& coeffs, double R)
{
    return gronwall_envelope(envelope_sums(coeffs), R);
}

CoeffGrid<Exact> q_coeff_table_exact(const MonicCoeffs& coeffs, int n_max, int k_max)
{
    return basic_q_coeff_grid<Exact>(coeffs, n_max, k_max);
}

QCoeffTable::QCoeffTable(const MonicCoeffs& coeffs, int n_max, int k_max, double column_tol)
    : coeffs_(coeffs), grid_(basic_q_coeff_grid<double>(coeffs, n_max, k_max))
{
    if (!(column_tol > 0.0))
        throw PreconditionError("q_coeff_table: column tolerance must be > 0");
    converged_.resize(k_max + 1);
    spread_.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        spread_[k] = n_max == 0 ? std::numeric_limits<double>::infinity()
                                : std::abs(grid_.at(n_max, k) - grid_.at(n_max - 1, k));
        converged_[k] = spread_[k] < column_tol;
    }
    sums_ = envelope_sums(coeffs);
    tails_ = coefficient_tails(coeffs, n_max);
}

int QCoeffTable::unconverged_columns() const noexcept
{
    return static_cast<int>(std::count(converged_.begin(), converged_.end(), false));
}

QCoeffTable q_coeff_table(const MonicCoeffs& coeffs, int n_max, int k_max)
{
    return QCoeffTable(coeffs, n_max, k_max);
}

double q_tail_bound(const QCoeffTable& table, double r)
{
    if (r == 0.0)
        return 0.0;
    const auto& g = table.grid();
    const double cauchy = std::exp(log_cauchy_tail(table.sums(), g.k_max, r));
    const double last = abs_series(g, g.n_max, r);
    const double before = g.n_max > 0 ? abs_series(g, g.n_max - 1, r) : last;
    // max(|Q_{n_max}|, |Q_{n_max-1}|) on the circle of radius r.
    const double u = std::max(last, before) + cauchy;
    const double w = r * table.tails().abs_b + r * r * table.tails().a_sq;
    const double convergence = u * std::exp(w) * w;
    const double rounding = (8.0 * (g.k_max + 2) + 4.0 * g.n_max) * kEps * last;
    return cauchy + convergence + rounding;
}

QValue eval_Q_limit(const QCoeffTable& table, Complex z, double tol)
{
    const double bound = q_tail_bound(table, std::abs(z));
    if (!(bound <= tol))
        throw RadiusExceeded("eval_Q_limit: tail bound " + std::to_string(bound) + " exceeds tolerance "
                             + std::to_string(tol) + " at |z| = " + std::to_string(std::abs(z)));
    Complex v(0.0);
    for (int k = table.k_max(); k >= 0; --k)
        v = v * z + table.limit(k);
    return {v, bound};
}

double certified_radius(const QCoeffTable& table, double tol)
{
    double lo = 0.0, hi = 1.0;
    while (q_tail_bound(table, hi) <= tol) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e8)
            return lo;
    }
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (q_tail_bound(table, mid) <= tol)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

QValue eval_Q_series_route(const MonicCoeffs& coeffs, int K, Complex z)
{
    if (K < 1)
        throw PreconditionError("eval_Q_series_route: need K >= 1");
    std::vector<double> b, a_sq;
    coeffs.fill(K + 1, b, a_sq);
    const Complex z2 = z * z;
    Complex prev(0.0), cur(1.0), sum(0.0);
    double magnitude = 0.0;
    for (int k = 0; k < K; ++k) {
        const Complex term = (b[k] * z + a_sq[k + 1] * z2) * cur;
        sum += term;
        magnitude += std::abs(term);
        Complex next = cur - b[k] * z * cur;
        if (k > 0)
            next -= a_sq[k] * z2 * prev;
        prev = cur;
        cur = next;
    }
    const double r = std::abs(z);
    const auto tails = coefficient_tails(coeffs, K);
    const double w = r * tails.abs_b + r * r * tails.a_sq;
    const double v = std::max(std::abs(cur), std::abs(prev));
    const double rounding = 8.0 * K * kEps * (1.0 + magnitude);
    return {1.0 - sum, v * std::exp(w) * w + rounding};
}

std::vector<QZeroMatch> q_zero_spectrum_check(const MonicCoeffs& coeffs, const QCoeffTable& table, int N, double tol)
{
    const double radius = certified_radius(table, tol);
    const auto nodes = zeros(coeffs, N);

    std::vector<double> recips;
    for (double x : nodes)
        if (x != 0.0)
            recips.push_back(1.0 / x);
    std::sort(recips.begin(), recips.end());

    auto q_at = [&](double x) { return eval_Q_limit(table, Complex(x, 0.0), tol).value.real(); };

    std::vector<QZeroMatch> out;
    for (std::size_t i = 0; i < recips.size(); ++i) {
        const double y = recips[i];
        if (!(std::abs(y) < radius))
            continue;
        double gap = 0.1 * std::abs(y);
        if (i > 0)
            gap = std::min(gap, 0.5 * (y - recips[i - 1]));
        if (i + 1 < recips.size())
            gap = std::min(gap, 0.5 * (recips[i + 1] - y));
        double lo = y - gap, hi = y + gap;
        lo = std::max(lo, -radius * (1.0 - 1e-12));
        hi = std::min(hi, radius * (1.0 - 1e-12));
        double f_lo = q_at(lo), f_hi = q_at(hi);
        if (f_lo == 0.0)
            hi = lo;
        else if (f_hi == 0.0)
            lo = hi;
        else if ((f_lo < 0.0) == (f_hi < 0.0))
            throw NoZeroFound("q_zero_spectrum_check: no sign change of Q in [" + std::to_string(lo) + ", "
                              + std::to_string(hi) + "] around 1/x = " + std::to_string(y));
        for (int it = 0; it < 200 && hi - lo > 2.0 * kEps * std::abs(hi); ++it) {
            const double mid = 0.5 * (lo + hi);
            const double f_mid = q_at(mid);
            if (f_mid == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((f_mid < 0.0) == (f_lo < 0.0)) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        QZeroMatch m;
        m.zero = 0.5 * (lo + hi);
        m.reciprocal_node = y;
        m.distance = std::abs(m.zero - y);
        const auto q = eval_Q_limit(table, Complex(m.zero, 0.0), tol);
        m.residual = std::abs(q.value);
        m.tail_bound = q.tail_bound;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end(),
              [](const QZeroMatch& a, const QZeroMatch& b) { return std::abs(a.zero) < std::abs(b.zero); });
    return out;
}

} // namespace orthofam
