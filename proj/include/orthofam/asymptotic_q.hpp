#pragma once

// Reversed polynomials Q_n(z) = z^n P_n(1/z) of the first family and their
// locally uniform limit Q, an entire function whose zeros sit at the
// reciprocals of the spectrum of the Jacobi operator.

#include "orthofam/recurrence.hpp"

#include <complex>
#include <limits>
#include <vector>

namespace orthofam {

using Complex = std::complex<double>;

/// Q_n(z) from Q_{k+1} = Q_k - b_k z Q_k - a_k^2 z^2 Q_{k-1}, Q_0 = 1; the
/// a_0^2 term is dropped (P_{-1} = 0).
template <class T, class Z = T>
Z basic_eval_Qn(const MonicCoeffs& c, int n, const Z& z)
{
    if (n < 0)
        throw PreconditionError("eval_Qn: degree must be >= 0");
    Z prev(0), cur(1);
    const Z z2 = z * z;
    for (int k = 0; k < n; ++k) {
        Z next = cur - Z(c.b<T>(k)) * z * cur;
        if (k > 0)
            next -= Z(c.a_sq<T>(k)) * z2 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Complex eval_Qn(const MonicCoeffs& coeffs, int n, Complex z);

/// Sums entering the Gronwall exponent, each certified from above.
struct EnvelopeSums {
    double abs_b = 0.0; ///< sum_{k>=0} |b_k|
    double a_sq = 0.0;  ///< sum_{k>=0} a_{k+1}^2
};

EnvelopeSums envelope_sums(const MonicCoeffs& coeffs);

/// M(R) = exp(R sum|b_k| + R^2 sum a_{k+1}^2) bounds |Q_n(z)| for |z| <= R and all n.
struct GronwallEnvelope {
    double R = 0.0;
    double M = 1.0;
    double log_M = 0.0;
};

GronwallEnvelope gronwall_envelope(const MonicCoeffs& coeffs, double R);
GronwallEnvelope gronwall_envelope(const EnvelopeSums& sums, double R);

/// Triangular table c[n][k] of the coefficients of Q_n, n <= n_max, k <= k_max.
template <class T>
struct CoeffGrid {
    int n_max = 0;
    int k_max = 0;
    std::vector<T> c; ///< row-major, (n_max+1) x (k_max+1)

    const T& at(int n, int k) const { return c[static_cast<std::size_t>(n) * (k_max + 1) + k]; }
    T& at(int n, int k) { return c[static_cast<std::size_t>(n) * (k_max + 1) + k]; }
};

/// Fills c_{n+1,k} = c_{n,k} - b_n c_{n,k-1} - a_n^2 c_{n-1,k-2} forward from row 0.
template <class T>
CoeffGrid<T> basic_q_coeff_grid(const MonicCoeffs& coeffs, int n_max, int k_max)
{
    if (n_max < 0 || k_max < 0 || k_max > n_max)
        throw PreconditionError("q_coeff_table: need 0 <= k_max <= n_max");
    CoeffGrid<T> g;
    g.n_max = n_max;
    g.k_max = k_max;
    g.c.assign(static_cast<std::size_t>(n_max + 1) * (k_max + 1), T(0));
    g.at(0, 0) = T(1);
    for (int n = 0; n < n_max; ++n) {
        const T b = coeffs.b<T>(n);
        const T a2 = coeffs.a_sq<T>(n);
        for (int k = 0; k <= k_max; ++k) {
            T v = g.at(n, k);
            if (k >= 1)
                v -= b * g.at(n, k - 1);
            if (k >= 2 && n >= 1)
                v -= a2 * g.at(n - 1, k - 2);
            g.at(n + 1, k) = v;
        }
    }
    return g;
}

/// Exact rational table; needs family 1 at theta = pi/2.
CoeffGrid<Exact> q_coeff_table_exact(const MonicCoeffs& coeffs, int n_max, int k_max);

/// binary64 coefficient table with column limits and the data needed to
/// certify evaluations of Q.
class QCoeffTable {
public:
    /// Column k counts as converged when its last two rows differ by less than column_tol.
    QCoeffTable(const MonicCoeffs& coeffs, int n_max, int k_max, double column_tol = 1e-12);

    const MonicCoeffs& coeffs() const noexcept { return coeffs_; }
    int n_max() const noexcept { return grid_.n_max; }
    int k_max() const noexcept { return grid_.k_max; }
    double at(int n, int k) const { return grid_.at(n, k); }
    const CoeffGrid<double>& grid() const noexcept { return grid_; }

    /// c_k := c[n_max][k].
    double limit(int k) const { return grid_.at(grid_.n_max, k); }
    bool converged(int k) const { return converged_.at(k); }
    /// |c[n_max][k] - c[n_max-1][k]|.
    double spread(int k) const { return spread_.at(k); }
    int unconverged_columns() const noexcept;

    const EnvelopeSums& sums() const noexcept { return sums_; }
    /// Coefficient tails from n_max on.
    const CoefficientTails& tails() const noexcept { return tails_; }

private:
    MonicCoeffs coeffs_;
    CoeffGrid<double> grid_;
    std::vector<bool> converged_;
    std::vector<double> spread_;
    EnvelopeSums sums_;
    CoefficientTails tails_;
};

QCoeffTable q_coeff_table(const MonicCoeffs& coeffs, int n_max, int k_max);

struct QValue {
    Complex value;
    /// Certified bound on |Q(z) - value| (series truncation, distance of
    /// Q_{n_max} from Q, and a rounding allowance).
    double tail_bound = 0.0;
};

inline constexpr double kDefaultQTolerance = 1e-8;

/// Partial sum of the limit coefficients. Throws RadiusExceeded when the
/// bound exceeds tol.
QValue eval_Q_limit(const QCoeffTable& table, Complex z, double tol = kDefaultQTolerance);

/// Bound used by eval_Q_limit; depends on |z| only.
double q_tail_bound(const QCoeffTable& table, double r);

/// Largest radius whose tail bound stays below tol.
double certified_radius(const QCoeffTable& table, double tol = kDefaultQTolerance);

/// 1 - sum_{k<K} (b_k z + a_{k+1}^2 z^2) Q_k(z) with a certified tail; an
/// independent route to Q that never touches the coefficient table.
QValue eval_Q_series_route(const MonicCoeffs& coeffs, int K, Complex z);

struct QZeroMatch {
    double zero = 0.0;            ///< refined zero of Q
    double reciprocal_node = 0.0; ///< 1/x_{N,k}
    double distance = 0.0;
    double residual = 0.0;        ///< |Q(zero)|
    double tail_bound = 0.0;
};

/// For each node of the N-truncation whose reciprocal lies in the certified
/// disk, refines a real zero of Q near it by bisection. Throws NoZeroFound if
/// a bracket shows no sign change.
std::vector<QZeroMatch> q_zero_spectrum_check(const MonicCoeffs& coeffs, const QCoeffTable& table, int N,
                                              double tol = kDefaultQTolerance);

} // namespace orthofam
