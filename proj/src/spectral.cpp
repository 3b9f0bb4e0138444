#include "orthofam/spectral.hpp"

#include "orthofam/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace orthofam {
namespace {

constexpr int kMaxSweeps = 50;
constexpr double kCollisionGap = 1e-14;

template <class T>
T hypot2(const T& a, const T& b)
{
    using std::abs;
    using std::sqrt;
    const T aa = abs(a), bb = abs(b);
    if (aa > bb) {
        const T r = bb / aa;
        return aa * sqrt(1 + r * r);
    }
    if (bb == 0)
        return T(0);
    const T r = aa / bb;
    return bb * sqrt(1 + r * r);
}

template <class T>
T copysign2(const T& mag, const T& sgn)
{
    using std::abs;
    return sgn >= 0 ? T(abs(mag)) : T(-abs(mag));
}

// Implicit-shift QL on (d, e) where e[i] couples i and i+1. On return d holds
// the eigenvalues and first[k] the first component of the k-th normalized
// eigenvector. Only the first row of the eigenvector matrix is accumulated.
template <class T>
void ql_implicit(std::vector<T>& d, std::vector<T> e, std::vector<T>& first)
{
    using std::abs;
    const int n = static_cast<int>(d.size());
    e.resize(n, T(0));
    first.assign(n, T(0));
    first[0] = 1;

    for (int l = 0; l < n; ++l) {
        int sweeps = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const T dd = abs(d[m]) + abs(d[m + 1]);
                if (T(abs(e[m]) + dd) == dd)
                    break;
            }
            if (m == l)
                break;
            if (sweeps++ == kMaxSweeps)
                throw IterationFailure("eigensystem: no convergence within " + std::to_string(kMaxSweeps)
                                       + " sweeps for eigenvalue " + std::to_string(l));
            T g = (d[l + 1] - d[l]) / (2 * e[l]);
            T r = hypot2(g, T(1));
            g = d[m] - d[l] + e[l] / (g + copysign2(r, g));
            T s(1), c(1), p(0);
            int i;
            for (i = m - 1; i >= l; --i) {
                T f = s * e[i];
                const T b = c * e[i];
                r = hypot2(f, g);
                e[i + 1] = r;
                if (r == 0) {
                    d[i + 1] -= p;
                    e[m] = 0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = first[i + 1];
                first[i + 1] = s * first[i] + c * f;
                first[i] = c * first[i] - s * f;
            }
            if (r == 0 && i >= l)
                continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0;
        } while (m != l);
    }
}

template <class T>
SpectralData assemble(std::vector<T> d, const std::vector<T>& e)
{
    std::vector<T> first;
    ql_implicit(d, e, first);

    const int n = static_cast<int>(d.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

    T total(0);
    for (int k = 0; k < n; ++k)
        total += first[k] * first[k];

    SpectralData out;
    out.nodes.reserve(n);
    out.weights.reserve(n);
    for (int k : order) {
        out.nodes.push_back(static_cast<double>(d[k]));
        out.weights.push_back(static_cast<double>(first[k] * first[k] / total));
    }
    if (n > 1) {
        const double span = out.nodes.back() - out.nodes.front();
        for (int k = 0; k + 1 < n; ++k) {
            if (out.nodes[k + 1] - out.nodes[k] < kCollisionGap * span)
                out.warnings.push_back("nodes " + std::to_string(k) + " and " + std::to_string(k + 1)
                                       + " nearly coincide");
        }
    }
    return out;
}

template <class T>
void operator_in(const MonicCoeffs& coeffs, int N, std::vector<T>& d, std::vector<T>& e, const char* who)
{
    using std::sqrt;
    if (N < 1)
        throw PreconditionError(std::string(who) + ": size must be >= 1");
    d.resize(N);
    e.resize(N - 1);
    for (int n = 0; n < N; ++n)
        d[n] = coeffs.b<T>(n);
    for (int n = 1; n < N; ++n) {
        const T a2 = coeffs.a_sq<T>(n);
        if (!(a2 > 0))
            throw StructuralError(std::string(who) + ": a_n^2 <= 0 at n = " + std::to_string(n));
        e[n - 1] = sqrt(a2);
    }
}

} // namespace

double TridiagonalOperator::row_sum_bound() const noexcept
{
    double bound = 0.0;
    const int n = size();
    for (int i = 0; i < n; ++i) {
        double row = std::abs(diag[i]);
        if (i > 0)
            row += off[i - 1];
        if (i + 1 < n)
            row += off[i];
        bound = std::max(bound, row);
    }
    return bound;
}

TridiagonalOperator build_operator(const MonicCoeffs& coeffs, int N)
{
    if (N < 1)
        throw PreconditionError("build_operator: size must be >= 1");
    std::vector<double> b, a_sq;
    coeffs.fill(N, b, a_sq);
    TridiagonalOperator op;
    op.diag = std::move(b);
    op.off.resize(N - 1);
    for (int n = 1; n < N; ++n) {
        if (!(a_sq[n] > 0.0))
            throw StructuralError("build_operator: a_n^2 = " + std::to_string(a_sq[n]) + " <= 0 at n = "
                                  + std::to_string(n) + "; the operator is not symmetrizable");
        op.off[n - 1] = std::sqrt(a_sq[n]);
    }
    return op;
}

SpectralData eigensystem(const TridiagonalOperator& op)
{
    if (op.size() < 1 || op.off.size() + 1 != op.diag.size())
        throw PreconditionError("eigensystem: malformed operator");
    return assemble<double>(op.diag, op.off);
}

SpectralData eigensystem_extended(const MonicCoeffs& coeffs, int N)
{
    std::vector<Extended> d, e;
    operator_in<Extended>(coeffs, N, d, e, "eigensystem_extended");
    return assemble<Extended>(std::move(d), e);
}

GramResiduals gram_residuals(const MonicCoeffs& coeffs, int N, int max_degree)
{
    if (max_degree < 0 || 2 * max_degree > N)
        throw PreconditionError("gram_residuals: need 0 <= max_degree <= N/2");
    std::vector<Wide> d, e, first;
    operator_in<Wide>(coeffs, N, d, e, "gram_residuals");
    ql_implicit(d, e, first);

    const int D = max_degree + 1;
    std::vector<Wide> b(D), a_sq(D);
    for (int n = 0; n < D; ++n) {
        b[n] = coeffs.b<Wide>(n);
        a_sq[n] = coeffs.a_sq<Wide>(n);
    }
    Wide total(0);
    for (const auto& f : first)
        total += f * f;

    // values[i * N + k] = P_i(x_k)
    std::vector<Wide> values(static_cast<std::size_t>(D) * N);
    for (int k = 0; k < N; ++k) {
        Wide prev(0), cur(1);
        values[k] = cur;
        for (int i = 0; i + 1 < D; ++i) {
            Wide next = (d[k] - b[i]) * cur - a_sq[i] * prev;
            prev = cur;
            cur = next;
            values[static_cast<std::size_t>(i + 1) * N + k] = cur;
        }
    }
    std::vector<Wide> gram(static_cast<std::size_t>(D) * D);
    for (int i = 0; i < D; ++i)
        for (int j = 0; j <= i; ++j) {
            Wide sum(0);
            for (int k = 0; k < N; ++k)
                sum += first[k] * first[k] * values[static_cast<std::size_t>(i) * N + k]
                       * values[static_cast<std::size_t>(j) * N + k];
            gram[static_cast<std::size_t>(i) * D + j] = sum / total;
        }

    GramResiduals out;
    Wide norm(1);
    for (int i = 0; i < D; ++i) {
        if (i > 0)
            norm *= a_sq[i];
        const Wide& gii = gram[static_cast<std::size_t>(i) * D + i];
        const double rel = static_cast<double>(abs(gii / norm - 1));
        if (rel > out.diagonal) {
            out.diagonal = rel;
            out.diag_i = i;
        }
        for (int j = 0; j < i; ++j) {
            const Wide& gjj = gram[static_cast<std::size_t>(j) * D + j];
            const double off = static_cast<double>(abs(gram[static_cast<std::size_t>(i) * D + j]) / sqrt(gii * gjj));
            if (off > out.off_diagonal) {
                out.off_diagonal = off;
                out.off_i = i;
                out.off_j = j;
            }
        }
    }
    return out;
}

double quadrature_check(const SpectralData& s, const MonicCoeffs& coeffs, int i, int j)
{
    const int N = s.size();
    if (i < 0 || j < 0 || 2 * i > N || 2 * j > N)
        throw PreconditionError("quadrature_check: degrees must lie in [0, N/2] with N = " + std::to_string(N));
    std::vector<double> b, a_sq;
    std::vector<double> pi(N), pj(N);
    coeffs.fill(i, b, a_sq);
    kernels::monic_batch(b, a_sq, s.nodes, pi);
    coeffs.fill(j, b, a_sq);
    kernels::monic_batch(b, a_sq, s.nodes, pj);
    double sum = 0.0;
    for (int k = 0; k < N; ++k)
        sum += s.weights[k] * pi[k] * pj[k];
    return sum;
}

TraceDiagnostic trace_diagnostic(const MonicCoeffs& coeffs, int N)
{
    if (coeffs.family() != FamilyTag::H)
        throw PreconditionError("trace_diagnostic: defined for the first family only");
    const auto spec = eigensystem(build_operator(coeffs, N));
    TraceDiagnostic out;
    out.N = N;
    for (double x : spec.nodes)
        out.abs_eig_sum += std::abs(x);
    const auto tails = coefficient_tails(coeffs, N);
    out.tail_estimate = tails.abs_b + 2.0 * tails.a;
    return out;
}

std::vector<double> zeros(const MonicCoeffs& coeffs, int n)
{
    if (n < 0)
        throw PreconditionError("zeros: degree must be >= 0");
    if (n == 0)
        return {};
    return eigensystem(build_operator(coeffs, n)).nodes;
}

} // namespace orthofam
