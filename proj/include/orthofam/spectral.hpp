#pragma once

#include "orthofam/recurrence.hpp"

#include <string>
#include <vector>

namespace orthofam {

/// Truncated N x N symmetric Jacobi matrix: diag[n] = b_n and
/// off[n] = a_{n+1} = sqrt(a_sq(n+1)) couples rows n and n+1.
struct TridiagonalOperator {
    std::vector<double> diag;
    std::vector<double> off;

    int size() const noexcept { return static_cast<int>(diag.size()); }

    /// max_n (|b_n| + a_n + a_{n+1}); bounds every eigenvalue in modulus.
    double row_sum_bound() const noexcept;
};

/// Gauss rule of the truncation: nodes ascending, weights summing to 1.
struct SpectralData {
    std::vector<double> nodes;
    std::vector<double> weights;
    /// Non-fatal diagnostics (e.g. nearly coincident nodes).
    std::vector<std::string> warnings;

    int size() const noexcept { return static_cast<int>(nodes.size()); }
};

struct TraceDiagnostic {
    int N = 0;
    /// sum_k |x_{N,k}|.
    double abs_eig_sum = 0.0;
    /// sum_{n>=N} (|b_n| + 2 a_n): a dominating proxy for what the truncation
    /// leaves out, not a proven bound on the eigenvalue tail.
    double tail_estimate = 0.0;
};

/// Throws StructuralError if some a_sq(n) <= 0 for 1 <= n < N.
TridiagonalOperator build_operator(const MonicCoeffs& coeffs, int N);

/// Implicit-shift QL; IterationFailure past 50 sweeps for one eigenvalue.
SpectralData eigensystem(const TridiagonalOperator& op);

/// Same algorithm carried out in Extended precision, rounded at the end.
SpectralData eigensystem_extended(const MonicCoeffs& coeffs, int N);

/// sum_k w_k P_i(x_k) P_j(x_k). Requires 0 <= i, j <= N/2.
double quadrature_check(const SpectralData& s, const MonicCoeffs& coeffs, int i, int j);

/// Worst normalized departures of the N-point Gauss rule from orthogonality
/// over degrees 0..max_degree.
struct GramResiduals {
    /// max_{i != j} |<P_i,P_j>| / sqrt(<P_i,P_i><P_j,P_j>)
    double off_diagonal = 0.0;
    /// max_i |<P_i,P_i> / prod_{m<=i} a_sq(m) - 1|
    double diagonal = 0.0;
    int off_i = 0, off_j = 0, diag_i = 0;
};

/// Eigensolver, node evaluation and sums all in Wide precision. The top
/// eigenvalues of successive truncations agree to far more than 34 digits
/// when a_n decays like n^-2, so P_i at those nodes is a cancellation that
/// binary64 and Extended cannot resolve. Requires 0 <= max_degree <= N/2.
GramResiduals gram_residuals(const MonicCoeffs& coeffs, int N, int max_degree);

/// Family 1 only.
TraceDiagnostic trace_diagnostic(const MonicCoeffs& coeffs, int N);

/// Zeros of P_n in ascending order (eigenvalues of the n-truncation).
std::vector<double> zeros(const MonicCoeffs& coeffs, int n);

} // namespace orthofam
