#pragma once

// Numerical certification checks over parameter grids. Each check reports its
// worst residual against a fixed threshold.

#include "orthofam/params.hpp"
#include "orthofam/reference.hpp"

#include <string>
#include <vector>

namespace orthofam {

struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    double worst = 0.0;     ///< worst residual observed
    double threshold = 0.0; ///< the bound it is compared against
    std::string detail;     ///< worst offender and supporting numbers
};

std::vector<double> linspace(double lo, double hi, int count);

/// mu, nu in {-0.9, -0.5, 0, 0.5, 2, 7}, alpha in {-0.3, 0, 0.25, 1, 10},
/// theta in {pi/3, pi/2}; invalid or non-positive-definite sets are dropped.
std::vector<Family1Params> standard_family1_grid();

/// mu = nu = 0, alpha = 1, theta = pi/2.
Family1Params reference_family1();

// --- Wilson identification ---------------------------------------------------

struct WilsonGrid {
    std::vector<double> mu{-0.5, 0.0, 1.5};
    std::vector<double> nu{-0.5, 0.0, 1.5};
    std::vector<double> sigma{-2.25, -0.25, 0.25, 4.0};
    int n_max = 25;
    std::vector<double> z = linspace(-10.0, 90.0, 20);
};

struct WilsonDeviation {
    double worst = 0.0;
    int parameter_sets = 0;
    std::string worst_at;
};

/// Worst relative deviation between G_n (from the defining recurrence, and from
/// k_n times the monic recurrence with a_n^2 scaled by 1 + perturbation) and
/// the Wilson-side value, both in Extended precision.
WilsonDeviation wilson_deviation(const WilsonGrid& grid, WilsonArgument arg = kWilsonArgument,
                                 double a_sq_perturbation = 0.0);

/// Same comparison against the printed normalization and parameter mapping.
WilsonDeviation wilson_deviation_as_printed(const WilsonGrid& grid, WilsonArgument arg = kWilsonArgument);

// --- Jacobi limit transitions ------------------------------------------------

/// max over n <= n_max and z of |alpha^n P_n(z/alpha) - Pjac_n(z)| at theta = pi/2,
/// Pjac the monic Jacobi polynomial for (1-x)^nu (1+x)^mu.
double jacobi_limit_error_f1(double mu, double nu, double alpha, int n_max, const std::vector<double>& z);

/// max over n <= n_max and z of |sigma^-n P_n(sigma z) - Pjac_n(z - 1)|.
double jacobi_limit_error_f2(double mu, double nu, double sigma, int n_max, const std::vector<double>& z);

// --- Acceptance-level checks ---------------------------------------------------

struct CertifyOptions {
    double a_sq_perturbation = 0.0;
};

CheckResult check_wilson_identification(const CertifyOptions& opt = {});
CheckResult check_jacobi_limit_f1();
CheckResult check_jacobi_limit_f2();
CheckResult check_orthogonality_f1();
CheckResult check_q_convergence();
CheckResult check_gronwall_envelope();
CheckResult check_q_zeros();
CheckResult check_trace_class();

/// Identifiers accepted by run_checks, in report order.
const std::vector<std::string>& check_ids();

/// Runs the named checks (all when empty). Throws PreconditionError on an unknown id.
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const CertifyOptions& opt = {});

} // namespace orthofam
