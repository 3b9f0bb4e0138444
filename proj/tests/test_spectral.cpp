#include "doctest.h"

#include "oracles.hpp"
#include "support.hpp"

#include "orthofam/certify.hpp"
#include "orthofam/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <numeric>

using namespace orthofam;
using testing::rel_diff;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

std::vector<MonicCoeffs> oracle_sets()
{
    return {monic_coeffs_f1(Family1Params(0.0, 0.0, 1.0, kHalfPi)),
            monic_coeffs_f1(Family1Params(0.5, 1.5, 2.0, std::numbers::pi / 3)),
            monic_coeffs_f1(Family1Params(-0.5, 2.0, 0.25, 2.5)),
            monic_coeffs_f2(Family2Params(0.5, 1.5, 0.25)),
            monic_coeffs_f2(Family2Params(0.0, 0.0, -0.25)),
            monic_coeffs_f2(Family2Params(-0.5, 7.0, 10.0))};
}

} // namespace

TEST_CASE("build_operator: N = 1 is the 1x1 matrix [b(0)]")
{
    const auto c = monic_coeffs_f1(Family1Params(0.5, 1.5, 2.0, 1.0));
    const auto op = build_operator(c, 1);
    REQUIRE(op.size() == 1);
    CHECK(op.diag[0] == c.b(0));
    CHECK(op.off.empty());
    CHECK_THROWS_AS(build_operator(c, 0), PreconditionError);
}

TEST_CASE("build_operator: N = 3 at mu = nu = 0, alpha = 0, theta = pi/2")
{
    const auto op = build_operator(monic_coeffs_f1(Family1Params(0.0, 0.0, 0.0, kHalfPi)), 3);
    REQUIRE(op.size() == 3);
    REQUIRE(op.off.size() == 2);
    for (int n = 0; n < 3; ++n)
        CHECK(op.diag[n] == static_cast<double>(oracle::printed_b_f1<Exact>(0, 0, 0, 1, 0, n)));
    // Frozen oracle values 16/27 and 64/3375.
    CHECK(oracle::printed_a_sq_f1<Exact>(0, 0, 0, 1, 1) == Exact(16, 27));
    CHECK(oracle::printed_a_sq_f1<Exact>(0, 0, 0, 1, 2) == Exact(64, 3375));
    CHECK(rel_diff(op.off[0], std::sqrt(16.0 / 27.0)) < 1e-15);
    CHECK(rel_diff(op.off[1], std::sqrt(64.0 / 3375.0)) < 1e-15);
}

TEST_CASE("build_operator: nonpositive a_sq is a structural error")
{
    const auto c = monic_coeffs_f1(Family1Params(-0.9, -0.9, -0.3, kHalfPi));
    CHECK_THROWS_AS(build_operator(c, 5), StructuralError);
    CHECK_NOTHROW(build_operator(c, 1));
    CHECK_THROWS_AS(eigensystem_extended(c, 5), StructuralError);
}

TEST_CASE("family 1 off-diagonal entries decay like n^-2")
{
    const auto op = build_operator(monic_coeffs_f1(Family1Params(0.5, 1.5, 2.0, 1.0)), 1000);
    double fitted = 0.0;
    for (int n = 1; n < 1000; ++n)
        fitted = std::max(fitted, op.off[n - 1] * op.off[n - 1] * std::pow(static_cast<double>(n), 4));
    CHECK(std::isfinite(fitted));
    // The last entries already sit at the limiting constant 1/(4 sin^2 theta).
    const double tail = op.off[998] * op.off[998] * std::pow(999.0, 4);
    CHECK(tail <= fitted);
    CHECK(rel_diff(tail, 1.0 / (4 * std::sin(1.0) * std::sin(1.0))) < 1e-2);
}

TEST_CASE("eigensystem: N = 1")
{
    const auto c = monic_coeffs_f2(Family2Params(0.0, 0.0, 1.0));
    const auto s = eigensystem(build_operator(c, 1));
    REQUIRE(s.size() == 1);
    CHECK(s.nodes[0] == c.b(0));
    CHECK(s.weights[0] == 1.0);
}

TEST_CASE("eigensystem: N = 2 against the quadratic formula")
{
    for (const auto& c : oracle_sets()) {
        const auto s = eigensystem(build_operator(c, 2));
        const auto rule = oracle::two_point_rule(c.b(0), c.b(1), c.a_sq(1));
        const double scale = std::max({1.0, std::abs(rule.x0), std::abs(rule.x1)});
        CHECK(std::abs(s.nodes[0] - rule.x0) <= 1e-14 * scale);
        CHECK(std::abs(s.nodes[1] - rule.x1) <= 1e-14 * scale);
        CHECK(std::abs(s.weights[0] - rule.w0) <= 1e-12);
        CHECK(std::abs(s.weights[1] - rule.w1) <= 1e-12);
    }
}

TEST_CASE("property: eigenvalues equal bisection zeros of the recurrence for N <= 40")
{
    for (const auto& c : oracle_sets())
        for (int N = 1; N <= 40; ++N) {
            const auto nodes = eigensystem(build_operator(c, N)).nodes;
            const auto reference = oracle::bisection_zeros(c, N);
            REQUIRE(nodes.size() == reference.size());
            double worst = 0.0;
            for (int k = 0; k < N; ++k)
                worst = std::max(worst, std::abs(nodes[k] - reference[k]));
            CAPTURE(N);
            CHECK(worst <= 1e-10);
        }
}

TEST_CASE("property: weights positive, summing to 1; nodes strictly ascending; trace preserved")
{
    for (const auto& c : oracle_sets())
        for (int N : {1, 2, 5, 17, 40, 120}) {
            const auto op = build_operator(c, N);
            const auto s = eigensystem(op);
            CAPTURE(N);
            CHECK(std::all_of(s.weights.begin(), s.weights.end(), [](double w) { return w > 0.0; }));
            CHECK(std::abs(std::accumulate(s.weights.begin(), s.weights.end(), 0.0) - 1.0) < 1e-13);
            bool ascending = true;
            for (int k = 0; k + 1 < N; ++k)
                ascending = ascending && s.nodes[k] < s.nodes[k + 1];
            if (c.family() == FamilyTag::G || N <= 17)
                CHECK(ascending);
            double trace = 0.0, abs_trace = 0.0;
            for (double d : op.diag) {
                trace += d;
                abs_trace += std::abs(d);
            }
            const double sum = std::accumulate(s.nodes.begin(), s.nodes.end(), 0.0);
            CHECK(std::abs(sum - trace) <= 1e-10 * std::max(abs_trace, 1e-300) + 1e-15);
        }
}

TEST_CASE("eigensystem is deterministic and the extended variant agrees")
{
    const auto c = monic_coeffs_f1(Family1Params(0.5, 1.5, 2.0, std::numbers::pi / 3));
    const auto op = build_operator(c, 30);
    const auto a = eigensystem(op), b = eigensystem(op);
    CHECK(a.nodes == b.nodes);
    CHECK(a.weights == b.weights);
    const auto e = eigensystem_extended(c, 30);
    for (int k = 0; k < 30; ++k)
        CHECK(std::abs(a.nodes[k] - e.nodes[k]) < 1e-14);
}

TEST_CASE("family 1 spectrum lies inside the row-sum bound")
{
    for (const auto& p : standard_family1_grid()) {
        const auto op = build_operator(monic_coeffs_f1(p), 60);
        const auto s = eigensystem(op);
        const double bound = op.row_sum_bound();
        CHECK(std::max(std::abs(s.nodes.front()), std::abs(s.nodes.back())) <= bound);
    }
}

TEST_CASE("family 2 largest node grows like N^2")
{
    for (const auto& p : {Family2Params(0.5, 1.5, 0.25), Family2Params(0.0, 0.0, -0.25), Family2Params(-0.5, 0.0, 4.0)})
        for (int N : {50, 100, 200}) {
            const double ratio = eigensystem(build_operator(monic_coeffs_f2(p), N)).nodes.back() / (double(N) * N);
            CAPTURE(N);
            CAPTURE(ratio);
            CHECK(ratio >= 0.5);
            CHECK(ratio <= 2.0);
        }
    // B_n^2 = n^2 + (mu+nu+2) n + ... lifts the ratio to 2.047 at N = 50 when
    // mu + nu = 9; the bracket holds once N outgrows that O(N) term.
    const auto big = monic_coeffs_f2(Family2Params(2.0, 7.0, 10.0));
    for (int N : {100, 200, 400}) {
        const double ratio = eigensystem(build_operator(big, N)).nodes.back() / (double(N) * N);
        CHECK(ratio >= 0.5);
        CHECK(ratio <= 2.0);
    }
}

TEST_CASE("quadrature_check: trivial entries and the window")
{
    const auto c = monic_coeffs_f2(Family2Params(0.5, 1.5, 0.25));
    const auto s = eigensystem(build_operator(c, 10));
    CHECK(std::abs(quadrature_check(s, c, 0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(quadrature_check(s, c, 0, 1)) < 1e-13 * std::abs(c.b(0)));
    CHECK_THROWS_AS(quadrature_check(s, c, 6, 0), PreconditionError);
    CHECK_THROWS_AS(quadrature_check(s, c, 0, -1), PreconditionError);
    CHECK_NOTHROW(quadrature_check(s, c, 5, 5));
}

TEST_CASE("quadrature_check: i = j = 3 at mu=0.5, nu=1.5, alpha=2, theta=pi/3, N=40")
{
    const auto c = monic_coeffs_f1(Family1Params(0.5, 1.5, 2.0, std::numbers::pi / 3));
    // Frozen from the Q(sqrt 3) oracle: a_sq(1) a_sq(2) a_sq(3) = 2560/144537415011.
    const oracle::Surd3 mu(Exact(1, 2)), nu(Exact(3, 2)), alpha(2), sin_t(0, Exact(1, 2));
    oracle::Surd3 product(1);
    for (int m = 1; m <= 3; ++m)
        product = product * oracle::printed_a_sq_f1(mu, nu, alpha, sin_t, m);
    CHECK(product == oracle::Surd3(Exact(2560, 144537415011LL)));
    const auto s = eigensystem_extended(c, 40);
    CHECK(rel_diff(quadrature_check(s, c, 3, 3), 1.7711676937111208e-08) < 1e-9);
}

TEST_CASE("gram residuals in wide precision")
{
    const auto f1 = gram_residuals(monic_coeffs_f1(reference_family1()), 40, 20);
    CHECK(f1.off_diagonal < 1e-40);
    CHECK(f1.diagonal < 1e-40);
    const auto f2 = gram_residuals(monic_coeffs_f2(Family2Params(0.5, 1.5, 0.25)), 12, 6);
    CHECK(f2.off_diagonal < 1e-30);
    CHECK(f2.diagonal < 1e-30);
    CHECK_THROWS_AS(gram_residuals(monic_coeffs_f1(reference_family1()), 10, 6), PreconditionError);
}

TEST_CASE("zeros: degree 0 and 1, and interlacing")
{
    const auto c1 = monic_coeffs_f1(Family1Params(0.5, 1.5, 2.0, std::numbers::pi / 3));
    CHECK(zeros(c1, 0).empty());
    REQUIRE(zeros(c1, 1).size() == 1);
    CHECK(zeros(c1, 1)[0] == c1.b(0));
    CHECK_THROWS_AS(zeros(c1, -1), PreconditionError);

    for (const auto& c : oracle_sets())
        for (int n = 1; n <= 30; ++n) {
            const auto x = zeros(c, n), y = zeros(c, n + 1);
            // Extreme zeros of family 1 converge faster than binary64 resolves
            // once n passes ~5; there the order holds up to the eigensolver's
            // absolute accuracy, a few ulps of max|x|.
            const double top = std::max(std::abs(y.front()), std::abs(y.back()));
            const double slack = c.family() == FamilyTag::H ? 16 * DBL_EPSILON * top : 0.0;
            bool strict = true, weak = true;
            for (int k = 0; k < n; ++k) {
                strict = strict && y[k] < x[k] && x[k] < y[k + 1];
                weak = weak && y[k] <= x[k] + slack && x[k] <= y[k + 1] + slack;
            }
            CAPTURE(n);
            CHECK(weak);
            if (c.family() == FamilyTag::G || n <= 5)
                CHECK(strict);
        }
}

TEST_CASE("family 1 zeros accumulate at 0")
{
    const auto c = monic_coeffs_f1(reference_family1());
    double previous = INFINITY;
    for (int n : {10, 20, 40, 80, 160}) {
        const auto x = zeros(c, n);
        double smallest = INFINITY;
        for (double v : x)
            smallest = std::min(smallest, std::abs(v));
        CHECK(smallest <= previous);
        previous = smallest;
    }
    CHECK(previous < 1e-3);
}

TEST_CASE("nearly coincident nodes raise a warning and nothing else")
{
    TridiagonalOperator op;
    op.diag = {2.0, 0.0, 2.0};
    op.off = {1e-200, 1e-200};
    const auto s = eigensystem(op);
    REQUIRE(s.size() == 3);
    CHECK_FALSE(s.warnings.empty());
    CHECK(eigensystem(build_operator(monic_coeffs_f2(Family2Params(0.0, 0.0, 1.0)), 10)).warnings.empty());
}

TEST_CASE("trace diagnostic")
{
    const auto c = monic_coeffs_f1(reference_family1());
    const auto one = trace_diagnostic(c, 1);
    CHECK(one.abs_eig_sum == std::abs(c.b(0)));
    CHECK_THROWS_AS(trace_diagnostic(monic_coeffs_f2(Family2Params(0.0, 0.0, 1.0)), 5), PreconditionError);

    // Truncation error is O(1/N): successive differences halve as N doubles.
    const double s25 = trace_diagnostic(c, 25).abs_eig_sum, s50 = trace_diagnostic(c, 50).abs_eig_sum,
                 s100 = trace_diagnostic(c, 100).abs_eig_sum;
    const double ratio = (s50 - s25) / (s100 - s50);
    CHECK(ratio > 1.5);
    CHECK(ratio < 2.5);

    for (const auto& p : standard_family1_grid()) {
        const auto coeffs = monic_coeffs_f1(p);
        for (int N : {25, 50, 100, 200}) {
            const auto small = trace_diagnostic(coeffs, N), big = trace_diagnostic(coeffs, 2 * N);
            CHECK(small.abs_eig_sum >= 0.0);
            CHECK(big.abs_eig_sum - small.abs_eig_sum <= small.tail_estimate);
        }
    }
}
