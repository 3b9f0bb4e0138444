#include "doctest.h"

#include "orthofam/errors.hpp"
#include "orthofam/params.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

using namespace orthofam;

namespace {

std::string message_of(auto&& fn)
{
    try {
        fn();
    } catch (const InvalidParameter& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("family 1 accepts interior parameters")
{
    const Family1Params p(0.5, 1.5, 2.0, std::numbers::pi / 3);
    CHECK(p.mu() == 0.5);
    CHECK(p.nu() == 1.5);
    CHECK(p.shift() == 1.5);
    CHECK(p.sin_theta() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    CHECK(p.positive_definite());
}

TEST_CASE("family 1 rejects mu, nu <= -1 and non-finite values")
{
    const double pi2 = std::numbers::pi / 2;
    CHECK_THROWS_AS(Family1Params(-1.0, 0.0, 0.0, pi2), InvalidParameter);
    CHECK_THROWS_AS(Family1Params(0.0, -1.5, 0.0, pi2), InvalidParameter);
    CHECK_THROWS_AS(Family1Params(std::nan(""), 0.0, 0.0, pi2), InvalidParameter);
    CHECK_THROWS_AS(Family1Params(0.0, 0.0, std::numeric_limits<double>::infinity(), pi2), InvalidParameter);
}

TEST_CASE("theta endpoints are rejected with a message about sin(theta)")
{
    for (double theta : {0.0, std::numbers::pi, -0.1, 4.0}) {
        const auto msg = message_of([&] { Family1Params(0.0, 0.0, 0.0, theta); });
        CHECK(msg.find("sin(theta)") != std::string::npos);
    }
}

TEST_CASE("right angle snaps sin and cos exactly")
{
    const Family1Params p(0.0, 0.0, 1.0, std::numbers::pi / 2);
    CHECK(p.right_angle());
    CHECK(p.sin_theta() == 1.0);
    CHECK(p.cos_theta() == 0.0);
    CHECK_FALSE(Family1Params(0.0, 0.0, 1.0, 1.0).right_angle());
}

TEST_CASE("vanishing quadratic factor names the offending degree")
{
    // shift = 1/2: (n + 1/2)^2 + alpha = 0 at n = 1 for alpha = -9/4.
    const auto msg = message_of([] { Family1Params(0.0, 0.0, -2.25, 1.0); });
    CHECK(msg.find("n = 1") != std::string::npos);
    CHECK_THROWS_AS(Family1Params(0.0, 0.0, -0.25, 1.0), InvalidParameter);
    CHECK_THROWS_AS(Family1Params(1.0, 2.0, -36.0, 1.0), InvalidParameter); // shift 2, n = 4
    // Roots landing on negative n are harmless.
    CHECK_NOTHROW(Family1Params(3.0, 2.0, -1.0, 1.0)); // shift 3: n = -2, -4
    CHECK_NOTHROW(Family1Params(0.0, 0.0, -2.2, 1.0));
}

TEST_CASE("positive definiteness is the sign of the degree-0 factor")
{
    CHECK(Family1Params(0.0, 0.0, 0.0, 1.0).positive_definite());
    CHECK_FALSE(Family1Params(-0.9, -0.9, -0.3, 1.0).positive_definite());
    CHECK_FALSE(Family1Params(0.0, 0.0, -1.0, 1.0).positive_definite());
    CHECK(Family1Params(0.0, 0.0, -0.2, 1.0).positive_definite());
}

TEST_CASE("family 2 validation")
{
    CHECK_NOTHROW(Family2Params(0.0, 0.0, 1.0));
    CHECK_THROWS_AS(Family2Params(-1.0, 0.0, 1.0), InvalidParameter);
    // B_n = n + 1 for mu = nu = 0: sigma = -4 hits n = 1.
    const auto msg = message_of([] { Family2Params(0.0, 0.0, -4.0); });
    CHECK(msg.find("n = 1") != std::string::npos);
    CHECK_THROWS_AS(Family2Params(-0.5, -0.5, -2.25), InvalidParameter); // B_1 = 1.5
    CHECK_NOTHROW(Family2Params(0.0, 0.0, -2.25));
    CHECK(Family2Params(1.0, 2.0, 0.0).B(3) == 5.5);
}

TEST_CASE("Jacobi reference parameters")
{
    CHECK_NOTHROW(JacobiParams(0.5, -0.5));
    CHECK_THROWS_AS(JacobiParams(-1.0, 0.0), InvalidParameter);
    CHECK_THROWS_AS(JacobiParams(0.0, -2.0), InvalidParameter);
}

TEST_CASE("parameter equality")
{
    CHECK(Family1Params(0.0, 1.0, 2.0, 1.0) == Family1Params(0.0, 1.0, 2.0, 1.0));
    CHECK_FALSE(Family1Params(0.0, 1.0, 2.0, 1.0) == Family1Params(0.0, 1.0, 2.5, 1.0));
    CHECK(Family2Params(0.0, 1.0, 2.0) == Family2Params(0.0, 1.0, 2.0));
}
