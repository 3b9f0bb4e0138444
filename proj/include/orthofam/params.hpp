#pragma once

#include <numbers>

namespace orthofam {

/// Validated parameters (mu, nu, alpha, theta) of the first family.
///
/// Construction throws InvalidParameter when mu or nu <= -1, when theta is
/// outside the open interval (0, pi), or when (n + (mu+nu+1)/2)^2 + alpha
/// vanishes for some n >= 0 (the message names that n).
class Family1Params {
public:
    Family1Params(double mu, double nu, double alpha, double theta);

    double mu() const noexcept { return mu_; }
    double nu() const noexcept { return nu_; }
    double alpha() const noexcept { return alpha_; }
    double theta() const noexcept { return theta_; }

    /// sin/cos of theta; exactly 1 and 0 when theta is the binary64 value of pi/2.
    double sin_theta() const noexcept { return sin_; }
    double cos_theta() const noexcept { return cos_; }
    bool right_angle() const noexcept { return theta_ == std::numbers::pi / 2; }

    /// (mu+nu+1)/2, the shift inside the quadratic factor.
    double shift() const noexcept { return 0.5 * (mu_ + nu_ + 1.0); }

    /// True when every a_n^2 is positive, i.e. shift()^2 + alpha > 0.
    bool positive_definite() const noexcept;

    friend bool operator==(const Family1Params&, const Family1Params&) = default;

private:
    double mu_, nu_, alpha_, theta_;
    double sin_, cos_;
};

/// Validated parameters (mu, nu, sigma) of the second family.
///
/// Throws InvalidParameter when mu or nu <= -1 or when sigma + B_n^2 vanishes
/// for some n >= 0, with B_n = n + 1 + (mu+nu)/2.
class Family2Params {
public:
    Family2Params(double mu, double nu, double sigma);

    double mu() const noexcept { return mu_; }
    double nu() const noexcept { return nu_; }
    double sigma() const noexcept { return sigma_; }

    double B(int n) const noexcept { return n + 1.0 + 0.5 * (mu_ + nu_); }

    friend bool operator==(const Family2Params&, const Family2Params&) = default;

private:
    double mu_, nu_, sigma_;
};

/// Parameters of the monic Jacobi polynomials for the weight
/// (1-x)^alpha (1+x)^beta on [-1, 1].
class JacobiParams {
public:
    JacobiParams(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }

    friend bool operator==(const JacobiParams&, const JacobiParams&) = default;

private:
    double alpha_, beta_;
};

} // namespace orthofam
