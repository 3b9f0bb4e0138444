#pragma once

// Test-only oracles. None of these share code with the library's coefficient
// formulas or eigensolver; they transcribe the recurrences directly.

#include "orthofam/numeric.hpp"
#include "orthofam/recurrence.hpp"

#include <utility>
#include <vector>

namespace oracle {

using orthofam::Exact;
using orthofam::Extended;

// Elements a + b*sqrt(3) of Q(sqrt 3); exact arithmetic at theta = pi/3, pi/6.
struct Surd3 {
    Exact a{0}, b{0};

    Surd3() = default;
    Surd3(Exact a_, Exact b_ = Exact(0)) : a(std::move(a_)), b(std::move(b_)) {}
    Surd3(int v) : a(v) {}

    friend Surd3 operator+(const Surd3& x, const Surd3& y) { return {x.a + y.a, x.b + y.b}; }
    friend Surd3 operator-(const Surd3& x, const Surd3& y) { return {x.a - y.a, x.b - y.b}; }
    friend Surd3 operator-(const Surd3& x) { return {-x.a, -x.b}; }
    friend Surd3 operator*(const Surd3& x, const Surd3& y)
    {
        return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend Surd3 operator/(const Surd3& x, const Surd3& y)
    {
        const Exact den = y.a * y.a - 3 * y.b * y.b;
        const Surd3 num = x * Surd3(y.a, -y.b);
        return {num.a / den, num.b / den};
    }
    friend bool operator==(const Surd3&, const Surd3&) = default;

    Extended to_extended() const
    {
        return static_cast<Extended>(a) + static_cast<Extended>(b) * boost::multiprecision::sqrt(Extended(3));
    }
    double to_double() const { return static_cast<double>(to_extended()); }
};

// Coefficients exactly as printed for the first family. F is a field holding
// the parameters and sin/cos of theta; no cancellation is performed, so the
// arguments must avoid the 0/0 points other than mu == nu.
template <class F>
F printed_b_f1(const F& mu, const F& nu, const F& alpha, const F& sin_t, const F& cos_t, int n)
{
    const F shift = (mu + nu + F(1)) / F(2);
    const F q = (F(n) + shift) * (F(n) + shift) + alpha;
    const F s = F(2 * n) + mu + nu;
    const F ratio = mu == nu ? F(0) : (mu * mu - nu * nu) / (s * (s + F(2)));
    return (cos_t + ratio) / (sin_t * q);
}

template <class F>
F printed_a_sq_f1(const F& mu, const F& nu, const F& alpha, const F& sin_t, int n)
{
    const F up = (mu + nu + F(1)) / F(2), down = (mu + nu - F(1)) / F(2);
    const F q_up = (F(n) + up) * (F(n) + up) + alpha;
    const F q_down = (F(n) + down) * (F(n) + down) + alpha;
    const F s = F(2 * n) + mu + nu;
    const F num = F(4 * n) * (F(n) + mu) * (F(n) + nu) * (F(n) + mu + nu);
    return num / (sin_t * sin_t * q_up * q_down * (s + F(1)) * s * s * (s - F(1)));
}

template <class F>
F printed_k_ratio_f1(const F& mu, const F& nu, const F& alpha, const F& sin_t, int n)
{
    const F shift = (mu + nu + F(1)) / F(2);
    const F q = (F(n) + shift) * (F(n) + shift) + alpha;
    const F s = F(2 * n) + mu + nu;
    return -(sin_t * q * (s + F(1)) * (s + F(2))) / (F(2 * (n + 1)) * (F(n + 1) + mu + nu));
}

template <class F>
F printed_b_f2(const F& mu, const F& nu, const F& sigma, int n)
{
    const F B = F(n + 1) + (mu + nu) / F(2);
    const F s = F(2 * n) + mu + nu;
    const F ratio = mu == nu ? F(0) : (mu * mu - nu * nu) / (s * (s + F(2)));
    const F drift = n == 0 ? F(0) : F(2 * n) * (F(n) + nu) / s;
    return (sigma + B * B) * (ratio + F(1)) - drift - (mu + F(1)) * (mu + F(1)) / F(2);
}

template <class F>
F printed_a_sq_f2(const F& mu, const F& nu, const F& sigma, int n)
{
    const F Bm = F(n) + (mu + nu) / F(2);
    const F s = F(2 * n) + mu + nu;
    const F num = F(4 * n) * (F(n) + mu) * (F(n) + nu) * (F(n) + mu + nu);
    return (sigma + Bm * Bm) * (sigma + Bm * Bm) * num / ((s - F(1)) * s * s * (s + F(1)));
}

// H_1 from the first-family recurrence at n = 0 with H_{-1} = 0.
template <class F>
F printed_H1(const F& mu, const F& nu, const F& alpha, const F& sin_t, const F& cos_t, const F& z)
{
    const F shift = (mu + nu + F(1)) / F(2);
    const F s = mu + nu;
    const F middle = mu == nu ? F(0) : (nu * nu - mu * mu) / (s * (s + F(2)));
    const F lead = F(2) * (mu + nu + F(1)) / ((s + F(1)) * (s + F(2)));
    return (cos_t - z * sin_t * (shift * shift + alpha) - middle) / lead;
}

// G_1 from the second-family recurrence at n = 0 with G_{-1} = 0.
template <class F>
F printed_G1(const F& mu, const F& nu, const F& sigma, const F& z)
{
    const F B0 = F(1) + (mu + nu) / F(2);
    const F s = mu + nu;
    const F lead = (sigma + B0 * B0) * F(2) * (mu + nu + F(1)) / ((s + F(1)) * (s + F(2)));
    return (printed_b_f2(mu, nu, sigma, 0) - z) / lead;
}

/// Zeros of P_n by bisection on the Sturm count of the monic recurrence
/// (long double), ascending.
std::vector<double> bisection_zeros(const orthofam::MonicCoeffs& coeffs, int n);

/// Nodes and weights of the two-point rule from the quadratic formula.
struct TwoPointRule {
    double x0, x1, w0, w1;
};
TwoPointRule two_point_rule(double b0, double b1, double a1_sq);

/// Power-basis coefficients of P_n (index = degree) from exact b, a_sq.
std::vector<Exact> monic_expansion(const std::vector<Exact>& b, const std::vector<Exact>& a_sq, int n);

/// -sum_{k<n} b_k
Exact direct_c1(const std::vector<Exact>& b, int n);
/// sum_{1<=k<n} sum_{j<k} b_k b_j - sum_{1<=k<n} a_k^2
Exact direct_c2(const std::vector<Exact>& b, const std::vector<Exact>& a_sq, int n);

} // namespace oracle
