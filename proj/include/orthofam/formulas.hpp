#pragma once

// Closed-form recurrence ingredients shared by both families and the Jacobi
// reference, templated on the scalar so that the same expressions serve
// binary64, Extended and Exact evaluation.

#include "orthofam/errors.hpp"
#include "orthofam/numeric.hpp"
#include "orthofam/params.hpp"

#include <cmath>

namespace orthofam::detail {

template <class T>
T to(double x)
{
    return T(x);
}

/// Jacobi-type rational factors in (mu, nu) with s = mu + nu.
///
/// The raw forms are 0/0 at a few (n, s) combinations allowed by mu, nu > -1;
/// there the common factor is cancelled analytically:
///   next(0) = 2/(s+2)          since (n+s+1) == (2n+s+1) at n = 0,
///   diag(0) = (nu-mu)/(s+2)    since nu^2-mu^2 == (nu-mu) s,
///   norm(1) = 4(1+mu)(1+nu)/((s+2)^2 (s+3))  since (n+s) == (2n+s-1) at n = 1.
template <class T>
struct JacobiTerms {
    T mu, nu, s;

    JacobiTerms(const T& mu_, const T& nu_) : mu(mu_), nu(nu_), s(mu_ + nu_) {}

    /// 2(n+1)(n+s+1) / ((2n+s+1)(2n+s+2)), the weight of the degree n+1 term.
    T next(int n) const
    {
        if (n == 0)
            return T(2) / (s + 2);
        const T m(n);
        return T(2) * (m + 1) * (m + s + 1) / ((2 * m + s + 1) * (2 * m + s + 2));
    }

    /// 2(n+mu)(n+nu) / ((2n+s)(2n+s+1)), n >= 1.
    T prev(int n) const
    {
        const T m(n);
        return T(2) * (m + mu) * (m + nu) / ((2 * m + s) * (2 * m + s + 1));
    }

    /// (nu^2 - mu^2) / ((2n+s)(2n+s+2)).
    T diag(int n) const
    {
        if (n == 0)
            return (nu - mu) / (s + 2);
        const T m(n);
        return (nu * nu - mu * mu) / ((2 * m + s) * (2 * m + s + 2));
    }

    /// 4n(n+mu)(n+nu)(n+s) / ((2n+s-1)(2n+s)^2(2n+s+1)) = prev(n) * next(n-1), n >= 1.
    T norm(int n) const
    {
        if (n == 1)
            return T(4) * (1 + mu) * (1 + nu) / ((s + 2) * (s + 2) * (s + 3));
        const T m(n);
        const T c = 2 * m + s;
        return T(4) * m * (m + mu) * (m + nu) * (m + s) / ((c - 1) * c * c * (c + 1));
    }
};

template <class T>
struct Trig {
    T sin, cos;
};

template <class T>
Trig<T> trig(const Family1Params& p)
{
    if (p.right_angle())
        return {T(1), T(0)};
    if constexpr (is_exact_v<T>) {
        throw PreconditionError("exact arithmetic for family 1 requires theta = pi/2");
    } else if constexpr (std::is_same_v<T, double>) {
        return {p.sin_theta(), p.cos_theta()};
    } else {
        const T th(p.theta());
        return {sin(th), cos(th)};
    }
}

/// Family 1 ingredients: diag/next/prev plus the quadratic factor E_n.
template <class T>
struct Family1Terms {
    JacobiTerms<T> jac;
    T alpha, shift;
    Trig<T> tr;

    explicit Family1Terms(const Family1Params& p)
        : jac(T(p.mu()), T(p.nu())), alpha(p.alpha()), shift((jac.s + 1) / 2), tr(trig<T>(p))
    {
    }

    /// (n + (mu+nu+1)/2)^2 + alpha.
    T quad(int n) const
    {
        const T m = T(n) + shift;
        return m * m + alpha;
    }

    T b(int n) const { return (tr.cos - jac.diag(n)) / (tr.sin * quad(n)); }

    T a_sq(int n) const { return jac.norm(n) / (tr.sin * tr.sin * quad(n) * quad(n - 1)); }

    /// k_{n+1} / k_n.
    T k_ratio(int n) const { return -tr.sin * quad(n) / jac.next(n); }
};

/// Family 2 ingredients; S_n = sigma + B_n^2.
template <class T>
struct Family2Terms {
    JacobiTerms<T> jac;
    T sigma;

    explicit Family2Terms(const Family2Params& p) : jac(T(p.mu()), T(p.nu())), sigma(p.sigma()) {}

    T B(int n) const { return T(n + 1) + jac.s / 2; }

    T S(int n) const
    {
        const T b = B(n);
        return sigma + b * b;
    }

    /// 2n(n+nu)/(2n+mu+nu); zero at n = 0 where the raw form may read 0/0.
    T drift(int n) const
    {
        if (n == 0)
            return T(0);
        const T m(n);
        return 2 * m * (m + jac.nu) / (2 * m + jac.s);
    }

    T b(int n) const
    {
        const T mu1 = jac.mu + 1;
        return S(n) * (1 - jac.diag(n)) - drift(n) - mu1 * mu1 / 2;
    }

    T a_sq(int n) const
    {
        const T sp = S(n - 1);
        return sp * sp * jac.norm(n);
    }

    /// k_{n+1} / k_n (the reciprocal of the printed k_n / k_{n+1}).
    T k_ratio(int n) const { return T(-1) / (S(n) * jac.next(n)); }
};

/// Monic Jacobi polynomials for (1-x)^alpha (1+x)^beta.
template <class T>
struct JacobiRefTerms {
    JacobiTerms<T> jac;

    explicit JacobiRefTerms(const JacobiParams& p) : jac(T(p.alpha()), T(p.beta())) {}

    T b(int n) const { return jac.diag(n); }
    T a_sq(int n) const { return jac.norm(n); }
};

} // namespace orthofam::detail
