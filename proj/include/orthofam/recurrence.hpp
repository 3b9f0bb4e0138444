#pragma once

#include "orthofam/errors.hpp"
#include "orthofam/formulas.hpp"
#include "orthofam/numeric.hpp"
#include "orthofam/params.hpp"

#include <complex>
#include <variant>

namespace orthofam {

enum class FamilyTag { H, G, Jacobi };

/// Recurrence coefficients (a_n^2, b_n) of a monic orthogonal polynomial
/// sequence,  z P_n = P_{n+1} + b_n P_n + a_n^2 P_{n-1}.  a_sq(0) is 0.
///
/// Coefficients come from closed forms and are evaluated on demand in any of
/// the supported scalar types. A relative perturbation of every a_n^2 can be
/// injected for sensitivity checks.
class MonicCoeffs {
public:
    using Source = std::variant<Family1Params, Family2Params, JacobiParams>;

    explicit MonicCoeffs(Source source, double a_sq_perturbation = 0.0)
        : source_(std::move(source)), perturbation_(a_sq_perturbation)
    {
    }

    FamilyTag family() const noexcept { return static_cast<FamilyTag>(source_.index()); }
    const Source& source() const noexcept { return source_; }
    double perturbation() const noexcept { return perturbation_; }

    /// Same coefficients with every a_n^2 scaled by (1 + rel).
    MonicCoeffs perturbed(double rel) const { return MonicCoeffs(source_, rel); }

    template <class T = double>
    T b(int n) const
    {
        return std::visit([n](const auto& p) { return terms<T>(p).b(n); }, source_);
    }

    template <class T = double>
    T a_sq(int n) const
    {
        if (n <= 0)
            return T(0);
        T v = std::visit([n](const auto& p) { return terms<T>(p).a_sq(n); }, source_);
        if (perturbation_ != 0.0)
            v *= T(1) + T(perturbation_);
        return v;
    }

    /// Precomputed b(0..n-1) and a_sq(0..n-1) in binary64.
    void fill(int n, std::vector<double>& b_out, std::vector<double>& a_sq_out) const;

private:
    template <class T>
    static auto terms(const Family1Params& p) { return detail::Family1Terms<T>(p); }
    template <class T>
    static auto terms(const Family2Params& p) { return detail::Family2Terms<T>(p); }
    template <class T>
    static auto terms(const JacobiParams& p) { return detail::JacobiRefTerms<T>(p); }

    Source source_;
    double perturbation_;
};

MonicCoeffs monic_coeffs_f1(const Family1Params& p);
MonicCoeffs monic_coeffs_f2(const Family2Params& p);

/// k_{n+1}/k_n relating the defining normalization to the monic one.
class LeadingRatio {
public:
    using Source = std::variant<Family1Params, Family2Params>;

    explicit LeadingRatio(Source source) : source_(std::move(source)) {}

    template <class T = double>
    T operator()(int n) const
    {
        return std::visit(
            [n](const auto& p) {
                if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Family1Params>)
                    return detail::Family1Terms<T>(p).k_ratio(n);
                else
                    return detail::Family2Terms<T>(p).k_ratio(n);
            },
            source_);
    }

    /// k_n = prod_{j<n} k_ratio(j), with k_0 = 1.
    template <class T = double>
    T leading(int n) const
    {
        T k(1);
        for (int j = 0; j < n; ++j)
            k *= (*this).template operator()<T>(j);
        return k;
    }

private:
    Source source_;
};

LeadingRatio leading_ratio_f1(const Family1Params& p);
LeadingRatio leading_ratio_f2(const Family2Params& p);

// ---------------------------------------------------------------------------
// Recurrence evaluation. The templates accept any scalar T for the
// coefficients and any Z (T or std::complex<T>) for the argument.

template <class T, class Z = T>
Z basic_eval_H(const Family1Params& p, int n, const Z& z)
{
    if (n < -1)
        throw PreconditionError("eval_H: degree must be >= -1");
    if (n == -1)
        return Z(0);
    const detail::Family1Terms<T> t(p);
    Z prev(0), cur(1);
    for (int k = 0; k < n; ++k) {
        const T next = t.jac.next(k);
        if (next == T(0))
            throw DegenerateRecurrence("eval_H: coefficient of H_{n+1} vanishes at n = " + std::to_string(k));
        Z nxt = (Z(t.tr.cos - t.jac.diag(k)) - z * Z(t.tr.sin * t.quad(k))) * cur;
        if (k > 0)
            nxt -= Z(t.jac.prev(k)) * prev;
        nxt /= Z(next);
        prev = cur;
        cur = nxt;
    }
    return cur;
}

template <class T, class Z = T>
Z basic_eval_G(const Family2Params& p, int n, const Z& z)
{
    if (n < -1)
        throw PreconditionError("eval_G: degree must be >= -1");
    if (n == -1)
        return Z(0);
    const detail::Family2Terms<T> t(p);
    Z prev(0), cur(1);
    for (int k = 0; k < n; ++k) {
        const T lead = t.S(k) * t.jac.next(k);
        if (lead == T(0))
            throw DegenerateRecurrence("eval_G: sigma + B_n^2 vanishes at n = " + std::to_string(k));
        Z nxt = (Z(t.b(k)) - z) * cur;
        if (k > 0)
            nxt -= Z(t.S(k - 1) * t.jac.prev(k)) * prev;
        nxt /= Z(lead);
        prev = cur;
        cur = nxt;
    }
    return cur;
}

template <class T, class Z = T>
Z basic_eval_monic(const MonicCoeffs& c, int n, const Z& z)
{
    if (n < 0)
        throw PreconditionError("eval_monic: degree must be >= 0");
    Z prev(0), cur(1);
    for (int k = 0; k < n; ++k) {
        Z nxt = (z - Z(c.b<T>(k))) * cur;
        if (k > 0)
            nxt -= Z(c.a_sq<T>(k)) * prev;
        prev = cur;
        cur = nxt;
    }
    return cur;
}

double eval_H(const Family1Params& p, int n, double z, Precision prec = Precision::Float);
double eval_G(const Family2Params& p, int n, double z, Precision prec = Precision::Float);
double eval_monic(const MonicCoeffs& c, int n, double z, Precision prec = Precision::Float);

// ---------------------------------------------------------------------------
// Coefficient tails for the first family (trace-class regime).

/// Upper bounds for sums over k >= from of |b_k|, a_k^2 and a_k.
///
/// Terms below a cutoff are summed directly; the remainder is bounded by
/// integral comparison with the C/m^2 and C/m^4 decay of the closed forms,
/// so each field is a certified upper bound (up to a 1e-12 relative margin
/// for rounding in the direct part).
struct CoefficientTails {
    int from = 0;
    double abs_b = 0.0;
    double a_sq = 0.0;
    double a = 0.0;
};

/// Throws PreconditionError unless the coefficients belong to family 1.
CoefficientTails coefficient_tails(const MonicCoeffs& c, int from);

} // namespace orthofam
