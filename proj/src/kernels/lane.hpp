#pragma once

// Single-lane recurrence bodies. Shared by the scalar kernels and by the
// remainder loop of the vector kernels so both paths round identically.

#include <cstddef>
#include <span>
#include <stdexcept>

namespace orthofam::kernels::detail {

inline void check_monic(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z,
                        std::span<double> out)
{
    if (a_sq.size() != b.size())
        throw std::invalid_argument("monic_batch: b and a_sq differ in length");
    if (out.size() != z.size())
        throw std::invalid_argument("monic_batch: output length differs from argument count");
}

inline void check_reversed(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z_re,
                           std::span<const double> z_im, std::span<double> out_re, std::span<double> out_im,
                           std::span<double> max_modulus)
{
    if (a_sq.size() != b.size())
        throw std::invalid_argument("reversed_batch: b and a_sq differ in length");
    const std::size_t n = z_re.size();
    if (z_im.size() != n || out_re.size() != n || out_im.size() != n)
        throw std::invalid_argument("reversed_batch: lane arrays differ in length");
    if (!max_modulus.empty() && max_modulus.size() != n)
        throw std::invalid_argument("reversed_batch: max_modulus length differs from argument count");
}

inline double monic_lane(std::span<const double> b, std::span<const double> a_sq, double z)
{
    double prev = 0.0, cur = 1.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        const double t = z - b[k];
        const double next = t * cur - a_sq[k] * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

struct ReversedLane {
    double re, im, max_sq;
};

inline ReversedLane reversed_lane(std::span<const double> b, std::span<const double> a_sq, double wr, double wi)
{
    const double z2r = wr * wr - wi * wi;
    const double z2i = wr * wi + wi * wr;
    double pr = 0.0, pi = 0.0, qr = 1.0, qi = 0.0;
    double max_sq = 1.0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        const double tr = 1.0 - b[k] * wr;
        const double ti = 0.0 - b[k] * wi;
        const double ur = a_sq[k] * z2r;
        const double ui = a_sq[k] * z2i;
        const double nr = (qr * tr - qi * ti) - (ur * pr - ui * pi);
        const double ni = (qr * ti + qi * tr) - (ur * pi + ui * pr);
        pr = qr;
        pi = qi;
        qr = nr;
        qi = ni;
        const double m = qr * qr + qi * qi;
        max_sq = m > max_sq ? m : max_sq;
    }
    return {qr, qi, max_sq};
}

} // namespace orthofam::kernels::detail
