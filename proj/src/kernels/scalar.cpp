#include "orthofam/kernels.hpp"

#include "lane.hpp"

#include <cmath>
#include <stdexcept>

namespace orthofam::kernels::scalar {

void monic_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z,
                 std::span<double> out)
{
    detail::check_monic(b, a_sq, z, out);
    for (std::size_t i = 0; i < z.size(); ++i)
        out[i] = detail::monic_lane(b, a_sq, z[i]);
}

void reversed_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z_re,
                    std::span<const double> z_im, std::span<double> out_re, std::span<double> out_im,
                    std::span<double> max_modulus)
{
    detail::check_reversed(b, a_sq, z_re, z_im, out_re, out_im, max_modulus);
    for (std::size_t i = 0; i < z_re.size(); ++i) {
        const auto r = detail::reversed_lane(b, a_sq, z_re[i], z_im[i]);
        out_re[i] = r.re;
        out_im[i] = r.im;
        if (!max_modulus.empty())
            max_modulus[i] = std::sqrt(r.max_sq);
    }
}

} // namespace orthofam::kernels::scalar
