#include "orthofam/kernels.hpp"

#include "lane.hpp"

#include <cmath>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define ORTHOFAM_HAVE_AVX2_KERNELS 1
#endif

namespace orthofam::kernels::avx2 {

#if ORTHOFAM_HAVE_AVX2_KERNELS

void monic_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z,
                 std::span<double> out)
{
    detail::check_monic(b, a_sq, z, out);
    const std::size_t n = z.size();
    const std::size_t steps = b.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d zv = _mm256_loadu_pd(z.data() + i);
        __m256d prev = _mm256_setzero_pd();
        __m256d cur = _mm256_set1_pd(1.0);
        for (std::size_t k = 0; k < steps; ++k) {
            const __m256d t = _mm256_sub_pd(zv, _mm256_set1_pd(b[k]));
            const __m256d next = _mm256_sub_pd(_mm256_mul_pd(t, cur), _mm256_mul_pd(_mm256_set1_pd(a_sq[k]), prev));
            prev = cur;
            cur = next;
        }
        _mm256_storeu_pd(out.data() + i, cur);
    }
    for (; i < n; ++i)
        out[i] = detail::monic_lane(b, a_sq, z[i]);
}

void reversed_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z_re,
                    std::span<const double> z_im, std::span<double> out_re, std::span<double> out_im,
                    std::span<double> max_modulus)
{
    detail::check_reversed(b, a_sq, z_re, z_im, out_re, out_im, max_modulus);
    const std::size_t n = z_re.size();
    const std::size_t steps = b.size();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d wr = _mm256_loadu_pd(z_re.data() + i);
        const __m256d wi = _mm256_loadu_pd(z_im.data() + i);
        const __m256d z2r = _mm256_sub_pd(_mm256_mul_pd(wr, wr), _mm256_mul_pd(wi, wi));
        const __m256d z2i = _mm256_add_pd(_mm256_mul_pd(wr, wi), _mm256_mul_pd(wi, wr));
        __m256d pr = zero, pi = zero, qr = one, qi = zero;
        __m256d max_sq = one;
        for (std::size_t k = 0; k < steps; ++k) {
            const __m256d bk = _mm256_set1_pd(b[k]);
            const __m256d ak = _mm256_set1_pd(a_sq[k]);
            const __m256d tr = _mm256_sub_pd(one, _mm256_mul_pd(bk, wr));
            const __m256d ti = _mm256_sub_pd(zero, _mm256_mul_pd(bk, wi));
            const __m256d ur = _mm256_mul_pd(ak, z2r);
            const __m256d ui = _mm256_mul_pd(ak, z2i);
            const __m256d nr = _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(qr, tr), _mm256_mul_pd(qi, ti)),
                                             _mm256_sub_pd(_mm256_mul_pd(ur, pr), _mm256_mul_pd(ui, pi)));
            const __m256d ni = _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(qr, ti), _mm256_mul_pd(qi, tr)),
                                             _mm256_add_pd(_mm256_mul_pd(ur, pi), _mm256_mul_pd(ui, pr)));
            pr = qr;
            pi = qi;
            qr = nr;
            qi = ni;
            const __m256d m = _mm256_add_pd(_mm256_mul_pd(qr, qr), _mm256_mul_pd(qi, qi));
            max_sq = _mm256_max_pd(m, max_sq);
        }
        _mm256_storeu_pd(out_re.data() + i, qr);
        _mm256_storeu_pd(out_im.data() + i, qi);
        if (!max_modulus.empty())
            _mm256_storeu_pd(max_modulus.data() + i, _mm256_sqrt_pd(max_sq));
    }
    for (; i < n; ++i) {
        const auto r = detail::reversed_lane(b, a_sq, z_re[i], z_im[i]);
        out_re[i] = r.re;
        out_im[i] = r.im;
        if (!max_modulus.empty())
            max_modulus[i] = std::sqrt(r.max_sq);
    }
}

#else

void monic_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z,
                 std::span<double> out)
{
    scalar::monic_batch(b, a_sq, z, out);
}

void reversed_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z_re,
                    std::span<const double> z_im, std::span<double> out_re, std::span<double> out_im,
                    std::span<double> max_modulus)
{
    scalar::reversed_batch(b, a_sq, z_re, z_im, out_re, out_im, max_modulus);
}

#endif

} // namespace orthofam::kernels::avx2
