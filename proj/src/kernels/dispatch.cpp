#include "orthofam/kernels.hpp"

namespace orthofam::kernels {
namespace {

Isa detect() noexcept
{
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2"))
        return Isa::Avx2;
#endif
    return Isa::Scalar;
}

} // namespace

Isa best_isa() noexcept
{
    static const Isa isa = detect();
    return isa;
}

bool isa_available(Isa isa) noexcept { return isa == Isa::Scalar || best_isa() == Isa::Avx2; }

const char* isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void monic_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z,
                 std::span<double> out, Isa isa)
{
    if (isa == Isa::Avx2 && isa_available(Isa::Avx2))
        avx2::monic_batch(b, a_sq, z, out);
    else
        scalar::monic_batch(b, a_sq, z, out);
}

void reversed_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z_re,
                    std::span<const double> z_im, std::span<double> out_re, std::span<double> out_im,
                    std::span<double> max_modulus, Isa isa)
{
    if (isa == Isa::Avx2 && isa_available(Isa::Avx2))
        avx2::reversed_batch(b, a_sq, z_re, z_im, out_re, out_im, max_modulus);
    else
        scalar::reversed_batch(b, a_sq, z_re, z_im, out_re, out_im, max_modulus);
}

} // namespace orthofam::kernels
