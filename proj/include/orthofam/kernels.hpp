#pragma once

// Batched three-term recurrence kernels. Each lane is an independent argument;
// the coefficient arrays are shared. The scalar kernels are the reference: the
// vector kernels perform the same operations in the same order (no FMA
// contraction) and must agree with them bit for bit.

#include <span>

namespace orthofam::kernels {

enum class Isa { Scalar, Avx2 };

/// Best instruction set supported by the running CPU; detected once.
Isa best_isa() noexcept;
bool isa_available(Isa isa) noexcept;
const char* isa_name(Isa isa) noexcept;

/// out[i] = P_n(z[i]) with n = b.size(), from
/// P_{k+1} = (z - b[k]) P_k - a_sq[k] P_{k-1}, P_0 = 1, P_{-1} = 0.
/// a_sq[0] is ignored.
void monic_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z,
                 std::span<double> out, Isa isa = best_isa());

/// Reversed polynomials Q_n(z) = z^n P_n(1/z) at complex arguments in split
/// form, from Q_{k+1} = (1 - b[k] z) Q_k - a_sq[k] z^2 Q_{k-1}, Q_0 = 1.
/// When max_modulus is non-empty it receives max_{0<=k<=n} |Q_k(z[i])|.
void reversed_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z_re,
                    std::span<const double> z_im, std::span<double> out_re, std::span<double> out_im,
                    std::span<double> max_modulus, Isa isa = best_isa());

namespace scalar {
void monic_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z,
                 std::span<double> out);
void reversed_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z_re,
                    std::span<const double> z_im, std::span<double> out_re, std::span<double> out_im,
                    std::span<double> max_modulus);
} // namespace scalar

namespace avx2 {
void monic_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z,
                 std::span<double> out);
void reversed_batch(std::span<const double> b, std::span<const double> a_sq, std::span<const double> z_re,
                    std::span<const double> z_im, std::span<double> out_re, std::span<double> out_im,
                    std::span<double> max_modulus);
} // namespace avx2

} // namespace orthofam::kernels
