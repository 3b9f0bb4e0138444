#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace orthofam {

/// Arithmetic used by a single evaluation call.
enum class Precision {
    Float,    ///< binary64
    Extended, ///< 113-bit significand (quad)
};

/// Extended-precision real used by Precision::Extended.
using Extended = boost::multiprecision::cpp_bin_float_quad;

/// 150 significant decimal digits. Used where the conditioning of a check
/// exceeds what Extended resolves (quadrature at trace-class spectra).
using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<150>>;

/// Exact rationals; every binary64 parameter converts to one without rounding.
using Exact = boost::multiprecision::cpp_rational;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Exact>;

} // namespace orthofam
