#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qsw::detail {

using cplx = std::complex<double>;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place radix-2 transform, kernel sum a_m e^{sign*2*pi*i*m*n/N}.
/// No normalization. N must be a power of two.
void fft_pow2(cplx* data, std::size_t n, int sign);

/// Strided transform over rows/columns of a row-major matrix.
void fft_rows(std::vector<cplx>& a, std::size_t n1, std::size_t n2, int sign);
void fft_cols(std::vector<cplx>& a, std::size_t n1, std::size_t n2, int sign);

}  // namespace qsw::detail
