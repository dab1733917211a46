#include "qsw/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace qsw::detail {

void fft_pow2(cplx* a, std::size_t n, int sign) {
    if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");
    // bit reversal
    for (std::size_t i = 1, rev = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; rev & bit; bit >>= 1) rev ^= bit;
        rev ^= bit;
        if (i < rev) std::swap(a[i], a[rev]);
    }
    const double pi = 3.14159265358979323846264338327950288;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * pi / static_cast<double>(len);
        cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

void fft_rows(std::vector<cplx>& a, std::size_t n1, std::size_t n2, int sign) {
    for (std::size_t r = 0; r < n1; ++r) fft_pow2(a.data() + r * n2, n2, sign);
}

void fft_cols(std::vector<cplx>& a, std::size_t n1, std::size_t n2, int sign) {
    std::vector<cplx> col(n1);
    for (std::size_t c = 0; c < n2; ++c) {
        for (std::size_t r = 0; r < n1; ++r) col[r] = a[r * n2 + c];
        fft_pow2(col.data(), n1, sign);
        for (std::size_t r = 0; r < n1; ++r) a[r * n2 + c] = col[r];
    }
}

}  // namespace qsw::detail
