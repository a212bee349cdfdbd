#pragma once

#include <complex>
#include <cstdint>

namespace su11::detail {

// Binary exponentiation; negative exponents invert the base first.
inline std::complex<double> ipow(std::complex<double> base, std::int64_t exponent) {
    if (exponent < 0) {
        base = 1.0 / base;
        exponent = -exponent;
    }
    std::complex<double> result(1.0, 0.0);
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

}  // namespace su11::detail
