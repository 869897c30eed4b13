#pragma once

#include <cstdint>
#include <string>

namespace qlp {

/// Exact complex integer. All correlation values in this library are
/// Gaussian integers; nothing is ever rounded.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussianInt() = default;
    constexpr GaussianInt(std::int64_t r, std::int64_t i) : re(r), im(i) {}

    constexpr GaussianInt conj() const { return {re, -im}; }

    constexpr bool operator==(const GaussianInt&) const = default;

    constexpr GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    constexpr GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    constexpr GaussianInt operator-() const { return {-re, -im}; }
    constexpr GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    constexpr GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    constexpr GaussianInt& operator-=(const GaussianInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
};

constexpr GaussianInt gi_one{1, 0};
constexpr GaussianInt gi_i{0, 1};

/// Compact rendering: "0", "-2", "i", "-1+2i", "1-i", ...
inline std::string to_string(const GaussianInt& z) {
    if (z.im == 0) return std::to_string(z.re);
    std::string s;
    if (z.re != 0) s += std::to_string(z.re);
    if (z.im >= 0 && z.re != 0) s += '+';
    if (z.im == -1)
        s += '-';
    else if (z.im != 1)
        s += std::to_string(z.im);
    s += 'i';
    return s;
}

}  // namespace qlp
