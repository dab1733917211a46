#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

namespace qsw {

/// One value of the quaternion algebra H, components (r, i, j, k).
///
/// Products follow Hamilton's rules ij = k, jk = i, ki = j, i^2 = -1.
/// The split form q = c1 + c2*j with c1, c2 complex over the unit i is
/// what the fast transform paths work with; see split()/from_split().
struct Quaternion {
    double r = 0.0;
    double i = 0.0;
    double j = 0.0;
    double k = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double r_, double i_, double j_, double k_)
        : r(r_), i(i_), j(j_), k(k_) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }

    constexpr Quaternion operator+(const Quaternion& o) const {
        return {r + o.r, i + o.i, j + o.j, k + o.k};
    }
    constexpr Quaternion operator-(const Quaternion& o) const {
        return {r - o.r, i - o.i, j - o.j, k - o.k};
    }
    constexpr Quaternion operator-() const { return {-r, -i, -j, -k}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        r += o.r; i += o.i; j += o.j; k += o.k;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        r -= o.r; i -= o.i; j -= o.j; k -= o.k;
        return *this;
    }

    constexpr Quaternion operator*(double s) const { return {r * s, i * s, j * s, k * s}; }
    constexpr Quaternion& operator*=(double s) {
        r *= s; i *= s; j *= s; k *= s;
        return *this;
    }

    friend constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }
};

/// Hamilton product. Non-commutative.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
    return {
        p.r * q.r - p.i * q.i - p.j * q.j - p.k * q.k,
        p.r * q.i + p.i * q.r + p.j * q.k - p.k * q.j,
        p.r * q.j - p.i * q.k + p.j * q.r + p.k * q.i,
        p.r * q.k + p.i * q.j - p.j * q.i + p.k * q.r,
    };
}

constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }

constexpr Quaternion conj(const Quaternion& q) { return {q.r, -q.i, -q.j, -q.k}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.r * q.r + q.i * q.i + q.j * q.j + q.k * q.k;
}

inline double modulus(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

constexpr double scalar_part(const Quaternion& q) { return q.r; }

/// exp(i*theta) = (cos, sin, 0, 0); unit modulus.
inline Quaternion exp_i(double theta) { return {std::cos(theta), std::sin(theta), 0.0, 0.0}; }

/// exp(j*theta) = (cos, 0, sin, 0); unit modulus.
inline Quaternion exp_j(double theta) { return {std::cos(theta), 0.0, std::sin(theta), 0.0}; }

/// Split q = c1 + c2*j, both complex over i: c1 = (r, i), c2 = (j, k).
struct Split {
    std::complex<double> c1;
    std::complex<double> c2;
};

constexpr Split split(const Quaternion& q) {
    return {{q.r, q.i}, {q.j, q.k}};
}

constexpr Quaternion from_split(const std::complex<double>& c1, const std::complex<double>& c2) {
    return {c1.real(), c1.imag(), c2.real(), c2.imag()};
}

constexpr Quaternion from_split(const Split& s) { return from_split(s.c1, s.c2); }

/// Split-form product: (a1,a2)(b1,b2) = (a1 b1 - a2 conj(b2), a1 b2 + a2 conj(b1)).
inline Split mul(const Split& p, const Split& q) {
    return {p.c1 * q.c1 - p.c2 * std::conj(q.c2), p.c1 * q.c2 + p.c2 * std::conj(q.c1)};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qsw
