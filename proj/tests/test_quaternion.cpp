#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstring>

#include "qsw/quaternion.hpp"

using namespace qsw;

namespace {

// Independent product oracle: expand over the basis table instead of the
// component formulas used by mul().
Quaternion mul_oracle(const Quaternion& p, const Quaternion& q) {
    // basis[a][b] = (sign, unit) for e_a * e_b with units (1, i, j, k)
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1},
                                   {+1, -1, +1, -1},
                                   {+1, -1, -1, +1},
                                   {+1, +1, -1, -1}};
    const double pc[4] = {p.r, p.i, p.j, p.k};
    const double qc[4] = {q.r, q.i, q.j, q.k};
    double out[4] = {0, 0, 0, 0};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            out[unit[a][b]] += sign[a][b] * pc[a] * qc[b];
    return {out[0], out[1], out[2], out[3]};
}

double rnd(std::uint64_t& s) {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return static_cast<double>((s * 0x2545F4914F6CDD1Dull) >> 11) * 0x1.0p-52 - 1.0;
}

}  // namespace

TEST_CASE("hamilton rules") {
    Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(modulus(mul(i, j) - k) == 0.0);
    CHECK(modulus(mul(j, i) + k) == 0.0);
    CHECK(modulus(mul(j, k) - i) == 0.0);
    CHECK(modulus(mul(k, i) - j) == 0.0);
    CHECK(modulus(mul(i, i) + Quaternion::one()) == 0.0);
    CHECK(modulus(mul(j, j) + Quaternion::one()) == 0.0);
    CHECK(modulus(mul(k, k) + Quaternion::one()) == 0.0);

    Quaternion q{0.3, -1.5, 2.0, 0.7};
    CHECK(modulus(mul(q, Quaternion::one()) - q) == 0.0);
    CHECK(modulus(mul(Quaternion::one(), q) - q) == 0.0);
}

TEST_CASE("product modulus on the worked pair") {
    Quaternion p{1, 2, 3, 4}, q{4, 3, 2, 1};
    Quaternion expect = mul_oracle(p, q);
    CHECK(modulus(mul(p, q) - expect) == 0.0);
    CHECK(modulus(mul(p, q)) == doctest::Approx(30.0).epsilon(1e-14));
    CHECK(modulus(p) * modulus(q) == doctest::Approx(30.0).epsilon(1e-14));
}

TEST_CASE("conjugation, modulus, scalar part") {
    Quaternion q{1, 2, 3, 4};
    Quaternion c = conj(q);
    CHECK(c.r == 1.0);
    CHECK(c.i == -2.0);
    CHECK(c.j == -3.0);
    CHECK(c.k == -4.0);
    CHECK(modulus(Quaternion{}) == 0.0);
    CHECK(scalar_part(mul(q, conj(q))) == doctest::Approx(30.0).epsilon(1e-15));
    Quaternion qc = mul(q, conj(q));
    CHECK(std::abs(qc.i) <= 1e-14);
    CHECK(std::abs(qc.j) <= 1e-14);
    CHECK(std::abs(qc.k) <= 1e-14);
}

TEST_CASE("split decomposition") {
    Quaternion q{1, 2, 3, 4};
    Split s = split(q);
    CHECK(s.c1 == std::complex<double>(1, 2));
    CHECK(s.c2 == std::complex<double>(3, 4));
    Quaternion back = from_split(s);
    CHECK(std::memcmp(&back, &q, sizeof q) == 0);

    // j*z = conj(z)*j for z complex in i
    std::uint64_t seed = 5;
    for (int t = 0; t < 16; ++t) {
        double a = rnd(seed), b = rnd(seed);
        Quaternion z{a, b, 0, 0};
        Quaternion prod = mul(Quaternion{0, 0, 1, 0}, z);
        Split sp = split(prod);
        CHECK(sp.c1 == std::complex<double>(0, 0));
        CHECK(sp.c2 == std::complex<double>(a, -b));
    }
}

TEST_CASE("unit exponentials") {
    CHECK(modulus(exp_i(0.0) - Quaternion::one()) == 0.0);
    CHECK(modulus(exp_j(1.5707963267948966) - Quaternion{0, 0, 1, 0}) <= 1e-15);
    std::uint64_t seed = 17;
    for (int t = 0; t < 64; ++t) {
        double a = 3.0 * rnd(seed), b = 3.0 * rnd(seed);
        CHECK(modulus(mul(exp_i(a), exp_i(b)) - exp_i(a + b)) <= 1e-14);
        CHECK(std::abs(modulus(exp_i(a)) - 1.0) <= 1e-15);
        CHECK(std::abs(modulus(exp_j(b)) - 1.0) <= 1e-15);
    }
}

TEST_CASE("multiplicative modulus and anti-involution over random pairs") {
    std::uint64_t seed = 99;
    for (int t = 0; t < 10000; ++t) {
        Quaternion p{rnd(seed), rnd(seed), rnd(seed), rnd(seed)};
        Quaternion q{rnd(seed), rnd(seed), rnd(seed), rnd(seed)};
        double lhs = modulus(mul(p, q));
        double rhs = modulus(p) * modulus(q);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
        CHECK(modulus(conj(mul(p, q)) - mul(conj(q), conj(p))) <= 1e-13);
        CHECK(modulus(conj(conj(p)) - p) == 0.0);
        CHECK(modulus(mul(p, q) - mul_oracle(p, q)) <= 1e-13);
    }
}

TEST_CASE("exp_j commutes only with the 1-j subalgebra") {
    Quaternion ej = exp_j(0.7);
    Quaternion z_bad{0.5, 1.0, 0.25, 0.0};  // nonzero i part
    CHECK(modulus(mul(ej, z_bad) - mul(z_bad, ej)) > 1e-3);
    Quaternion z_good{0.5, 0.0, 0.25, 0.0};  // zero i,k parts
    CHECK(modulus(mul(ej, z_good) - mul(z_good, ej)) == 0.0);
}
