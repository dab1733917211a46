#include <doctest.h>

#include <cmath>

#include "qsw/qft.hpp"
#include "qsw/verify.hpp"
#include "qsw/window.hpp"

using namespace qsw;

namespace {

double max_abs_diff(const QField& a, const QField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        m = std::max(m, modulus(a.samples[i] - b.samples[i]));
    return m;
}

double max_abs(const QField& a) {
    double m = 0.0;
    for (const Quaternion& q : a.samples) m = std::max(m, modulus(q));
    return m;
}

}  // namespace

TEST_CASE("zero and impulse transforms") {
    Axis ax = desk_axis(16);
    QField zero(ax, ax);
    CHECK(max_abs(qft_fast(zero)) == 0.0);
    CHECK(max_abs(qft_direct(zero, ax.dual(), ax.dual())) == 0.0);

    QField imp(ax, ax);
    imp.at(8, 8) = Quaternion{kTwoPi / (ax.step * ax.step), 0, 0, 0};
    SpectralField F = qft_fast(imp);
    for (const Quaternion& q : F.samples)
        CHECK(modulus(q - Quaternion::one()) <= 1e-12);
}

TEST_CASE("fast path against the direct oracle") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        QField f = random_field(16, 8.0, 100 + s);
        SpectralField fast = qft_fast(f);
        SpectralField direct = qft_direct(f, f.ax.dual(), f.ay.dual());
        CHECK(max_abs_diff(fast, direct) / max_abs(direct) <= 1e-10);
    }
    // real even field: spectrum agrees with the direct path
    Axis ax = desk_axis(16);
    QField g = sample_analytic(GaussianDescriptor{1.5, 2.0, 0.0, 0.0, 1.0}, ax, ax);
    CHECK(max_abs_diff(qft_fast(g), qft_direct(g, ax.dual(), ax.dual())) <= 1e-12);
}

TEST_CASE("gaussian fixed point") {
    Axis ax = desk_axis();
    SpectralField F = qft_fast(sample_analytic(GaussianDescriptor{1, 1, 0, 0, 1}, ax, ax));
    double worst = 0.0;
    for (std::size_t p = 0; p < F.ax.count; ++p)
        for (std::size_t q = 0; q < F.ay.count; ++q) {
            double u = F.ax.point(p), v = F.ay.point(q);
            worst = std::max(worst, modulus(F.at(p, q) -
                                            Quaternion{std::exp(-0.5 * (u * u + v * v)), 0, 0, 0}));
        }
    CHECK(worst <= 1e-6);
}

TEST_CASE("round trips") {
    Axis ax = desk_axis();
    QField f = sample_analytic(GaussianDescriptor{1.0, 0.8, 0.5, -0.25, 1.0}, ax, ax);
    CHECK(max_abs_diff(iqft_fast(qft_fast(f), ax, ax), f) <= 1e-8);

    SpectralField zero(ax.dual(), ax.dual());
    CHECK(max_abs(iqft_fast(zero, ax, ax)) == 0.0);

    // iqft_fast against its own direct quadrature
    QField r = random_field(16, 8.0, 55);
    SpectralField R(r);
    // reinterpret the samples as a spectral field on the dual axes
    SpectralField Rf(r.ax.dual(), r.ay.dual());
    Rf.samples = r.samples;
    Axis sx = r.ax, sy = r.ay;
    CHECK(max_abs_diff(iqft_fast(Rf, sx, sy), iqft_direct(Rf, sx, sy)) /
              max_abs(iqft_direct(Rf, sx, sy)) <=
          1e-10);
}

TEST_CASE("plancherel and parseval") {
    Axis ax = desk_axis();
    QField f = sample_analytic(GaussianDescriptor{1, 1, 0, 0, 1}, ax, ax);
    ModulatedGaussianDescriptor md;
    md.envelope = GaussianDescriptor{1.2, 0.9, 0.3, -0.2, 0.7};
    md.xi1 = 0.9;
    md.xi2 = -0.6;
    QField g = sample_analytic(md, ax, ax);
    SpectralField F = qft_fast(f), G = qft_fast(g);
    CHECK(std::abs(l2_norm(F) - l2_norm(f)) / l2_norm(f) <= 1e-8);
    CHECK(std::abs(scalar_inner(f, g) - scalar_inner(F, G)) <= 1e-8);
}

TEST_CASE("modulation, translation, parity") {
    QField f = random_field(32, 8.0, 7);
    CHECK(max_abs_diff(modulate(f, 0.0, 0.0), f) == 0.0);

    CHECK_THROWS_AS(translate(f, 0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(dilate(f, 2.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(scaling_dilate(f, 0.0), std::invalid_argument);

    // translate by a full period is the identity (periodic convention)
    QField t = translate(f, 16.0, -16.0);
    CHECK(max_abs_diff(t, f) == 0.0);

    // parity twice is the identity on the lattice
    CHECK(max_abs_diff(parity(parity(f)), f) == 0.0);
}

TEST_CASE("operator identities on the lattice") {
    Axis ax = desk_axis();
    ModulatedGaussianDescriptor md;
    md.envelope = GaussianDescriptor{1.0, 1.1, 0.2, 0.1, 1.0};
    md.xi1 = 0.4;
    md.xi2 = -0.8;
    QField f = sample_analytic(md, ax, ax);
    SpectralField F = qft_fast(f);
    Axis du = ax.dual();

    double xi1 = 3.0 * du.step, xi2 = -2.0 * du.step;
    SpectralField Fm = qft_fast(modulate(f, xi1, xi2));
    QField shifted = translate(F, -xi1, -xi2);
    CHECK(max_abs_diff(Fm, shifted) / max_abs(F) <= 1e-10);

    double b1 = -4.0 * ax.step, b2 = 9.0 * ax.step;
    QField fs = f;
    fs.evaluator.reset();  // exercise the lattice (circular) path
    SpectralField Ft = qft_fast(translate(fs, b1, b2));
    CHECK(max_abs_diff(Ft, modulate(F, b1, b2)) / max_abs(F) <= 1e-10);

    QField g = sample_analytic(GaussianDescriptor{1, 1, 0, 0, 1}, ax, ax);
    SpectralField Fd = qft_fast(dilate(g, 2.0, 2.0));
    double worst = 0.0;
    for (std::size_t p = 0; p < Fd.ax.count; ++p)
        for (std::size_t q = 0; q < Fd.ay.count; ++q) {
            double u = Fd.ax.point(p) / 2.0, v = Fd.ay.point(q) / 2.0;
            worst = std::max(worst,
                             modulus(Fd.at(p, q) -
                                     Quaternion{0.5 * std::exp(-0.5 * (u * u + v * v)), 0, 0, 0}));
        }
    CHECK(worst <= 1e-8);
}

TEST_CASE("convolution identity element") {
    Axis ax = desk_axis(32);
    QField f = random_field(32, 8.0, 21);
    QField delta(ax, ax);
    delta.at(16, 16) = Quaternion{kTwoPi / (ax.step * ax.step), 0, 0, 0};
    CHECK(max_abs_diff(convolve(f, delta), f) / max_abs(f) <= 1e-10);
}

TEST_CASE("convolution theorem and energy identity") {
    Axis ax = desk_axis();
    ModulatedGaussianDescriptor md;
    md.envelope = GaussianDescriptor{1.0, 1.0, 0.4, -0.3, 1.0};
    md.xi1 = 0.7;
    md.xi2 = 0.9;
    QField f = sample_analytic(md, ax, ax);
    WindowSpec dog = make_admissible_dog_window(0.5, 2.0, ax, ax);
    REQUIRE(dog.conv_hypothesis);

    QField c = convolve(f, dog.field);
    SpectralField Fc = qft_fast(c);
    SpectralField F = qft_fast(f), G = qft_fast(dog.field);
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < Fc.samples.size(); ++i) {
        Quaternion want = mul(F.samples[i], G.samples[i]);
        worst = std::max(worst, modulus(Fc.samples[i] - want));
        scale = std::max(scale, modulus(want));
    }
    CHECK(worst / scale <= 1e-8);

    double lhs = l2_norm(c);
    CompensatedSum acc;
    for (std::size_t i = 0; i < F.samples.size(); ++i)
        acc.add(norm_sq(F.samples[i]) * norm_sq(G.samples[i]));
    double rhs = acc.value() * F.cell_weight();
    CHECK(std::abs(lhs * lhs - rhs) / rhs <= 1e-8);
}

TEST_CASE("convolution hypothesis check") {
    Axis ax = desk_axis();
    // real even gaussian passes both checks
    QField g = sample_analytic(GaussianDescriptor{1, 1, 0, 0, 1}, ax, ax);
    HypothesisReport ok = check_convolution_hypothesis(g);
    CHECK(ok.structural());
    CHECK(ok.spectral());

    // nonzero i component, no symmetry: structural check fails
    QField bad(ax, ax);
    for (std::size_t m = 0; m < ax.count; ++m)
        for (std::size_t n = 0; n < ax.count; ++n) {
            double x = ax.point(m), y = ax.point(n);
            double e = std::exp(-0.5 * ((x - 0.7) * (x - 0.7) + y * y));
            bad.at(m, n) = Quaternion{e, 0.5 * e, 0, 0};
        }
    HypothesisReport rb = check_convolution_hypothesis(bad);
    CHECK_FALSE(rb.structural());

    // j times an even real gaussian passes (derived via the spectral check)
    QField jg(ax, ax);
    for (std::size_t i = 0; i < g.samples.size(); ++i)
        jg.samples[i] = mul(Quaternion{0, 0, 1, 0}, g.samples[i]);
    HypothesisReport rj = check_convolution_hypothesis(jg);
    CHECK(rj.spectral());
}

TEST_CASE("hypothesis and convolution theorem for a quaternion-valued window") {
    // g = g1 + j g2 with both parts even in x1 only (shifted along y)
    Axis ax = desk_axis();
    QField g(ax, ax);
    for (std::size_t m = 0; m < ax.count; ++m) {
        double x = ax.point(m);
        for (std::size_t n = 0; n < ax.count; ++n) {
            double y = ax.point(n);
            double g1 = std::exp(-0.5 * (x * x + (y - 0.5) * (y - 0.5)));
            double g2 = 0.7 * std::exp(-0.5 * (x * x / 1.44 + (y + 0.3) * (y + 0.3)));
            g.at(m, n) = Quaternion{g1, 0.0, g2, 0.0};
        }
    }
    HypothesisReport rep = check_convolution_hypothesis(g);
    CHECK(rep.structural_form);
    CHECK(rep.structural_even);
    CHECK(rep.spectral());

    ModulatedGaussianDescriptor md;
    md.envelope = GaussianDescriptor{1.0, 0.9, -0.3, 0.2, 1.0};
    md.xi1 = 0.8;
    md.xi2 = -0.5;
    QField f = sample_analytic(md, ax, ax);

    QField c = convolve(f, g);
    SpectralField Fc = qft_fast(c);
    SpectralField F = qft_fast(f), G = qft_fast(g);
    double worst = 0.0, scale = 0.0;
    CompensatedSum acc;
    for (std::size_t i = 0; i < Fc.samples.size(); ++i) {
        Quaternion want = mul(F.samples[i], G.samples[i]);
        worst = std::max(worst, modulus(Fc.samples[i] - want));
        scale = std::max(scale, modulus(want));
        acc.add(norm_sq(F.samples[i]) * norm_sq(G.samples[i]));
    }
    CHECK(worst / scale <= 1e-8);
    double lhs = l2_norm(c);
    double rhs = acc.value() * F.cell_weight();
    CHECK(std::abs(lhs * lhs - rhs) / rhs <= 1e-8);

    // the order matters: swapping the product sides must break the match
    double worst_swapped = 0.0;
    for (std::size_t i = 0; i < Fc.samples.size(); ++i)
        worst_swapped = std::max(worst_swapped,
                                 modulus(Fc.samples[i] - mul(G.samples[i], F.samples[i])));
    CHECK(worst_swapped / scale > 1e-4);
}
