#pragma once

#include "qsw/grid.hpp"

namespace qsw {

/// Frequency-domain field; axes are the quadrature-dual grids of the
/// source unless produced by the direct path at explicit frequencies.
struct SpectralField : QField {
    SpectralField() = default;
    explicit SpectralField(QField f) : QField(std::move(f)) {}
    SpectralField(Axis u, Axis v) : QField(u, v) {}
};

/// Two-sided transform by the defining quadruple sum at arbitrary
/// frequency axes. Oracle for every fast path.
SpectralField qft_direct(const QField& f, Axis au, Axis av);

/// Single spectral point of the defining sum.
Quaternion qft_direct_point(const QField& f, double u, double v);

/// Split-algebra fast path on the quadrature-dual grid. Identical
/// contract to qft_direct on those axes.
SpectralField qft_fast(const QField& f);

/// Inverse transform (kernel signs +i, +j) by direct quadrature.
QField iqft_direct(const SpectralField& F, Axis ax, Axis ay);

/// Fast inverse; (ax, ay) must be quadrature-dual to F's axes.
QField iqft_fast(const SpectralField& F, Axis ax, Axis ay);

/// (M_xi f)(x) = exp_i(-x1 xi1) f(x) exp_j(-x2 xi2); exact pointwise.
QField modulate(const QField& f, double xi1, double xi2);

/// (T_{-b} f)(x) = f(x - b). Lattice b: circular shift under the periodic
/// convention. Off-lattice b requires an evaluator-carrying field.
QField translate(const QField& f, double b1, double b2);

/// (D_A f)(x) = |s1 s2|^{1/2} f(s1 x1, s2 x2); evaluator-carrying fields only.
QField dilate(const QField& f, double s1, double s2);

/// f_check(x) = f(-x); evaluator resample, else periodic index reversal.
QField parity(const QField& f);

/// f_lambda(x) = f(lambda x); evaluator-carrying fields only.
QField scaling_dilate(const QField& f, double lambda);

/// Periodic convolution (f*g)(x) = sum_t f(t) g(x-t) dt^2/(2 pi),
/// evaluated per split component by FFT; order f-then-g preserved.
QField convolve(const QField& f, const QField& g);

/// Both checks of the convolution-theorem hypothesis on g.
struct HypothesisReport {
    bool structural_form = false;    // zero i,k components (g = g1 + j g2)
    bool structural_even = false;    // g(-x1, x2) = g(x1, x2) on the lattice
    bool spectral_first = false;     // F_Q(g) commutes with exp_j(-v y)
    bool spectral_second = false;    // F_Q(j g) relation
    double max_commutator_first = 0.0;
    double max_commutator_second = 0.0;

    bool structural() const { return structural_form && structural_even; }
    bool spectral() const { return spectral_first && spectral_second; }
};

HypothesisReport check_convolution_hypothesis(const QField& g,
                                              double spectral_tol = 1e-9);

}  // namespace qsw
