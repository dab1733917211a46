#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qsw/window.hpp"

namespace qsw {

/// Diagonal dilation A_xi = diag(xi1, xi2), both entries nonzero.
struct DilationMatrix {
    double xi1 = 1.0;
    double xi2 = 1.0;

    double det() const { return xi1 * xi2; }
    DilationMatrix inverse() const { return {1.0 / xi1, 1.0 / xi2}; }
    std::array<double, 2> apply(double x1, double x2) const { return {xi1 * x1, xi2 * x2}; }
};

DilationMatrix make_dilation(double xi1, double xi2);

/// Tensor-product xi grid; every node strictly off the coordinate axes.
struct XiGrid {
    std::vector<double> xi1s;
    std::vector<double> xi2s;
    double step1 = 0.0;  // uniform spacing (coefficient-volume measure)
    double step2 = 0.0;
};

/// Symmetric half-step-offset grid: +-(h/2 + k h), h = 2*extent/count.
XiGrid half_offset_xi_grid(std::size_t count, double extent);

/// 4-D coefficient volume over (xi1, xi2, b1, b2).
struct StockwellField {
    XiGrid xi;
    Axis bx;
    Axis by;
    std::vector<Quaternion> coeffs;

    std::size_t n1() const { return xi.xi1s.size(); }
    std::size_t n2() const { return xi.xi2s.size(); }
    std::size_t index(std::size_t i1, std::size_t i2, std::size_t p, std::size_t q) const {
        return ((i1 * n2() + i2) * bx.count + p) * by.count + q;
    }
    const Quaternion& at(std::size_t i1, std::size_t i2, std::size_t p, std::size_t q) const {
        return coeffs[index(i1, i2, p, q)];
    }
    Quaternion& at(std::size_t i1, std::size_t i2, std::size_t p, std::size_t q) {
        return coeffs[index(i1, i2, p, q)];
    }
    std::array<std::size_t, 4> shape() const { return {n1(), n2(), bx.count, by.count}; }

    /// Normalized 4-D cell volume dxi1*dxi2*db1*db2/(2 pi)^2.
    double cell_volume() const {
        return xi.step1 * xi.step2 * bx.step * by.step / (kTwoPi * kTwoPi);
    }
};

/// Direct quadrature of the defining integral, order
/// exp_i * f * exp_j * conj(window); closed-form window required.
StockwellField forward(const QField& f, const WindowSpec& phi, const XiGrid& xi,
                       Axis bx, Axis by, std::size_t threads = 0);

/// Single coefficient by the same quadrature at arbitrary (xi, b).
Quaternion forward_at(const QField& f, const WindowSpec& phi,
                      double xi1, double xi2, double b1, double b2);

enum class SlicePadding {
    open,      ///< zero-padded linear convolution; matches forward exactly
    periodic,  ///< circular in b; window tails fold into the b-window
};

/// Per-slice fast path: S(xi,.) from F_Q(f)(.+xi) times the dilated window
/// spectrum. Requires the convolution hypothesis and a closed-form window.
StockwellField forward_fast(const QField& f, const WindowSpec& phi, const XiGrid& xi,
                            Axis bx, Axis by, SlicePadding padding = SlicePadding::open,
                            std::size_t threads = 0);

/// Aggregate values (A S)(xi) = |det A_xi|^{1/2} sum_b S(xi,b) dmu_2(b)
/// on the xi grid (row-major over (xi1, xi2)). Reproduces the spectrum of
/// the analyzed signal only when the upstream window has unit integral;
/// that is the caller's responsibility and not verifiable from S alone.
struct XiFunction {
    std::vector<double> xi1s;
    std::vector<double> xi2s;
    std::vector<Quaternion> values;

    const Quaternion& at(std::size_t i1, std::size_t i2) const {
        return values[i1 * xi2s.size() + i2];
    }
};

XiFunction aggregate(const StockwellField& S);

struct InversionDiagnostics {
    std::size_t matched_points = 0;
    std::size_t interpolated_points = 0;
    double offgrid_fraction = 0.0;
};

/// f = F_Q^{-1} A S; aggregate values carried onto the dual frequency grid
/// (separable cubic Lagrange where nodes are missing, identity elsewhere).
QField invert(const StockwellField& S, Axis ax, Axis ay,
              InversionDiagnostics* diag = nullptr);

/// L^p norm of the coefficient volume under the normalized 4-D measure.
double stockwell_lp_norm(const StockwellField& S, double p);
double stockwell_energy(const StockwellField& S);  // squared L^2 norm

/// Graded per-axis quadrature for the admissibility integrals: log-spaced
/// cells in (inner_eps, graded_cut), uniform in (graded_cut, outer_extent),
/// mirrored about zero; midpoint weights.
struct AdmissibilityQuadrature {
    double inner_eps = 1e-3;
    double graded_cut = 1.0;
    double outer_extent = 12.0;
    std::size_t log_points = 160;
    std::size_t uniform_points = 320;

    AdmissibilityQuadrature refined() const {
        return {inner_eps / 2.0, graded_cut, outer_extent, log_points * 2, uniform_points * 2};
    }
};

struct QuadratureNodes {
    std::vector<double> x;
    std::vector<double> w;
};

QuadratureNodes admissibility_nodes(const AdmissibilityQuadrature& q);

struct AdmissibilityReport {
    double c_phi = 0.0;
    Quaternion c_phi_psi{};
    double refinement_error = 0.0;  // |C(refined) - C| / |C|
    bool divergent = false;
    bool admissible = false;
    AdmissibilityQuadrature quadrature;
    std::vector<double> probe_values;  // successive refinements (divergence probe)
};

/// C_phi = int |F_Q(conj phi)(1-xi)|^2 dmu_2(xi)/|det A_xi| with the
/// two-resolution drift estimate and the 25%-growth divergence probe.
AdmissibilityReport admissibility_constant(const WindowSpec& phi,
                                           const AdmissibilityQuadrature& quad = {});

/// Quaternion-valued pair constant C_{phi,psi}.
AdmissibilityReport cross_admissibility(const WindowSpec& phi, const WindowSpec& psi,
                                        const AdmissibilityQuadrature& quad = {});

/// Inner xi-integral of the dilated window spectra at a fixed zeta;
/// by the resolution of the identity it is independent of zeta and equals
/// the pair constant C_{phi,psi}.
Quaternion resolution_identity_integral(const WindowSpec& phi, const WindowSpec& psi,
                                        double zeta1, double zeta2,
                                        const AdmissibilityQuadrature& quad = {});

}  // namespace qsw
