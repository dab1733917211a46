#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsw/quaternion.hpp"

namespace qsw {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Uniform 1-D sample grid: points start + n*step, n = 0..count-1.
struct Axis {
    std::size_t count = 0;
    double start = 0.0;
    double step = 0.0;

    double point(std::size_t n) const { return start + static_cast<double>(n) * step; }
    double extent() const { return static_cast<double>(count) * step; }

    /// Quadrature-dual grid: step 2*pi/(count*step), symmetric about 0.
    Axis dual() const;

    bool operator==(const Axis&) const = default;
};

Axis make_axis(std::size_t count, double start, double step);

/// Default desk-scale axis: N samples over [-L, L).
Axis desk_axis(std::size_t n = 64, double half_extent = 8.0);

/// Closed-form point evaluator attached to a sampled field. Supports the
/// compositions the operator tests need (translate/dilate/parity/modulate
/// and quaternion-weighted combinations) via closures.
using Evaluator = std::function<Quaternion(double, double)>;

/// Kahan-style compensated accumulator; summation order fixed by callers.
struct CompensatedSum {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            c += (sum - t) + x;
        else
            c += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + c; }
};

struct CompensatedQuaternion {
    CompensatedSum r, i, j, k;
    void add(const Quaternion& q) {
        r.add(q.r); i.add(q.i); j.add(q.j); k.add(q.k);
    }
    Quaternion value() const { return {r.value(), i.value(), j.value(), k.value()}; }
};

/// Uniformly sampled quaternion field on a 2-D grid, row-major (x index
/// slow, y index fast). Immutable by convention after construction.
struct QField {
    Axis ax;
    Axis ay;
    std::vector<Quaternion> samples;
    std::optional<Evaluator> evaluator;

    QField() = default;
    QField(Axis x, Axis y);

    std::size_t index(std::size_t m, std::size_t n) const { return m * ay.count + n; }
    const Quaternion& at(std::size_t m, std::size_t n) const { return samples[index(m, n)]; }
    Quaternion& at(std::size_t m, std::size_t n) { return samples[index(m, n)]; }

    bool congruent(const QField& o) const { return ax == o.ax && ay == o.ay; }

    /// Normalized cell weight dx*dy/(2*pi).
    double cell_weight() const { return ax.step * ay.step / kTwoPi; }
};

/// Riemann sum of f against the normalized measure dmu_2 = dx dy/(2 pi).
Quaternion integrate(const QField& f);

inline constexpr double kInfiniteP = -1.0;  // sentinel for the L-infinity norm

/// L^p norm under dmu_2; pass kInfiniteP (or use linf_norm) for p = infinity.
double lp_norm(const QField& f, double p);
double linf_norm(const QField& f);
inline double l2_norm(const QField& f) { return lp_norm(f, 2.0); }

/// Quaternion inner product int f conj(g) dmu_2 and its real scalar part.
Quaternion inner(const QField& f, const QField& g);
double scalar_inner(const QField& f, const QField& g);

/// Pointwise helpers (quaternion coefficients multiply from the left).
QField linear_combination(const Quaternion& alpha, const QField& f,
                          const Quaternion& beta, const QField& g);
QField scaled(const Quaternion& alpha, const QField& f);

/// Analytic field descriptors for sample_analytic.
struct GaussianDescriptor {
    double sigma1 = 1.0;
    double sigma2 = 1.0;
    double center1 = 0.0;
    double center2 = 0.0;
    double amplitude = 1.0;
};

struct ModulatedGaussianDescriptor {
    GaussianDescriptor envelope;
    double xi1 = 0.0;  // kernel exp_i(-x1*xi1) on the left
    double xi2 = 0.0;  // kernel exp_j(-x2*xi2) on the right
};

/// Per-axis difference of Gaussians defined spectrally as
/// what(u) = exp(-alpha u^2) - exp(beta-alpha) exp(-beta u^2); the spatial
/// form is the closed-form inverse transform, separable over the two axes.
struct DoGDescriptor {
    double alpha = 0.5;
    double beta = 2.0;
};

QField sample_analytic(const GaussianDescriptor& d, Axis ax, Axis ay);
QField sample_analytic(const ModulatedGaussianDescriptor& d, Axis ax, Axis ay);
QField sample_analytic(const DoGDescriptor& d, Axis ax, Axis ay);
QField sample_evaluator(const Evaluator& e, Axis ax, Axis ay);

/// Boolean mask over a 4-D (xi, b) coefficient volume with cached
/// normalized measure mu_{R^4} = true_cells * cellvol / (2 pi)^2.
struct RegionMask {
    std::array<std::size_t, 4> shape{};
    std::vector<std::uint8_t> flags;
    double cell_volume = 0.0;  // dxi1*dxi2*db1*db2 / (2 pi)^2

    std::size_t size() const { return flags.size(); }
    double measure() const;
    static RegionMask full(const std::array<std::size_t, 4>& shape, double cell_volume);
    static RegionMask empty(const std::array<std::size_t, 4>& shape, double cell_volume);
};

}  // namespace qsw
