#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qsw/qft.hpp"

namespace qsw {

/// Real even 1-D primitive with closed-form spatial and spectral values.
/// Convention: spectrum(w) = (1/sqrt(2 pi)) int p(t) e^{-i t w} dt, real.
struct GaussPrimitive {
    double sigma = 1.0;
    double spatial(double t) const;
    double spectrum(double w) const;
};

/// Per-axis difference of Gaussians with a spectral root at w = +-1:
/// spectrum(w) = exp(-alpha w^2) - exp(beta-alpha) exp(-beta w^2).
struct DoGPrimitive {
    double alpha = 0.5;
    double beta = 2.0;
    double spatial(double t) const;
    double spectrum(double w) const;
};

using Primitive1D = std::variant<GaussPrimitive, DoGPrimitive>;

double primitive_spatial(const Primitive1D& p, double t);
double primitive_spectrum(const Primitive1D& p, double w);

/// One separable term coeff * px(x1) * py(x2); coeff multiplies from the
/// left in phi, so conj(phi) carries conj(coeff) on the right.
struct WindowTerm {
    Quaternion coeff = Quaternion::one();
    Primitive1D px;
    Primitive1D py;
};

/// A window phi with its sampled field and cached analysis flags.
struct WindowSpec {
    std::vector<WindowTerm> terms;  // empty for from_field windows
    QField field;
    bool unit_integral = false;
    bool conv_hypothesis = false;
    HypothesisReport hypothesis;
    std::optional<double> c_phi;
    std::string kind;

    bool has_closed_form() const { return !terms.empty(); }

    /// phi(x1, x2).
    Quaternion value(double x1, double x2) const;
    /// F_Q(conj(phi))(w); for the even closed-form terms this also equals
    /// F_Q of the reflected conjugate used by the fast Stockwell path.
    Quaternion spectrum_conj(double w1, double w2) const;

    double l2_norm() const { return qsw::l2_norm(field); }
    Quaternion integral() const { return integrate(field); }
};

WindowSpec make_gaussian_unit_window(double sigma, Axis ax, Axis ay);
WindowSpec make_admissible_dog_window(double alpha, double beta, Axis ax, Axis ay);
WindowSpec make_window_from_field(QField f);

/// Quaternion-weighted combination alpha*phi + beta*psi of closed-form
/// windows (window anti-linearity tests).
WindowSpec combine_windows(const Quaternion& alpha, const WindowSpec& phi,
                           const Quaternion& beta, const WindowSpec& psi);

}  // namespace qsw
