#include "qsw/window.hpp"

#include <cmath>
#include <stdexcept>

namespace qsw {

double GaussPrimitive::spatial(double t) const {
    return std::exp(-t * t / (2.0 * sigma * sigma));
}

double GaussPrimitive::spectrum(double w) const {
    return sigma * std::exp(-0.5 * sigma * sigma * w * w);
}

double DoGPrimitive::spatial(double t) const {
    return std::exp(-t * t / (4.0 * alpha)) / std::sqrt(2.0 * alpha)
         - std::exp(beta - alpha) * std::exp(-t * t / (4.0 * beta)) / std::sqrt(2.0 * beta);
}

double DoGPrimitive::spectrum(double w) const {
    return std::exp(-alpha * w * w) - std::exp(beta - alpha) * std::exp(-beta * w * w);
}

double primitive_spatial(const Primitive1D& p, double t) {
    return std::visit([t](const auto& prim) { return prim.spatial(t); }, p);
}

double primitive_spectrum(const Primitive1D& p, double w) {
    return std::visit([w](const auto& prim) { return prim.spectrum(w); }, p);
}

Quaternion WindowSpec::value(double x1, double x2) const {
    Quaternion out{};
    for (const WindowTerm& t : terms)
        out += t.coeff * (primitive_spatial(t.px, x1) * primitive_spatial(t.py, x2));
    return out;
}

Quaternion WindowSpec::spectrum_conj(double w1, double w2) const {
    Quaternion out{};
    for (const WindowTerm& t : terms)
        out += conj(t.coeff) * (primitive_spectrum(t.px, w1) * primitive_spectrum(t.py, w2));
    return out;
}

namespace {

WindowSpec finish_window(WindowSpec w) {
    if (w.has_closed_form()) {
        std::vector<WindowTerm> terms = w.terms;
        w.field.evaluator = [terms](double x, double y) {
            Quaternion out{};
            for (const WindowTerm& t : terms)
                out += t.coeff * (primitive_spatial(t.px, x) * primitive_spatial(t.py, y));
            return out;
        };
    }
    Quaternion total = integrate(w.field);
    w.unit_integral = modulus(total - Quaternion::one()) <= 1e-6;
    w.hypothesis = check_convolution_hypothesis(w.field);
    w.conv_hypothesis = w.hypothesis.spectral();
    return w;
}

QField sample_terms(const std::vector<WindowTerm>& terms, Axis ax, Axis ay) {
    QField f(ax, ay);
    for (std::size_t m = 0; m < ax.count; ++m) {
        double x = ax.point(m);
        for (std::size_t n = 0; n < ay.count; ++n) {
            double y = ay.point(n);
            Quaternion v{};
            for (const WindowTerm& t : terms)
                v += t.coeff * (primitive_spatial(t.px, x) * primitive_spatial(t.py, y));
            f.at(m, n) = v;
        }
    }
    return f;
}

}  // namespace

WindowSpec make_gaussian_unit_window(double sigma, Axis ax, Axis ay) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_unit: sigma must be positive");
    WindowSpec w;
    w.kind = "gaussian_unit";
    GaussPrimitive g{sigma};
    w.terms = {WindowTerm{Quaternion::one() * (1.0 / (sigma * sigma)), g, g}};
    w.field = sample_terms(w.terms, ax, ay);
    return finish_window(std::move(w));
}

WindowSpec make_admissible_dog_window(double alpha, double beta, Axis ax, Axis ay) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("admissible_dog: widths must be positive");
    if (alpha == beta) throw std::invalid_argument("admissible_dog: alpha must differ from beta");
    WindowSpec w;
    w.kind = "admissible_dog";
    DoGPrimitive d{alpha, beta};
    w.terms = {WindowTerm{Quaternion::one(), d, d}};
    w.field = sample_terms(w.terms, ax, ay);
    return finish_window(std::move(w));
}

WindowSpec make_window_from_field(QField f) {
    WindowSpec w;
    w.kind = "from_field";
    w.field = std::move(f);
    return finish_window(std::move(w));
}

WindowSpec combine_windows(const Quaternion& alpha, const WindowSpec& phi,
                           const Quaternion& beta, const WindowSpec& psi) {
    if (!phi.has_closed_form() || !psi.has_closed_form())
        throw std::invalid_argument("combine_windows: closed-form windows required");
    if (!phi.field.congruent(psi.field))
        throw std::invalid_argument("combine_windows: grid mismatch");
    WindowSpec w;
    w.kind = "combination";
    for (const WindowTerm& t : phi.terms)
        w.terms.push_back(WindowTerm{alpha * t.coeff, t.px, t.py});
    for (const WindowTerm& t : psi.terms)
        w.terms.push_back(WindowTerm{beta * t.coeff, t.px, t.py});
    w.field = sample_terms(w.terms, phi.field.ax, phi.field.ay);
    return finish_window(std::move(w));
}

}  // namespace qsw
