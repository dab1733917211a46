#include "qsw/grid.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qsw {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.r << ", " << q.i << ", " << q.j << ", " << q.k << ")";
}

Axis make_axis(std::size_t count, double start, double step) {
    if (count < 2) throw std::invalid_argument("Axis: count must be >= 2");
    if (!(step > 0.0)) throw std::invalid_argument("Axis: step must be > 0");
    return Axis{count, start, step};
}

Axis desk_axis(std::size_t n, double half_extent) {
    return make_axis(n, -half_extent, 2.0 * half_extent / static_cast<double>(n));
}

Axis Axis::dual() const {
    double dstep = kTwoPi / (static_cast<double>(count) * step);
    return Axis{count, -static_cast<double>(count / 2) * dstep, dstep};
}

QField::QField(Axis x, Axis y) : ax(x), ay(y), samples(x.count * y.count) {}

Quaternion integrate(const QField& f) {
    CompensatedQuaternion acc;
    for (const Quaternion& q : f.samples) acc.add(q);
    return acc.value() * f.cell_weight();
}

double lp_norm(const QField& f, double p) {
    if (p == kInfiniteP || std::isinf(p)) return linf_norm(f);
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
    CompensatedSum acc;
    if (p == 2.0) {
        for (const Quaternion& q : f.samples) acc.add(norm_sq(q));
    } else {
        for (const Quaternion& q : f.samples) acc.add(std::pow(norm_sq(q), 0.5 * p));
    }
    return std::pow(acc.value() * f.cell_weight(), 1.0 / p);
}

double linf_norm(const QField& f) {
    double m = 0.0;
    for (const Quaternion& q : f.samples) m = std::max(m, norm_sq(q));
    return std::sqrt(m);
}

Quaternion inner(const QField& f, const QField& g) {
    if (!f.congruent(g)) throw std::invalid_argument("inner: grid mismatch");
    CompensatedQuaternion acc;
    for (std::size_t n = 0; n < f.samples.size(); ++n)
        acc.add(mul(f.samples[n], conj(g.samples[n])));
    return acc.value() * f.cell_weight();
}

double scalar_inner(const QField& f, const QField& g) {
    if (!f.congruent(g)) throw std::invalid_argument("scalar_inner: grid mismatch");
    CompensatedSum acc;
    for (std::size_t n = 0; n < f.samples.size(); ++n) {
        const Quaternion& a = f.samples[n];
        const Quaternion& b = g.samples[n];
        acc.add(a.r * b.r + a.i * b.i + a.j * b.j + a.k * b.k);
    }
    return acc.value() * f.cell_weight();
}

QField linear_combination(const Quaternion& alpha, const QField& f,
                          const Quaternion& beta, const QField& g) {
    if (!f.congruent(g)) throw std::invalid_argument("linear_combination: grid mismatch");
    QField out(f.ax, f.ay);
    for (std::size_t n = 0; n < f.samples.size(); ++n)
        out.samples[n] = mul(alpha, f.samples[n]) + mul(beta, g.samples[n]);
    if (f.evaluator && g.evaluator) {
        Evaluator ef = *f.evaluator, eg = *g.evaluator;
        out.evaluator = [alpha, beta, ef, eg](double x, double y) {
            return mul(alpha, ef(x, y)) + mul(beta, eg(x, y));
        };
    }
    return out;
}

QField scaled(const Quaternion& alpha, const QField& f) {
    QField out(f.ax, f.ay);
    for (std::size_t n = 0; n < f.samples.size(); ++n)
        out.samples[n] = mul(alpha, f.samples[n]);
    if (f.evaluator) {
        Evaluator ef = *f.evaluator;
        out.evaluator = [alpha, ef](double x, double y) { return mul(alpha, ef(x, y)); };
    }
    return out;
}

QField sample_evaluator(const Evaluator& e, Axis ax, Axis ay) {
    QField out(ax, ay);
    for (std::size_t m = 0; m < ax.count; ++m) {
        double x = ax.point(m);
        for (std::size_t n = 0; n < ay.count; ++n)
            out.at(m, n) = e(x, ay.point(n));
    }
    out.evaluator = e;
    return out;
}

QField sample_analytic(const GaussianDescriptor& d, Axis ax, Axis ay) {
    if (!(d.sigma1 > 0.0) || !(d.sigma2 > 0.0))
        throw std::invalid_argument("gaussian: widths must be positive");
    Evaluator e = [d](double x, double y) -> Quaternion {
        double t1 = (x - d.center1) / d.sigma1;
        double t2 = (y - d.center2) / d.sigma2;
        return {d.amplitude * std::exp(-0.5 * (t1 * t1 + t2 * t2)), 0.0, 0.0, 0.0};
    };
    return sample_evaluator(e, ax, ay);
}

QField sample_analytic(const ModulatedGaussianDescriptor& d, Axis ax, Axis ay) {
    GaussianDescriptor g = d.envelope;
    if (!(g.sigma1 > 0.0) || !(g.sigma2 > 0.0))
        throw std::invalid_argument("modulated gaussian: widths must be positive");
    double xi1 = d.xi1, xi2 = d.xi2;
    Evaluator e = [g, xi1, xi2](double x, double y) -> Quaternion {
        double t1 = (x - g.center1) / g.sigma1;
        double t2 = (y - g.center2) / g.sigma2;
        double env = g.amplitude * std::exp(-0.5 * (t1 * t1 + t2 * t2));
        return mul(mul(exp_i(-x * xi1), Quaternion{env, 0, 0, 0}), exp_j(-y * xi2));
    };
    return sample_evaluator(e, ax, ay);
}

namespace {
double dog_axis_value(double t, double alpha, double beta) {
    return std::exp(-t * t / (4.0 * alpha)) / std::sqrt(2.0 * alpha)
         - std::exp(beta - alpha) * std::exp(-t * t / (4.0 * beta)) / std::sqrt(2.0 * beta);
}
}  // namespace

QField sample_analytic(const DoGDescriptor& d, Axis ax, Axis ay) {
    if (!(d.alpha > 0.0) || !(d.beta > 0.0) || d.alpha == d.beta)
        throw std::invalid_argument("difference-of-gaussians: need 0 < alpha != beta");
    double al = d.alpha, be = d.beta;
    Evaluator e = [al, be](double x, double y) -> Quaternion {
        return {dog_axis_value(x, al, be) * dog_axis_value(y, al, be), 0.0, 0.0, 0.0};
    };
    return sample_evaluator(e, ax, ay);
}

double RegionMask::measure() const {
    std::size_t n = 0;
    for (std::uint8_t b : flags) n += (b != 0);
    return static_cast<double>(n) * cell_volume;
}

RegionMask RegionMask::full(const std::array<std::size_t, 4>& shape, double cell_volume) {
    RegionMask m;
    m.shape = shape;
    m.cell_volume = cell_volume;
    m.flags.assign(shape[0] * shape[1] * shape[2] * shape[3], 1);
    return m;
}

RegionMask RegionMask::empty(const std::array<std::size_t, 4>& shape, double cell_volume) {
    RegionMask m = full(shape, cell_volume);
    m.flags.assign(m.flags.size(), 0);
    return m;
}

}  // namespace qsw
