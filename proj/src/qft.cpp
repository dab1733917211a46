#include "qsw/qft.hpp"

#include <cmath>
#include <stdexcept>

#include "qsw/fft.hpp"

namespace qsw {

using detail::cplx;

namespace {

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }

void require_dual_pair(const Axis& in, const Axis& out, const char* what) {
    if (in.count != out.count)
        throw std::invalid_argument(std::string(what) + ": axis counts differ");
    double target = kTwoPi / (static_cast<double>(in.count) * in.step);
    if (std::abs(out.step - target) > 1e-12 * target)
        throw std::invalid_argument(std::string(what) + ": axes are not quadrature-dual");
    double sym = 2.0 * out.start / out.step;
    if (std::abs(sym + static_cast<double>(out.count)) > 1e-9)
        throw std::invalid_argument(std::string(what) + ": output axis must be symmetric");
    if (!near_integer(in.start / in.step))
        throw std::invalid_argument(std::string(what) + ": input start off the lattice");
}

struct SplitArrays {
    std::vector<cplx> c1;
    std::vector<cplx> c2;
};

SplitArrays to_split(const QField& f) {
    SplitArrays s;
    s.c1.resize(f.samples.size());
    s.c2.resize(f.samples.size());
    for (std::size_t n = 0; n < f.samples.size(); ++n) {
        Split sp = split(f.samples[n]);
        s.c1[n] = sp.c1;
        s.c2[n] = sp.c2;
    }
    return s;
}

/// H(u,v) = sum alpha(x,y) e^{sign*i*(x u + y v)} dx dy/(2 pi) on (au, av).
std::vector<cplx> h2d(std::vector<cplx> a, const Axis& ax, const Axis& ay,
                      const Axis& au, const Axis& av, int sign) {
    const std::size_t n1 = ax.count, n2 = ay.count;
    for (std::size_t m = 0; m < n1; ++m) {
        double phx = sign * static_cast<double>(m) * ax.step * au.start;
        cplx px(std::cos(phx), std::sin(phx));
        for (std::size_t n = 0; n < n2; ++n) {
            double phy = sign * static_cast<double>(n) * ay.step * av.start;
            a[m * n2 + n] *= px * cplx(std::cos(phy), std::sin(phy));
        }
    }
    detail::fft_rows(a, n1, n2, sign);
    detail::fft_cols(a, n1, n2, sign);
    const double w = ax.step * ay.step / kTwoPi;
    for (std::size_t p = 0; p < n1; ++p) {
        double phx = sign * ax.start * au.point(p);
        cplx px(std::cos(phx), std::sin(phx));
        for (std::size_t q = 0; q < n2; ++q) {
            double phy = sign * ay.start * av.point(q);
            a[p * n2 + q] *= px * cplx(std::cos(phy), std::sin(phy)) * w;
        }
    }
    return a;
}

/// Two-sided kernel e^{sign*i x u} f e^{sign*j y v} via two complex
/// transforms and a v-axis reflection; see the split identities
/// part1 = (H(u,v)+H(u,-v))/2, part2 = -(i/2)(H(u,v)-H(u,-v)).
QField two_sided(const QField& f, const Axis& au, const Axis& av, int sign) {
    require_dual_pair(f.ax, au, "two_sided x-axis");
    require_dual_pair(f.ay, av, "two_sided y-axis");
    const std::size_t n1 = au.count, n2 = av.count;
    SplitArrays s = to_split(f);
    std::vector<cplx> h1 = h2d(std::move(s.c1), f.ax, f.ay, au, av, sign);
    std::vector<cplx> h2 = h2d(std::move(s.c2), f.ax, f.ay, au, av, sign);

    QField out(au, av);
    const cplx half(0.5, 0.0), mhalf_i(0.0, -0.5);
    for (std::size_t p = 0; p < n1; ++p) {
        for (std::size_t q = 0; q < n2; ++q) {
            std::size_t qr = (n2 - q) % n2;
            cplx a = h1[p * n2 + q], ar = h1[p * n2 + qr];
            cplx b = h2[p * n2 + q], br = h2[p * n2 + qr];
            cplx p1a = half * (a + ar), p2a = mhalf_i * (a - ar);
            cplx p1b = half * (b + br), p2b = mhalf_i * (b - br);
            out.at(p, q) = from_split(p1a - p2b, p2a + p1b);
        }
    }
    return out;
}

}  // namespace

Quaternion qft_direct_point(const QField& f, double u, double v) {
    CompensatedQuaternion acc;
    for (std::size_t m = 0; m < f.ax.count; ++m) {
        Quaternion ei = exp_i(-f.ax.point(m) * u);
        for (std::size_t n = 0; n < f.ay.count; ++n) {
            Quaternion ej = exp_j(-f.ay.point(n) * v);
            acc.add(mul(mul(ei, f.at(m, n)), ej));
        }
    }
    return acc.value() * f.cell_weight();
}

SpectralField qft_direct(const QField& f, Axis au, Axis av) {
    SpectralField F(au, av);
    for (std::size_t p = 0; p < au.count; ++p)
        for (std::size_t q = 0; q < av.count; ++q)
            F.at(p, q) = qft_direct_point(f, au.point(p), av.point(q));
    return F;
}

SpectralField qft_fast(const QField& f) {
    return SpectralField(two_sided(f, f.ax.dual(), f.ay.dual(), -1));
}

QField iqft_direct(const SpectralField& F, Axis ax, Axis ay) {
    QField f(ax, ay);
    const double w = F.cell_weight();
    for (std::size_t m = 0; m < ax.count; ++m) {
        double x = ax.point(m);
        for (std::size_t n = 0; n < ay.count; ++n) {
            double y = ay.point(n);
            CompensatedQuaternion acc;
            for (std::size_t p = 0; p < F.ax.count; ++p) {
                Quaternion ei = exp_i(x * F.ax.point(p));
                for (std::size_t q = 0; q < F.ay.count; ++q)
                    acc.add(mul(mul(ei, F.at(p, q)), exp_j(y * F.ay.point(q))));
            }
            f.at(m, n) = acc.value() * w;
        }
    }
    return f;
}

QField iqft_fast(const SpectralField& F, Axis ax, Axis ay) {
    return two_sided(F, ax, ay, +1);
}

QField modulate(const QField& f, double xi1, double xi2) {
    QField out(f.ax, f.ay);
    for (std::size_t m = 0; m < f.ax.count; ++m) {
        Quaternion ei = exp_i(-f.ax.point(m) * xi1);
        for (std::size_t n = 0; n < f.ay.count; ++n)
            out.at(m, n) = mul(mul(ei, f.at(m, n)), exp_j(-f.ay.point(n) * xi2));
    }
    if (f.evaluator) {
        Evaluator e = *f.evaluator;
        out.evaluator = [e, xi1, xi2](double x, double y) {
            return mul(mul(exp_i(-x * xi1), e(x, y)), exp_j(-y * xi2));
        };
    }
    return out;
}

QField translate(const QField& f, double b1, double b2) {
    if (f.evaluator) {
        Evaluator e = *f.evaluator;
        return sample_evaluator(
            [e, b1, b2](double x, double y) { return e(x - b1, y - b2); }, f.ax, f.ay);
    }
    double s1 = b1 / f.ax.step, s2 = b2 / f.ay.step;
    if (!near_integer(s1) || !near_integer(s2))
        throw std::invalid_argument("translate: off-lattice shift on an evaluator-free field");
    auto k1 = static_cast<long long>(std::llround(s1));
    auto k2 = static_cast<long long>(std::llround(s2));
    auto n1 = static_cast<long long>(f.ax.count), n2 = static_cast<long long>(f.ay.count);
    QField out(f.ax, f.ay);
    for (long long m = 0; m < n1; ++m) {
        long long ms = ((m - k1) % n1 + n1) % n1;
        for (long long n = 0; n < n2; ++n) {
            long long ns = ((n - k2) % n2 + n2) % n2;
            out.at(m, n) = f.at(ms, ns);
        }
    }
    return out;
}

QField dilate(const QField& f, double s1, double s2) {
    if (s1 == 0.0 || s2 == 0.0) throw std::invalid_argument("dilate: singular dilation");
    if (!f.evaluator)
        throw std::invalid_argument("dilate: requires an evaluator-carrying field");
    Evaluator e = *f.evaluator;
    double amp = std::sqrt(std::abs(s1 * s2));
    return sample_evaluator(
        [e, s1, s2, amp](double x, double y) { return e(s1 * x, s2 * y) * amp; },
        f.ax, f.ay);
}

QField parity(const QField& f) {
    if (f.evaluator) {
        Evaluator e = *f.evaluator;
        return sample_evaluator([e](double x, double y) { return e(-x, -y); }, f.ax, f.ay);
    }
    QField out(f.ax, f.ay);
    std::size_t n1 = f.ax.count, n2 = f.ay.count;
    for (std::size_t m = 0; m < n1; ++m)
        for (std::size_t n = 0; n < n2; ++n)
            out.at(m, n) = f.at((n1 - m) % n1, (n2 - n) % n2);
    return out;
}

QField scaling_dilate(const QField& f, double lambda) {
    if (lambda == 0.0) throw std::invalid_argument("scaling_dilate: lambda must be nonzero");
    if (!f.evaluator)
        throw std::invalid_argument("scaling_dilate: requires an evaluator-carrying field");
    Evaluator e = *f.evaluator;
    return sample_evaluator(
        [e, lambda](double x, double y) { return e(lambda * x, lambda * y); }, f.ax, f.ay);
}

namespace {

/// Circular complex convolution sum_t a(t) c(x-t) over the index lattice.
std::vector<cplx> circ_conv(const std::vector<cplx>& a, const std::vector<cplx>& c,
                            std::size_t n1, std::size_t n2) {
    std::vector<cplx> fa = a, fc = c;
    detail::fft_rows(fa, n1, n2, -1);
    detail::fft_cols(fa, n1, n2, -1);
    detail::fft_rows(fc, n1, n2, -1);
    detail::fft_cols(fc, n1, n2, -1);
    for (std::size_t i = 0; i < fa.size(); ++i) fa[i] *= fc[i];
    detail::fft_rows(fa, n1, n2, +1);
    detail::fft_cols(fa, n1, n2, +1);
    double inv = 1.0 / static_cast<double>(n1 * n2);
    for (auto& z : fa) z *= inv;
    return fa;
}

}  // namespace

QField convolve(const QField& f, const QField& g) {
    if (!f.congruent(g)) throw std::invalid_argument("convolve: grid mismatch");
    if (!near_integer(f.ax.start / f.ax.step) || !near_integer(f.ay.start / f.ay.step))
        throw std::invalid_argument("convolve: grid start must sit on the step lattice");
    // f(t)g(s) = [a c - b conj(d)] + [a d + b conj(c)] j with f = a+bj, g = c+dj
    const std::size_t n1 = f.ax.count, n2 = f.ay.count;
    SplitArrays sf = to_split(f), sg = to_split(g);
    std::vector<cplx> dconj = sg.c2, cconj = sg.c1;
    for (auto& z : dconj) z = std::conj(z);
    for (auto& z : cconj) z = std::conj(z);

    std::vector<cplx> t1 = circ_conv(sf.c1, sg.c1, n1, n2);
    std::vector<cplx> t2 = circ_conv(sf.c2, dconj, n1, n2);
    std::vector<cplx> t3 = circ_conv(sf.c1, sg.c2, n1, n2);
    std::vector<cplx> t4 = circ_conv(sf.c2, cconj, n1, n2);

    // index convolution gives sum_m f[m] g[p-m]; the physical difference
    // x_p - t_m lands at g-index (p - m) - start/step, so shift by s
    auto s1 = static_cast<long long>(std::llround(f.ax.start / f.ax.step));
    auto s2 = static_cast<long long>(std::llround(f.ay.start / f.ay.step));
    auto nn1 = static_cast<long long>(n1), nn2 = static_cast<long long>(n2);
    QField out(f.ax, f.ay);
    const double w = f.cell_weight();
    for (long long p = 0; p < nn1; ++p) {
        long long ps = ((p - s1) % nn1 + nn1) % nn1;
        for (long long q = 0; q < nn2; ++q) {
            long long qs = ((q - s2) % nn2 + nn2) % nn2;
            std::size_t i = static_cast<std::size_t>(ps) * n2 + static_cast<std::size_t>(qs);
            out.at(p, q) = from_split((t1[i] - t2[i]) * w, (t3[i] + t4[i]) * w);
        }
    }
    return out;
}

HypothesisReport check_convolution_hypothesis(const QField& g, double spectral_tol) {
    HypothesisReport rep;

    double gmax = linf_norm(g);
    double tol = 1e-12 * std::max(1.0, gmax);
    bool form = true, even = true;
    std::size_t n1 = g.ax.count, n2 = g.ay.count;
    for (std::size_t m = 0; m < n1 && (form || even); ++m) {
        for (std::size_t n = 0; n < n2; ++n) {
            const Quaternion& q = g.at(m, n);
            if (std::abs(q.i) > tol || std::abs(q.k) > tol) form = false;
            const Quaternion& qr = g.at((n1 - m) % n1, n);
            if (modulus(q - qr) > tol) even = false;
            if (!form && !even) break;
        }
    }
    rep.structural_form = form;
    rep.structural_even = even;

    SpectralField F = qft_fast(g);
    QField jg(g.ax, g.ay);
    const Quaternion jq{0.0, 0.0, 1.0, 0.0};
    for (std::size_t i = 0; i < g.samples.size(); ++i) jg.samples[i] = mul(jq, g.samples[i]);
    SpectralField Fj = qft_fast(jg);

    // first condition: |F e_j(-vy) - e_j(-vy) F| = 2 |sin(vy)| sqrt(F_i^2 + F_k^2)
    double c1 = 0.0, c2 = 0.0;
    std::vector<double> max_sin(F.ay.count, 0.0);
    for (std::size_t q = 0; q < F.ay.count; ++q) {
        double v = F.ay.point(q);
        for (std::size_t n = 0; n < g.ay.count; ++n)
            max_sin[q] = std::max(max_sin[q], std::abs(std::sin(v * g.ay.point(n))));
    }
    for (std::size_t p = 0; p < F.ax.count; ++p) {
        for (std::size_t q = 0; q < F.ay.count; ++q) {
            const Quaternion& Fq = F.at(p, q);
            c1 = std::max(c1, 2.0 * max_sin[q] * std::hypot(Fq.i, Fq.k));
        }
    }
    // second condition: F_Q(j g) e_j(-vy) = j e_j(-vy) F_Q(g)
    for (std::size_t p = 0; p < F.ax.count; ++p) {
        for (std::size_t q = 0; q < F.ay.count; ++q) {
            const Quaternion& A = Fj.at(p, q);
            const Quaternion& B = F.at(p, q);
            double v = F.ay.point(q);
            for (std::size_t n = 0; n < g.ay.count; ++n) {
                Quaternion ej = exp_j(-v * g.ay.point(n));
                c2 = std::max(c2, modulus(mul(A, ej) - mul(mul(jq, ej), B)));
            }
        }
    }
    rep.max_commutator_first = c1;
    rep.max_commutator_second = c2;
    rep.spectral_first = c1 <= spectral_tol;
    rep.spectral_second = c2 <= spectral_tol;
    return rep;
}

}  // namespace qsw
