#include "qsw/stockwell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsw/fft.hpp"
#include "qsw/threading.hpp"

namespace qsw {

using detail::cplx;

DilationMatrix make_dilation(double xi1, double xi2) {
    if (xi1 == 0.0 || xi2 == 0.0)
        throw std::invalid_argument("DilationMatrix: entries must be nonzero");
    return {xi1, xi2};
}

XiGrid half_offset_xi_grid(std::size_t count, double extent) {
    if (count < 2 || count % 2 != 0)
        throw std::invalid_argument("half_offset_xi_grid: count must be even and >= 2");
    if (!(extent > 0.0)) throw std::invalid_argument("half_offset_xi_grid: extent must be > 0");
    double h = 2.0 * extent / static_cast<double>(count);
    XiGrid g;
    g.step1 = g.step2 = h;
    g.xi1s.resize(count);
    for (std::size_t k = 0; k < count; ++k)
        g.xi1s[k] = -extent + h * (0.5 + static_cast<double>(k));
    g.xi2s = g.xi1s;
    return g;
}

namespace {

void validate_xi(const XiGrid& xi) {
    if (xi.xi1s.empty() || xi.xi2s.empty())
        throw std::invalid_argument("xi grid: empty");
    for (double v : xi.xi1s)
        if (v == 0.0) throw std::invalid_argument("xi grid: node on the xi2 axis");
    for (double v : xi.xi2s)
        if (v == 0.0) throw std::invalid_argument("xi grid: node on the xi1 axis");
    if (!(xi.step1 > 0.0) || !(xi.step2 > 0.0))
        throw std::invalid_argument("xi grid: cell steps must be positive");
}

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

}  // namespace

StockwellField forward(const QField& f, const WindowSpec& phi, const XiGrid& xi,
                       Axis bx, Axis by, std::size_t threads) {
    validate_xi(xi);
    if (!phi.has_closed_form())
        throw std::invalid_argument("forward: window must carry closed-form terms");
    if (threads == 0) threads = default_thread_count();

    StockwellField S;
    S.xi = xi;
    S.bx = bx;
    S.by = by;
    S.coeffs.assign(xi.xi1s.size() * xi.xi2s.size() * bx.count * by.count, Quaternion{});

    const std::size_t n1 = f.ax.count, n2 = f.ay.count;
    const std::size_t nb1 = bx.count, nb2 = by.count;
    const double w = f.cell_weight();

    parallel_for(xi.xi1s.size() * xi.xi2s.size(), [&](std::size_t s) {
        const std::size_t i1 = s / xi.xi2s.size();
        const std::size_t i2 = s % xi.xi2s.size();
        const double xi1 = xi.xi1s[i1], xi2 = xi.xi2s[i2];
        const double amp = std::sqrt(std::abs(xi1 * xi2)) * w;

        std::vector<Quaternion> g(n1 * n2);
        for (std::size_t m = 0; m < n1; ++m) {
            Quaternion ei = exp_i(-f.ax.point(m) * xi1);
            for (std::size_t n = 0; n < n2; ++n)
                g[m * n2 + n] = mul(mul(ei, f.at(m, n)), exp_j(-f.ay.point(n) * xi2));
        }

        Quaternion* out = &S.coeffs[S.index(i1, i2, 0, 0)];
        std::vector<double> w1(n1 * nb1), w2(n2 * nb2);
        std::vector<Quaternion> t(n1 * nb2);
        for (const WindowTerm& term : phi.terms) {
            for (std::size_t m = 0; m < n1; ++m)
                for (std::size_t p = 0; p < nb1; ++p)
                    w1[m * nb1 + p] =
                        primitive_spatial(term.px, xi1 * (f.ax.point(m) - bx.point(p)));
            for (std::size_t n = 0; n < n2; ++n)
                for (std::size_t q = 0; q < nb2; ++q)
                    w2[n * nb2 + q] =
                        primitive_spatial(term.py, xi2 * (f.ay.point(n) - by.point(q)));

            for (std::size_t m = 0; m < n1; ++m) {
                for (std::size_t q = 0; q < nb2; ++q) {
                    Quaternion acc{};
                    for (std::size_t n = 0; n < n2; ++n)
                        acc += g[m * n2 + n] * w2[n * nb2 + q];
                    t[m * nb2 + q] = acc;
                }
            }
            Quaternion cc = conj(term.coeff);
            for (std::size_t p = 0; p < nb1; ++p) {
                for (std::size_t q = 0; q < nb2; ++q) {
                    Quaternion acc{};
                    for (std::size_t m = 0; m < n1; ++m)
                        acc += t[m * nb2 + q] * w1[m * nb1 + p];
                    out[p * nb2 + q] += mul(acc, cc) * amp;
                }
            }
        }
    }, threads);
    return S;
}

Quaternion forward_at(const QField& f, const WindowSpec& phi,
                      double xi1, double xi2, double b1, double b2) {
    if (xi1 == 0.0 || xi2 == 0.0) throw std::invalid_argument("forward_at: xi on axis");
    if (!phi.has_closed_form())
        throw std::invalid_argument("forward_at: window must carry closed-form terms");
    CompensatedQuaternion acc;
    for (std::size_t m = 0; m < f.ax.count; ++m) {
        double x = f.ax.point(m);
        Quaternion ei = exp_i(-x * xi1);
        for (std::size_t n = 0; n < f.ay.count; ++n) {
            double y = f.ay.point(n);
            Quaternion v = mul(mul(ei, f.at(m, n)), exp_j(-y * xi2));
            acc.add(mul(v, conj(phi.value(xi1 * (x - b1), xi2 * (y - b2)))));
        }
    }
    return acc.value() * (std::sqrt(std::abs(xi1 * xi2)) * f.cell_weight());
}

namespace {

struct SplitField {
    std::vector<cplx> c1, c2;
};

SplitField split_field(const QField& f) {
    SplitField s;
    s.c1.resize(f.samples.size());
    s.c2.resize(f.samples.size());
    for (std::size_t i = 0; i < f.samples.size(); ++i) {
        Split sp = split(f.samples[i]);
        s.c1[i] = sp.c1;
        s.c2[i] = sp.c2;
    }
    return s;
}

/// Open-mode slice: exact linear convolution of the modulated signal with
/// the sampled window kernel on a zero-padded ring.
void slice_open(const QField& f, const WindowSpec& phi, double xi1, double xi2,
                const Axis& bx, const Axis& by, Quaternion* out) {
    const std::size_t n1 = f.ax.count, n2 = f.ay.count;
    const std::size_t nb1 = bx.count, nb2 = by.count;
    const std::size_t m1 = next_pow2(n1 + nb1), m2 = next_pow2(n2 + nb2);

    double o1d = (bx.start - f.ax.start) / f.ax.step;
    double o2d = (by.start - f.ay.start) / f.ay.step;
    if (std::abs(bx.step - f.ax.step) > 1e-12 * f.ax.step ||
        std::abs(by.step - f.ay.step) > 1e-12 * f.ay.step ||
        std::abs(o1d - std::round(o1d)) > 1e-9 || std::abs(o2d - std::round(o2d)) > 1e-9)
        throw std::invalid_argument("forward_fast: b axes must sit on the signal lattice");
    auto o1 = static_cast<long long>(std::llround(o1d));
    auto o2 = static_cast<long long>(std::llround(o2d));

    QField mf = modulate(f, xi1, xi2);
    SplitField s = split_field(mf);
    std::vector<cplx> p1(m1 * m2), p2(m1 * m2);
    for (std::size_t m = 0; m < n1; ++m)
        for (std::size_t n = 0; n < n2; ++n) {
            p1[m * m2 + n] = s.c1[m * n2 + n];
            p2[m * m2 + n] = s.c2[m * n2 + n];
        }
    detail::fft_rows(p1, m1, m2, -1);
    detail::fft_cols(p1, m1, m2, -1);
    detail::fft_rows(p2, m1, m2, -1);
    detail::fft_cols(p2, m1, m2, -1);

    const double amp = std::sqrt(std::abs(xi1 * xi2)) * f.cell_weight();
    auto signed_index = [](std::size_t r, std::size_t m) {
        return static_cast<double>(r <= m / 2 ? static_cast<long long>(r)
                                              : static_cast<long long>(r) -
                                                    static_cast<long long>(m));
    };

    std::vector<cplx> k1(m1), k2(m2), q1(m1 * m2), q2(m1 * m2);
    for (const WindowTerm& term : phi.terms) {
        // ring kernel K_ring[r] = k(-signed(r) * step)
        for (std::size_t r = 0; r < m1; ++r)
            k1[r] = primitive_spatial(term.px, -xi1 * signed_index(r, m1) * f.ax.step);
        for (std::size_t r = 0; r < m2; ++r)
            k2[r] = primitive_spatial(term.py, -xi2 * signed_index(r, m2) * f.ay.step);
        detail::fft_pow2(k1.data(), m1, -1);
        detail::fft_pow2(k2.data(), m2, -1);

        const double inv = 1.0 / static_cast<double>(m1 * m2);
        for (std::size_t a = 0; a < m1; ++a)
            for (std::size_t b = 0; b < m2; ++b) {
                cplx kk = k1[a] * k2[b] * inv;
                q1[a * m2 + b] = p1[a * m2 + b] * kk;
                q2[a * m2 + b] = p2[a * m2 + b] * kk;
            }
        detail::fft_rows(q1, m1, m2, +1);
        detail::fft_cols(q1, m1, m2, +1);
        detail::fft_rows(q2, m1, m2, +1);
        detail::fft_cols(q2, m1, m2, +1);

        Quaternion cc = conj(term.coeff);
        auto mm1 = static_cast<long long>(m1), mm2 = static_cast<long long>(m2);
        for (std::size_t p = 0; p < nb1; ++p) {
            std::size_t rp = static_cast<std::size_t>(
                ((static_cast<long long>(p) + o1) % mm1 + mm1) % mm1);
            for (std::size_t q = 0; q < nb2; ++q) {
                std::size_t rq = static_cast<std::size_t>(
                    ((static_cast<long long>(q) + o2) % mm2 + mm2) % mm2);
                Quaternion v = from_split(q1[rp * m2 + rq], q2[rp * m2 + rq]);
                out[p * nb2 + q] += mul(v, cc) * amp;
            }
        }
    }
}

/// Periodic-mode slice via the spectral identity: S(xi,.) is the inverse
/// transform of F_Q(f)(.+xi) (D_{A_xi^{-1}} F_Q(reflected conj window))(.).
void slice_periodic(const QField& f, const WindowSpec& phi, double xi1, double xi2,
                    Quaternion* out) {
    SpectralField Fm = qft_fast(modulate(f, xi1, xi2));
    const double inv_det = 1.0 / std::sqrt(std::abs(xi1 * xi2));
    for (std::size_t p = 0; p < Fm.ax.count; ++p) {
        double u = Fm.ax.point(p);
        for (std::size_t q = 0; q < Fm.ay.count; ++q) {
            double v = Fm.ay.point(q);
            Quaternion factor = phi.spectrum_conj(u / xi1, v / xi2) * inv_det;
            Fm.at(p, q) = mul(Fm.at(p, q), factor);
        }
    }
    QField slice = iqft_fast(Fm, f.ax, f.ay);
    std::copy(slice.samples.begin(), slice.samples.end(), out);
}

}  // namespace

StockwellField forward_fast(const QField& f, const WindowSpec& phi, const XiGrid& xi,
                            Axis bx, Axis by, SlicePadding padding, std::size_t threads) {
    validate_xi(xi);
    if (!phi.conv_hypothesis)
        throw std::invalid_argument("forward_fast: window fails the convolution hypothesis");
    if (!phi.has_closed_form())
        throw std::invalid_argument("forward_fast: window must carry closed-form terms");
    if (padding == SlicePadding::periodic && !(bx == f.ax && by == f.ay))
        throw std::invalid_argument("forward_fast: periodic mode requires b axes = signal axes");
    if (threads == 0) threads = default_thread_count();

    StockwellField S;
    S.xi = xi;
    S.bx = bx;
    S.by = by;
    S.coeffs.assign(xi.xi1s.size() * xi.xi2s.size() * bx.count * by.count, Quaternion{});

    parallel_for(xi.xi1s.size() * xi.xi2s.size(), [&](std::size_t s) {
        std::size_t i1 = s / xi.xi2s.size();
        std::size_t i2 = s % xi.xi2s.size();
        Quaternion* out = &S.coeffs[S.index(i1, i2, 0, 0)];
        if (padding == SlicePadding::open)
            slice_open(f, phi, xi.xi1s[i1], xi.xi2s[i2], bx, by, out);
        else
            slice_periodic(f, phi, xi.xi1s[i1], xi.xi2s[i2], out);
    }, threads);
    return S;
}

XiFunction aggregate(const StockwellField& S) {
    XiFunction a;
    a.xi1s = S.xi.xi1s;
    a.xi2s = S.xi.xi2s;
    a.values.resize(S.n1() * S.n2());
    const double w = S.bx.step * S.by.step / kTwoPi;
    for (std::size_t i1 = 0; i1 < S.n1(); ++i1) {
        for (std::size_t i2 = 0; i2 < S.n2(); ++i2) {
            CompensatedQuaternion acc;
            const Quaternion* slice = &S.at(i1, i2, 0, 0);
            for (std::size_t i = 0; i < S.bx.count * S.by.count; ++i) acc.add(slice[i]);
            double det = std::sqrt(std::abs(S.xi.xi1s[i1] * S.xi.xi2s[i2]));
            a.values[i1 * S.n2() + i2] = acc.value() * (det * w);
        }
    }
    return a;
}

namespace {

/// Indices and Lagrange weights carrying one dual-grid coordinate onto the
/// xi nodes: exact node match when present, else 4-point interpolation,
/// zero weight outside the node hull.
struct AxisCarry {
    std::vector<std::size_t> idx;
    std::vector<double> w;
    bool matched = false;
    bool outside = false;
};

AxisCarry carry_axis(const std::vector<double>& nodes, double x) {
    AxisCarry c;
    auto it = std::lower_bound(nodes.begin(), nodes.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - nodes.begin());
    for (std::size_t cand : {hi > 0 ? hi - 1 : 0, std::min(hi, nodes.size() - 1)}) {
        if (std::abs(nodes[cand] - x) <= 1e-9 * std::max(1.0, std::abs(x))) {
            c.idx = {cand};
            c.w = {1.0};
            c.matched = true;
            return c;
        }
    }
    if (x < nodes.front() || x > nodes.back()) {
        c.outside = true;
        return c;
    }
    std::size_t lo = hi > 2 ? hi - 2 : 0;
    lo = std::min(lo, nodes.size() - 4);
    for (std::size_t a = 0; a < 4; ++a) {
        double wa = 1.0;
        for (std::size_t b = 0; b < 4; ++b)
            if (a != b) wa *= (x - nodes[lo + b]) / (nodes[lo + a] - nodes[lo + b]);
        c.idx.push_back(lo + a);
        c.w.push_back(wa);
    }
    return c;
}

}  // namespace

QField invert(const StockwellField& S, Axis ax, Axis ay, InversionDiagnostics* diag) {
    if (S.xi.xi1s.size() < 4 || S.xi.xi2s.size() < 4)
        throw std::invalid_argument("invert: xi grid too sparse to resolve the spectrum");
    XiFunction A = aggregate(S);
    Axis au = ax.dual(), av = ay.dual();
    SpectralField G(au, av);

    InversionDiagnostics d;
    std::size_t zeroed = 0;
    for (std::size_t p = 0; p < au.count; ++p) {
        AxisCarry cu = carry_axis(A.xi1s, au.point(p));
        for (std::size_t q = 0; q < av.count; ++q) {
            AxisCarry cv = carry_axis(A.xi2s, av.point(q));
            if (cu.outside || cv.outside) {
                ++zeroed;
                continue;
            }
            Quaternion acc{};
            for (std::size_t a = 0; a < cu.idx.size(); ++a)
                for (std::size_t b = 0; b < cv.idx.size(); ++b)
                    acc += A.at(cu.idx[a], cv.idx[b]) * (cu.w[a] * cv.w[b]);
            G.at(p, q) = acc;
            if (cu.matched && cv.matched)
                ++d.matched_points;
            else
                ++d.interpolated_points;
        }
    }
    d.offgrid_fraction =
        static_cast<double>(zeroed) / static_cast<double>(au.count * av.count);
    if (diag) *diag = d;
    return iqft_fast(G, ax, ay);
}

double stockwell_lp_norm(const StockwellField& S, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("stockwell_lp_norm: p must be >= 1");
    CompensatedSum acc;
    if (p == 2.0) {
        for (const Quaternion& q : S.coeffs) acc.add(norm_sq(q));
    } else {
        for (const Quaternion& q : S.coeffs) acc.add(std::pow(norm_sq(q), 0.5 * p));
    }
    return std::pow(acc.value() * S.cell_volume(), 1.0 / p);
}

double stockwell_energy(const StockwellField& S) {
    CompensatedSum acc;
    for (const Quaternion& q : S.coeffs) acc.add(norm_sq(q));
    return acc.value() * S.cell_volume();
}

QuadratureNodes admissibility_nodes(const AdmissibilityQuadrature& q) {
    if (!(q.inner_eps > 0.0) || !(q.graded_cut > q.inner_eps) ||
        !(q.outer_extent > q.graded_cut))
        throw std::invalid_argument("admissibility quadrature: need 0 < eps < cut < extent");
    std::vector<double> edges;
    edges.reserve(q.log_points + q.uniform_points + 2);
    double ratio = std::pow(q.graded_cut / q.inner_eps, 1.0 / static_cast<double>(q.log_points));
    double e = q.inner_eps;
    edges.push_back(e);
    for (std::size_t k = 0; k < q.log_points; ++k) {
        e *= ratio;
        edges.push_back(e);
    }
    double h = (q.outer_extent - q.graded_cut) / static_cast<double>(q.uniform_points);
    for (std::size_t k = 1; k <= q.uniform_points; ++k)
        edges.push_back(q.graded_cut + h * static_cast<double>(k));

    QuadratureNodes nodes;
    std::size_t half = edges.size() - 1;
    nodes.x.resize(2 * half);
    nodes.w.resize(2 * half);
    for (std::size_t k = 0; k < half; ++k) {
        double mid = 0.5 * (edges[k] + edges[k + 1]);
        double wd = edges[k + 1] - edges[k];
        nodes.x[half + k] = mid;
        nodes.w[half + k] = wd;
        nodes.x[half - 1 - k] = -mid;
        nodes.w[half - 1 - k] = wd;
    }
    return nodes;
}

namespace {

/// F_Q(conj(window)) on a full grid of frequency arguments. Closed-form
/// windows evaluate per-axis spectra and take outer products; from_field
/// windows run the direct sum with the inner y-transform reused per column.
std::vector<Quaternion> window_spectrum_conj_grid(const WindowSpec& w,
                                                  const std::vector<double>& args1,
                                                  const std::vector<double>& args2,
                                                  bool reflected) {
    const std::size_t n1 = args1.size(), n2 = args2.size();
    std::vector<Quaternion> out(n1 * n2);
    if (w.has_closed_form()) {
        // even primitives: reflection is the identity
        std::vector<double> sx(n1), sy(n2);
        for (const WindowTerm& t : w.terms) {
            for (std::size_t i = 0; i < n1; ++i) sx[i] = primitive_spectrum(t.px, args1[i]);
            for (std::size_t j = 0; j < n2; ++j) sy[j] = primitive_spectrum(t.py, args2[j]);
            Quaternion cc = conj(t.coeff);
            for (std::size_t i = 0; i < n1; ++i)
                for (std::size_t j = 0; j < n2; ++j)
                    out[i * n2 + j] += cc * (sx[i] * sy[j]);
        }
        return out;
    }
    const QField& g = w.field;
    const double sgn = reflected ? -1.0 : 1.0;
    const double weight = g.cell_weight();
    std::vector<Quaternion> inner(g.ax.count);
    for (std::size_t j = 0; j < n2; ++j) {
        double v = sgn * args2[j];
        for (std::size_t m = 0; m < g.ax.count; ++m) {
            Quaternion acc{};
            for (std::size_t n = 0; n < g.ay.count; ++n)
                acc += mul(conj(g.at(m, n)), exp_j(-g.ay.point(n) * v));
            inner[m] = acc;
        }
        for (std::size_t i = 0; i < n1; ++i) {
            double u = sgn * args1[i];
            Quaternion acc{};
            for (std::size_t m = 0; m < g.ax.count; ++m)
                acc += mul(exp_i(-g.ax.point(m) * u), inner[m]);
            out[i * n2 + j] = acc * weight;
        }
    }
    return out;
}

/// C integral against a node set; general over window pairs.
Quaternion c_integral(const WindowSpec& phi, const WindowSpec& psi,
                      const QuadratureNodes& nodes) {
    const std::size_t n = nodes.x.size();
    std::vector<double> args(n);
    for (std::size_t i = 0; i < n; ++i) args[i] = 1.0 - nodes.x[i];
    std::vector<Quaternion> fp = window_spectrum_conj_grid(phi, args, args, false);
    std::vector<Quaternion> fq = (&phi == &psi)
                                     ? fp
                                     : window_spectrum_conj_grid(psi, args, args, false);
    CompensatedQuaternion acc;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double wgt = nodes.w[i] * nodes.w[j] / std::abs(nodes.x[i] * nodes.x[j]);
            acc.add(mul(fp[i * n + j], conj(fq[i * n + j])) * wgt);
        }
    }
    return acc.value() * (1.0 / kTwoPi);
}

bool probe_divergence(const WindowSpec& phi, const WindowSpec& psi,
                      const AdmissibilityQuadrature& quad, std::vector<double>* values) {
    AdmissibilityQuadrature level{0.5, quad.graded_cut, quad.outer_extent,
                                  std::max<std::size_t>(8, quad.log_points / 4),
                                  std::max<std::size_t>(16, quad.uniform_points / 4)};
    double prev = 0.0;
    int consecutive = 0;
    bool divergent = false;
    for (int k = 0; k < 5; ++k) {
        double c = modulus(c_integral(phi, psi, admissibility_nodes(level)));
        if (values) values->push_back(c);
        if (k > 0 && prev > 0.0) {
            double growth = (c - prev) / prev;
            consecutive = growth > 0.25 ? consecutive + 1 : 0;
            if (consecutive >= 2) divergent = true;
        }
        prev = c;
        level = level.refined();
    }
    return divergent;
}

AdmissibilityReport make_report(const WindowSpec& phi, const WindowSpec& psi,
                                const AdmissibilityQuadrature& quad) {
    AdmissibilityReport rep;
    rep.quadrature = quad;
    rep.divergent = probe_divergence(phi, psi, quad, &rep.probe_values);
    Quaternion c = c_integral(phi, psi, admissibility_nodes(quad));
    Quaternion cr = c_integral(phi, psi, admissibility_nodes(quad.refined()));
    rep.c_phi_psi = c;
    rep.c_phi = scalar_part(c);
    double scale = std::max(modulus(c), 1e-300);
    rep.refinement_error = modulus(cr - c) / scale;
    rep.admissible = !rep.divergent && modulus(c) > 1e-12;
    return rep;
}

}  // namespace

AdmissibilityReport admissibility_constant(const WindowSpec& phi,
                                           const AdmissibilityQuadrature& quad) {
    return make_report(phi, phi, quad);
}

AdmissibilityReport cross_admissibility(const WindowSpec& phi, const WindowSpec& psi,
                                        const AdmissibilityQuadrature& quad) {
    return make_report(phi, psi, quad);
}

Quaternion resolution_identity_integral(const WindowSpec& phi, const WindowSpec& psi,
                                        double zeta1, double zeta2,
                                        const AdmissibilityQuadrature& quad) {
    QuadratureNodes nodes = admissibility_nodes(quad);
    const std::size_t n = nodes.x.size();
    std::vector<double> a1(n), a2(n);
    for (std::size_t i = 0; i < n; ++i) {
        a1[i] = (zeta1 - nodes.x[i]) / nodes.x[i];
        a2[i] = (zeta2 - nodes.x[i]) / nodes.x[i];
    }
    std::vector<Quaternion> fp = window_spectrum_conj_grid(phi, a1, a2, true);
    std::vector<Quaternion> fq =
        (&phi == &psi) ? fp : window_spectrum_conj_grid(psi, a1, a2, true);
    CompensatedQuaternion acc;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            acc.add(mul(fp[i * n + j], conj(fq[i * n + j])) *
                    (nodes.w[i] * nodes.w[j] / std::abs(nodes.x[i] * nodes.x[j])));
    return acc.value() * (1.0 / kTwoPi);
}

}  // namespace qsw
