#include "qsw/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qsw/qft.hpp"
#include "qsw/threading.hpp"
#include "qsw/uncertainty.hpp"

namespace qsw {

void RunConfig::validate() const {
    bool pow2 = n >= 16 && n <= 256 && (n & (n - 1)) == 0;
    if (!pow2) throw std::invalid_argument("config: n must be a power of two in [16, 256]");
    if (!(half_extent > 0.0)) throw std::invalid_argument("config: half_extent must be > 0");
    if (xi_count < 4 || xi_count % 2 != 0)
        throw std::invalid_argument("config: xi_count must be even and >= 4");
    if (!(xi_extent > 0.0)) throw std::invalid_argument("config: xi_extent must be > 0");
    if (!(window_alpha > 0.0) || !(window_beta > 0.0) || window_alpha == window_beta)
        throw std::invalid_argument("config: window parameters invalid");
}

RunConfig config_from_kv(const std::map<std::string, std::string>& kv) {
    RunConfig cfg;
    auto get = [&kv](const char* key, double fallback) {
        auto it = kv.find(key);
        return it == kv.end() ? fallback : std::stod(it->second);
    };
    cfg.n = static_cast<std::size_t>(get("n", static_cast<double>(cfg.n)));
    cfg.half_extent = get("half_extent", cfg.half_extent);
    cfg.xi_count = static_cast<std::size_t>(get("xi_count", static_cast<double>(cfg.xi_count)));
    cfg.xi_extent = get("xi_extent", cfg.xi_extent);
    cfg.window_alpha = get("window_alpha", cfg.window_alpha);
    cfg.window_beta = get("window_beta", cfg.window_beta);
    cfg.threads = static_cast<std::size_t>(get("threads", 0.0));
    auto it = kv.find("out_dir");
    if (it != kv.end()) cfg.out_dir = it->second;
    return cfg;
}

QField random_field(std::size_t n, double half_extent, std::uint64_t seed) {
    QField f(desk_axis(n, half_extent), desk_axis(n, half_extent));
    std::uint64_t state = seed * 0x9E3779B97F4A7C15ull + 1ull;
    auto next = [&state]() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        std::uint64_t bits = state * 0x2545F4914F6CDD1Dull;
        return static_cast<double>(bits >> 11) * 0x1.0p-52 - 1.0;  // [-1, 1)
    };
    for (Quaternion& q : f.samples) q = {next(), next(), next(), next()};
    return f;
}

namespace {

VerifyRecord record_max_err(std::string name, int criterion, double err, double tol,
                            std::string label = {}) {
    VerifyRecord r;
    r.name = std::move(name);
    r.criterion = criterion;
    r.lhs = err;
    r.rhs = tol;
    r.pass = err <= tol;
    r.margin = (tol - err) / tol;
    r.label = std::move(label);
    return r;
}

VerifyRecord record_bound(const BoundReport& b, int criterion, std::string label = {}) {
    VerifyRecord r;
    r.name = b.name;
    r.criterion = criterion;
    r.lhs = b.lhs;
    r.rhs = b.rhs;
    r.pass = b.satisfied;
    r.margin = b.margin;
    r.label = label.empty() ? b.label : std::move(label);
    return r;
}

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

QField gaussian_signal(const RunConfig& cfg, double sigma) {
    Axis ax = cfg.axis();
    return sample_analytic(GaussianDescriptor{sigma, sigma, 0.0, 0.0, 1.0}, ax, ax);
}

QField modulated_signal(const RunConfig& cfg, double sigma, double m1, double m2) {
    Axis ax = cfg.axis();
    ModulatedGaussianDescriptor d;
    d.envelope = GaussianDescriptor{sigma, sigma, 0.0, 0.0, 1.0};
    d.xi1 = m1;
    d.xi2 = m2;
    return sample_analytic(d, ax, ax);
}

}  // namespace

std::vector<VerifyRecord> verify_qft_suite(const RunConfig& cfg) {
    cfg.validate();
    std::vector<VerifyRecord> out;
    Axis ax = cfg.axis();

    {  // criterion 1: fast path against the defining quadruple sum (< 10 s)
        auto t0 = std::chrono::steady_clock::now();
        double worst = 0.0;
        for (std::size_t size : {std::size_t{16}, std::size_t{32}}) {
            for (std::uint64_t s = 0; s < 10; ++s) {
                QField f = random_field(size, cfg.half_extent, 11 * size + s);
                SpectralField fast = qft_fast(f);
                SpectralField direct = qft_direct(f, f.ax.dual(), f.ay.dual());
                worst = std::max(worst, max_abs_diff(fast, direct) / max_abs(direct));
            }
        }
        double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t0).count();
        VerifyRecord r = record_max_err("qft_fast_vs_direct", 1, worst, 1e-10,
                                        "20 random fields 16^2+32^2");
        r.pass = r.pass && elapsed < 10.0;
        out.push_back(r);
    }

    {  // criterion 2: Gaussian fixed point
        SpectralField F = qft_fast(gaussian_signal(cfg, 1.0));
        double worst = 0.0;
        for (std::size_t p = 0; p < F.ax.count; ++p) {
            double u = F.ax.point(p);
            for (std::size_t q = 0; q < F.ay.count; ++q) {
                double v = F.ay.point(q);
                Quaternion want{std::exp(-0.5 * (u * u + v * v)), 0.0, 0.0, 0.0};
                worst = std::max(worst, modulus(F.at(p, q) - want));
            }
        }
        out.push_back(record_max_err("gaussian_fixed_point", 2, worst, 1e-6));
    }

    QField f = modulated_signal(cfg, 1.0, 1.0, 0.7);
    QField g = sample_analytic(
        ModulatedGaussianDescriptor{GaussianDescriptor{1.2, 0.9, 0.5, -0.4, 0.8}, 0.6, -1.1},
        ax, ax);
    SpectralField F = qft_fast(f);
    SpectralField G = qft_fast(g);

    {  // criterion 3: Plancherel and Parseval
        double nf = l2_norm(f), nF = l2_norm(F);
        out.push_back(record_max_err("qft_plancherel", 3, std::abs(nf - nF) / nf, 1e-8));
        double si = scalar_inner(f, g), sF = scalar_inner(F, G);
        out.push_back(record_max_err("qft_parseval", 3,
                                     std::abs(si - sF) / std::max(1.0, std::abs(si)), 1e-8));
    }

    {  // criterion 4: inversion round trips
        QField back = iqft_fast(F, ax, ax);
        out.push_back(record_max_err("qft_roundtrip", 4, max_abs_diff(back, f), 1e-8));
        QField imp(ax, ax);
        imp.at(ax.count / 2, ax.count / 2) =
            Quaternion{kTwoPi / (ax.step * ax.step), 0.0, 0.0, 0.0};
        QField back2 = iqft_fast(qft_fast(imp), ax, ax);
        out.push_back(record_max_err("qft_impulse_roundtrip", 4,
                                     max_abs_diff(back2, imp) / max_abs(imp), 1e-8));
    }

    {  // criterion 5: convolution theorem, energy identity, hypothesis
        WindowSpec dog = make_admissible_dog_window(cfg.window_alpha, cfg.window_beta, ax, ax);
        const QField& gd = dog.field;
        HypothesisReport hyp = dog.hypothesis;
        VerifyRecord hr;
        hr.name = "hypothesis_structural_even";
        hr.criterion = 5;
        hr.lhs = hyp.structural() ? 1.0 : 0.0;
        hr.rhs = 1.0;
        hr.pass = hyp.structural() && hyp.spectral();
        hr.margin = 0.0;
        hr.label = "real even-in-x1 window";
        out.push_back(hr);

        QField conv = convolve(f, gd);
        SpectralField Fc = qft_fast(conv);
        SpectralField Gd = qft_fast(gd);
        double worst = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < Fc.samples.size(); ++i) {
            Quaternion want = mul(F.samples[i], Gd.samples[i]);
            worst = std::max(worst, modulus(Fc.samples[i] - want));
            scale = std::max(scale, modulus(want));
        }
        out.push_back(record_max_err("convolution_theorem", 5, worst / scale, 1e-8));

        double lhs = l2_norm(conv);
        CompensatedSum acc;
        for (std::size_t i = 0; i < F.samples.size(); ++i)
            acc.add(norm_sq(F.samples[i]) * norm_sq(Gd.samples[i]));
        double rhs = acc.value() * F.cell_weight();
        double lhs2 = lhs * lhs;
        out.push_back(record_max_err("convolution_energy", 5,
                                     std::abs(lhs2 - rhs) / rhs, 1e-8));
    }

    {  // criterion 6: modulation/translation/dilation identities
        Axis du = ax.dual();
        double xi1 = 2.0 * du.step, xi2 = -3.0 * du.step;
        SpectralField Fm = qft_fast(modulate(f, xi1, xi2));
        QField shifted = translate(F, -xi1, -xi2);  // (T_xi F)(eta) = F(eta + xi)
        out.push_back(record_max_err("modulation_shift_identity", 6,
                                     max_abs_diff(Fm, shifted) / max_abs(F), 1e-10));

        double b1 = 3.0 * ax.step, b2 = -2.0 * ax.step;
        QField fs = f;
        fs.evaluator.reset();  // lattice (circular) translation path
        SpectralField Ft = qft_fast(translate(fs, b1, b2));
        QField Fmod = modulate(F, b1, b2);
        out.push_back(record_max_err("translation_modulation_identity", 6,
                                     max_abs_diff(Ft, Fmod) / max_abs(F), 1e-10));

        QField fg = gaussian_signal(cfg, 1.0);
        SpectralField Fd = qft_fast(dilate(fg, 2.0, 2.0));
        double worst = 0.0;
        for (std::size_t p = 0; p < Fd.ax.count; ++p) {
            double u = Fd.ax.point(p) / 2.0;
            for (std::size_t q = 0; q < Fd.ay.count; ++q) {
                double v = Fd.ay.point(q) / 2.0;
                Quaternion want{0.5 * std::exp(-0.5 * (u * u + v * v)), 0.0, 0.0, 0.0};
                worst = std::max(worst, modulus(Fd.at(p, q) - want));
            }
        }
        out.push_back(record_max_err("dilation_reciprocal_identity", 6, worst, 1e-8,
                                     "analytic resampling"));
    }
    return out;
}

namespace {

struct CanonicalStockwell {
    WindowSpec window;
    XiGrid xi;
    StockwellField S;       // open-path volume of the canonical Gaussian
    double norm_f = 0.0;
    double norm_phi = 0.0;
    double c_phi = 0.0;
    AdmissibilityReport adm;
};

CanonicalStockwell canonical_stockwell(const RunConfig& cfg) {
    CanonicalStockwell c;
    Axis ax = cfg.axis();
    c.window = make_admissible_dog_window(cfg.window_alpha, cfg.window_beta, ax, ax);
    c.xi = half_offset_xi_grid(cfg.xi_count, cfg.xi_extent);
    QField f = gaussian_signal(cfg, 1.0);
    c.S = forward_fast(f, c.window, c.xi, ax, ax, SlicePadding::open, cfg.threads);
    c.norm_f = l2_norm(f);
    c.norm_phi = c.window.l2_norm();
    c.adm = admissibility_constant(c.window);
    c.c_phi = c.adm.c_phi;
    return c;
}

}  // namespace

std::vector<VerifyRecord> verify_stockwell_suite(const RunConfig& cfg) {
    cfg.validate();
    std::vector<VerifyRecord> out;
    Axis ax = cfg.axis();

    {  // criterion 7: basic properties on a small configuration
        QField fa = random_field(16, cfg.half_extent, 401);
        QField fb = random_field(16, cfg.half_extent, 402);
        Axis sax = fa.ax;
        WindowSpec w16 =
            make_admissible_dog_window(cfg.window_alpha, cfg.window_beta, sax, sax);
        XiGrid xi = half_offset_xi_grid(4, 2.0);

        Quaternion alpha{0.3, -1.1, 0.0, 0.0}, beta{0.7, 0.2, 0.0, 0.0};
        StockwellField Sa = forward(fa, w16, xi, sax, sax, cfg.threads);
        StockwellField Sb = forward(fb, w16, xi, sax, sax, cfg.threads);
        StockwellField Sc =
            forward(linear_combination(alpha, fa, beta, fb), w16, xi, sax, sax, cfg.threads);
        double worst = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < Sc.coeffs.size(); ++i) {
            Quaternion want = mul(alpha, Sa.coeffs[i]) + mul(beta, Sb.coeffs[i]);
            worst = std::max(worst, modulus(Sc.coeffs[i] - want));
            scale = std::max(scale, modulus(want));
        }
        out.push_back(record_max_err("stockwell_linearity", 7, worst / scale, 1e-12));

        WindowSpec psi16 = make_gaussian_unit_window(0.8, sax, sax);
        Quaternion qa{0.5, -1.0, 0.25, 0.75}, qb{-0.3, 0.4, 1.0, -0.2};
        WindowSpec comb = combine_windows(qa, w16, qb, psi16);
        StockwellField Sc2 = forward(fa, comb, xi, sax, sax, cfg.threads);
        StockwellField Sp = forward(fa, psi16, xi, sax, sax, cfg.threads);
        worst = scale = 0.0;
        for (std::size_t i = 0; i < Sc2.coeffs.size(); ++i) {
            Quaternion want = mul(Sa.coeffs[i], conj(qa)) + mul(Sp.coeffs[i], conj(qb));
            worst = std::max(worst, modulus(Sc2.coeffs[i] - want));
            scale = std::max(scale, modulus(want));
        }
        out.push_back(record_max_err("stockwell_anti_linearity", 7, worst / scale, 1e-12));

        QField fm = modulated_signal(cfg, 1.0, 0.8, -0.5);
        QField fmp = parity(fm);
        double worst_p = 0.0, scale_p = 0.0;
        double worst_s = 0.0, scale_s = 0.0;
        QField f2 = scaling_dilate(fm, 2.0);
        WindowSpec wfull =
            make_admissible_dog_window(cfg.window_alpha, cfg.window_beta, ax, ax);
        const double probes[8][4] = {
            {0.75, 1.25, 1.0, -2.0},  {-1.25, 0.75, -3.0, 0.5}, {2.25, -0.25, 0.25, 1.75},
            {-0.75, -1.75, 2.5, 2.5}, {1.75, 2.25, -1.5, 3.0},  {0.25, 0.25, 0.0, 0.0},
            {-2.25, 1.25, 4.0, -1.0}, {1.25, -2.75, -0.75, -0.25}};
        for (const auto& pr : probes) {
            Quaternion lhs = forward_at(fmp, wfull, pr[0], pr[1], pr[2], pr[3]);
            Quaternion rhs = forward_at(fm, wfull, -pr[0], -pr[1], -pr[2], -pr[3]);
            worst_p = std::max(worst_p, modulus(lhs - rhs));
            scale_p = std::max(scale_p, modulus(rhs));
            Quaternion lhs2 = forward_at(f2, wfull, pr[0], pr[1], pr[2], pr[3]);
            Quaternion rhs2 =
                forward_at(fm, wfull, pr[0] / 2.0, pr[1] / 2.0, 2.0 * pr[2], 2.0 * pr[3]) * 0.5;
            worst_s = std::max(worst_s, modulus(lhs2 - rhs2));
            scale_s = std::max(scale_s, modulus(rhs2));
        }
        out.push_back(record_max_err("stockwell_parity", 7, worst_p / scale_p, 1e-10));
        out.push_back(record_max_err("stockwell_scaling_lambda2", 7, worst_s / scale_s, 1e-8));
    }

    CanonicalStockwell can = canonical_stockwell(cfg);

    {  // criterion 8: fast path against the defining quadrature
        QField f = gaussian_signal(cfg, 1.0);
        StockwellField Sd = forward(f, can.window, can.xi, ax, ax, cfg.threads);
        double worst = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < Sd.coeffs.size(); ++i) {
            worst = std::max(worst, modulus(Sd.coeffs[i] - can.S.coeffs[i]));
            scale = std::max(scale, modulus(Sd.coeffs[i]));
        }
        out.push_back(record_max_err("forward_fast_vs_forward", 8, worst / scale, 1e-8));
    }

    {  // criterion 9 + aggregate example + b-extent example
        QField f = gaussian_signal(cfg, 0.5);
        WindowSpec wu = make_gaussian_unit_window(0.75, ax, ax);
        Axis du = ax.dual();
        XiGrid xg;
        xg.step1 = xg.step2 = du.step;
        for (std::size_t k = 0; k < du.count; ++k) {
            double v = du.point(k);
            if (v != 0.0) xg.xi1s.push_back(v);
        }
        xg.xi2s = xg.xi1s;
        StockwellField S = forward_fast(f, wu, xg, ax, ax, SlicePadding::open, cfg.threads);

        XiFunction A = aggregate(S);
        SpectralField Fq = qft_fast(f);
        double worst = 0.0, scale = max_abs(Fq);
        for (std::size_t i1 = 0; i1 < A.xi1s.size(); ++i1)
            for (std::size_t i2 = 0; i2 < A.xi2s.size(); ++i2) {
                Quaternion want = qft_direct_point(f, A.xi1s[i1], A.xi2s[i2]);
                worst = std::max(worst, modulus(A.at(i1, i2) - want));
            }
        out.push_back(record_max_err("aggregate_vs_qft", 0, worst / scale, 1e-3));

        InversionDiagnostics diag;
        QField rec = invert(S, ax, ax, &diag);
        QField diff = linear_combination(Quaternion::one(), rec, -Quaternion::one(), f);
        double err = l2_norm(diff) / l2_norm(f);
        out.push_back(record_max_err("stockwell_inversion", 9, err, 1e-3, "resolution"));

        // truncation-dominated window: reconstruction improves with b-extent
        // (half-size grid keeps this example cheap; the effect is b-side)
        Axis hx = desk_axis(cfg.n / 2, cfg.half_extent);
        QField fh = sample_analytic(GaussianDescriptor{0.5, 0.5, 0.0, 0.0, 1.0}, hx, hx);
        WindowSpec wt = make_gaussian_unit_window(1.3, hx, hx);
        Axis hdu = hx.dual();
        XiGrid hxg;
        hxg.step1 = hxg.step2 = hdu.step;
        for (std::size_t k = 0; k < hdu.count; ++k)
            if (hdu.point(k) != 0.0) hxg.xi1s.push_back(hdu.point(k));
        hxg.xi2s = hxg.xi1s;
        StockwellField S1 = forward_fast(fh, wt, hxg, hx, hx, SlicePadding::open, cfg.threads);
        QField r1 = invert(S1, hx, hx);
        double e1 = l2_norm(linear_combination(Quaternion::one(), r1, -Quaternion::one(), fh)) /
                    l2_norm(fh);
        Axis wide = make_axis(2 * hx.count, 2.0 * hx.start, hx.step);
        StockwellField S2 =
            forward_fast(fh, wt, hxg, wide, wide, SlicePadding::open, cfg.threads);
        QField r2 = invert(S2, hx, hx);
        double e2 = l2_norm(linear_combination(Quaternion::one(), r2, -Quaternion::one(), fh)) /
                    l2_norm(fh);
        VerifyRecord br;
        br.name = "inversion_b_extent_doubling";
        br.criterion = 0;
        br.lhs = e2;
        br.rhs = e1;
        br.pass = e2 < e1;
        br.margin = (e1 - e2) / e1;
        br.label = "truncation-dominated";
        out.push_back(br);
    }

    {  // criterion 10: energy ratio, periodic slices, refinement behaviour
        QField f = modulated_signal(cfg, 1.4, 1.3, 1.3);
        double nf2 = l2_norm(f);
        nf2 *= nf2;
        StockwellField Sp = forward_fast(f, can.window, can.xi, ax, ax,
                                         SlicePadding::periodic, cfg.threads);
        double r16 = stockwell_energy(Sp) / (can.c_phi * nf2);
        XiGrid fine = half_offset_xi_grid(2 * cfg.xi_count, cfg.xi_extent);
        StockwellField Sp2 =
            forward_fast(f, can.window, fine, ax, ax, SlicePadding::periodic, cfg.threads);
        double r32 = stockwell_energy(Sp2) / (can.c_phi * nf2);

        VerifyRecord pr;
        pr.name = "stockwell_plancherel_ratio";
        pr.criterion = 10;
        pr.lhs = r16;
        pr.rhs = 1.0;
        pr.pass = r16 >= 0.95 && r16 <= 1.05;
        pr.margin = 0.05 - std::abs(1.0 - r16);
        pr.label = "resolution";
        out.push_back(pr);

        VerifyRecord rr;
        rr.name = "stockwell_plancherel_refinement";
        rr.criterion = 10;
        rr.lhs = std::abs(1.0 - r32);
        rr.rhs = std::abs(1.0 - r16);
        rr.pass = (rr.lhs < rr.rhs) && r32 >= 0.95 && r32 <= 1.05;
        rr.margin = (rr.rhs - rr.lhs) / std::max(rr.rhs, 1e-300);
        rr.label = "resolution";
        out.push_back(rr);
    }

    {  // criterion 11: the window xi-integral is constant across zeta
        AdmissibilityQuadrature wide_quad{1e-3, 4.0, 120.0, 400, 1200};
        const double zetas[3][2] = {{0.5, 0.5}, {1.0, 1.0}, {2.0, 1.0}};
        double worst = 0.0;
        for (const auto& z : zetas) {
            Quaternion J = resolution_identity_integral(can.window, can.window, z[0], z[1], wide_quad);
            worst = std::max(worst, std::abs(scalar_part(J) - can.c_phi) / can.c_phi);
        }
        out.push_back(record_max_err("resolution_identity_constancy", 11, worst, 0.02,
                                     "zeta in {(.5,.5),(1,1),(2,1)}"));
    }

    {  // criterion 12: admissibility convergence and divergence detection
        out.push_back(record_max_err("admissibility_dog_drift", 12,
                                     can.adm.refinement_error, 0.02,
                                     can.adm.admissible ? "admissible" : "not admissible"));
        WindowSpec gu = make_gaussian_unit_window(1.0, ax, ax);
        AdmissibilityReport rep = admissibility_constant(gu);
        VerifyRecord dr;
        dr.name = "admissibility_gaussian_divergent";
        dr.criterion = 12;
        dr.lhs = rep.divergent ? 1.0 : 0.0;
        dr.rhs = 1.0;
        dr.pass = rep.divergent;
        dr.margin = 0.0;
        dr.label = "25% growth rule";
        out.push_back(dr);
    }

    {  // criterion 13: Lieb product and L^p membership bounds
        QField g = modulated_signal(cfg, 1.2, 1.0, 1.0);
        WindowSpec psi = make_admissible_dog_window(0.7, 3.0, ax, ax);
        StockwellField Sg =
            forward_fast(g, psi, can.xi, ax, ax, SlicePadding::open, cfg.threads);
        double c_psi = admissibility_constant(psi).c_phi;
        double ng = l2_norm(g), npsi = psi.l2_norm();

        double vol = can.S.cell_volume();
        for (double p : {1.0, 2.0, 4.0}) {
            CompensatedSum acc;
            for (std::size_t i = 0; i < can.S.coeffs.size(); ++i)
                acc.add(std::pow(norm_sq(can.S.coeffs[i]) * norm_sq(Sg.coeffs[i]),
                                 0.25 * p));
            double lhs = std::pow(acc.value() * vol, 1.0 / p);
            double rhs = std::pow(std::sqrt(can.c_phi * c_psi), 1.0 / p) * can.norm_f * ng *
                         std::pow(can.norm_phi * npsi, 1.0 - 1.0 / p);
            char name[64];
            std::snprintf(name, sizeof(name), "lieb_product_p%g", p);
            out.push_back(record_bound(report_le(name, lhs, rhs), 13));
        }
        for (double p : {2.0, 4.0, 8.0}) {
            double lhs = stockwell_lp_norm(can.S, p);
            double rhs = std::pow(can.c_phi, 1.0 / p) *
                         std::pow(can.norm_phi, 1.0 - 2.0 / p) * can.norm_f;
            char name[64];
            std::snprintf(name, sizeof(name), "lp_membership_p%g", p);
            out.push_back(record_bound(report_le(name, lhs, rhs), 13));
        }
    }

    {  // invariant: cross-window Parseval within 5%
        QField f = modulated_signal(cfg, 1.4, 1.3, 1.3);
        QField g = modulated_signal(cfg, 1.2, 1.3, 1.3);
        WindowSpec psi = make_admissible_dog_window(0.8, 2.0, ax, ax);
        StockwellField Sf = forward_fast(f, can.window, can.xi, ax, ax,
                                         SlicePadding::periodic, cfg.threads);
        StockwellField Sg =
            forward_fast(g, psi, can.xi, ax, ax, SlicePadding::periodic, cfg.threads);
        CompensatedSum acc;
        for (std::size_t i = 0; i < Sf.coeffs.size(); ++i)
            acc.add(scalar_part(mul(Sf.coeffs[i], conj(Sg.coeffs[i]))));
        double lhs = acc.value() * Sf.cell_volume();

        Quaternion cpp = cross_admissibility(can.window, psi).c_phi_psi;
        CompensatedSum rhs_acc;
        for (std::size_t i = 0; i < f.samples.size(); ++i)
            rhs_acc.add(scalar_part(mul(mul(f.samples[i], cpp), conj(g.samples[i]))));
        double rhs = rhs_acc.value() * f.cell_weight();
        out.push_back(record_max_err("stockwell_parseval_cross", 0,
                                     std::abs(lhs - rhs) / std::abs(rhs), 0.05, "resolution"));
    }
    return out;
}

std::vector<VerifyRecord> verify_uncertainty_suite(const RunConfig& cfg) {
    cfg.validate();
    std::vector<VerifyRecord> out;
    CanonicalStockwell can = canonical_stockwell(cfg);
    const StockwellField& S = can.S;

    out.push_back(record_bound(beckner_check(S, can.norm_f, can.norm_phi), 14));

    {
        double d22 = heisenberg_constant(2.0, 2.0);
        out.push_back(record_max_err("heisenberg_constant_d22", 14,
                                     std::abs(d22 - 2.0 / 2.71828182845904523536),
                                     1e-12, "2/e"));
        // Gamma cross-check: closed form against quadrature of the integral
        auto gamma_quad = [](double x) {
            // int_0^\infty t^{x-1} e^{-t} dt = int_0^\infty 2 u^{2x-1} e^{-u^2} du
            const std::size_t n = 20000;
            const double hi = 9.0, h = hi / static_cast<double>(n);
            CompensatedSum acc;
            const double expo = 2.0 * x - 1.0;
            for (std::size_t k = 0; k <= n; ++k) {
                double u = h * static_cast<double>(k);
                double w = (k == 0 || k == n) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
                double val;
                if (u == 0.0)
                    val = expo == 0.0 ? 2.0 : 0.0;
                else
                    val = 2.0 * std::pow(u, expo) * std::exp(-u * u);
                acc.add(w * val);
            }
            return acc.value() * h / 3.0;
        };
        double worst = 0.0;
        for (auto [p, q] : {std::pair{1.0, 1.0}, {2.0, 2.0}, {2.0, 4.0}}) {
            double closed = heisenberg_constant(p, q);
            double viaq = 2.0 / (2.71828182845904523536 * p) * std::pow(p / q, p / (p + q)) *
                          std::pow(p * q / (gamma_quad(2.0 / p) * gamma_quad(2.0 / q)),
                                   p * q / (2.0 * (p + q)));
            worst = std::max(worst, std::abs(closed - viaq) / closed);
        }
        out.push_back(record_max_err("heisenberg_gamma_quadrature", 14, worst, 1e-8));
        out.push_back(record_bound(heisenberg_check(S, 2.0, 2.0, can.norm_f, can.norm_phi), 14,
                                   "p=q=2"));
    }

    {
        double m21 = local_constant(2.0, 1.0);
        out.push_back(record_max_err("local_constant_m21", 14,
                                     std::abs(m21 - std::sqrt(2.0)), 1e-12, "sqrt(2)"));
        RegionMask box = central_box_mask(S, 1.26, 1.26);
        BoundReport l12 = local_check(S, box, 1.0, 2.0, can.norm_f, can.norm_phi);
        l12.name = "local_uncertainty_a1_p2";
        out.push_back(record_bound(l12, 14));
        BoundReport l21 = local_check(S, box, 2.0, 1.0, can.norm_f, can.norm_phi);
        l21.name = "local_uncertainty_a2_p1";
        out.push_back(record_bound(l21, 14));
    }

    for (double alpha : {0.0, 0.3, 0.5}) {
        RegionMask sigma = alpha == 0.0
                               ? RegionMask::full(S.shape(), S.cell_volume())
                               : smallest_central_box(S, 1.0 - alpha * alpha);
        BoundReport ds = donoho_stark_check(S, sigma, can.c_phi, can.norm_phi);
        char name[64];
        std::snprintf(name, sizeof(name), "donoho_stark_alpha%g", alpha);
        ds.name = name;
        out.push_back(record_bound(ds, 14));
        if (alpha == 0.3) {
            BoundReport lc = lieb_concentration_check(S, sigma, 4.0, can.c_phi, can.norm_phi);
            lc.name = "lieb_concentration_p4";
            out.push_back(record_bound(lc, 14));
        }
    }
    return out;
}

std::vector<VerifyRecord> verify_all(const RunConfig& cfg) {
    std::vector<VerifyRecord> all = verify_qft_suite(cfg);
    std::vector<VerifyRecord> s = verify_stockwell_suite(cfg);
    all.insert(all.end(), s.begin(), s.end());
    std::vector<VerifyRecord> u = verify_uncertainty_suite(cfg);
    all.insert(all.end(), u.begin(), u.end());
    return all;
}

std::string render_report(const std::vector<VerifyRecord>& records) {
    std::ostringstream os;
    char buf[256];
    for (const VerifyRecord& r : records) {
        std::snprintf(buf, sizeof(buf), "%s criterion=%d lhs=%.17g rhs=%.17g margin=%.17g pass=%d",
                      r.name.c_str(), r.criterion, r.lhs, r.rhs, r.margin, r.pass ? 1 : 0);
        os << buf;
        if (!r.label.empty()) os << " label=" << r.label;
        os << "\n";
    }
    return os.str();
}

void print_summary(std::ostream& os, const std::vector<VerifyRecord>& records) {
    std::size_t passed = 0;
    for (const VerifyRecord& r : records) passed += r.pass ? 1 : 0;
    os << passed << "/" << records.size() << " checks passed\n";
    for (const VerifyRecord& r : records)
        if (!r.pass)
            os << "  FAIL " << r.name << " (lhs=" << r.lhs << ", rhs=" << r.rhs
               << (r.label.empty() ? "" : ", " + r.label) << ")\n";
}

bool all_pass(const std::vector<VerifyRecord>& records) {
    for (const VerifyRecord& r : records)
        if (!r.pass) return false;
    return true;
}

}  // namespace qsw
