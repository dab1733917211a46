#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsw/io.hpp"
#include "qsw/qft.hpp"
#include "qsw/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

void write_field(const std::string& path, const qsw::QField& f, const std::string& fmt) {
    if (fmt == "csv")
        qsw::io::write_csv(path, f);
    else
        qsw::io::write_qsw1(path, f);
}

qsw::QField load_field(const std::string& path) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
        return qsw::io::read_csv_field(path);
    qsw::io::LoadedObject obj = qsw::io::read_qsw1(path);
    if (obj.rank != 2) throw std::runtime_error("expected a rank-2 field: " + path);
    return std::move(obj.field);
}

struct GridOpts {
    std::size_t n = 64;
    double half_extent = 8.0;
    qsw::Axis axis() const { return qsw::desk_axis(n, half_extent); }
};

void add_grid_opts(CLI::App* cmd, GridOpts& g) {
    cmd->add_option("-n,--samples", g.n, "samples per axis (power of two)");
    cmd->add_option("-L,--half-extent", g.half_extent, "half extent of [-L, L)");
}

int run_gen(const std::string& kind, const GridOpts& grid, double sigma, double sigma2,
            double c1, double c2, double xi1, double xi2, double alpha, double beta,
            const std::string& image, const std::string& out, const std::string& fmt) {
    qsw::Axis ax = grid.axis();
    qsw::QField f;
    if (kind == "gaussian") {
        f = qsw::sample_analytic(
            qsw::GaussianDescriptor{sigma, sigma2 > 0 ? sigma2 : sigma, c1, c2, 1.0}, ax, ax);
    } else if (kind == "modulated-gaussian") {
        qsw::ModulatedGaussianDescriptor d;
        d.envelope = qsw::GaussianDescriptor{sigma, sigma2 > 0 ? sigma2 : sigma, c1, c2, 1.0};
        d.xi1 = xi1;
        d.xi2 = xi2;
        f = qsw::sample_analytic(d, ax, ax);
    } else if (kind == "gaussian_unit") {
        f = qsw::make_gaussian_unit_window(sigma, ax, ax).field;
    } else if (kind == "admissible_dog") {
        f = qsw::make_admissible_dog_window(alpha, beta, ax, ax).field;
    } else if (kind == "rgb") {
        if (image.empty()) throw CLI::ValidationError("--image required for kind rgb");
        f = qsw::io::read_ppm_as_field(image, ax, ax);
    } else {
        throw CLI::ValidationError("unknown kind: " + kind);
    }
    write_field(out, f, fmt);
    std::cout << "wrote " << out << " (" << ax.count << "x" << ax.count << ")\n";
    return kExitOk;
}

int run_qft(const std::string& in, const std::string& out, bool inverse, bool direct,
            const std::string& fmt) {
    qsw::QField f = load_field(in);
    qsw::QField result;
    if (!inverse) {
        result = direct ? qsw::qft_direct(f, f.ax.dual(), f.ay.dual()) : qsw::qft_fast(f);
    } else {
        qsw::SpectralField F(std::move(f));
        qsw::Axis sx = F.ax.dual(), sy = F.ay.dual();
        result = direct ? qsw::iqft_direct(F, sx, sy) : qsw::iqft_fast(F, sx, sy);
    }
    write_field(out, result, fmt);
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

qsw::WindowSpec load_window(const std::string& spec, const qsw::Axis& ax) {
    // window spec: "admissible_dog:alpha,beta" | "gaussian_unit:sigma" | a field file
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    if (kind == "admissible_dog") {
        double a = 0.5, b = 2.0;
        if (colon != std::string::npos)
            std::sscanf(spec.c_str() + colon + 1, "%lf,%lf", &a, &b);
        return qsw::make_admissible_dog_window(a, b, ax, ax);
    }
    if (kind == "gaussian_unit") {
        double s = 1.0;
        if (colon != std::string::npos) s = std::stod(spec.substr(colon + 1));
        return qsw::make_gaussian_unit_window(s, ax, ax);
    }
    return qsw::make_window_from_field(load_field(spec));
}

int run_stockwell(const std::string& in, const std::string& window, const std::string& out,
                  std::size_t xi_count, double xi_extent, const std::string& xi_kind,
                  bool direct, bool periodic, const std::string& energy_map,
                  std::size_t slice1, std::size_t slice2, std::size_t threads) {
    qsw::QField f = load_field(in);
    qsw::WindowSpec w = load_window(window, f.ax);
    if (!w.field.congruent(qsw::QField(f.ax, f.ay)))
        throw std::runtime_error("window grid does not match the signal grid");
    qsw::XiGrid xi;
    if (xi_kind == "matched") {
        // uniform grid at the dual frequency step, offset half a step so
        // no node touches an axis; every dual point interpolates from
        // symmetric neighbours and the volume stays file-representable
        qsw::Axis du = f.ax.dual();
        xi = qsw::half_offset_xi_grid(du.count,
                                      0.5 * du.step * static_cast<double>(du.count));
    } else if (xi_kind == "half-offset") {
        xi = qsw::half_offset_xi_grid(xi_count, xi_extent);
    } else {
        throw CLI::ValidationError("unknown xi grid kind: " + xi_kind);
    }
    qsw::StockwellField S;
    if (direct) {
        S = qsw::forward(f, w, xi, f.ax, f.ay, threads);
    } else {
        if (!w.conv_hypothesis)
            throw std::runtime_error(
                "window fails the convolution hypothesis; rerun with --direct");
        S = qsw::forward_fast(f, w, xi, f.ax, f.ay,
                              periodic ? qsw::SlicePadding::periodic : qsw::SlicePadding::open,
                              threads);
    }
    qsw::io::write_qsw1(out, S);
    std::cout << "wrote " << out << " (" << S.n1() << "x" << S.n2() << "x" << S.bx.count
              << "x" << S.by.count << ")\n";
    if (!energy_map.empty()) {
        if (slice1 >= S.n1() || slice2 >= S.n2())
            throw std::runtime_error("energy-map slice index out of range");
        std::vector<double> px(S.bx.count * S.by.count);
        for (std::size_t p = 0; p < S.bx.count; ++p)
            for (std::size_t q = 0; q < S.by.count; ++q)
                px[p * S.by.count + q] = qsw::modulus(S.at(slice1, slice2, p, q));
        qsw::io::write_pgm16(energy_map, px, S.bx.count, S.by.count);
        std::cout << "wrote " << energy_map << " (xi slice " << slice1 << "," << slice2
                  << ")\n";
    }
    return kExitOk;
}

int run_istockwell(const std::string& in, const std::string& out,
                   const std::string& reference, const std::string& fmt) {
    qsw::io::LoadedObject obj = qsw::io::read_qsw1(in);
    if (obj.rank != 4) throw std::runtime_error("expected a rank-4 coefficient volume");
    qsw::Axis sx = obj.vol.bx, sy = obj.vol.by;
    qsw::InversionDiagnostics diag;
    qsw::QField rec = qsw::invert(obj.vol, sx, sy, &diag);
    write_field(out, rec, fmt);
    std::cout << "wrote " << out << " (matched " << diag.matched_points << ", interpolated "
              << diag.interpolated_points << ", off-grid fraction " << diag.offgrid_fraction
              << ")\n";
    if (!reference.empty()) {
        qsw::QField ref = load_field(reference);
        qsw::QField diff = qsw::linear_combination(qsw::Quaternion::one(), rec,
                                                   -qsw::Quaternion::one(), ref);
        double err = qsw::l2_norm(diff) / qsw::l2_norm(ref);
        std::cout << "reconstruction relative L2 error = " << err << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& suite, const std::string& config_path,
               const qsw::RunConfig& overrides, const std::string& report_path) {
    qsw::RunConfig cfg = overrides;
    if (!config_path.empty()) {
        cfg = qsw::config_from_kv(qsw::io::read_config(config_path));
        // explicit command-line values win over the file
        if (overrides.n != 64) cfg.n = overrides.n;
        if (overrides.xi_count != 16) cfg.xi_count = overrides.xi_count;
        if (overrides.threads != 0) cfg.threads = overrides.threads;
    }
    cfg.validate();

    std::vector<qsw::VerifyRecord> records;
    if (suite == "qft")
        records = qsw::verify_qft_suite(cfg);
    else if (suite == "stockwell")
        records = qsw::verify_stockwell_suite(cfg);
    else if (suite == "uncertainty")
        records = qsw::verify_uncertainty_suite(cfg);
    else if (suite == "all")
        records = qsw::verify_all(cfg);
    else
        throw CLI::ValidationError("unknown suite: " + suite);

    std::string report = qsw::render_report(records);
    std::string target = report_path;
    if (target.empty() && !cfg.out_dir.empty()) target = cfg.out_dir + "/report.txt";
    if (!target.empty()) {
        std::ofstream os(target);
        if (!os) throw std::runtime_error("cannot write report: " + target);
        os << report;
    } else {
        std::cout << report;
    }
    qsw::print_summary(std::cout, records);
    return qsw::all_pass(records) ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-sided quaternion Fourier and Stockwell transforms"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate signal or window fields");
    std::string gen_kind, gen_out = "field.qsw", gen_fmt = "qsw1", gen_image;
    GridOpts gen_grid;
    double gen_sigma = 1.0, gen_sigma2 = -1.0, gen_c1 = 0.0, gen_c2 = 0.0;
    double gen_xi1 = 0.0, gen_xi2 = 0.0;
    double gen_alpha = 0.5, gen_beta = 2.0;
    gen->add_option("kind", gen_kind,
                    "gaussian|modulated-gaussian|gaussian_unit|admissible_dog|rgb")
        ->required();
    gen->add_option("-o,--out", gen_out, "output path");
    gen->add_option("--format", gen_fmt, "qsw1|csv");
    add_grid_opts(gen, gen_grid);
    gen->add_option("--sigma", gen_sigma, "gaussian width");
    gen->add_option("--sigma2", gen_sigma2, "second-axis width (defaults to --sigma)");
    gen->add_option("--center1", gen_c1, "gaussian center, first axis");
    gen->add_option("--center2", gen_c2, "gaussian center, second axis");
    gen->add_option("--xi1", gen_xi1, "modulation frequency, first axis");
    gen->add_option("--xi2", gen_xi2, "modulation frequency, second axis");
    gen->add_option("--alpha", gen_alpha, "difference-of-gaussians alpha");
    gen->add_option("--beta", gen_beta, "difference-of-gaussians beta");
    gen->add_option("--image", gen_image, "P6 PPM raster for kind rgb");

    // qft
    auto* qft = app.add_subcommand("qft", "two-sided quaternion Fourier transform");
    std::string qft_in, qft_out = "spectrum.qsw", qft_fmt = "qsw1";
    bool qft_inverse = false, qft_direct_flag = false, qft_fast_flag = false;
    qft->add_option("-i,--in", qft_in, "input field")->required();
    qft->add_option("-o,--out", qft_out, "output path");
    qft->add_option("--format", qft_fmt, "qsw1|csv");
    qft->add_flag("--inverse", qft_inverse, "apply the inverse transform");
    auto* qft_direct_opt =
        qft->add_flag("--direct", qft_direct_flag, "force the direct quadrature path");
    qft->add_flag("--fast", qft_fast_flag, "force the fast path (default)")
        ->excludes(qft_direct_opt);

    // stockwell
    auto* st = app.add_subcommand("stockwell", "continuous quaternion Stockwell transform");
    std::string st_in, st_window = "admissible_dog:0.5,2", st_out = "stockwell.qsw";
    std::string st_energy, st_xi_kind = "half-offset";
    std::size_t st_xi_count = 16, st_slice1 = 0, st_slice2 = 0, st_threads = 0;
    double st_xi_extent = 4.0;
    bool st_direct = false, st_periodic = false;
    st->add_option("-i,--in", st_in, "input field")->required();
    st->add_option("-w,--window", st_window,
                   "admissible_dog:a,b | gaussian_unit:s | window field file");
    st->add_option("-o,--out", st_out, "output path");
    st->add_option("--xi-count", st_xi_count, "xi nodes per axis");
    st->add_option("--xi-extent", st_xi_extent, "xi grid extent");
    st->add_option("--xi-grid", st_xi_kind, "half-offset|matched (matched = dual-step off-axis)");
    st->add_flag("--direct", st_direct, "direct quadrature path");
    st->add_flag("--periodic", st_periodic, "periodic slice padding (fast path)");
    st->add_option("--energy-map", st_energy, "write one xi slice as 16-bit PGM");
    st->add_option("--slice1", st_slice1, "energy-map xi1 index");
    st->add_option("--slice2", st_slice2, "energy-map xi2 index");
    st->add_option("--threads", st_threads, "worker count (default QSW_THREADS or 1)");

    // istockwell
    auto* ist = app.add_subcommand("istockwell", "invert a Stockwell coefficient volume");
    std::string ist_in, ist_out = "reconstructed.qsw", ist_ref, ist_fmt = "qsw1";
    ist->add_option("-i,--in", ist_in, "coefficient volume")->required();
    ist->add_option("-o,--out", ist_out, "output path");
    ist->add_option("--reference", ist_ref, "original field for the error summary");
    ist->add_option("--format", ist_fmt, "qsw1|csv");

    // verify
    auto* ver = app.add_subcommand("verify", "run the verification suites");
    std::string ver_suite = "all", ver_config, ver_report;
    qsw::RunConfig ver_cfg;
    ver->add_option("--suite", ver_suite, "all|qft|stockwell|uncertainty");
    ver->add_option("--config", ver_config, "key = value config file");
    ver->add_option("-n,--samples", ver_cfg.n, "samples per axis");
    ver->add_option("--xi-count", ver_cfg.xi_count, "xi nodes per axis");
    ver->add_option("--threads", ver_cfg.threads, "worker count");
    ver->add_option("--report", ver_report, "write the machine-readable report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed())
            return run_gen(gen_kind, gen_grid, gen_sigma, gen_sigma2, gen_c1, gen_c2,
                           gen_xi1, gen_xi2, gen_alpha, gen_beta, gen_image, gen_out,
                           gen_fmt);
        if (qft->parsed())
            return run_qft(qft_in, qft_out, qft_inverse, qft_direct_flag, qft_fmt);
        if (st->parsed())
            return run_stockwell(st_in, st_window, st_out, st_xi_count, st_xi_extent,
                                 st_xi_kind, st_direct, st_periodic, st_energy, st_slice1,
                                 st_slice2, st_threads);
        if (ist->parsed()) return run_istockwell(ist_in, ist_out, ist_ref, ist_fmt);
        if (ver->parsed()) return run_verify(ver_suite, ver_config, ver_cfg, ver_report);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
