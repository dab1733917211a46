#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsw/io.hpp"
#include "qsw/qft.hpp"
#include "qsw/uncertainty.hpp"
#include "qsw/verify.hpp"

namespace py = pybind11;
using namespace qsw;

namespace {

QField field_from_array(py::array_t<double, py::array::c_style | py::array::forcecast> arr,
                        double start1, double step1, double start2, double step2) {
    if (arr.ndim() != 3 || arr.shape(2) != 4)
        throw std::invalid_argument("expected an (n1, n2, 4) float64 array");
    Axis ax = make_axis(static_cast<std::size_t>(arr.shape(0)), start1, step1);
    Axis ay = make_axis(static_cast<std::size_t>(arr.shape(1)), start2, step2);
    QField f(ax, ay);
    auto r = arr.unchecked<3>();
    for (py::ssize_t m = 0; m < arr.shape(0); ++m)
        for (py::ssize_t n = 0; n < arr.shape(1); ++n)
            f.at(static_cast<std::size_t>(m), static_cast<std::size_t>(n)) =
                Quaternion{r(m, n, 0), r(m, n, 1), r(m, n, 2), r(m, n, 3)};
    return f;
}

py::array_t<double> field_to_array(const QField& f) {
    py::array_t<double> arr({f.ax.count, f.ay.count, std::size_t{4}});
    auto w = arr.mutable_unchecked<3>();
    for (std::size_t m = 0; m < f.ax.count; ++m)
        for (std::size_t n = 0; n < f.ay.count; ++n) {
            const Quaternion& q = f.at(m, n);
            w(m, n, 0) = q.r;
            w(m, n, 1) = q.i;
            w(m, n, 2) = q.j;
            w(m, n, 3) = q.k;
        }
    return arr;
}

py::array_t<double> volume_to_array(const StockwellField& S) {
    py::array_t<double> arr({S.n1(), S.n2(), S.bx.count, S.by.count, std::size_t{4}});
    auto w = arr.mutable_unchecked<5>();
    for (std::size_t i1 = 0; i1 < S.n1(); ++i1)
        for (std::size_t i2 = 0; i2 < S.n2(); ++i2)
            for (std::size_t p = 0; p < S.bx.count; ++p)
                for (std::size_t q = 0; q < S.by.count; ++q) {
                    const Quaternion& c = S.at(i1, i2, p, q);
                    w(i1, i2, p, q, 0) = c.r;
                    w(i1, i2, p, q, 1) = c.i;
                    w(i1, i2, p, q, 2) = c.j;
                    w(i1, i2, p, q, 3) = c.k;
                }
    return arr;
}

py::dict report_to_dict(const BoundReport& b) {
    py::dict d;
    d["name"] = b.name;
    d["lhs"] = b.lhs;
    d["rhs"] = b.rhs;
    d["satisfied"] = b.satisfied;
    d["margin"] = b.margin;
    d["label"] = b.label;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qsw, m) {
    m.doc() = "two-sided quaternion Fourier transform and continuous quaternion "
              "Stockwell transform";

    py::class_<Axis>(m, "Axis")
        .def(py::init([](std::size_t count, double start, double step) {
                 return make_axis(count, start, step);
             }),
             py::arg("count"), py::arg("start"), py::arg("step"))
        .def_readonly("count", &Axis::count)
        .def_readonly("start", &Axis::start)
        .def_readonly("step", &Axis::step)
        .def("dual", &Axis::dual)
        .def("points", [](const Axis& a) {
            py::array_t<double> arr(a.count);
            auto w = arr.mutable_unchecked<1>();
            for (std::size_t k = 0; k < a.count; ++k) w(k) = a.point(k);
            return arr;
        });

    py::class_<QField>(m, "Field")
        .def_property_readonly("axis_x", [](const QField& f) { return f.ax; })
        .def_property_readonly("axis_y", [](const QField& f) { return f.ay; })
        .def("to_numpy", &field_to_array)
        .def("l2_norm", [](const QField& f) { return l2_norm(f); })
        .def("lp_norm", [](const QField& f, double p) { return lp_norm(f, p); })
        .def("integrate", [](const QField& f) {
            Quaternion q = integrate(f);
            return py::make_tuple(q.r, q.i, q.j, q.k);
        });

    py::class_<SpectralField, QField>(m, "SpectralField");

    py::class_<WindowSpec>(m, "Window")
        .def_readonly("unit_integral", &WindowSpec::unit_integral)
        .def_readonly("conv_hypothesis", &WindowSpec::conv_hypothesis)
        .def_readonly("kind", &WindowSpec::kind)
        .def_property_readonly("field", [](const WindowSpec& w) { return w.field; })
        .def("l2_norm", &WindowSpec::l2_norm);

    py::class_<XiGrid>(m, "XiGrid")
        .def_property_readonly("xi1", [](const XiGrid& g) { return g.xi1s; })
        .def_property_readonly("xi2", [](const XiGrid& g) { return g.xi2s; });

    py::class_<StockwellField>(m, "StockwellVolume")
        .def_property_readonly("xi", [](const StockwellField& s) { return s.xi; })
        .def_property_readonly("b_axis_x", [](const StockwellField& s) { return s.bx; })
        .def_property_readonly("b_axis_y", [](const StockwellField& s) { return s.by; })
        .def("to_numpy", &volume_to_array)
        .def("energy", &stockwell_energy)
        .def("lp_norm", &stockwell_lp_norm);

    m.def("field", &field_from_array, py::arg("samples"), py::arg("start1"),
          py::arg("step1"), py::arg("start2"), py::arg("step2"),
          "build a quaternion field from an (n1, n2, 4) array");
    m.def("desk_axis", &desk_axis, py::arg("n") = 64, py::arg("half_extent") = 8.0);
    m.def("gaussian", [](double sigma, Axis ax) {
        return sample_analytic(GaussianDescriptor{sigma, sigma, 0.0, 0.0, 1.0}, ax, ax);
    });
    m.def("modulated_gaussian", [](double sigma, double m1, double m2, Axis ax) {
        ModulatedGaussianDescriptor d;
        d.envelope = GaussianDescriptor{sigma, sigma, 0.0, 0.0, 1.0};
        d.xi1 = m1;
        d.xi2 = m2;
        return sample_analytic(d, ax, ax);
    });

    m.def("qft", [](const QField& f, bool direct) {
        return direct ? qft_direct(f, f.ax.dual(), f.ay.dual()) : qft_fast(f);
    }, py::arg("field"), py::arg("direct") = false);
    m.def("iqft", [](const SpectralField& F) {
        return iqft_fast(F, F.ax.dual(), F.ay.dual());
    });
    m.def("convolve", &convolve);
    m.def("modulate", &modulate);

    m.def("gaussian_unit_window", [](double sigma, Axis ax) {
        return make_gaussian_unit_window(sigma, ax, ax);
    });
    m.def("admissible_dog_window", [](double alpha, double beta, Axis ax) {
        return make_admissible_dog_window(alpha, beta, ax, ax);
    });
    m.def("window_from_field", &make_window_from_field);

    m.def("half_offset_xi_grid", &half_offset_xi_grid, py::arg("count"), py::arg("extent"));
    m.def("stockwell",
          [](const QField& f, const WindowSpec& w, const XiGrid& xi, bool direct,
             bool periodic, std::size_t threads) {
              if (direct) return forward(f, w, xi, f.ax, f.ay, threads);
              return forward_fast(f, w, xi, f.ax, f.ay,
                                  periodic ? SlicePadding::periodic : SlicePadding::open,
                                  threads);
          },
          py::arg("field"), py::arg("window"), py::arg("xi"), py::arg("direct") = false,
          py::arg("periodic") = false, py::arg("threads") = 0);
    m.def("istockwell", [](const StockwellField& S) {
        InversionDiagnostics diag;
        QField rec = invert(S, S.bx, S.by, &diag);
        py::dict d;
        d["matched"] = diag.matched_points;
        d["interpolated"] = diag.interpolated_points;
        d["offgrid_fraction"] = diag.offgrid_fraction;
        return py::make_tuple(rec, d);
    });

    m.def("admissibility", [](const WindowSpec& w) {
        AdmissibilityReport rep = admissibility_constant(w);
        py::dict d;
        d["c_phi"] = rep.c_phi;
        d["refinement_error"] = rep.refinement_error;
        d["divergent"] = rep.divergent;
        d["admissible"] = rep.admissible;
        d["probe_values"] = rep.probe_values;
        return d;
    });

    m.def("entropy", [](const StockwellField& S) { return entropy(coefficient_density(S)); });
    m.def("beckner_check", [](const StockwellField& S, double nf, double nphi) {
        return report_to_dict(beckner_check(S, nf, nphi));
    });
    m.def("heisenberg_constant", &heisenberg_constant);
    m.def("heisenberg_check", [](const StockwellField& S, double p, double q, double nf,
                                 double nphi) {
        return report_to_dict(heisenberg_check(S, p, q, nf, nphi));
    });
    m.def("local_constant", &local_constant);
    m.def("gamma", &gamma_function);

    m.def("verify", [](const std::string& suite, std::size_t n, std::size_t xi_count,
                       std::size_t threads) {
        RunConfig cfg;
        cfg.n = n;
        cfg.xi_count = xi_count;
        cfg.threads = threads;
        std::vector<VerifyRecord> recs;
        if (suite == "qft")
            recs = verify_qft_suite(cfg);
        else if (suite == "stockwell")
            recs = verify_stockwell_suite(cfg);
        else if (suite == "uncertainty")
            recs = verify_uncertainty_suite(cfg);
        else
            recs = verify_all(cfg);
        py::list out;
        for (const VerifyRecord& r : recs) {
            py::dict d;
            d["name"] = r.name;
            d["criterion"] = r.criterion;
            d["lhs"] = r.lhs;
            d["rhs"] = r.rhs;
            d["margin"] = r.margin;
            d["pass"] = r.pass;
            d["label"] = r.label;
            out.append(d);
        }
        return out;
    }, py::arg("suite") = "all", py::arg("n") = 64, py::arg("xi_count") = 16,
       py::arg("threads") = 0);

    m.def("write_qsw1", [](const std::string& path, const QField& f) {
        io::write_qsw1(path, f);
    });
    m.def("read_qsw1_field", [](const std::string& path) {
        io::LoadedObject obj = io::read_qsw1(path);
        if (obj.rank != 2) throw std::runtime_error("expected a rank-2 field");
        return obj.field;
    });
}
