#include "qsw/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsw {

namespace {
constexpr double kEuler = 2.71828182845904523536028747135266250;
constexpr double kTol = 1e-9;

double rel_scale(double a, double b) { return std::max({std::abs(a), std::abs(b), 1e-300}); }
}  // namespace

Density coefficient_density(const StockwellField& S) {
    Density d;
    d.cell_volume = S.cell_volume();
    d.values.resize(S.coeffs.size());
    for (std::size_t i = 0; i < S.coeffs.size(); ++i) d.values[i] = norm_sq(S.coeffs[i]);
    return d;
}

double entropy(const Density& P) {
    CompensatedSum acc;
    for (double p : P.values) {
        if (p < 0.0) throw std::invalid_argument("entropy: negative density entry");
        if (p > 0.0) acc.add(-p * std::log(p));
    }
    return acc.value() * P.cell_volume;
}

BoundReport report_ge(std::string name, double lhs, double rhs) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    double s = rel_scale(lhs, rhs);
    r.satisfied = lhs >= rhs - kTol * s;
    r.margin = (lhs - rhs) / s;
    return r;
}

BoundReport report_le(std::string name, double lhs, double rhs) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    double s = rel_scale(lhs, rhs);
    r.satisfied = lhs <= rhs + kTol * s;
    r.margin = (rhs - lhs) / s;
    return r;
}

BoundReport beckner_check(const StockwellField& S, double norm_f, double norm_phi) {
    double K = norm_f * norm_f * norm_phi * norm_phi;
    double lhs = entropy(coefficient_density(S));
    double rhs = K * std::log(1.0 / K);
    return report_ge("beckner_entropy", lhs, rhs);
}

double gamma_function(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("gamma_function: requires x > 0");
    // Lanczos, g = 7, nine coefficients
    static const double c[9] = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        const double pi = 3.14159265358979323846264338327950288;
        return pi / (std::sin(pi * x) * gamma_function(1.0 - x));
    }
    double z = x - 1.0;
    double a = c[0];
    for (int i = 1; i < 9; ++i) a += c[i] / (z + static_cast<double>(i));
    double t = z + 7.5;
    const double sqrt2pi = 2.50662827463100050241576528481104525;
    return sqrt2pi * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double heisenberg_constant(double p, double q) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::invalid_argument("heisenberg_constant: p, q must be positive");
    double a = 2.0 / (kEuler * p);
    double b = std::pow(p / q, p / (p + q));
    double c = std::pow(p * q / (gamma_function(2.0 / p) * gamma_function(2.0 / q)),
                        p * q / (2.0 * (p + q)));
    return a * b * c;
}

namespace {

/// Weighted moments sum w(xi,b) |S|^2 cellvol, slice partials merged in order.
double weighted_energy(const StockwellField& S,
                       const std::function<double(double, double, double, double)>& w) {
    CompensatedSum acc;
    for (std::size_t i1 = 0; i1 < S.n1(); ++i1) {
        for (std::size_t i2 = 0; i2 < S.n2(); ++i2) {
            double xi1 = S.xi.xi1s[i1], xi2 = S.xi.xi2s[i2];
            CompensatedSum slice;
            for (std::size_t p = 0; p < S.bx.count; ++p) {
                double b1 = S.bx.point(p);
                for (std::size_t q = 0; q < S.by.count; ++q)
                    slice.add(w(xi1, xi2, b1, S.by.point(q)) * norm_sq(S.at(i1, i2, p, q)));
            }
            acc.add(slice.value());
        }
    }
    return acc.value() * S.cell_volume();
}

}  // namespace

BoundReport heisenberg_check(const StockwellField& S, double p, double q,
                             double norm_f, double norm_phi) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::invalid_argument("heisenberg_check: p, q must be positive");
    double m_xi = weighted_energy(S, [p](double x1, double x2, double, double) {
        return std::pow(std::hypot(x1, x2), p);
    });
    double m_b = weighted_energy(S, [q](double, double, double b1, double b2) {
        return std::pow(std::hypot(b1, b2), q);
    });
    double lhs = std::pow(m_xi, q / (p + q)) * std::pow(m_b, p / (p + q));
    double rhs = heisenberg_constant(p, q) * norm_f * norm_f * norm_phi * norm_phi;
    return report_ge("heisenberg", lhs, rhs);
}

double local_constant(double alpha, double p) {
    if (!(alpha > 0.0)) throw std::invalid_argument("local_constant: alpha must be > 0");
    if (!(p >= 1.0)) throw std::invalid_argument("local_constant: p must be >= 1");
    double t1 = (3.0 * alpha + 2.0) / (2.0 * alpha);
    double t2 = std::pow(2.0 * alpha / (alpha + 2.0), (alpha + 2.0) / (3.0 * alpha + 2.0));
    double t3 = std::pow(1.0 / (2.0 * std::sqrt(alpha + 2.0)),
                         2.0 * alpha / ((3.0 * alpha + 2.0) * (p + 1.0)));
    return t1 * t2 * t3;
}

BoundReport local_check(const StockwellField& S, const RegionMask& sigma,
                        double alpha, double p, double norm_f, double norm_phi) {
    if (sigma.flags.size() != S.coeffs.size())
        throw std::invalid_argument("local_check: mask shape mismatch");
    double vol = S.cell_volume();
    CompensatedSum masked, weighted;
    std::size_t idx = 0;
    for (std::size_t i1 = 0; i1 < S.n1(); ++i1) {
        for (std::size_t i2 = 0; i2 < S.n2(); ++i2) {
            double xi1 = S.xi.xi1s[i1], xi2 = S.xi.xi2s[i2];
            for (std::size_t pp = 0; pp < S.bx.count; ++pp) {
                double b1 = S.bx.point(pp);
                for (std::size_t q = 0; q < S.by.count; ++q, ++idx) {
                    double e = norm_sq(S.coeffs[idx]);
                    if (sigma.flags[idx]) masked.add(std::pow(e, 0.5 * p));
                    double r2 = xi1 * xi1 + xi2 * xi2 + b1 * b1 +
                                S.by.point(q) * S.by.point(q);
                    weighted.add(std::pow(r2, -alpha) * e);
                }
            }
        }
    }
    double lhs = std::pow(masked.value() * vol, 1.0 / p);
    double wnorm = std::sqrt(weighted.value() * vol);
    double ex = 4.0 * (alpha + 1.0) / ((3.0 * alpha + 2.0) * (p + 1.0));
    double rhs = local_constant(alpha, p) * std::pow(norm_f * norm_phi, 1.0 - ex) *
                 std::pow(sigma.measure(), 1.0 / (p * (p + 1.0))) * std::pow(wnorm, ex);
    return report_le("local_uncertainty", lhs, rhs);
}

double concentration_alpha(const StockwellField& S, const RegionMask& sigma) {
    if (sigma.flags.size() != S.coeffs.size())
        throw std::invalid_argument("concentration_alpha: mask shape mismatch");
    CompensatedSum total, off;
    for (std::size_t i = 0; i < S.coeffs.size(); ++i) {
        double e = norm_sq(S.coeffs[i]);
        total.add(e);
        if (!sigma.flags[i]) off.add(e);
    }
    if (!(total.value() > 0.0))
        throw std::invalid_argument("concentration_alpha: zero coefficient field");
    return std::sqrt(std::max(0.0, off.value() / total.value()));
}

BoundReport donoho_stark_check(const StockwellField& S, const RegionMask& sigma,
                               double c_phi, double norm_phi) {
    double a = concentration_alpha(S, sigma);
    double lhs = sigma.measure();
    double rhs = (1.0 - a * a) * c_phi / (norm_phi * norm_phi);
    BoundReport r = report_ge("donoho_stark", lhs, rhs);
    r.label = "alpha=" + std::to_string(a);
    return r;
}

BoundReport lieb_concentration_check(const StockwellField& S, const RegionMask& sigma,
                                     double p, double c_phi, double norm_phi) {
    if (!(p > 2.0)) throw std::invalid_argument("lieb_concentration_check: requires p > 2");
    double a = concentration_alpha(S, sigma);
    double lhs = sigma.measure();
    double rhs = c_phi * std::pow(1.0 - a * a, p / (p - 2.0)) / (norm_phi * norm_phi);
    BoundReport r = report_ge("lieb_concentration", lhs, rhs);
    r.label = "alpha=" + std::to_string(a);
    return r;
}

RegionMask central_box_mask(const StockwellField& S, double t_xi, double t_b) {
    RegionMask m = RegionMask::empty(S.shape(), S.cell_volume());
    std::size_t idx = 0;
    for (std::size_t i1 = 0; i1 < S.n1(); ++i1) {
        bool ok1 = std::abs(S.xi.xi1s[i1]) <= t_xi;
        for (std::size_t i2 = 0; i2 < S.n2(); ++i2) {
            bool ok2 = ok1 && std::abs(S.xi.xi2s[i2]) <= t_xi;
            for (std::size_t p = 0; p < S.bx.count; ++p) {
                bool ok3 = ok2 && std::abs(S.bx.point(p)) <= t_b;
                for (std::size_t q = 0; q < S.by.count; ++q, ++idx)
                    m.flags[idx] = (ok3 && std::abs(S.by.point(q)) <= t_b) ? 1 : 0;
            }
        }
    }
    return m;
}

RegionMask smallest_central_box(const StockwellField& S, double energy_fraction) {
    double max_xi = 0.0, max_b = 0.0;
    for (double v : S.xi.xi1s) max_xi = std::max(max_xi, std::abs(v));
    for (double v : S.xi.xi2s) max_xi = std::max(max_xi, std::abs(v));
    for (std::size_t p = 0; p < S.bx.count; ++p)
        max_b = std::max(max_b, std::abs(S.bx.point(p)));
    for (std::size_t q = 0; q < S.by.count; ++q)
        max_b = std::max(max_b, std::abs(S.by.point(q)));

    CompensatedSum total;
    for (const Quaternion& c : S.coeffs) total.add(norm_sq(c));
    double target = energy_fraction * total.value();

    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 40; ++iter) {
        double mid = 0.5 * (lo + hi);
        RegionMask m = central_box_mask(S, mid * max_xi, mid * max_b);
        CompensatedSum in;
        for (std::size_t i = 0; i < m.flags.size(); ++i)
            if (m.flags[i]) in.add(norm_sq(S.coeffs[i]));
        if (in.value() >= target)
            hi = mid;
        else
            lo = mid;
    }
    return central_box_mask(S, hi * max_xi, hi * max_b);
}

}  // namespace qsw
