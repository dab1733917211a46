#pragma once

#include <string>

#include "qsw/stockwell.hpp"

namespace qsw {

/// Nonnegative density over a (xi, b) coefficient volume.
struct Density {
    std::vector<double> values;
    double cell_volume = 0.0;
};

/// |S|^2 as a density with the volume's normalized cell measure.
Density coefficient_density(const StockwellField& S);

/// Shannon entropy -sum ln(P) P cellvol with the 0*ln(0) = 0 convention.
/// Rejects negative entries.
double entropy(const Density& P);

/// One inequality instance; satisfied means the inequality holds with the
/// permissive side inflated by 1e-9 relative.
struct BoundReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool satisfied = false;
    double margin = 0.0;  // signed relative slack
    std::string label;
};

BoundReport report_ge(std::string name, double lhs, double rhs);  // lhs >= rhs
BoundReport report_le(std::string name, double lhs, double rhs);  // lhs <= rhs

/// Entropy lower bound E(|S|^2) >= K ln(1/K), K = ||f||^2 ||phi||^2.
BoundReport beckner_check(const StockwellField& S, double norm_f, double norm_phi);

/// Gamma function, relative accuracy ~1e-13 for x > 0.
double gamma_function(double x);

/// D_{p,q} = 2/(e p) (p/q)^{p/(p+q)} (p q / (Gamma(2/p) Gamma(2/q)))^{p q/(2(p+q))}.
double heisenberg_constant(double p, double q);

BoundReport heisenberg_check(const StockwellField& S, double p, double q,
                             double norm_f, double norm_phi);

/// M_{alpha,p} = ((3a+2)/(2a)) ((2a)/(a+2))^{(a+2)/(3a+2)}
///               (1/(2 sqrt(a+2)))^{2a/((3a+2)(p+1))}.
double local_constant(double alpha, double p);

BoundReport local_check(const StockwellField& S, const RegionMask& sigma,
                        double alpha, double p, double norm_f, double norm_phi);

/// Smallest alpha with off-region energy <= alpha^2 of the total.
double concentration_alpha(const StockwellField& S, const RegionMask& sigma);

BoundReport donoho_stark_check(const StockwellField& S, const RegionMask& sigma,
                               double c_phi, double norm_phi);

BoundReport lieb_concentration_check(const StockwellField& S, const RegionMask& sigma,
                                     double p, double c_phi, double norm_phi);

/// Mask of the central box |xi1|,|xi2| <= t_xi and |b1|,|b2| <= t_b.
RegionMask central_box_mask(const StockwellField& S, double t_xi, double t_b);

/// Smallest central box (scaled uniformly in all four axes relative to the
/// grid extents) holding at least the given energy fraction.
RegionMask smallest_central_box(const StockwellField& S, double energy_fraction);

}  // namespace qsw
