#include <doctest.h>

#include <cmath>

#include "qsw/uncertainty.hpp"
#include "qsw/verify.hpp"

using namespace qsw;

namespace {

// small synthetic volume with controllable energy layout
StockwellField synthetic_volume() {
    StockwellField S;
    S.xi.xi1s = {-1.5, -0.5, 0.5, 1.5};
    S.xi.xi2s = S.xi.xi1s;
    S.xi.step1 = S.xi.step2 = 1.0;
    S.bx = make_axis(4, -2.0, 1.0);
    S.by = S.bx;
    S.coeffs.assign(4 * 4 * 4 * 4, Quaternion{});
    return S;
}

}  // namespace

TEST_CASE("entropy closed forms") {
    Density P;
    P.cell_volume = 0.125;
    P.values.assign(64, 0.0);
    CHECK(entropy(P) == 0.0);  // 0 ln 0 = 0 everywhere

    // uniform density 1/mu over a region of measure mu has entropy ln(mu)
    double mu = 24 * P.cell_volume;
    for (int i = 0; i < 24; ++i) P.values[i] = 1.0 / mu;
    CHECK(entropy(P) == doctest::Approx(std::log(mu)).epsilon(1e-12));

    P.values[0] = -1.0;
    CHECK_THROWS_AS(entropy(P), std::invalid_argument);
}

TEST_CASE("gamma function") {
    CHECK(gamma_function(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_function(2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_function(0.5) ==
          doctest::Approx(1.7724538509055160273).epsilon(1e-12));
    CHECK(gamma_function(5.0) == doctest::Approx(24.0).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_function(0.0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_function(-1.0), std::invalid_argument);
}

TEST_CASE("closed-form constants") {
    const double two_over_e = 0.73575888234288467;
    CHECK(heisenberg_constant(2.0, 2.0) == doctest::Approx(two_over_e).epsilon(1e-12));
    CHECK(heisenberg_constant(1.0, 1.0) == doctest::Approx(two_over_e).epsilon(1e-12));
    CHECK(local_constant(2.0, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(heisenberg_constant(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(local_constant(-1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(local_constant(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("concentration alpha") {
    StockwellField S = synthetic_volume();
    // place 99% of the energy at one interior cell, 1% outside
    S.at(1, 1, 1, 1) = Quaternion{std::sqrt(99.0), 0, 0, 0};
    S.at(3, 3, 3, 3) = Quaternion{0, 1.0, 0, 0};

    RegionMask all = RegionMask::full(S.shape(), S.cell_volume());
    CHECK(concentration_alpha(S, all) == 0.0);
    RegionMask none = RegionMask::empty(S.shape(), S.cell_volume());
    CHECK(concentration_alpha(S, none) == 1.0);

    RegionMask box = central_box_mask(S, 1.0, 1.5);  // contains the heavy cell only
    CHECK(concentration_alpha(S, box) == doctest::Approx(0.1).epsilon(1e-12));

    // enlarging the region never increases alpha
    RegionMask bigger = central_box_mask(S, 2.0, 2.5);
    CHECK(concentration_alpha(S, bigger) <= concentration_alpha(S, box));

    StockwellField zero = synthetic_volume();
    CHECK_THROWS_AS(concentration_alpha(zero, all), std::invalid_argument);
}

TEST_CASE("donoho-stark and lieb concentration edge cases") {
    StockwellField S = synthetic_volume();
    S.at(1, 1, 1, 1) = Quaternion{1, 0, 0, 0};

    // alpha = 1: empty region, rhs = 0, trivially satisfied
    RegionMask none = RegionMask::empty(S.shape(), S.cell_volume());
    BoundReport ds = donoho_stark_check(S, none, 18.47, 3.8);
    CHECK(ds.rhs == doctest::Approx(0.0));
    CHECK(ds.satisfied);

    // alpha = 0: full support inside, rhs = C_phi / ||phi||^2
    RegionMask all = RegionMask::full(S.shape(), S.cell_volume());
    BoundReport ds0 = donoho_stark_check(S, all, 18.47, 3.8);
    CHECK(ds0.rhs == doctest::Approx(18.47 / (3.8 * 3.8)).epsilon(1e-12));

    CHECK_THROWS_AS(lieb_concentration_check(S, all, 2.0, 18.47, 3.8),
                    std::invalid_argument);

    // p -> infinity limit of the Lieb bound approaches the Donoho-Stark bound
    BoundReport lc = lieb_concentration_check(S, all, 1e9, 18.47, 3.8);
    CHECK(lc.rhs == doctest::Approx(ds0.rhs).epsilon(1e-6));
}

TEST_CASE("beckner closed-form right-hand side") {
    StockwellField S = synthetic_volume();
    S.at(1, 1, 1, 1) = Quaternion{0.5, 0, 0, 0};
    // unit norms: rhs = 0
    BoundReport b1 = beckner_check(S, 1.0, 1.0);
    CHECK(b1.rhs == 0.0);
    // K = e: rhs = -e
    BoundReport b2 = beckner_check(S, std::sqrt(2.71828182845904523536), 1.0);
    CHECK(b2.rhs == doctest::Approx(-2.71828182845904523536).epsilon(1e-12));
}

TEST_CASE("bound reports carry tolerance-inflated verdicts") {
    BoundReport eq = report_ge("edge", 1.0, 1.0 + 5e-10);
    CHECK(eq.satisfied);  // within the 1e-9 relative inflation
    BoundReport bad = report_ge("bad", 1.0, 1.1);
    CHECK_FALSE(bad.satisfied);
    BoundReport le = report_le("le", 1.0 + 5e-10, 1.0);
    CHECK(le.satisfied);
}

TEST_CASE("local check rejects bad parameters and empty regions pass") {
    StockwellField S = synthetic_volume();
    S.at(1, 1, 1, 1) = Quaternion{1, 0, 0, 0};
    RegionMask none = RegionMask::empty(S.shape(), S.cell_volume());
    BoundReport r = local_check(S, none, 1.0, 2.0, 1.0, 1.0);
    CHECK(r.lhs == 0.0);
    CHECK(r.satisfied);
    CHECK_THROWS_AS(local_check(S, none, -1.0, 2.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("beckner scale covariance on a real volume") {
    RunConfig cfg;
    cfg.n = 32;
    cfg.xi_count = 8;
    cfg.threads = 2;
    Axis ax = cfg.axis();
    WindowSpec dog = make_admissible_dog_window(0.5, 2.0, ax, ax);
    QField f = sample_analytic(GaussianDescriptor{1, 1, 0, 0, 1}, ax, ax);
    XiGrid xi = half_offset_xi_grid(cfg.xi_count, cfg.xi_extent);
    double nphi = dog.l2_norm();
    for (double c : {0.5, 1.0, 2.0}) {
        QField fc = scaled(Quaternion{c, 0, 0, 0}, f);
        StockwellField S = forward_fast(fc, dog, xi, ax, ax, SlicePadding::open, 2);
        BoundReport b = beckner_check(S, l2_norm(fc), nphi);
        CHECK(b.satisfied);
    }
}

TEST_CASE("entropy is nonnegative for a unit-norm pair") {
    Axis ax = desk_axis(32);
    WindowSpec dog = make_admissible_dog_window(0.5, 2.0, ax, ax);
    Quaternion inv_norm{1.0 / dog.l2_norm(), 0, 0, 0};
    WindowSpec unit_w = combine_windows(inv_norm, dog, Quaternion{}, dog);
    CHECK(unit_w.l2_norm() == doctest::Approx(1.0).epsilon(1e-12));

    QField g = sample_analytic(GaussianDescriptor{1, 1, 0, 0, 1}, ax, ax);
    QField f = scaled(Quaternion{1.0 / l2_norm(g), 0, 0, 0}, g);
    XiGrid xi = half_offset_xi_grid(8, 4.0);
    StockwellField S = forward_fast(f, unit_w, xi, ax, ax, SlicePadding::open, 2);
    CHECK(entropy(coefficient_density(S)) >= 0.0);
}

TEST_CASE("lieb concentration is trivial as alpha reaches one") {
    StockwellField S = synthetic_volume();
    S.at(1, 1, 1, 1) = Quaternion{1, 0, 0, 0};
    RegionMask none = RegionMask::empty(S.shape(), S.cell_volume());
    BoundReport r = lieb_concentration_check(S, none, 4.0, 18.47, 3.8);
    CHECK(r.rhs == doctest::Approx(0.0));
    CHECK(r.satisfied);
}
