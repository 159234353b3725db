#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "elastoshock/lax.hpp"
#include "elastoshock/sampling.hpp"

using namespace elastoshock;

namespace {

// makes c^2(rho) = rho, so rho = 1 gives unit sound speed
const EquationOfState kUnitLaw = EquationOfState::polytropic(0.5, 2.0);

/// Independent oracle: eigenvalues of (A0)^{-1} sum_j xi_j A_j for the
/// quasilinear symmetric system, via the congruent symmetric matrix
/// A0^{-1/2} (sum_j xi_j A_j) A0^{-1/2} and a dense self-adjoint solve.
Eigen::Matrix<double, 13, 1> oracle_speeds(const MaterialState& st, const EquationOfState& eos,
                                           const Eigen::Vector3d& xi) {
    using M13 = Eigen::Matrix<double, 13, 13>;
    const double rho = st.rho;
    const double c2 = eos.sound_speed_sq(rho);
    const double vxi = st.v.dot(xi);

    M13 A = M13::Zero();
    A(0, 0) = vxi / (rho * c2);
    for (int k = 0; k < 3; ++k) {
        A(0, 1 + k) = xi(k);
        A(1 + k, 0) = xi(k);
        A(1 + k, 1 + k) = rho * vxi;
    }
    for (int k = 4; k < 13; ++k) A(k, k) = rho * vxi;
    for (int m = 0; m < 3; ++m) {
        const double coupling = -rho * st.F.col(m).dot(xi);
        for (int k = 0; k < 3; ++k) {
            A(1 + k, 4 + 3 * m + k) = coupling;
            A(4 + 3 * m + k, 1 + k) = coupling;
        }
    }

    Eigen::Matrix<double, 13, 1> dinv;
    dinv(0) = std::sqrt(rho * c2);
    for (int k = 1; k < 13; ++k) dinv(k) = 1.0 / std::sqrt(rho);
    const M13 S = dinv.asDiagonal() * A * dinv.asDiagonal();
    Eigen::SelfAdjointEigenSolver<M13> es(S);
    return es.eigenvalues();
}

}  // namespace

TEST_CASE("closed-form spectrum at the identity state") {
    MaterialState st;  // rho = 1, v = 0, F = I
    const auto sp = characteristic_speeds(st, kUnitLaw, {1.0, 0.0, 0.0});
    CHECK(sp.fast_minus() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
    CHECK(sp.shear_minus() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sp.speeds[2] == doctest::Approx(-1.0).epsilon(1e-14));
    for (int i = 3; i <= 9; ++i) CHECK(sp.speeds[i] == 0.0);
    CHECK(sp.shear_plus() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sp.fast_plus() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    st.v = {1.0, 0.0, 0.0};  // pure drift shift
    const auto shifted = characteristic_speeds(st, kUnitLaw, {1.0, 0.0, 0.0});
    for (int i = 0; i < 13; ++i) {
        CHECK(shifted.speeds[i] == doctest::Approx(sp.speeds[i] + 1.0).epsilon(1e-14));
    }

    CHECK_THROWS_AS(characteristic_speeds(st, kUnitLaw, {0.0, 0.0, 0.0}), ParameterError);
}

TEST_CASE("closed forms agree with the dense eigensolver") {
    Rng rng(31337);
    for (int i = 0; i < 200; ++i) {
        MaterialState st;
        st.rho = rng.uniform(0.3, 3.0);
        st.v = {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) st.F(r, c) = (r == c) + rng.uniform(-0.5, 0.5);
        if (!(st.F.determinant() > 0.0)) continue;
        Eigen::Vector3d xi{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        if (xi.norm() < 0.1) continue;

        const auto eos = EquationOfState::polytropic(rng.uniform(0.4, 2.0), rng.uniform(1.0, 3.0));
        const auto sp = characteristic_speeds(st, eos, xi);
        const auto ref = oracle_speeds(st, eos, xi);
        double scale = 1.0;
        for (int k = 0; k < 13; ++k) scale = std::max(scale, std::abs(ref(k)));
        for (int k = 0; k < 13; ++k) {
            CHECK(std::abs(sp.speeds[k] - ref(k)) <= 1e-10 * scale);
        }
        const auto pattern = multiplicity_pattern(sp);
        REQUIRE(pattern.size() == 5);
        CHECK(pattern == std::vector<int>{1, 2, 7, 2, 1});

        // drift symmetry: speeds pair up around v.xi
        const double drift = st.v.dot(xi);
        CHECK(sp.fast_minus() + sp.fast_plus() == doctest::Approx(2 * drift).epsilon(1e-12));
        CHECK(sp.shear_minus() + sp.shear_plus() == doctest::Approx(2 * drift).epsilon(1e-12));
    }
}

TEST_CASE("planar Lax window") {
    DimensionlessShock gas;  // formal zero gradient: m1 = 0, mstar = 1
    gas.mach = 0.5;
    gas.mach_minus = 2.0;
    gas.density_ratio = 2.0;
    CHECK(check_lax_planar(gas).pass);

    DimensionlessShock boundary;
    boundary.F.row(0) = Eigen::RowVector3d(0.8, 0.0, 0.0);
    boundary.mach = 0.8;  // exactly at the lower bound
    boundary.mach_minus = 10.0;
    boundary.density_ratio = 2.0;
    CHECK_FALSE(check_lax_planar(boundary).pass);

    DimensionlessShock stretched;
    stretched.F = Eigen::Matrix3d::Identity();
    stretched.mach = 1.2;
    stretched.mach_minus = 3.0;
    stretched.density_ratio = 2.0;
    const auto r = check_lax_planar(stretched);
    CHECK(r.pass);
    CHECK(r.upstream_slack == doctest::Approx(0.78997487421323990947).epsilon(1e-14));
}

TEST_CASE("pointwise Lax check matches the planar one on flat embeddings") {
    Rng rng(555);
    int seen = 0;
    while (seen < 100) {
        MaterialState up;
        up.rho = rng.uniform(0.5, 2.0);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) up.F(r, c) = (r == c) + rng.uniform(-0.3, 0.3);
        if (!(up.F.determinant() > 0.0)) continue;
        const double R = rng.next_double() < 0.3 ? rng.uniform(0.4, 0.95)
                                                 : rng.uniform(1.05, 4.0);
        const auto eos = EquationOfState::polytropic(1.0, rng.uniform(1.0, 3.0));
        const auto pair = solve_downstream(eos, up, R);
        const auto planar = check_lax_planar(nondimensionalize(pair));
        CHECK(check_lax_pointwise(planar_embedding(pair)) == planar.pass);
        ++seen;
    }
}

TEST_CASE("front speed drives the Lax inequalities") {
    MaterialState up;
    const auto pair = solve_downstream(kUnitLaw, up, 2.0);
    auto pt = planar_embedding(pair);
    REQUIRE(check_lax_pointwise(pt));

    // large positive front speed kills the downstream inequality
    pt.phi_t = 10.0;
    CHECK_FALSE(check_lax_pointwise(pt));

    // exact equality with the upper bound fails (strictness)
    const double elastic = (pt.F_plus.transpose() * pt.normal()).squaredNorm();
    const double upper = std::sqrt(pt.c_plus * pt.c_plus + elastic);
    pt.phi_t = pt.v_plus(0) - upper;
    CHECK_FALSE(check_lax_pointwise(pt));
}

TEST_CASE("block structure over random directions") {
    MaterialState st;
    CHECK(block_structure_check(st, kUnitLaw, 1000));

    MaterialState thin;
    thin.F = Eigen::Vector3d(1.0, 1.0, 1e-6).asDiagonal();
    CHECK(block_structure_check(thin, kUnitLaw, 1000));

    MaterialState singular;
    singular.F = Eigen::Vector3d(1.0, 1.0, 0.0).asDiagonal();
    CHECK_THROWS_AS(block_structure_check(singular, kUnitLaw, 10), ParameterError);
}
