#include "elastoshock/lax.hpp"

#include <algorithm>
#include <cmath>

#include "elastoshock/sampling.hpp"

namespace elastoshock {

CharacteristicSpectrum characteristic_speeds(const MaterialState& state,
                                             const EquationOfState& eos,
                                             const Eigen::Vector3d& xi) {
    if (xi.squaredNorm() == 0.0) throw ParameterError("direction xi must be nonzero");
    const double c2 = eos.sound_speed_sq(state.rho);
    const double drift = state.v.dot(xi);
    // elastic quadratic form: sum over columns F_j of (F_j . xi)^2 = |F^T xi|^2
    const double elastic = (state.F.transpose() * xi).squaredNorm();
    const double shear = std::sqrt(elastic);
    const double fast = std::sqrt(c2 * xi.squaredNorm() + elastic);

    CharacteristicSpectrum sp;
    sp.speeds[0] = drift - fast;
    sp.speeds[1] = sp.speeds[2] = drift - shear;
    for (int i = 3; i <= 9; ++i) sp.speeds[i] = drift;
    sp.speeds[10] = sp.speeds[11] = drift + shear;
    sp.speeds[12] = drift + fast;
    return sp;
}

std::vector<int> multiplicity_pattern(const CharacteristicSpectrum& spectrum, double rel_tol) {
    double scale = 1.0;
    for (double s : spectrum.speeds) scale = std::max(scale, std::abs(s));
    std::vector<int> pattern{1};
    for (std::size_t i = 1; i < spectrum.speeds.size(); ++i) {
        if (spectrum.speeds[i] - spectrum.speeds[i - 1] <= rel_tol * scale) {
            ++pattern.back();
        } else {
            pattern.push_back(1);
        }
    }
    return pattern;
}

PlanarLaxCheck check_lax_planar(const DimensionlessShock& shock) {
    PlanarLaxCheck r;
    const double m1 = shock.m1();
    const double mstar = shock.mstar();
    r.lower_margin = shock.mach - m1;
    r.upper_margin = mstar - shock.mach;
    r.downstream_pass = r.lower_margin > 0.0 && r.upper_margin > 0.0;
    // multiplication form avoids dividing by a near-zero elastic Mach number
    const double mt = std::sqrt(std::max(0.0, shock.mtilde2()));
    r.upstream_slack = shock.mach_minus * mt - shock.mach;
    r.upstream_pass = r.downstream_pass && r.upstream_slack > 0.0;
    r.pass = r.downstream_pass && r.upstream_pass;
    return r;
}

bool check_lax_pointwise(const SurfacePointData& point) {
    const Eigen::Vector3d N = point.normal();
    const double nn = N.norm();
    const double vel_minus = point.v_minus.dot(N) - point.phi_t;
    const double vel_plus = point.v_plus.dot(N) - point.phi_t;
    const double elastic_minus = (point.F_minus.transpose() * N).squaredNorm();
    const double elastic_plus = (point.F_plus.transpose() * N).squaredNorm();
    const double cbar2_minus = point.c_minus * point.c_minus * nn * nn;
    const double cbar2_plus = point.c_plus * point.c_plus * nn * nn;

    const bool upstream = vel_minus > std::sqrt(cbar2_minus + elastic_minus);
    const bool downstream = vel_plus > std::sqrt(elastic_plus) &&
                            vel_plus < std::sqrt(cbar2_plus + elastic_plus);
    return upstream && downstream;
}

bool block_structure_check(const MaterialState& state, const EquationOfState& eos,
                           int sample_count, std::uint64_t seed) {
    if (!(state.F.determinant() > 0.0)) {
        throw ParameterError("block structure check requires det F > 0");
    }
    static constexpr std::array<int, 5> expected{1, 2, 7, 2, 1};
    for (int i = 0; i < sample_count; ++i) {
        Rng rng(seed + static_cast<std::uint64_t>(i));  // deterministic per index
        Eigen::Vector3d xi;
        do {
            xi = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        } while (xi.squaredNorm() < 1e-12);
        xi.normalize();
        if (!((state.F.transpose() * xi).squaredNorm() > 0.0)) return false;
        const auto pattern = multiplicity_pattern(characteristic_speeds(state, eos, xi));
        if (!std::equal(pattern.begin(), pattern.end(), expected.begin(), expected.end())) {
            return false;
        }
    }
    return true;
}

}  // namespace elastoshock
