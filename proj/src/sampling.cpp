#include "elastoshock/sampling.hpp"

#include <cmath>

#include "elastoshock/lax.hpp"

namespace elastoshock {

std::optional<PairSample> draw_pair_shock(Rng& rng) {
    const double gamma = rng.uniform(1.0, 3.0);
    const EquationOfState eos = EquationOfState::polytropic(1.0, gamma);

    MaterialState upstream;
    upstream.rho = rng.uniform(0.5, 2.0);
    Eigen::Matrix3d F = Eigen::Matrix3d::Identity();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) F(i, j) += rng.uniform(-0.3, 0.3);
    }
    const double mu = upstream.rho * F.determinant();
    if (!(mu > 0.0)) return std::nullopt;
    upstream.F = F / std::cbrt(mu);  // rho det F = 1

    const double R = rng.uniform(1.05, 4.0);
    PairSample out{solve_downstream(eos, upstream, R), {}};
    out.shock = nondimensionalize(out.pair);
    if (!check_lax_planar(out.shock).pass) return std::nullopt;
    return out;
}

PairSample random_pair_shock(Rng& rng) {
    for (;;) {
        if (auto s = draw_pair_shock(rng)) return *s;
    }
}

DimensionlessShock random_dimensionless_shock(Rng& rng) {
    for (;;) {
        DimensionlessShock s;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) s.F(i, j) = rng.uniform(-1.2, 1.2);
        }
        if (!(s.F.determinant() > 0.0)) continue;
        const double m1 = s.m1();
        const double mstar = s.mstar();
        s.mach = m1 + (mstar - m1) * rng.uniform(0.05, 0.95);
        s.density_ratio = rng.uniform(1.05, 8.0);
        const double mt = std::sqrt(s.mtilde2());
        s.mach_minus = (s.mach / mt) * (1.0 + rng.uniform(0.1, 3.0));
        if (check_lax_planar(s).pass) return s;
    }
}

}  // namespace elastoshock
