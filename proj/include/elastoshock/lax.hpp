#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "elastoshock/states.hpp"

namespace elastoshock {

/// The 13 characteristic speeds of the elastodynamics symbol in direction xi,
/// nondecreasing. With det F > 0 the multiplicity pattern is always (1,2,7,2,1):
/// one fast pair, one shear pair (double), and a sevenfold drift speed v.xi.
struct CharacteristicSpectrum {
    std::array<double, 13> speeds{};
    static constexpr std::array<int, 5> multiplicities{1, 2, 7, 2, 1};

    double fast_minus() const { return speeds[0]; }
    double shear_minus() const { return speeds[1]; }
    double drift() const { return speeds[6]; }
    double shear_plus() const { return speeds[11]; }
    double fast_plus() const { return speeds[12]; }
};

/// Closed-form speeds: v.xi -/+ sqrt(c^2|xi|^2 + e), v.xi -/+ sqrt(e), v.xi x7,
/// where e = sum_j (F_j . xi)^2 over the columns F_j of F.
CharacteristicSpectrum characteristic_speeds(const MaterialState& state,
                                             const EquationOfState& eos,
                                             const Eigen::Vector3d& xi);

/// Clusters a sorted spectrum with relative gap threshold `rel_tol`; returns the
/// multiplicity of each cluster in order.
std::vector<int> multiplicity_pattern(const CharacteristicSpectrum& spectrum,
                                      double rel_tol = 1e-8);

/// Lax admissibility of a planar 1-shock in dimensionless form:
/// downstream m1 < M < mstar, upstream M- sqrt(M^2 - m1^2) > M.
struct PlanarLaxCheck {
    bool pass = false;
    bool downstream_pass = false;
    bool upstream_pass = false;
    double lower_margin = 0.0;    // M - m1
    double upper_margin = 0.0;    // mstar - M
    double upstream_slack = 0.0;  // M- * sqrt(max(0, M^2 - m1^2)) - M
};

PlanarLaxCheck check_lax_planar(const DimensionlessShock& shock);

/// Both Lax inequalities evaluated directly from the traces at a surface point
/// (strict). Equivalent to the planar check on pairs satisfying the jump relations.
bool check_lax_pointwise(const SurfacePointData& point);

/// Verifies, over `sample_count` random unit directions, that the elastic
/// quadratic form stays positive and the multiplicity pattern is (1,2,7,2,1).
/// Throws ParameterError when det F <= 0 (precondition violation).
bool block_structure_check(const MaterialState& state, const EquationOfState& eos,
                           int sample_count, std::uint64_t seed = 0x5bd1e995u);

}  // namespace elastoshock
