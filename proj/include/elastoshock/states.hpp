#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "elastoshock/eos.hpp"

namespace elastoshock {

/// Constant state on one side of a shock: density, velocity, deformation gradient.
/// Physical states have rho > 0 and det F > 0; flows started from unimodular data
/// additionally keep rho * det F = 1.
struct MaterialState {
    double rho = 1.0;
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    Eigen::Matrix3d F = Eigen::Matrix3d::Identity();
};

struct AdmissibilityReport {
    bool rho_positive = false;
    bool sound_speed_positive = false;
    bool det_F_positive = false;
    std::optional<bool> unimodular;  // present only when the flag was requested
    double det_F = 0.0;
    double c2 = 0.0;
    double unimodularity_residual = 0.0;  // |rho det F - 1|

    bool all_pass() const {
        return rho_positive && sound_speed_positive && det_F_positive &&
               unimodular.value_or(true);
    }
};

AdmissibilityReport check_admissibility(const MaterialState& state, const EquationOfState& eos,
                                        bool check_unimodular = false, double tol = 1e-10);

/// Upstream/downstream pair of a planar stationary shock at x1 = 0, in the frame
/// where the transverse velocities vanish and v1 > 0 on both sides. The jump
/// relations tie every downstream field to the upstream state and the density
/// ratio; `rankine_hugoniot_residual` measures how well a pair satisfies them.
struct PlanarShockPair {
    MaterialState minus;  // upstream  (x1 < 0)
    MaterialState plus;   // downstream (x1 > 0)
    EquationOfState eos;
};

/// Max of the scaled residuals of the planar jump relations:
/// mass flux, normal momentum, transverse rows of F, and the rho*F first-row products.
double rankine_hugoniot_residual(const PlanarShockPair& pair);

/// Builds the downstream state from the upstream one and the density ratio R != 1.
/// Throws ParameterError (bad upstream or R), DomainError, NoPhysicalShockError.
/// Lax admissibility of the result is a property of the pair, not an error here.
PlanarShockPair solve_downstream(const EquationOfState& eos, const MaterialState& upstream,
                                 double density_ratio);

/// Key-value text block (fields rho-, v-, F- row-major, same for +, eos line).
std::string to_text_block(const PlanarShockPair& pair);
/// Parses a block written by `to_text_block`; validates residual <= 1e-10.
PlanarShockPair parse_shock_pair(const std::string& text);

/// The scaled parameter set every stability formula consumes: downstream Mach M,
/// upstream Mach M-, density ratio R, and the deformation gradient behind the
/// shock divided by the downstream sound speed.
///
/// Derived scalars (rows of F written Fbar_i):
///   m1      = |Fbar_1|            normal elastic Mach number scale
///   mstar   = sqrt(1 + m1^2)      fast-wave bound on M
///   mtilde  = sqrt(M^2 - m1^2)    elastic Mach number (real for Lax shocks)
///   beta    = sqrt(mstar^2 - M^2) subsonic-margin factor (positive for Lax shocks)
///   ell2/3  = Fbar_1 . Fbar_2/3   shear couplings
struct DimensionlessShock {
    double mach = 0.0;
    double mach_minus = 0.0;
    double density_ratio = 1.0;
    Eigen::Matrix3d F = Eigen::Matrix3d::Zero();

    Eigen::Vector3d row(int i) const { return F.row(i - 1); }
    double m1() const { return F.row(0).norm(); }
    double mstar2() const { return 1.0 + F.row(0).squaredNorm(); }
    double mstar() const { return std::sqrt(mstar2()); }
    double mtilde2() const { return mach * mach - F.row(0).squaredNorm(); }
    double mtilde() const { return std::sqrt(mtilde2()); }  // NaN when non-Lax
    double beta2() const { return mstar2() - mach * mach; }
    double beta() const { return std::sqrt(beta2()); }
    double ell2() const { return F.row(0).dot(F.row(1)); }
    double ell3() const { return F.row(0).dot(F.row(2)); }
};

/// Scales a valid pair to the dimensionless set. Never throws for non-Lax
/// results; admissibility is read off with check_lax_planar.
DimensionlessShock nondimensionalize(const PlanarShockPair& pair);

/// Traces of both states at one point of a shock hypersurface x1 = phi(t, x2, x3),
/// together with the front slopes. N = (1, -phi_x2, -phi_x3) never vanishes.
struct SurfacePointData {
    double rho_minus = 1.0, rho_plus = 1.0;
    double p_minus = 0.0, p_plus = 0.0;
    double c_minus = 1.0, c_plus = 1.0;
    Eigen::Vector3d v_minus = Eigen::Vector3d::Zero();
    Eigen::Vector3d v_plus = Eigen::Vector3d::Zero();
    Eigen::Matrix3d F_minus = Eigen::Matrix3d::Identity();
    Eigen::Matrix3d F_plus = Eigen::Matrix3d::Identity();
    double phi_t = 0.0, phi_x2 = 0.0, phi_x3 = 0.0;

    Eigen::Vector3d normal() const { return {1.0, -phi_x2, -phi_x3}; }
};

SurfacePointData make_surface_point(const EquationOfState& eos, const MaterialState& minus,
                                    const MaterialState& plus, double phi_t, double phi_x2,
                                    double phi_x3);

/// The planar shock embedded as a flat surface point (phi == 0).
SurfacePointData planar_embedding(const PlanarShockPair& pair);

}  // namespace elastoshock
