#pragma once

#include <string>

#include "elastoshock/lax.hpp"
#include "elastoshock/states.hpp"

namespace elastoshock {

/// Angle-dependent scalars of the stability analysis at a point omega_bar of the
/// wave-vector circle. With W = w2*Fbar_2 + w3*Fbar_3:
///   ell0  = Fbar_1 . W          shear coupling along the angle
///   M2    = |W|
///   kappa = |Fbar_1 x W|
///   sigma = sqrt(mstar^2 (1+M2^2) - ell0^2) = sqrt(1 + m1^2 + M2^2 + kappa^2)
///   K0    = 1 + M2^2
///   K     = R (M^2 - m1^2) + M2^2
///   K1    = (M sigma - |ell0| beta)^2 / mstar^4        (transition threshold)
///   K2    = (M sigma + |ell0| beta)^2 / mstar^4        (fictitious transition)
///   D     = (M sigma - |ell0| beta)^2 - mstar^4 mtilde^2,  positive for Lax shocks
struct CircleCoefficients {
    Eigen::Vector2d omega_bar = Eigen::Vector2d::Zero();
    double ell0 = 0.0;
    double M2 = 0.0;
    double kappa = 0.0;
    double sigma = 1.0;
    double K0 = 1.0;
    double K = 0.0;
    double K1 = 0.0;
    double K2 = 0.0;
    double D = 0.0;
};

/// Throws ParameterError for non-unit omega_bar (tolerance 1e-12) and
/// AdmissibilityError when M is outside (m1, mstar).
CircleCoefficients circle_coefficients(const DimensionlessShock& shock,
                                       const Eigen::Vector2d& omega_bar);

/// Uniform-stability margin at one angle:
///   (M sigma - |ell0| beta)^2 - mstar^4 (R mtilde^2 - 1)  =  mstar^4 (K0 + K1 - K).
/// Positive at every angle of the circle iff the shock is uniformly stable.
double stability_margin(const DimensionlessShock& shock, const Eigen::Vector2d& omega_bar);

enum class Verdict { uniformly_stable, weakly_stable };
enum class Method { analytic, spectral_scan };

struct StabilityReport {
    Verdict verdict = Verdict::weakly_stable;
    double min_margin = 0.0;
    double argmin_angle = 0.0;  // in [0, 2pi)
    CircleCoefficients coeffs_at_argmin;
    bool lax_pass = false;
    Method method = Method::analytic;
};

/// Minimizes the margin over the circle: dense scan (>= 64 points) plus
/// golden-section refinement of the best bracket down to `refine_tol` in theta.
/// Verdict is uniform iff min_margin > 1e-9; Lax shocks are never worse than
/// weakly stable. Throws AdmissibilityError for non-Lax shocks.
StabilityReport classify(const DimensionlessShock& shock, int scan_points = 1024,
                         double refine_tol = 1e-10);

/// Frozen-coefficient shock at a surface point: M -> (v_N^+ - phi_t)/(c^+|N|),
/// Fbar_1 -> (F_1N, F_2N, F_3N)/(c^+|N|), rows 2,3 -> rows of F^+/c^+, R -> rho+/rho-.
DimensionlessShock frozen_shock(const SurfacePointData& point);

/// Pointwise sufficient condition: the frozen-coefficient margin minimized over
/// the circle is >= eps. Throws AdmissibilityError when the point is not Lax.
bool classify_pointwise(const SurfacePointData& point, double eps, int scan_points = 1024,
                        double refine_tol = 1e-10);

/// Gas-dynamic and elastic one-line conditions plus the stabilizing additive
/// Q = m1^2 (R-1) + D/mstar^4 reported at the margin argmin angle.
struct SpecialConditions {
    bool majda = false;          // M^2 (R - 1) < 1
    bool elastic_majda = false;  // mtilde^2 (R - 1) < 1
    double Q = 0.0;
    double D_min = 0.0;  // min of D over the scanned circle
};

SpecialConditions special_conditions(const DimensionlessShock& shock, int scan_points = 1024);

/// Two-dimensional shock parameters (2x2 scaled deformation gradient).
struct Shock2d {
    double mach = 0.0;
    double density_ratio = 1.0;
    Eigen::Matrix2d F = Eigen::Matrix2d::Zero();
};

struct Margin2d {
    double margin = 0.0;
    bool pass = false;
};

/// Planar 2D uniform-stability margin; no circle minimization is needed since
/// sigma_2d = sqrt(1 + |Fbar_1|^2 + |Fbar_2|^2 + det(F)^2) is angle-free.
Margin2d usc_2d(const Shock2d& shock);

std::string csv_header();
std::string to_csv_record(const StabilityReport& report);
std::string to_json(const StabilityReport& report);

}  // namespace elastoshock
