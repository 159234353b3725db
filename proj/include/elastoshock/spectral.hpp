#pragma once

#include <complex>
#include <iosfwd>
#include <utility>
#include <vector>

#include "elastoshock/analytic.hpp"
#include "elastoshock/states.hpp"

namespace elastoshock {

using Complex = std::complex<double>;
using Matrix13c = Eigen::Matrix<Complex, 13, 13>;
using Matrix12x13c = Eigen::Matrix<Complex, 12, 13>;
using Vector13c = Eigen::Matrix<Complex, 13, 1>;

/// One point of the frequency half-plane: Laplace variable s = eta + i xi
/// (eta >= 0), Fourier variable omega' in R^2, the selected dispersion root
/// lambda (Re lambda > 0 for eta > 0, continuous limit at eta = 0), and the
/// derived symbols Omega = s + lambda, zeta = (lambda, i w2, i w3),
/// sigma_j = F_j . zeta over the columns of the scaled deformation gradient.
struct FrequencySample {
    Complex s;
    Eigen::Vector2d omega_prime = Eigen::Vector2d::Zero();
    double omega = 0.0;
    Complex lambda;
    Complex Omega;
    std::array<Complex, 3> zeta{};
    std::array<Complex, 3> sigma{};
};

/// Both roots of the effective dispersion relation
///   M^2 (s+lambda)^2 - mstar^2 lambda^2 + K0 w^2 = 2 i ell0 lambda w,
/// as {plus_candidate, minus_candidate} of the quadratic formula (signed ell0).
std::pair<Complex, Complex> lambda_roots(const DimensionlessShock& shock, Complex s,
                                         const Eigen::Vector2d& omega_prime);

/// The unique root with Re lambda > 0 for Re s > 0 (Hersh root); on the boundary
/// Re s = 0 the branch is continued from eta = 1e-8 * max(1, |xi|, omega).
/// Throws ParameterError at (s, omega') = 0 and InternalConsistencyError if no
/// admissible root exists at eta > 0.
Complex lambda_plus(const DimensionlessShock& shock, Complex s,
                    const Eigen::Vector2d& omega_prime);

FrequencySample make_frequency_sample(const DimensionlessShock& shock, Complex s,
                                      const Eigen::Vector2d& omega_prime);

/// Interior symbol s A0 + lambda A1 + i w2 A2 + i w3 A3 of the dimensionless
/// linearized system, order 13. Its determinant factors as
///   Omega^7 (M^2 Omega^2 - sigma.sigma)^2 (M^2 Omega^2 - sigma.sigma - lambda^2 + w^2).
Matrix13c interior_symbol(const DimensionlessShock& shock, const FrequencySample& sample);

/// 12x13 boundary symbol assembled directly from the linearized jump conditions
/// after the front has been eliminated by cross differentiation; independent of
/// the closed-form kernel vector.
Matrix12x13c boundary_symbol(const DimensionlessShock& shock, Complex s,
                             const Eigen::Vector2d& omega_prime);

/// Closed-form kernel vector of the boundary symbol, prior to normalization.
Vector13c boundary_kernel_raw(const DimensionlessShock& shock, Complex s,
                              const Eigen::Vector2d& omega_prime);

/// Kernel vector normalized to unit length with the largest-magnitude component
/// made real positive. Throws DegenerateFrequencyError if the independently
/// assembled boundary symbol has rank < 12 at the sample.
Vector13c boundary_kernel(const DimensionlessShock& shock, Complex s,
                          const Eigen::Vector2d& omega_prime);

struct LopatinskiValues {
    Complex full_det;   // det of the interior symbol with one row replaced by (A1 u0)^T
    Complex reduced;    // Omega (M^2 lambda s + K w^2) + (mstar^2 lambda^2 - K0 w^2) s - 2 i ell0 lambda^2 w
    Complex prefactor;  // -beta^2 Omega^6 (w^2 - lambda^2)^2 / (2 M^2); full_det = prefactor * reduced
    int replaced_row = 0;  // != 0 when the leading row had to be pivoted
};

/// Full determinant and reduced scalar at lambda = lambda_plus. The remaining
/// 12 rows are rank-checked; on degeneracy a different row is replaced and
/// recorded in `replaced_row`.
LopatinskiValues lopatinski_values(const DimensionlessShock& shock, Complex s,
                                   const Eigen::Vector2d& omega_prime);

/// Fast path for scans: only the reduced scalar at lambda = lambda_plus.
Complex reduced_lopatinski(const DimensionlessShock& shock, Complex s,
                           const Eigen::Vector2d& omega_prime);

/// Frequency grid with omega normalized to 1 (the reduced function is
/// homogeneous), so a scan covers (xi, theta) plus a few eta levels.
/// The xi range auto-expands to cover the analytic transition points.
struct ScanGrid {
    double xi_min = -10.0;
    double xi_max = 10.0;
    int xi_count = 2001;
    int theta_count = 256;
    std::vector<double> eta_levels{0.0, 1e-4, 1e-2, 1e-1};
};

struct ZeroHit {
    double eta = 0.0;
    double xi = 0.0;
    double theta = 0.0;
    double rel_abs = 0.0;  // polished |reduced| relative to the neighbor scale
};

struct ScanOutcome {
    StabilityReport report;
    std::vector<ZeroHit> zeros;      // confirmed zeros (eta = 0 only for valid data)
    double min_rel_abs_eta0 = 1.0;   // polished minimum at eta = 0
    double min_rel_abs_etapos = 1.0; // raw minimum over the eta > 0 levels
    double xi_min_used = 0.0, xi_max_used = 0.0;
};

/// Kreiss–Lopatinski oracle: scans |reduced| over the grid. A zero is accepted
/// when the polished value drops below tol * (max |reduced| over the 8 grid
/// neighbors). Verdict: uniformly stable when no zero exists anywhere; weakly
/// stable when zeros exist only at eta = 0. Any eta > 0 zero throws
/// InternalConsistencyError. Throws AdmissibilityError for non-Lax shocks.
ScanOutcome scan_stability_full(const DimensionlessShock& shock, const ScanGrid& grid = {},
                                double tol = 1e-6);

StabilityReport scan_stability(const DimensionlessShock& shock, const ScanGrid& grid = {},
                               double tol = 1e-6);

/// CSV dump (eta, xi, theta, re_reduced, im_reduced, abs_reduced) for plotting.
void dump_scan_csv(std::ostream& os, const DimensionlessShock& shock, const ScanGrid& grid = {});

/// Boundary-contact points of the dispersion root on the imaginary axis:
/// xi*_k = (M |ell0| + (-1)^{k+1} beta sigma)/(M mstar^2) make the root
/// discriminant vanish, where the two imaginary branches merge at
/// delta*_1 = sqrt(K1)/beta and delta*_2 = -sqrt(K2)/beta.
struct TransitionData {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
};

TransitionData transition_points(const DimensionlessShock& shock,
                                 const Eigen::Vector2d& omega_bar);

/// Executable certificate that no boundary zero can enter the half-plane when
/// K < K0 at the angle: the only candidate has eta = eta_candidate < 0, with
/// K M^2 - ell0^2 > 0 the equivalent inequality. The reconstructed (xi, eta)
/// must satisfy the real-part equation within `a3_residual`.
struct AppendixACertificate {
    bool applicable = false;  // K < K0 at this angle
    double lambda = 0.0;      // sqrt(K0 - K)/beta
    double eta_candidate = 0.0;
    double xi = 0.0;
    double a6_value = 0.0;  // K M^2 - ell0^2
    double a3_residual = 0.0;
    bool passed = false;
};

AppendixACertificate appendix_a_certificate(const DimensionlessShock& shock,
                                            const Eigen::Vector2d& omega_bar);

}  // namespace elastoshock
