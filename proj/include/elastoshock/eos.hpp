#pragma once

#include <array>
#include <string>
#include <vector>

#include "elastoshock/errors.hpp"

namespace elastoshock {

enum class Convexity { convex, nonconvex, undetermined };

/// Barotropic pressure law p(rho) with strictly positive slope on its domain,
/// so that c^2 = dp/drho > 0 (hyperbolicity) and rho(p) is well defined.
///
/// Two families: the polytropic law p = k rho^gamma on rho > 0, and tabulated
/// laws given by strictly increasing (rho, p) samples, filled in by monotone
/// cubic (Fritsch–Carlson) interpolation so the slope stays positive between
/// samples and has an analytic derivative.
class EquationOfState {
  public:
    struct Eval {
        double p;
        double c2;
    };

    static EquationOfState polytropic(double k, double gamma);
    static EquationOfState tabulated(std::vector<std::array<double, 2>> rho_p_samples);
    /// Two-column CSV, header "rho,p", strictly increasing rows.
    static EquationOfState tabulated_from_csv(const std::string& path);

    double pressure(double rho) const;
    double sound_speed_sq(double rho) const;
    Eval evaluate(double rho) const;

    /// Inverts p(rho) by bisection on the domain; relative tolerance ~1e-14.
    double density(double p) const;

    /// Samples dc^2/drho on [rho_lo, rho_hi]. `undetermined` is reachable only
    /// for tabulated laws, when negative samples sit inside the noise band.
    Convexity convexity(double rho_lo, double rho_hi, int samples = 10000) const;

    double domain_min() const { return domain_min_; }
    double domain_max() const { return domain_max_; }
    bool in_domain(double rho) const;

    bool is_polytropic() const { return kind_ == Kind::polytropic; }
    double poly_k() const { return k_; }
    double poly_gamma() const { return gamma_; }

    /// One-line form "polytropic <k> <gamma>" or "tabulated <n> <rho p>...",
    /// parseable by `parse`. Used by the shock-pair text blocks.
    std::string describe() const;
    static EquationOfState parse(const std::string& text);

  private:
    enum class Kind { polytropic, tabulated };

    EquationOfState() = default;
    void build_pchip();
    double interp_p(double rho) const;
    double interp_dp(double rho) const;

    Kind kind_ = Kind::polytropic;
    double k_ = 1.0;
    double gamma_ = 2.0;
    double domain_min_ = 0.0;  // open at 0 for polytropic
    double domain_max_ = 0.0;  // +inf for polytropic
    std::vector<double> x_;    // tabulated densities
    std::vector<double> y_;    // tabulated pressures
    std::vector<double> d_;    // PCHIP slopes at the nodes
};

}  // namespace elastoshock
