#include "elastoshock/analytic.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include <json.hpp>

namespace elastoshock {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMarginZeroTol = 1e-9;  // |min| below this counts as the weak boundary

void require_mach_window(const DimensionlessShock& shock) {
    if (!(shock.mtilde2() > 0.0) || !(shock.beta2() > 0.0)) {
        throw AdmissibilityError("downstream Mach number outside (m1, mstar)");
    }
}

double margin_from(const DimensionlessShock& shock, const CircleCoefficients& c) {
    const double q = shock.mach * c.sigma - std::abs(c.ell0) * shock.beta();
    const double mstar4 = shock.mstar2() * shock.mstar2();
    return q * q - mstar4 * (shock.density_ratio * shock.mtilde2() - 1.0);
}

/// Golden-section minimum of f on [a, b] down to width tol.
std::pair<double, double> golden_min(const std::function<double(double)>& f, double a, double b,
                                     double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

struct CircleMinimum {
    double angle = 0.0;
    double value = 0.0;
};

CircleMinimum minimize_on_circle(const std::function<double(double)>& f, int scan_points,
                                 double refine_tol) {
    if (scan_points < 64) throw ParameterError("circle scan needs at least 64 points");
    int best = 0;
    double best_val = f(0.0);
    for (int i = 1; i < scan_points; ++i) {
        const double v = f(kTwoPi * i / scan_points);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const double h = kTwoPi / scan_points;
    const double a = kTwoPi * best / scan_points - h;
    const double b = kTwoPi * best / scan_points + h;
    auto [angle, value] = golden_min(f, a, b, refine_tol);
    if (best_val < value) {
        angle = kTwoPi * best / scan_points;
        value = best_val;
    }
    angle = std::fmod(angle + kTwoPi, kTwoPi);
    return {angle, value};
}

const char* verdict_name(Verdict v) {
    return v == Verdict::uniformly_stable ? "uniformly_stable" : "weakly_stable";
}

const char* method_name(Method m) { return m == Method::analytic ? "analytic" : "spectral_scan"; }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

CircleCoefficients circle_coefficients(const DimensionlessShock& shock,
                                       const Eigen::Vector2d& omega_bar) {
    if (std::abs(omega_bar.norm() - 1.0) > 1e-12) {
        throw ParameterError("omega_bar must be a unit vector");
    }
    require_mach_window(shock);

    CircleCoefficients c;
    c.omega_bar = omega_bar;
    const Eigen::Vector3d r1 = shock.F.row(0);
    const Eigen::Vector3d w = omega_bar(0) * shock.F.row(1) + omega_bar(1) * shock.F.row(2);
    c.ell0 = r1.dot(w);
    c.M2 = w.norm();
    c.kappa = r1.cross(w).norm();
    const double m1sq = r1.squaredNorm();
    c.sigma = std::sqrt(1.0 + m1sq + c.M2 * c.M2 + c.kappa * c.kappa);
    c.K0 = 1.0 + c.M2 * c.M2;
    c.K = shock.density_ratio * shock.mtilde2() + c.M2 * c.M2;
    const double beta = shock.beta();
    const double mstar4 = shock.mstar2() * shock.mstar2();
    const double q_minus = shock.mach * c.sigma - std::abs(c.ell0) * beta;
    const double q_plus = shock.mach * c.sigma + std::abs(c.ell0) * beta;
    c.K1 = q_minus * q_minus / mstar4;
    c.K2 = q_plus * q_plus / mstar4;
    const double mm = shock.mstar2() * shock.mtilde();
    c.D = (q_minus - mm) * (q_minus + mm);
    return c;
}

double stability_margin(const DimensionlessShock& shock, const Eigen::Vector2d& omega_bar) {
    return margin_from(shock, circle_coefficients(shock, omega_bar));
}

StabilityReport classify(const DimensionlessShock& shock, int scan_points, double refine_tol) {
    const auto lax = check_lax_planar(shock);
    if (!lax.pass) throw AdmissibilityError("classify requires a Lax shock");

    auto f = [&shock](double theta) {
        return stability_margin(shock, {std::cos(theta), std::sin(theta)});
    };
    const auto min = minimize_on_circle(f, scan_points, refine_tol);

    StabilityReport rep;
    rep.min_margin = min.value;
    rep.argmin_angle = min.angle;
    rep.coeffs_at_argmin =
        circle_coefficients(shock, {std::cos(min.angle), std::sin(min.angle)});
    rep.verdict = min.value > kMarginZeroTol ? Verdict::uniformly_stable : Verdict::weakly_stable;
    rep.lax_pass = true;
    rep.method = Method::analytic;
    return rep;
}

DimensionlessShock frozen_shock(const SurfacePointData& point) {
    const Eigen::Vector3d N = point.normal();
    const double nn = N.norm();
    const double cbar_plus = point.c_plus * nn;

    DimensionlessShock s;
    s.mach = (point.v_plus.dot(N) - point.phi_t) / cbar_plus;
    s.mach_minus = (point.v_minus.dot(N) - point.phi_t) / (point.c_minus * nn);
    s.density_ratio = point.rho_plus / point.rho_minus;
    s.F.row(0) = (point.F_plus.transpose() * N).transpose() / cbar_plus;  // (F_1N, F_2N, F_3N)
    s.F.row(1) = point.F_plus.row(1) / point.c_plus;
    s.F.row(2) = point.F_plus.row(2) / point.c_plus;
    return s;
}

bool classify_pointwise(const SurfacePointData& point, double eps, int scan_points,
                        double refine_tol) {
    if (!(eps > 0.0)) throw ParameterError("pointwise threshold eps must be positive");
    if (!check_lax_pointwise(point)) {
        throw AdmissibilityError("surface point violates the Lax conditions");
    }
    const DimensionlessShock s = frozen_shock(point);
    auto f = [&s](double theta) { return stability_margin(s, {std::cos(theta), std::sin(theta)}); };
    const auto min = minimize_on_circle(f, scan_points, refine_tol);
    return min.value >= eps;
}

SpecialConditions special_conditions(const DimensionlessShock& shock, int scan_points) {
    const auto lax = check_lax_planar(shock);
    if (!lax.pass) throw AdmissibilityError("special conditions require a Lax shock");

    SpecialConditions out;
    const double r_excess = shock.density_ratio - 1.0;
    out.majda = shock.mach * shock.mach * r_excess < 1.0;
    out.elastic_majda = shock.mtilde2() * r_excess < 1.0;

    auto f = [&shock](double theta) {
        return stability_margin(shock, {std::cos(theta), std::sin(theta)});
    };
    const auto min = minimize_on_circle(f, scan_points, 1e-10);
    const double mstar4 = shock.mstar2() * shock.mstar2();
    const auto c_at_min =
        circle_coefficients(shock, {std::cos(min.angle), std::sin(min.angle)});
    out.Q = shock.F.row(0).squaredNorm() * r_excess + c_at_min.D / mstar4;

    double d_min = c_at_min.D;
    for (int i = 0; i < scan_points; ++i) {
        const double theta = kTwoPi * i / scan_points;
        const auto c = circle_coefficients(shock, {std::cos(theta), std::sin(theta)});
        d_min = std::min(d_min, c.D);
    }
    out.D_min = d_min;
    return out;
}

Margin2d usc_2d(const Shock2d& shock) {
    const Eigen::Vector2d r1 = shock.F.row(0);
    const Eigen::Vector2d r2 = shock.F.row(1);
    const double m1sq = r1.squaredNorm();
    const double mstar2 = 1.0 + m1sq;
    const double mtilde2 = shock.mach * shock.mach - m1sq;
    const double beta2 = mstar2 - shock.mach * shock.mach;
    if (!(mtilde2 > 0.0) || !(beta2 > 0.0)) {
        throw AdmissibilityError("2D downstream Mach number outside its Lax window");
    }
    const double det = shock.F.determinant();
    const double sigma = std::sqrt(1.0 + m1sq + r2.squaredNorm() + det * det);
    const double q = shock.mach * sigma - std::abs(r1.dot(r2)) * std::sqrt(beta2);
    Margin2d out;
    out.margin = q * q - mstar2 * mstar2 * (shock.density_ratio * mtilde2 - 1.0);
    out.pass = out.margin > 0.0;
    return out;
}

std::string csv_header() {
    return "verdict,min_margin,argmin_angle,ell0,M2,kappa,sigma,K0,K,K1,K2,D,lax_pass,method";
}

std::string to_csv_record(const StabilityReport& r) {
    const auto& c = r.coeffs_at_argmin;
    std::string out = verdict_name(r.verdict);
    for (double x : {r.min_margin, r.argmin_angle, c.ell0, c.M2, c.kappa, c.sigma, c.K0, c.K,
                     c.K1, c.K2, c.D}) {
        out += ",";
        out += fmt(x);
    }
    out += r.lax_pass ? ",1," : ",0,";
    out += method_name(r.method);
    return out;
}

std::string to_json(const StabilityReport& r) {
    nlohmann::ordered_json j;
    j["verdict"] = verdict_name(r.verdict);
    j["min_margin"] = r.min_margin;
    j["argmin_angle"] = r.argmin_angle;
    j["coeffs_at_argmin"] = {
        {"omega_bar", {r.coeffs_at_argmin.omega_bar(0), r.coeffs_at_argmin.omega_bar(1)}},
        {"ell0", r.coeffs_at_argmin.ell0},
        {"M2", r.coeffs_at_argmin.M2},
        {"kappa", r.coeffs_at_argmin.kappa},
        {"sigma", r.coeffs_at_argmin.sigma},
        {"K0", r.coeffs_at_argmin.K0},
        {"K", r.coeffs_at_argmin.K},
        {"K1", r.coeffs_at_argmin.K1},
        {"K2", r.coeffs_at_argmin.K2},
        {"D", r.coeffs_at_argmin.D},
    };
    j["lax_pass"] = r.lax_pass;
    j["method"] = method_name(r.method);
    return j.dump();
}

}  // namespace elastoshock
