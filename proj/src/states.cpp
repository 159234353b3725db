#include "elastoshock/states.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace elastoshock {

AdmissibilityReport check_admissibility(const MaterialState& state, const EquationOfState& eos,
                                        bool check_unimodular, double tol) {
    AdmissibilityReport r;
    r.rho_positive = state.rho > 0.0 && std::isfinite(state.rho);
    r.det_F = state.F.determinant();
    r.det_F_positive = r.det_F > 0.0;
    if (r.rho_positive && eos.in_domain(state.rho)) {
        try {
            r.c2 = eos.sound_speed_sq(state.rho);
            r.sound_speed_positive = r.c2 > 0.0;
        } catch (const HyperbolicityError&) {
            r.sound_speed_positive = false;
        }
    }
    if (check_unimodular) {
        r.unimodularity_residual = std::abs(state.rho * r.det_F - 1.0);
        r.unimodular = r.unimodularity_residual <= tol;
    }
    return r;
}

double rankine_hugoniot_residual(const PlanarShockPair& pair) {
    const MaterialState& m = pair.minus;
    const MaterialState& p = pair.plus;
    const double pm = pair.eos.pressure(m.rho);
    const double pp = pair.eos.pressure(p.rho);
    const double R = p.rho / m.rho;

    double worst = 0.0;
    auto track = [&worst](double residual, double scale) {
        worst = std::max(worst, std::abs(residual) / std::max(scale, 1e-300));
    };

    // mass flux continuity rho+ v1+ = rho- v1-
    track(p.rho * p.v(0) - m.rho * m.v(0), std::abs(p.rho * p.v(0)) + std::abs(m.rho * m.v(0)));
    // normal momentum: R ((v1+)^2 - |row1 F+|^2) [rho] = [p]
    {
        const double lhs = R * (p.v(0) * p.v(0) - p.F.row(0).squaredNorm()) * (p.rho - m.rho);
        const double rhs = pp - pm;
        track(lhs - rhs, std::abs(lhs) + std::abs(rhs));
    }
    // transverse velocities continuous (zero in this frame)
    for (int k = 1; k < 3; ++k) {
        track(p.v(k) - m.v(k), std::abs(p.v(k)) + std::abs(m.v(k)) + 1.0);
    }
    const double fscale = p.F.cwiseAbs().maxCoeff() + m.F.cwiseAbs().maxCoeff() + 1e-300;
    for (int j = 0; j < 3; ++j) {
        // rows 2,3 continuous
        for (int l = 1; l < 3; ++l) track(p.F(l, j) - m.F(l, j), fscale);
        // first row carries the density jump: [rho F_1j] = 0
        track(p.rho * p.F(0, j) - m.rho * m.F(0, j), p.rho * fscale);
    }
    return worst;
}

PlanarShockPair solve_downstream(const EquationOfState& eos, const MaterialState& upstream,
                                 double density_ratio) {
    if (!(density_ratio > 0.0)) throw ParameterError("density ratio must be positive");
    if (density_ratio == 1.0) throw ParameterError("density ratio 1 has no jump");
    if (std::abs(upstream.v(1)) > 0.0 || std::abs(upstream.v(2)) > 0.0) {
        throw ParameterError("upstream transverse velocities must vanish in the shock frame");
    }
    if (!(upstream.rho > 0.0)) throw ParameterError("upstream density must be positive");
    if (!(upstream.F.determinant() > 0.0)) throw ParameterError("upstream det F must be positive");

    const double R = density_ratio;
    PlanarShockPair pair{upstream, upstream, eos};
    pair.plus.rho = R * upstream.rho;
    pair.plus.F.row(0) = upstream.F.row(0) / R;

    const double pm = eos.pressure(pair.minus.rho);
    const double pp = eos.pressure(pair.plus.rho);
    const double jump_quotient = (pp - pm) / (R * (pair.plus.rho - pair.minus.rho));
    if (!(jump_quotient > 0.0)) {
        throw NoPhysicalShockError("pressure/density jump quotient not positive");
    }
    const double v1p_sq = pair.plus.F.row(0).squaredNorm() + jump_quotient;
    const double v1p = std::sqrt(v1p_sq);
    pair.plus.v = Eigen::Vector3d(v1p, 0.0, 0.0);
    pair.minus.v = Eigen::Vector3d(R * v1p, 0.0, 0.0);
    return pair;
}

DimensionlessShock nondimensionalize(const PlanarShockPair& pair) {
    DimensionlessShock s;
    const double c_plus = std::sqrt(pair.eos.sound_speed_sq(pair.plus.rho));
    const double c_minus = std::sqrt(pair.eos.sound_speed_sq(pair.minus.rho));
    s.mach = pair.plus.v(0) / c_plus;
    s.mach_minus = pair.minus.v(0) / c_minus;
    s.density_ratio = pair.plus.rho / pair.minus.rho;
    s.F = pair.plus.F / c_plus;
    return s;
}

namespace {

void write_state(std::ostream& os, const char* suffix, const MaterialState& st) {
    os << "rho" << suffix << " = " << st.rho << "\n";
    os << "v" << suffix << " = " << st.v(0) << " " << st.v(1) << " " << st.v(2) << "\n";
    os << "F" << suffix << " =";
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) os << " " << st.F(i, j);
    os << "\n";
}

}  // namespace

std::string to_text_block(const PlanarShockPair& pair) {
    std::ostringstream os;
    os.precision(17);
    write_state(os, "_minus", pair.minus);
    write_state(os, "_plus", pair.plus);
    os << "eos = " << pair.eos.describe() << "\n";
    return os.str();
}

PlanarShockPair parse_shock_pair(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    MaterialState minus, plus;
    std::string eos_spec;
    bool have_eos = false;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        const std::string value = line.substr(eq + 1);
        if (key == "eos") {
            eos_spec = value;
            have_eos = true;
            continue;
        }
        std::istringstream vs(value);
        MaterialState* st = nullptr;
        std::string field;
        if (key.ends_with("_minus")) {
            st = &minus;
            field = key.substr(0, key.size() - 6);
        } else if (key.ends_with("_plus")) {
            st = &plus;
            field = key.substr(0, key.size() - 5);
        } else {
            throw ParameterError("unknown shock-pair key: " + key);
        }
        if (field == "rho") {
            if (!(vs >> st->rho)) throw ParameterError("bad value for " + key);
        } else if (field == "v") {
            if (!(vs >> st->v(0) >> st->v(1) >> st->v(2))) throw ParameterError("bad value for " + key);
        } else if (field == "F") {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (!(vs >> st->F(i, j))) throw ParameterError("bad value for " + key);
        } else {
            throw ParameterError("unknown shock-pair key: " + key);
        }
    }
    if (!have_eos) throw ParameterError("shock-pair block is missing the eos line");
    PlanarShockPair pair{minus, plus, EquationOfState::parse(eos_spec)};
    const double res = rankine_hugoniot_residual(pair);
    if (!(res <= 1e-10)) {
        throw ParameterError("shock-pair block violates the jump relations (residual " +
                             std::to_string(res) + ")");
    }
    return pair;
}

SurfacePointData make_surface_point(const EquationOfState& eos, const MaterialState& minus,
                                    const MaterialState& plus, double phi_t, double phi_x2,
                                    double phi_x3) {
    SurfacePointData pt;
    pt.rho_minus = minus.rho;
    pt.rho_plus = plus.rho;
    pt.p_minus = eos.pressure(minus.rho);
    pt.p_plus = eos.pressure(plus.rho);
    pt.c_minus = std::sqrt(eos.sound_speed_sq(minus.rho));
    pt.c_plus = std::sqrt(eos.sound_speed_sq(plus.rho));
    pt.v_minus = minus.v;
    pt.v_plus = plus.v;
    pt.F_minus = minus.F;
    pt.F_plus = plus.F;
    pt.phi_t = phi_t;
    pt.phi_x2 = phi_x2;
    pt.phi_x3 = phi_x3;
    return pt;
}

SurfacePointData planar_embedding(const PlanarShockPair& pair) {
    return make_surface_point(pair.eos, pair.minus, pair.plus, 0.0, 0.0, 0.0);
}

}  // namespace elastoshock
