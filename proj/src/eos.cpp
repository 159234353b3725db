#include "elastoshock/eos.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace elastoshock {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

EquationOfState EquationOfState::polytropic(double k, double gamma) {
    if (!(k > 0.0) || !(gamma > 0.0)) {
        throw ParameterError("polytropic law needs k > 0 and gamma > 0");
    }
    EquationOfState eos;
    eos.kind_ = Kind::polytropic;
    eos.k_ = k;
    eos.gamma_ = gamma;
    eos.domain_min_ = 0.0;
    eos.domain_max_ = kInf;
    return eos;
}

EquationOfState EquationOfState::tabulated(std::vector<std::array<double, 2>> samples) {
    if (samples.size() < 2) {
        throw ParameterError("tabulated law needs at least two samples");
    }
    EquationOfState eos;
    eos.kind_ = Kind::tabulated;
    eos.x_.reserve(samples.size());
    eos.y_.reserve(samples.size());
    for (const auto& s : samples) {
        if (!(s[0] > 0.0)) throw ParameterError("tabulated densities must be positive");
        if (!eos.x_.empty() && !(s[0] > eos.x_.back() && s[1] > eos.y_.back())) {
            throw ParameterError("tabulated samples must be strictly increasing in rho and p");
        }
        eos.x_.push_back(s[0]);
        eos.y_.push_back(s[1]);
    }
    eos.domain_min_ = eos.x_.front();
    eos.domain_max_ = eos.x_.back();
    eos.build_pchip();
    return eos;
}

EquationOfState EquationOfState::tabulated_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open eos csv: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParameterError("empty eos csv: " + path);
    // tolerate whitespace around the header
    std::string header = line;
    header.erase(std::remove_if(header.begin(), header.end(), ::isspace), header.end());
    if (header != "rho,p") throw ParameterError("eos csv must start with header 'rho,p'");
    std::vector<std::array<double, 2>> samples;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double rho, p;
        if (!(ss >> rho >> p)) throw ParameterError("bad eos csv row: " + line);
        samples.push_back({rho, p});
    }
    return tabulated(std::move(samples));
}

// Fritsch–Carlson slopes: monotone data keeps every slope nonnegative, and
// strictly increasing data keeps the interior ones positive.
void EquationOfState::build_pchip() {
    const std::size_t n = x_.size();
    d_.assign(n, 0.0);
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    if (n == 2) {
        d_[0] = d_[1] = delta[0];
        return;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // one-sided three-point endpoint slopes, clamped to preserve monotonicity
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (d * d0 < 0.0) {
            d = 0.0;
        } else if (d0 * d1 < 0.0 && std::abs(d) > 3.0 * std::abs(d0)) {
            d = 3.0 * d0;
        }
        return d;
    };
    d_[0] = endpoint(h[0], h[1], delta[0], delta[1]);
    d_[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

bool EquationOfState::in_domain(double rho) const {
    if (kind_ == Kind::polytropic) return rho > 0.0 && std::isfinite(rho);
    return rho >= domain_min_ && rho <= domain_max_;
}

double EquationOfState::interp_p(double rho) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), rho);
    const std::size_t i = std::clamp<std::size_t>(it - x_.begin(), 1, x_.size() - 1) - 1;
    const double h = x_[i + 1] - x_[i];
    const double t = (rho - x_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

double EquationOfState::interp_dp(double rho) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), rho);
    const std::size_t i = std::clamp<std::size_t>(it - x_.begin(), 1, x_.size() - 1) - 1;
    const double h = x_[i + 1] - x_[i];
    const double t = (rho - x_[i]) / h;
    const double t2 = t * t;
    const double dh00 = (6 * t2 - 6 * t) / h;
    const double dh10 = 3 * t2 - 4 * t + 1;
    const double dh01 = (-6 * t2 + 6 * t) / h;
    const double dh11 = 3 * t2 - 2 * t;
    return dh00 * y_[i] + dh10 * d_[i] + dh01 * y_[i + 1] + dh11 * d_[i + 1];
}

double EquationOfState::pressure(double rho) const {
    if (!in_domain(rho)) throw DomainError("density outside eos domain");
    if (kind_ == Kind::polytropic) return k_ * std::pow(rho, gamma_);
    return interp_p(rho);
}

double EquationOfState::sound_speed_sq(double rho) const {
    if (!in_domain(rho)) throw DomainError("density outside eos domain");
    double c2;
    if (kind_ == Kind::polytropic) {
        c2 = k_ * gamma_ * std::pow(rho, gamma_ - 1.0);
    } else {
        c2 = interp_dp(rho);
    }
    if (!(c2 > 0.0)) throw HyperbolicityError("dp/drho <= 0: hyperbolicity violated");
    return c2;
}

EquationOfState::Eval EquationOfState::evaluate(double rho) const {
    return {pressure(rho), sound_speed_sq(rho)};
}

double EquationOfState::density(double p) const {
    double lo, hi;
    if (kind_ == Kind::polytropic) {
        if (!(p > 0.0)) throw DomainError("polytropic pressures are positive");
        lo = 1.0;
        hi = 1.0;
        while (pressure(lo) > p) lo *= 0.5;
        while (pressure(hi) < p) hi *= 2.0;
    } else {
        if (p < y_.front() || p > y_.back()) throw DomainError("pressure outside tabulated range");
        lo = x_.front();
        hi = x_.back();
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (pressure(mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-14 * hi) break;
    }
    return 0.5 * (lo + hi);
}

Convexity EquationOfState::convexity(double rho_lo, double rho_hi, int samples) const {
    if (!(rho_lo < rho_hi)) throw ParameterError("empty density interval");
    if (!in_domain(rho_lo) || !in_domain(rho_hi)) throw DomainError("interval outside eos domain");
    if (samples < 2) throw ParameterError("need at least two convexity samples");

    // p'' sampled as a central difference of c^2 = p'
    const double span = rho_hi - rho_lo;
    const double h = span / (8.0 * samples);
    double min_s = kInf, max_abs = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double rho = rho_lo + span * (i + 0.5) / samples;
        const double a = std::max(rho - h, domain_min_ == 0.0 ? rho * 0.5 : domain_min_);
        const double b = std::min(rho + h, kind_ == Kind::polytropic ? rho_hi + h : domain_max_);
        const double s = (sound_speed_sq(b) - sound_speed_sq(a)) / (b - a);
        min_s = std::min(min_s, s);
        max_abs = std::max(max_abs, std::abs(s));
    }
    const double noise = 1e-7 * std::max(max_abs, 1e-300) + 1e-12;
    if (min_s >= 0.0) return Convexity::convex;
    if (min_s >= -noise) {
        return kind_ == Kind::tabulated ? Convexity::undetermined : Convexity::convex;
    }
    return Convexity::nonconvex;
}

std::string EquationOfState::describe() const {
    std::ostringstream os;
    os.precision(17);
    if (kind_ == Kind::polytropic) {
        os << "polytropic " << k_ << " " << gamma_;
    } else {
        os << "tabulated " << x_.size();
        for (std::size_t i = 0; i < x_.size(); ++i) os << " " << x_[i] << " " << y_[i];
    }
    return os.str();
}

EquationOfState EquationOfState::parse(const std::string& text) {
    std::istringstream ss(text);
    std::string kind;
    ss >> kind;
    if (kind == "polytropic") {
        double k, gamma;
        if (!(ss >> k >> gamma)) throw ParameterError("bad polytropic eos spec: " + text);
        return polytropic(k, gamma);
    }
    if (kind == "tabulated") {
        std::size_t n;
        if (!(ss >> n)) throw ParameterError("bad tabulated eos spec: " + text);
        std::vector<std::array<double, 2>> samples(n);
        for (auto& s : samples) {
            if (!(ss >> s[0] >> s[1])) throw ParameterError("bad tabulated eos spec: " + text);
        }
        return tabulated(std::move(samples));
    }
    throw ParameterError("unknown eos kind: " + kind);
}

}  // namespace elastoshock
