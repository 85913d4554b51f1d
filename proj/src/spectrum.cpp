#include "comptonqcd/spectrum.hpp"

#include "comptonqcd/error.hpp"
#include "comptonqcd/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace comptonqcd::spectrum {

namespace {

constexpr double kOverflow = 1e150;
constexpr double kRescale = 1e-150;

// Numerov coefficients on the logarithmic grid; f_i(E) = base_i - E weight_i.
struct Grid {
    double h = 0.0;
    std::vector<double> r;
    std::vector<double> base;    // 2 mu r^2 V(r) + (l + 1/2)^2
    std::vector<double> weight;  // 2 mu r^2
    std::vector<double> v_eff;   // V(r) + l(l+1) / (2 mu r^2)
    double start[2] = {0.0, 1.0};  // regular solution at the first two nodes

    int size() const { return static_cast<int>(r.size()); }
    double c(int i, double e) const { return 1.0 - h * h * (base[i] - e * weight[i]) / 12.0; }
};

Grid make_grid(const RadialProblem& p) {
    validate(p);
    const int n = p.grid_points;
    const double x0 = std::log(p.r_min.value());
    const double x1 = std::log(p.r_max.value());
    const double mu = p.reduced_mass.value();
    const double alpha = p.potential.alpha().value();
    const double sigma = p.potential.sigma().value();
    const double ell = p.angular_momentum;
    const double shift = (ell + 0.5) * (ell + 0.5);

    Grid g;
    g.h = (x1 - x0) / (n - 1);
    g.r.resize(n);
    g.base.resize(n);
    g.weight.resize(n);
    g.v_eff.resize(n);
    for (int i = 0; i < n; ++i) {
        const double r = (i == n - 1) ? p.r_max.value() : std::exp(x0 + i * g.h);
        const double v = -alpha / r + sigma * r;
        g.r[i] = r;
        g.weight[i] = 2.0 * mu * r * r;
        g.base[i] = g.weight[i] * v + shift;
        g.v_eff[i] = v + ell * (ell + 1.0) / (2.0 * mu * r * r);
    }
    // u ~ r^(l+1) (1 - mu alpha r / (l+1)) near the origin, so w = u / sqrt(r).
    const double top = g.r[1];
    for (int i = 0; i < 2; ++i) {
        const double r = g.r[i];
        g.start[i] = std::pow(r / top, ell + 0.5) * (1.0 - mu * alpha * r / (ell + 1.0)) /
                     (1.0 - mu * alpha * top / (ell + 1.0));
    }
    return g;
}

void count_sign_change(double w, double& last_sign, int& nodes) {
    if (w == 0.0) return;
    const double s = w > 0.0 ? 1.0 : -1.0;
    if (last_sign != 0.0 && s != last_sign) ++nodes;
    last_sign = s;
}

// Outward Numerov from w(r_min) = 0. Stores w when `out` is given.
int shoot_outward(const Grid& g, double e, int last, std::vector<double>* out) {
    double w_prev = g.start[0];
    double w = g.start[1];
    double c_prev = g.c(0, e);
    double c_cur = g.c(1, e);
    int nodes = 0;
    double last_sign = 1.0;
    if (out) {
        out->assign(g.size(), 0.0);
        (*out)[0] = w_prev;
        (*out)[1] = w;
    }
    for (int i = 1; i < last; ++i) {
        const double c_next = g.c(i + 1, e);
        double w_next = ((12.0 - 10.0 * c_cur) * w - c_prev * w_prev) / c_next;
        if (std::abs(w_next) > kOverflow) {
            w_next *= kRescale;
            w *= kRescale;
            if (out)
                for (int j = 0; j <= i; ++j) (*out)[j] *= kRescale;
        }
        count_sign_change(w_next, last_sign, nodes);
        if (out) (*out)[i + 1] = w_next;
        w_prev = w;
        w = w_next;
        c_prev = c_cur;
        c_cur = c_next;
    }
    return nodes;
}

// Inward Numerov from w(r_max) = 0 down to index `first`.
std::vector<double> shoot_inward(const Grid& g, double e, int first) {
    const int n = g.size();
    std::vector<double> v(n, 0.0);
    v[n - 2] = 1.0;
    for (int i = n - 2; i > first; --i) {
        v[i - 1] = ((12.0 - 10.0 * g.c(i, e)) * v[i] - g.c(i + 1, e) * v[i + 1]) / g.c(i - 1, e);
        if (std::abs(v[i - 1]) > kOverflow)
            for (int j = i - 1; j < n; ++j) v[j] *= kRescale;
    }
    return v;
}

int node_count(const Grid& g, double e) { return shoot_outward(g, e, g.size() - 1, nullptr); }

// Outermost index where the transformed equation oscillates (f < 0).
int matching_index(const Grid& g, double e) {
    const int n = g.size();
    int m = -1;
    for (int i = n - 2; i >= 1; --i) {
        if (g.base[i] - e * g.weight[i] < 0.0) {
            m = i;
            break;
        }
    }
    if (m < 0) m = n / 2;
    return std::clamp(m, 2, n - 3);
}

struct Matched {
    std::vector<double> w;
    double mismatch = 0.0;
};

// Glue the outward and inward solutions at m. The mismatch is the discrete
// Numerov residual at m divided by w_m; it vanishes at an eigenvalue.
Matched match(const Grid& g, double e, int m) {
    Matched res;
    shoot_outward(g, e, m + 1, &res.w);
    const auto v = shoot_inward(g, e, m - 1);
    const double w_m = res.w[m];
    const double scale = w_m / v[m];
    res.mismatch = g.c(m + 1, e) * v[m + 1] / v[m] + g.c(m - 1, e) * res.w[m - 1] / w_m -
                   (12.0 - 10.0 * g.c(m, e));
    for (int i = m + 1; i < g.size(); ++i) res.w[i] = scale * v[i];
    return res;
}

// Simpson over the uniform ln r grid; trapezoid for a leftover interval.
double integrate_log_grid(const std::vector<double>& f, double h) {
    const auto n = f.size();
    if (n < 2) return 0.0;
    const std::size_t intervals = n - 1;
    const std::size_t even = intervals - intervals % 2;
    double sum = 0.0;
    if (even >= 2) {
        double s = f[0] + f[even];
        for (std::size_t i = 1; i < even; ++i) s += f[i] * ((i % 2 == 1) ? 4.0 : 2.0);
        sum = s * h / 3.0;
    }
    if (even != intervals) sum += 0.5 * h * (f[n - 2] + f[n - 1]);
    return sum;
}

}  // namespace

void validate(const RadialProblem& p) {
    if (p.reduced_mass.dim() != 1 || p.r_min.dim() != -1 || p.r_max.dim() != -1)
        throw Error(ErrorCode::DimensionError, "radial problem has mis-dimensioned fields");
    if (!(p.reduced_mass.value() > 0.0))
        throw Error(ErrorCode::DomainError, "reduced mass must be positive");
    if (!(p.r_min.value() > 0.0) || !(p.r_max.value() > p.r_min.value()))
        throw Error(ErrorCode::DomainError, "grid needs 0 < r_min < r_max");
    if (p.grid_points < 1000)
        throw Error(ErrorCode::DomainError, "grid needs at least 1000 points");
    if (p.angular_momentum < 0)
        throw Error(ErrorCode::DomainError, "angular momentum must be non-negative");
}

RadialProblem default_problem(const potential::CornellPotential& v, const Quantity& reduced_mass,
                              const Quantity& scale, int angular_momentum) {
    RadialProblem p{v, reduced_mass, angular_momentum, 1e-6 * scale, 40.0 * scale, 20000};
    validate(p);
    return p;
}

Quantity characteristic_length(const potential::CornellPotential& v, const Quantity& reduced_mass) {
    if (v.is_trivial())
        throw Error(ErrorCode::NoBoundState, "alpha = sigma = 0 binds nothing");
    const double mu = reduced_mass.value();
    if (!(mu > 0.0)) throw Error(ErrorCode::DomainError, "reduced mass must be positive");
    double s = std::numeric_limits<double>::infinity();
    if (v.alpha().value() > 0.0) s = std::min(s, 1.0 / (mu * v.alpha().value()));
    if (v.sigma().value() > 0.0) s = std::min(s, std::cbrt(1.0 / (2.0 * mu * v.sigma().value())));
    return length(s);
}

RadialProblem auto_problem(const potential::CornellPotential& v, const Quantity& reduced_mass,
                           int level, int angular_momentum) {
    if (level < 1) throw Error(ErrorCode::DomainError, "level must be >= 1");
    const Quantity s = characteristic_length(v, reduced_mass);
    RadialProblem p{v, reduced_mass, angular_momentum, 1e-6 * s,
                    40.0 * (level + angular_momentum) * s, 20000};
    validate(p);
    return p;
}

NumerovSolution numerov_integrate(const RadialProblem& p, const Quantity& e) {
    if (e.dim() != 1) throw Error(ErrorCode::DimensionError, "energy must have mass dimension 1");
    const Grid g = make_grid(p);
    std::vector<double> w;
    NumerovSolution sol;
    sol.node_count = shoot_outward(g, e.value(), g.size() - 1, &w);
    sol.r = g.r;
    sol.u.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) sol.u[i] = std::sqrt(g.r[i]) * w[i];
    return sol;
}

BoundState solve_bound_state(const RadialProblem& p, int level, const Tolerances& tol) {
    if (level < 1) throw Error(ErrorCode::DomainError, "level must be >= 1");
    if (p.potential.is_trivial())
        throw Error(ErrorCode::NoBoundState, "alpha = sigma = 0 binds nothing");
    const Grid g = make_grid(p);
    const int n = g.size();

    // Cornell >= Coulomb pointwise, so the hydrogenic level bounds E from
    // below. Starting deeper makes Numerov unstable near r_max.
    double lo = *std::min_element(g.v_eff.begin(), g.v_eff.end());
    const double alpha = p.potential.alpha().value();
    if (alpha > 0.0) {
        const double principal = level + p.angular_momentum;
        const double coulomb =
            -p.reduced_mass.value() * alpha * alpha / (2.0 * principal * principal);
        lo = std::max(lo, coulomb - 1e-3 * std::abs(coulomb));
    }
    double hi = g.v_eff[n - 1];
    if (node_count(g, hi) < level)
        throw Error(ErrorCode::GridTooSmall,
                    "grid holds fewer than " + std::to_string(level) +
                        " states below V_eff(r_max); enlarge r_max");

    // The outward solution at E has as many nodes as there are levels
    // below E.
    for (int it = 0; it < 400; ++it) {
        if (hi - lo <= tol.bisection_relative * std::max(std::abs(lo), std::abs(hi))) break;
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        (node_count(g, mid) >= level ? hi : lo) = mid;
    }

    double e = 0.5 * (lo + hi);
    const int m = matching_index(g, e);
    // Illinois regula falsi on the matching mismatch inside the bracket.
    double a = lo;
    double b = hi;
    double fa = match(g, a, m).mismatch;
    double fb = match(g, b, m).mismatch;
    if (std::isfinite(fa) && std::isfinite(fb) && fa * fb < 0.0) {
        for (int it = 0; it < 60; ++it) {
            const double c = b - fb * (b - a) / (fb - fa);
            const double fc = match(g, c, m).mismatch;
            if (!std::isfinite(fc)) break;
            e = c;
            if (fc == 0.0) break;
            if (fc * fb < 0.0) {
                a = b;
                fa = fb;
            } else {
                fa *= 0.5;
            }
            b = c;
            fb = fc;
            if (std::abs(b - a) <= tol.refinement_relative * std::abs(b)) break;
        }
        e = std::clamp(e, lo, hi);
    }

    Matched sol = match(g, e, m);
    std::vector<double> density(n);
    for (int i = 0; i < n; ++i) density[i] = g.r[i] * g.r[i] * sol.w[i] * sol.w[i];
    const double norm = integrate_log_grid(density, g.h);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw Error(ErrorCode::NoBoundState, "bound-state wavefunction could not be normalized");

    BoundState s;
    s.level = level;
    s.energy = energy(e);
    s.r = g.r;
    s.u.resize(n);
    const double inv = 1.0 / std::sqrt(norm);
    for (int i = 0; i < n; ++i) s.u[i] = std::sqrt(g.r[i]) * sol.w[i] * inv;
    const auto first = std::find_if(s.u.begin(), s.u.end(), [](double x) { return x != 0.0; });
    if (first != s.u.end() && *first < 0.0)
        for (double& x : s.u) x = -x;

    double last_sign = 0.0;
    for (double x : s.u) count_sign_change(x, last_sign, s.nodes);
    s.log_step = g.h;
    s.grid_points = n;
    s.tolerances = tol;
    s.matching_radius = g.r[m];
    s.rms_radius = rms_radius(s);
    return s;
}

double expectation_r_power(const BoundState& s, double power) {
    std::vector<double> f(s.r.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = std::pow(s.r[i], power + 1.0) * s.u[i] * s.u[i];
    return integrate_log_grid(f, s.log_step);
}

double norm(const BoundState& s) { return expectation_r_power(s, 0.0); }

Quantity rms_radius(const BoundState& s) { return length(std::sqrt(expectation_r_power(s, 2.0))); }

double virial_check(const BoundState& s, const RadialProblem& p) {
    if (std::abs(norm(s) - 1.0) > 1e-6)
        throw Error(ErrorCode::DomainError, "virial check needs a normalized state");
    const double alpha = p.potential.alpha().value();
    const double sigma = p.potential.sigma().value();
    const double inv_r = expectation_r_power(s, -1.0);
    const double mean_r = expectation_r_power(s, 1.0);
    const double e = s.energy.value();
    const double mean_v = -alpha * inv_r + sigma * mean_r;
    const double r_dv = alpha * inv_r + sigma * mean_r;
    const double kinetic = e - mean_v;
    const double scale = std::max(std::abs(e), std::numeric_limits<double>::min());
    return std::abs(2.0 * kinetic - r_dv) / scale;
}

ConfinementResult confinement_analysis(const ConfinementOptions& opts) {
    const Quantity m =
        opts.mass_override ? *opts.mass_override : estimator::quark_mass_estimate(opts.e2_mode).mass;
    potential::CornellPotential v = potential::cornell_from_paper(m);
    if (opts.sigma_override) v = potential::CornellPotential(v.alpha(), *opts.sigma_override);
    const Quantity mu = 0.5 * m;
    const Quantity l = compton_wavelength(m);
    const RadialProblem p = default_problem(v, mu, l);
    const BoundState s = solve_bound_state(p, opts.level);

    ConfinementResult res;
    res.quark_mass = m;
    res.compton_wavelength = l;
    res.reduced_mass = mu;
    res.sigma = v.sigma();
    res.energy = s.energy;
    res.rms_radius = s.rms_radius;
    res.ratio = s.rms_radius.value() / l.value();
    res.nodes = s.nodes;
    return res;
}

double confinement_ratio(E2Mode mode) {
    ConfinementOptions opts;
    opts.e2_mode = mode;
    return confinement_analysis(opts).ratio;
}

}  // namespace comptonqcd::spectrum
