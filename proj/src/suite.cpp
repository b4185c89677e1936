#include "turan/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "turan/analytics.hpp"
#include "turan/certificate.hpp"
#include "turan/format.hpp"
#include "turan/gegenbauer.hpp"
#include "turan/zeros.hpp"

namespace turan {

const std::map<std::string, double>& default_tolerances()
{
    static const std::map<std::string, double> table{
        {"normalization", 1e-13},     // times n
        {"neighbors", 1e-11},
        {"parity", 1e-13},
        {"ode", 1e-9},
        {"chebyshev", 1e-11},
        {"turan", 1e-12},
        {"convexity", 1e-10},
        {"sign_threshold", 1e-10},
        {"consistency_delta", 1e-10},
        {"consistency_fd", 1e-6},
        {"consistency_sum", 1e-9},
        {"consistency_d2phi", 1e-9},
        {"legendre_concavity", 1e-8},
        {"evenness", 1e-13},
        {"corollary", 1e-10},
        {"basic", 1e-10},
        {"szasz", 1e-10},
        {"refinement", 1e-12},
        {"hermite", 1e-8},
        {"zero_residual", 1e-12},
        {"zero_symmetry", 1e-13},
        {"zero_bound", 1e-12},
        {"zero_sum", 1e-12},
    };
    return table;
}

void SuiteConfig::validate() const
{
    if (grid < 3) {
        throw DomainError("grid size must be at least 3");
    }
    if (lambdas.empty()) {
        throw DomainError("at least one lambda is required");
    }
    for (double l : lambdas) {
        if (!(l > -0.5)) {
            throw DomainError("every lambda must exceed -1/2 (got " + format_real(l) + ")");
        }
    }
    if (n_min < 1 || n_max < n_min) {
        throw DomainError("degree range must satisfy 1 <= n_min <= n_max");
    }
    for (const auto& [name, value] : tolerance_overrides) {
        if (!default_tolerances().contains(name)) {
            throw DomainError("unknown tolerance '" + name + "'");
        }
        if (!(value >= 0.0)) {
            throw DomainError("tolerance '" + name + "' must be non-negative");
        }
    }
}

double SuiteConfig::tolerance(const std::string& name) const
{
    if (const auto it = tolerance_overrides.find(name); it != tolerance_overrides.end()) {
        return it->second;
    }
    return default_tolerances().at(name);
}

std::vector<double> grid_points(double a, double b, int count)
{
    std::vector<double> g(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        g[static_cast<std::size_t>(i)] = (i == count - 1) ? b : a + (b - a) * i / (count - 1);
    }
    return g;
}

namespace {

// Largest violation seen; the check passes when it stays <= tolerance.
class Worst {
public:
    void update(double violation, double lambda, int n, double x)
    {
        if (std::isnan(violation) || violation > value_) {
            value_ = std::isnan(violation) ? INFINITY : violation;
            std::ostringstream os;
            os << "lambda=" << format_real(lambda) << " n=" << n << " x=" << format_real(x);
            where_ = os.str();
        }
    }
    double value() const { return value_; }
    const std::string& where() const { return where_; }

private:
    double value_ = -INFINITY;
    std::string where_;
};

SuiteCheck finish(std::string module, std::string name, const Worst& w, double tol, std::string extra = {})
{
    SuiteCheck c;
    c.module = std::move(module);
    c.name = std::move(name);
    c.tolerance = tol;
    c.worst = std::isinf(w.value()) && w.value() < 0 ? 0.0 : w.value();
    c.passed = w.value() <= tol;
    c.detail = w.where().empty() ? extra : ("worst at " + w.where() + (extra.empty() ? "" : "; " + extra));
    return c;
}

// |a - b| measured against max(|a|, |b|, scale).
double rel(double a, double b, double scale = 0.0)
{
    const double d = std::max({std::abs(a), std::abs(b), std::abs(scale)});
    return d == 0.0 ? 0.0 : std::abs(a - b) / d;
}

double sign(double v)
{
    return (v > 0) - (v < 0);
}

template <typename F>
void for_params(const SuiteConfig& cfg, F&& f, int n_cap = 1 << 30)
{
    for (double l : cfg.lambdas) {
        for (int n = cfg.n_min; n <= std::min(cfg.n_max, n_cap); ++n) {
            f(UltraParams(l, n));
        }
    }
}

// ---- gegenbauer-core ----

SuiteCheck check_normalization(const SuiteConfig& cfg)
{
    Worst w;
    for_params(cfg, [&](const UltraParams& p) {
        const PolyEval e = eval(p, 1.0);
        const double err = std::max({std::abs(e.p - 1), std::abs(e.p_prev - 1), std::abs(e.p_next - 1)});
        w.update(err / p.n(), p.lambda(), p.n(), 1.0);
    });
    return finish("gegenbauer-core", "normalization", w, cfg.tolerance("normalization"), "error divided by n");
}

SuiteCheck check_neighbors(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-1, 1, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        for (double x : xs) {
            const PolyEval e = eval(p, x);
            const NeighborValues nb = neighbors_from_center(p, x, e.p, e.dp);
            const double scale = std::max(std::abs(x * e.p), std::abs((1 - x * x) * e.dp / p.n()));
            w.update(std::max(rel(nb.p_next, e.p_next, scale), rel(nb.p_prev, e.p_prev, scale)), p.lambda(),
                     p.n(), x);
        }
    });
    return finish("gegenbauer-core", "neighbor_identities", w, cfg.tolerance("neighbors"),
                  "relative to the largest term");
}

SuiteCheck check_parity(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(0, 1, (cfg.grid + 1) / 2);
    for_params(cfg, [&](const UltraParams& p) {
        const double s = (p.n() % 2 == 0) ? 1.0 : -1.0;
        for (double x : xs) {
            w.update(std::abs(eval(p, -x).p - s * eval(p, x).p), p.lambda(), p.n(), x);
        }
    });
    return finish("gegenbauer-core", "parity", w, cfg.tolerance("parity"));
}

SuiteCheck check_ode(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-1, 1, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        for (double x : xs) {
            const OdeResiduals r = ode_residuals(p, eval(p, x));
            w.update(r.scale2 == 0 ? 0 : std::abs(r.r2) / r.scale2, p.lambda(), p.n(), x);
        }
    });
    return finish("gegenbauer-core", "ode_residual", w, cfg.tolerance("ode"), "relative to the largest term");
}

SuiteCheck check_chebyshev(const SuiteConfig& cfg)
{
    Worst w;
    const auto thetas = grid_points(0, M_PI, cfg.grid);
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const UltraParams p(0.0, n);
        for (double th : thetas) {
            w.update(std::abs(eval(p, std::cos(th)).p - std::cos(n * th)), 0.0, n, std::cos(th));
        }
    }
    return finish("gegenbauer-core", "chebyshev_limit", w, cfg.tolerance("chebyshev"));
}

// ---- turan-analytics ----

SuiteCheck check_turan(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-1, 1, cfg.grid);
    const double tol = cfg.tolerance("turan");
    for_params(cfg, [&](const UltraParams& p) {
        for (double x : xs) {
            const double d = turan_eval(p, x).delta;
            // Negative values violate; at +-1 so does any departure from 0.
            w.update(std::abs(x) == 1.0 ? std::abs(d) : -d, p.lambda(), p.n(), x);
        }
    });
    return finish("turan-analytics", "turan_inequality", w, tol, "delta >= -tol on [-1,1], |delta(+-1)| <= tol");
}

SuiteCheck check_convexity(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-3, 3, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        for (double x : xs) {
            w.update(-p.lambda() * turan_eval(p, x).d2phi, p.lambda(), p.n(), x);
        }
    });
    return finish("turan-analytics", "phi_convexity", w, cfg.tolerance("convexity"),
                  "lambda * phi'' >= -tol on [-3,3]");
}

SuiteCheck check_dphi_sign(const SuiteConfig& cfg)
{
    Worst w;
    std::size_t compared = 0;
    const auto xs = grid_points(-3, 3, cfg.grid);
    const double threshold = cfg.tolerance("sign_threshold");
    for_params(cfg, [&](const UltraParams& p) {
        for (double x : xs) {
            const double d = turan_eval(p, x).dphi;
            if (std::abs(d) > threshold) {
                ++compared;
                w.update(sign(d) == sign(p.lambda() * x) ? 0.0 : 1.0, p.lambda(), p.n(), x);
            }
        }
    });
    auto c = finish("turan-analytics", "dphi_sign", w, 0.0,
                    "sign(phi') = sign(lambda x) at " + std::to_string(compared) + " points with |phi'| > " +
                        format_real(threshold));
    return c;
}

SuiteCheck check_beyond_largest_zero(const SuiteConfig& cfg)
{
    Worst w;
    for_params(cfg, [&](const UltraParams& p) {
        if (p.n() < 2) {
            return;
        }
        const double xn = zeros(p).largest();
        for (double delta : {0.05, 0.2, 1.0}) {
            const TuranEval t = turan_eval(p, xn + delta);
            const bool ok = sign(t.dphi) == sign(p.lambda()) && sign(t.d2phi) == sign(p.lambda());
            w.update(ok ? 0.0 : 1.0, p.lambda(), p.n(), xn + delta);
        }
    });
    return finish("turan-analytics", "derivative_signs_beyond_largest_zero", w, 0.0,
                  "sign(phi') = sign(phi'') = sign(lambda) at x_n + {0.05, 0.2, 1}");
}

SuiteCheck check_dpsi_positive(const SuiteConfig& cfg)
{
    Worst w;
    for_params(cfg, [&](const UltraParams& p) {
        if (p.n() < 2) {
            return;
        }
        const double xn = zeros(p).largest();
        for (int j = 1; j <= 64; ++j) {
            const double x = (j == 64) ? xn : xn * j / 64.0;
            const double v = turan_eval(p, x).dpsi;
            w.update(v > 0 ? 0.0 : 1.0, p.lambda(), p.n(), x);
        }
    });
    return finish("turan-analytics", "dpsi_positive_up_to_largest_zero", w, 0.0, "psi' > 0 on (0, x_n]");
}

SuiteCheck check_discriminant(const SuiteConfig& cfg)
{
    Worst w;
    for_params(cfg, [&](const UltraParams& p) {
        if (p.n() < 2) {
            return;
        }
        const double xn = zeros(p).largest();
        for (int j = 1; j <= 64; ++j) {
            const double x = (j == 64) ? xn : xn * j / 64.0;
            const Discriminants d = discriminants(p, x);
            w.update(d.D1 < 0 && d.D < 0 ? 0.0 : 1.0, p.lambda(), p.n(), x);
        }
    });
    return finish("turan-analytics", "discriminant_negative_up_to_largest_zero", w, 0.0, "D1 < 0 and D < 0 on (0, x_n]");
}

SuiteCheck check_consistency_delta(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-1, 1, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        for (double x : xs) {
            if (std::abs(x) == 1.0) {
                continue;
            }
            const TuranEval t = turan_eval(p, x);
            w.update(rel(t.delta, (1 - x) * (1 + x) * t.phi), p.lambda(), p.n(), x);
        }
    });
    return finish("turan-analytics", "delta_vs_closed_form", w, cfg.tolerance("consistency_delta"));
}

// A plain central difference at h = 1e-5 carries a truncation error of
// h^2 phi'''/6, which near x = +-1 reaches 5e-5 relative at n = 60. One
// Richardson step removes the h^2 term; the plain error is reported alongside.
SuiteCheck check_consistency_fd(const SuiteConfig& cfg)
{
    Worst w;
    double plain = 0.0;
    const auto xs = grid_points(-1, 1, cfg.grid);
    const double h = 1e-5;
    for_params(cfg, [&](const UltraParams& p) {
        const auto central = [&](double x, double step) {
            return (turan_eval(p, x + step).phi - turan_eval(p, x - step).phi) / (2 * step);
        };
        for (double x : xs) {
            const TuranEval t = turan_eval(p, x);
            const double coarse = central(x, h);
            const double fine = central(x, h / 2);
            w.update(rel(t.dphi, (4 * fine - coarse) / 3, t.phi), p.lambda(), p.n(), x);
            plain = std::max(plain, rel(t.dphi, coarse, t.phi));
        }
    });
    return finish("turan-analytics", "dphi_vs_finite_difference", w, cfg.tolerance("consistency_fd"),
                  "Richardson from h=1e-5 and h/2, relative to max(|phi'|, |phi|); plain central difference off by " +
                      format_real(plain));
}

SuiteCheck check_consistency_sum(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-1, 1, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        const ZeroSet zs = zeros(p);
        for (double x : xs) {
            const TuranEval t = turan_eval(p, x);
            w.update(rel(t.dphi, phi_prime_sumform(p, x, zs), t.phi), p.lambda(), p.n(), x);
        }
    });
    return finish("turan-analytics", "dphi_vs_zero_sum_form", w, cfg.tolerance("consistency_sum"),
                  "relative to max(|phi'|, |phi|)");
}

SuiteCheck check_consistency_d2phi(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-1, 1, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        const double c = 2 * p.lambda() / p.eigen();
        for (double x : xs) {
            const TuranEval t = turan_eval(p, x);
            w.update(rel(t.d2phi, c * psi_prime_direct(p, x), t.phi), p.lambda(), p.n(), x);
        }
    });
    return finish("turan-analytics", "d2phi_vs_direct_psi_prime", w, cfg.tolerance("consistency_d2phi"),
                  "quadratic form vs x p'p'' - 2pp'' - x p p''', relative to max(|phi''|, |phi|)");
}

SuiteCheck check_evenness(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(0, 3, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        for (double x : xs) {
            w.update(std::abs(turan_eval(p, x).phi - turan_eval(p, -x).phi), p.lambda(), p.n(), x);
        }
    });
    return finish("turan-analytics", "phi_even", w, cfg.tolerance("evenness"));
}

// Relative to the largest |delta''| over the grid for each n, since both
// sides vanish together at the critical points of P_n.
SuiteCheck check_legendre_concavity(const SuiteConfig& cfg)
{
    Worst w;
    double literal = 0.0;
    const auto xs = grid_points(-1, 1, cfg.grid);
    for (int n = cfg.n_min; n <= std::min(cfg.n_max, 40); ++n) {
        const UltraParams p(0.5, n);
        const double c = 2.0 / (n * (n + 1.0));
        std::vector<double> d2(xs.size());
        std::vector<PolyEval> ev;
        double scale = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            ev.push_back(eval(p, xs[i]));
            d2[i] = delta_second_derivative(turan_eval(p, xs[i]));
            scale = std::max(scale, std::abs(d2[i]));
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
            w.update(rel(d2[i], -c * ev[i].dp * ev[i].dp, scale), 0.5, n, xs[i]);
            literal = std::max(literal, rel(d2[i], -c * ev[i].d2p * ev[i].d2p, scale));
        }
    }
    return finish("turan-analytics", "legendre_concavity_identity", w, cfg.tolerance("legendre_concavity"),
                  "delta'' = -2/(n(n+1)) P_n'^2; the P_n''^2 reading is off by up to " + format_real(literal) +
                      " relative");
}

SuiteCheck check_basic(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-1, 1, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        if (p.lambda() == 0.0) {
            return;
        }
        for (double x : xs) {
            const BoundReport r = bound_report(p, x, BoundFamily::Basic);
            w.update(-std::min(r.margin_low, *r.margin_high), p.lambda(), p.n(), x);
        }
    });
    return finish("turan-analytics", "basic_two_sided_estimate", w, cfg.tolerance("basic"), "margins >= -tol on [-1,1]");
}

SuiteCheck check_corollary_interval(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-1, 1, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        if (p.lambda() == 0.0) {
            return;
        }
        for (double x : xs) {
            const BoundReport r = bound_report(p, x, BoundFamily::Corollary);
            w.update(-std::min(r.margin_low, *r.margin_high), p.lambda(), p.n(), x);
        }
    });
    return finish("turan-analytics", "corollary_two_sided_on_interval", w, cfg.tolerance("corollary"),
                  "both margins >= -tol on [-1,1]");
}

// For |x| > 1, (1 - x^2) < 0 flips the phi inequalities: the chord-side
// bound keeps its direction while the phi(0)-side bound reverses.
SuiteCheck check_corollary_outside(const SuiteConfig& cfg)
{
    Worst w;
    double literal = INFINITY;
    const auto xs = grid_points(-2, 2, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        if (p.lambda() == 0.0) {
            return;
        }
        for (double x : xs) {
            const BoundReport r = bound_report(p, x, BoundFamily::Corollary);
            const bool outside = std::abs(x) > 1.0;
            const double chord_margin = p.lambda() > 0 ? *r.margin_high : r.margin_low;
            const double origin_margin = p.lambda() > 0 ? r.margin_low : *r.margin_high;
            w.update(-chord_margin, p.lambda(), p.n(), x);
            if (outside) {
                w.update(origin_margin, p.lambda(), p.n(), x);
                literal = std::min(literal, origin_margin);
            }
        }
    });
    return finish("turan-analytics", "corollary_on_real_line", w, cfg.tolerance("corollary"),
                  "chord bound holds on [-2,2]; the phi(0) bound reverses for |x| > 1 (its stated "
                  "direction has margin down to " +
                      format_real(literal) + ")");
}

SuiteCheck check_szasz(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-1, 1, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        if (!(p.lambda() > 0 && p.lambda() < 1)) {
            return;
        }
        for (double x : xs) {
            const BoundReport r = bound_report(p, x, BoundFamily::Szasz);
            w.update(-std::min(r.margin_low, *r.margin_high), p.lambda(), p.n(), x);
        }
    });
    return finish("turan-analytics", "szasz_bounds", w, cfg.tolerance("szasz"), "0 < lambda < 1, [-1,1]");
}

SuiteCheck check_refinement(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-1, 1, cfg.grid);
    for_params(cfg, [&](const UltraParams& p) {
        if (!(p.lambda() <= 0.5)) {
            return;
        }
        for (double x : xs) {
            const double v = bound_report(p, x, BoundFamily::Refinement).value;
            w.update(std::abs(x) == 1.0 ? std::abs(v) : -v, p.lambda(), p.n(), x);
        }
        if (p.n() % 2 == 0) {
            w.update(std::abs(bound_report(p, 0.0, BoundFamily::Refinement).value), p.lambda(), p.n(), 0.0);
        }
    });
    return finish("turan-analytics", "refined_turan_inequality", w, cfg.tolerance("refinement"),
                  "|x| p^2 - p_prev p_next >= -tol; equality at +-1 and at 0 for even n");
}

SuiteCheck check_hermite(const SuiteConfig& cfg)
{
    Worst w;
    const auto xs = grid_points(-1, 1, cfg.grid);
    for_params(
        cfg,
        [&](const UltraParams& p) {
            const ZeroSet zs = zeros(p);
            for (double x : xs) {
                if (std::abs(x) == 1.0) {
                    continue;
                }
                w.update(rel(hermite_representation(p, x, zs), turan_eval(p, x).delta), p.lambda(), p.n(), x);
            }
        },
        40);
    return finish("turan-analytics", "hermite_representation", w, cfg.tolerance("hermite"), "n <= 40");
}

// ---- zero-finder ----

SuiteCheck check_zero_set(const SuiteConfig& cfg)
{
    Worst w;
    const double res_tol = cfg.tolerance("zero_residual");
    const double sym_tol = cfg.tolerance("zero_symmetry");
    for_params(cfg, [&](const UltraParams& p) {
        const ZeroSet zs = zeros(p);
        const auto& z = zs.zeros;
        const std::size_t n = z.size();
        bool shape = n == static_cast<std::size_t>(p.n());
        for (std::size_t k = 0; k < n; ++k) {
            shape = shape && z[k] > -1 && z[k] < 1 && (k == 0 || z[k] > z[k - 1]);
            const double sym = std::abs(z[k] + z[n - 1 - k]);
            const double scale = std::max(1.0, std::abs(eval(p, z[k]).dp));
            // Normalize both criteria to "fraction of tolerance".
            w.update(std::max(sym / sym_tol, zs.residuals[k] / scale / res_tol), p.lambda(), p.n(), z[k]);
        }
        if (n % 2 == 1) {
            shape = shape && z[n / 2] == 0.0;
        }
        if (!shape) {
            w.update(INFINITY, p.lambda(), p.n(), 0.0);
        }
    });
    return finish("zero-finder", "zero_set_invariants", w, 1.0,
                  "ordered in (-1,1), symmetric, residual <= tol * max(1,|p'|); worst as fraction of tolerance");
}

SuiteCheck check_interlacing(const SuiteConfig& cfg)
{
    Worst w;
    for_params(cfg, [&](const UltraParams& p) {
        const auto a = zeros(p).zeros;
        const auto b = zeros(UltraParams(p.lambda(), p.n() + 1)).zeros;
        bool ok = true;
        for (std::size_t k = 0; k < a.size(); ++k) {
            ok = ok && b[k] < a[k] && a[k] < b[k + 1];
        }
        w.update(ok ? 0.0 : 1.0, p.lambda(), p.n(), 0.0);
    });
    return finish("zero-finder", "interlacing", w, 0.0, "zeros of p_n strictly interlace those of p_{n+1}");
}

SuiteCheck check_bound_chain(const SuiteConfig& cfg)
{
    Worst w;
    double min_gap = INFINITY;
    const double tol = cfg.tolerance("zero_bound");
    for_params(cfg, [&](const UltraParams& p) {
        if (p.n() < 2) {
            return;
        }
        const double xn = zeros(p).largest();
        const double bound = largest_zero_bound(p);
        const double threshold = proof_threshold(p);
        min_gap = std::min(min_gap, threshold - bound);
        w.update(xn * xn - bound, p.lambda(), p.n(), xn);
        if (!(bound < threshold)) {
            w.update(INFINITY, p.lambda(), p.n(), xn);
        }
    });
    return finish("zero-finder", "largest_zero_bound_chain", w, tol,
                  "x_n^2 <= bound + tol and bound < threshold (smallest gap " + format_real(min_gap) + ")");
}

SuiteCheck check_zero_sum(const SuiteConfig& cfg)
{
    Worst w;
    for_params(cfg, [&](const UltraParams& p) {
        double s = 0.0;
        for (double z : zeros(p).zeros) {
            s += z;
        }
        w.update(std::abs(s), p.lambda(), p.n(), 0.0);
    });
    return finish("zero-finder", "zero_sum", w, cfg.tolerance("zero_sum"));
}

// ---- exact-certifier ----

SuiteCheck certificate_check(const std::string& name, const Certificate& c)
{
    SuiteCheck s;
    s.module = "exact-certifier";
    s.name = name;
    const CheckResult r = check_certificate(c);
    s.passed = c.verdict == Verdict::Proved && r.ok;
    s.worst = s.passed ? 0.0 : 1.0;
    s.detail = "verdict " + std::string(to_string(c.verdict)) + ", independent check " + (r.ok ? "ok" : r.reason);
    return s;
}

SuiteCheck check_ratio_identity(const SuiteConfig&)
{
    const std::vector<std::string> vars{"lambda", "t"};
    const MPoly l = MPoly::variable(vars, "lambda");
    const MPoly t = MPoly::variable(vars, "t");
    const MPoly one = MPoly::constant(vars, 1);
    const MPoly expected = (l + MPoly::constant(vars, Rational(3, 2))) * t * (one - t);
    const MPoly got = ratio_inequality_difference();
    SuiteCheck s;
    s.module = "exact-certifier";
    s.name = "ratio_difference_identity";
    s.passed = got == expected;
    s.worst = s.passed ? 0.0 : 1.0;
    s.detail = "difference = " + got.to_string();
    return s;
}

SuiteCheck check_float_agreement(const SuiteConfig&)
{
    const BoundComparisonForms f = bound_comparison_forms();
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> n_dist(2, 200);
    std::uniform_real_distribution<double> l_dist(-0.49, 20.0);
    Worst w;
    for (int i = 0; i < 100; ++i) {
        const int n = n_dist(rng);
        const double l = l_dist(rng);
        const UltraParams p(l, n);
        const double diff = proof_threshold(p) - largest_zero_bound(p);
        const std::vector<double> pt{double(n), l};
        const double poly = f.difference.evaluate(std::span<const double>(pt));
        w.update(sign(diff) == sign(poly) ? 0.0 : 1.0, l, n, 0.0);
    }
    return finish("exact-certifier", "cleared_polynomial_sign_matches_binary64", w, 0.0, "100 random (n, lambda)");
}

} // namespace

std::vector<SuiteCheck> run_suite(const SuiteConfig& cfg)
{
    cfg.validate();
    using Check = std::function<SuiteCheck(const SuiteConfig&)>;
    const std::vector<Check> checks{
        check_normalization,
        check_neighbors,
        check_parity,
        check_ode,
        check_chebyshev,
        check_turan,
        check_convexity,
        check_dphi_sign,
        check_beyond_largest_zero,
        check_dpsi_positive,
        check_discriminant,
        check_consistency_delta,
        check_consistency_fd,
        check_consistency_sum,
        check_consistency_d2phi,
        check_evenness,
        check_legendre_concavity,
        check_basic,
        check_corollary_interval,
        check_corollary_outside,
        check_szasz,
        check_refinement,
        check_hermite,
        check_zero_set,
        check_interlacing,
        check_bound_chain,
        check_zero_sum,
        check_ratio_identity,
        [](const SuiteConfig&) { return certificate_check("ratio_inequality_certificate", certify_ratio_inequality()); },
        [](const SuiteConfig&) {
            return certificate_check("bound_comparison_certificate", certify_bound_comparison());
        },
        check_float_agreement,
    };

    std::vector<std::future<SuiteCheck>> pending;
    pending.reserve(checks.size());
    for (const auto& check : checks) {
        pending.push_back(std::async(std::launch::async, check, std::cref(cfg)));
    }
    std::vector<SuiteCheck> results;
    results.reserve(checks.size());
    for (auto& f : pending) {
        results.push_back(f.get());
    }
    return results;
}

} // namespace turan
