#include "tcoulomb/spectrum.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tcoulomb/errors.hpp"
#include "tcoulomb/oracle.hpp"

namespace tcoulomb {

double SpectralCurve::beta_min() const {
    if (points.empty()) throw UsageError("curve has no points");
    return points.front().beta;
}

double SpectralCurve::beta_max() const {
    if (points.empty()) throw UsageError("curve has no points");
    return points.back().beta;
}

SpectralCurve build_curve(int nu, int l, int n_max, double tol) {
    if (nu < 0) throw UsageError("nu must be nonnegative");
    if (l < 0) throw UsageError("l must be nonnegative");
    if (n_max < nu) throw UsageError("n_max must be at least nu");

    SpectralCurve curve;
    curve.nu = nu;
    curve.l = l;
    curve.points.reserve(static_cast<std::size_t>(n_max - nu) + 1);
    for (int n = nu; n <= n_max; ++n) {
        const int i = n + 1 - nu;
        std::vector<ExactSolution> sols = solve_truncation(n, l, tol);
        const ExactSolution& s = sols[static_cast<std::size_t>(i - 1)];
        curve.points.push_back({s.beta, s.alpha, PointSource::exact, n, i});
    }
    std::sort(curve.points.begin(), curve.points.end(),
              [](const CurvePoint& a, const CurvePoint& b) { return a.beta < b.beta; });
    for (std::size_t k = 1; k < curve.points.size(); ++k) {
        if (!(curve.points[k].beta > curve.points[k - 1].beta) ||
            !(curve.points[k].alpha > curve.points[k - 1].alpha)) {
            throw IntegrityError("curve nu=" + std::to_string(nu) + ", l=" + std::to_string(l) +
                                 " is not strictly increasing in beta and alpha");
        }
    }
    return curve;
}

double interpolate(const SpectralCurve& curve, double beta) {
    const auto& pts = curve.points;
    if (pts.size() < 2) throw UsageError("interpolation needs at least two curve points");
    if (!(beta >= pts.front().beta && beta <= pts.back().beta)) {
        throw HullError("beta=" + std::to_string(beta) + " lies outside the exact-point hull [" +
                        std::to_string(pts.front().beta) + ", " + std::to_string(pts.back().beta) + "]");
    }

    // barycentric weights w_i = 1 / prod_{j != i} (x_i - x_j)
    const std::size_t m = pts.size();
    std::vector<double> w(m, 1.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (j != i) w[i] /= (pts[i].beta - pts[j].beta);
        }
    }
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double dx = beta - pts[i].beta;
        if (dx == 0.0) return pts[i].alpha;  // cardinal property, exactly
        const double t = w[i] / dx;
        num += t * pts[i].alpha;
        den += t;
    }
    return num / den;
}

HellmannFeynman hellmann_feynman_check(const ExactSolution& sol, double quadrature_tol) {
    if (!(quadrature_tol > 0)) throw UsageError("quadrature tolerance must be positive");

    // rhs: -<1/(r+1)> over the exact eigenfunction
    using boost::math::quadrature::gauss_kronrod;
    auto f2 = [&](double r) {
        double f = eval_wavefunction(sol, r);
        return f * f;
    };
    auto f2_weighted = [&](double r) { return f2(r) / (1.0 + r); };
    const double inf = std::numeric_limits<double>::infinity();
    double err_num = 0.0, err_den = 0.0;
    const double num = gauss_kronrod<double, 61>::integrate(f2_weighted, 0.0, inf, 12, quadrature_tol, &err_num);
    const double den = gauss_kronrod<double, 61>::integrate(f2, 0.0, inf, 12, quadrature_tol, &err_den);
    if (!(den > 0.0) || !std::isfinite(num) || !std::isfinite(den) ||
        err_num > quadrature_tol * std::max(1.0, num) || err_den > quadrature_tol * std::max(1.0, den)) {
        throw ConvergenceError("expectation-value quadrature failed to converge");
    }

    // lhs: centered finite difference of oracle eigenvalues at beta +/- h,
    // tracking the state with the same node count
    const double h = 1e-4 * sol.beta;
    OracleResult above = solve_state(make_problem(sol.beta + h, sol.l, sol.nodes, 1e-11), sol.nodes);
    OracleResult below = solve_state(make_problem(sol.beta - h, sol.l, sol.nodes, 1e-11), sol.nodes);

    HellmannFeynman out;
    out.rhs = -num / den;
    out.lhs = (above.energy_tilde - below.energy_tilde) / (2.0 * h);
    return out;
}

std::vector<DegeneracyEntry> degeneracy_split(int k, const std::vector<double>& beta_grid, int n_max) {
    if (k < 1) throw UsageError("degeneracy family index k must be >= 1");
    std::vector<DegeneracyEntry> table;
    table.reserve(static_cast<std::size_t>(k + 1) * beta_grid.size());
    for (int nu = 0; nu <= k; ++nu) {
        const int l = k - nu;
        SpectralCurve curve = build_curve(nu, l, n_max);
        for (double beta : beta_grid) {
            DegeneracyEntry e;
            e.nu = nu;
            e.l = l;
            e.beta = beta;
            if (beta >= curve.beta_min() && beta <= curve.beta_max()) {
                e.alpha = interpolate(curve, beta);
            }
            table.push_back(e);
        }
    }
    return table;
}

std::vector<std::pair<int, double>> monotonicity_scan(int l_max, double beta, int n_max) {
    if (l_max < 0) throw UsageError("l_max must be nonnegative");
    std::vector<std::pair<int, double>> out;
    out.reserve(static_cast<std::size_t>(l_max) + 1);
    for (int l = 0; l <= l_max; ++l) {
        SpectralCurve curve = build_curve(0, l, n_max);
        out.emplace_back(l, interpolate(curve, beta));  // HullError propagates per entry
    }
    for (std::size_t k = 1; k < out.size(); ++k) {
        if (!(out[k].second < out[k - 1].second)) {
            throw IntegrityError("alpha_{0,l}(beta) failed to decrease from l=" +
                                 std::to_string(out[k - 1].first) + " to l=" +
                                 std::to_string(out[k].first));
        }
    }
    return out;
}

}  // namespace tcoulomb
