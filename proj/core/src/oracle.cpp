#include "tcoulomb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tcoulomb/errors.hpp"

namespace tcoulomb {

namespace {

constexpr double kThresholdAlpha = 1e-3;   // below this the state counts as unbound
constexpr double kTailDecay = 28.0;        // required alpha*(r_max - r_turn)
constexpr int kMaxDomainDoublings = 5;

// One shot at energy E: generalized node count and a smooth matching defect.
// The generalized count adds 1 when the log-derivative mismatch at the
// matching point is negative, which makes it jump exactly at the eigenvalues
// (a plain node count jumps where a node crosses the matching point instead).
struct Shot {
    int nodes = 0;       // sign changes of the assembled solution
    int count = 0;       // nodes + [matching mismatch < 0]; jumps at eigenvalues
    double defect = 0.0; // smooth, zero exactly at eigenvalues
};

class Shooter {
public:
    Shooter(double beta, int l, double r_max, int n_steps)
        : beta_(beta), l_(l), n_(n_steps), h_(r_max / n_steps), v_(static_cast<std::size_t>(n_steps) + 1) {
        for (int i = 1; i <= n_; ++i) {
            double r = i * h_;
            v_[static_cast<std::size_t>(i)] = -beta_ / (1.0 + r) + 0.5 * l_ * (l_ + 1.0) / (r * r);
        }
        // first index where the centrifugal term is resolvable by Numerov
        start_ = std::max(1, static_cast<int>(std::ceil(std::sqrt(l_ * (l_ + 1.0) / 3.0))) + 1);
    }

    double step() const { return h_; }

    Shot shoot(double energy) const {
        const int n = n_;
        const double h2_12 = h_ * h_ / 12.0;
        auto fcoef = [&](int i) { return 1.0 + h2_12 * 2.0 * (energy - v_[static_cast<std::size_t>(i)]); };

        // matching point: outermost classically allowed grid index
        int im = -1;
        for (int i = n - 1; i >= 1; --i) {
            if (energy > v_[static_cast<std::size_t>(i)]) { im = i; break; }
        }
        im = std::min(std::max(im, start_ + 2), n - 4);

        // outward sweep, initialized from the regular series r^{l+1}(1 + b2 r^2 + ...);
        // rescaling touches both running values, so signs and ratios survive.
        // ends with (u_prev, u_curr) = (u[im], u[im+1])
        int nodes = 0;
        double u_prev = series_value(energy, start_ * h_);
        double u_curr = series_value(energy, (start_ + 1) * h_);
        for (int i = start_ + 1; i <= im; ++i) {
            double u_next = ((12.0 - 10.0 * fcoef(i)) * u_curr - fcoef(i - 1) * u_prev) / fcoef(i + 1);
            if (u_curr * u_next < 0.0 && i + 1 <= im) ++nodes;
            u_prev = u_curr;
            u_curr = u_next;
            if (std::fabs(u_curr) > 1e250) { u_prev *= 1e-250; u_curr *= 1e-250; }
        }
        const double u_m = u_prev, u_m1 = u_curr;

        // inward sweep from an exponentially decaying tail; marching stops at
        // index im, leaving (w_outer, w_inner) = (v[im+1], v[im])
        const double kappa = std::sqrt(std::max(-2.0 * energy, 1e-30));
        double w_outer = 1e-162;                        // v[i+1]; scale is arbitrary
        double w_inner = w_outer * std::exp(kappa * h_);  // v[i]
        for (int i = n - 1; i >= im + 1; --i) {
            double w_next = ((12.0 - 10.0 * fcoef(i)) * w_inner - fcoef(i + 1) * w_outer) / fcoef(i - 1);
            if (w_inner * w_next < 0.0 && i - 1 >= im) ++nodes;
            w_outer = w_inner;
            w_inner = w_next;
            if (std::fabs(w_inner) > 1e250) { w_outer *= 1e-250; w_inner *= 1e-250; }
        }
        const double v_m = w_inner, v_m1 = w_outer;

        const double g = u_m1 * v_m - u_m * v_m1;   // ~ h u(r_m) v(r_m) (L_out - L_in)
        const double scale = (std::fabs(u_m) + std::fabs(u_m1)) * (std::fabs(v_m) + std::fabs(v_m1));
        Shot s;
        s.nodes = nodes;
        s.defect = g / (scale > 0.0 ? scale : 1.0);
        const double mismatch_sign = g * u_m * v_m;  // sign of L_out - L_in
        s.count = nodes + (mismatch_sign < 0.0 ? 1 : 0);
        return s;
    }

    double turning_point(double energy) const {
        for (int i = n_ - 1; i >= 1; --i) {
            if (energy > v_[static_cast<std::size_t>(i)]) return i * h_;
        }
        return start_ * h_;
    }

private:
    // regular solution near the origin; the potential is analytic at r = 0,
    // so f = r^{l+1} sum_s b_s r^s with b_1 = 0 and
    // s(s+2l+1) b_s = sum_{m<=s-2} w_m b_{s-2-m}, w_m the potential expansion
    double series_value(double energy, double r) const {
        constexpr int kTerms = 24;
        double w[kTerms];
        w[0] = -2.0 * energy - 2.0 * beta_;
        double sgn = 1.0;
        for (int m = 1; m < kTerms; ++m) {
            w[m] = 2.0 * beta_ * sgn;  // -2 beta (-1)^m
            sgn = -sgn;
        }
        double b[kTerms];
        b[0] = 1.0;
        b[1] = 0.0;
        for (int s = 2; s < kTerms; ++s) {
            double acc = 0.0;
            for (int m = 0; m <= s - 2; ++m) acc += w[m] * b[s - 2 - m];
            b[s] = acc / (s * (s + 2.0 * l_ + 1.0));
        }
        double series = 0.0;
        for (int s = kTerms - 1; s >= 0; --s) series = series * r + b[s];
        return std::pow(r, l_ + 1.0) * series;
    }

    double beta_;
    int l_;
    int n_;
    double h_;
    int start_;
    std::vector<double> v_;
};

struct GridEigenvalue {
    double energy;
    int plain_nodes;   // node count without the defect-sign augmentation
    double r_turn;
};

GridEigenvalue eigenvalue_on_grid(double beta, int l, int nu, double r_max, int n_steps) {
    Shooter shooter(beta, l, r_max, n_steps);

    double lo = -beta * (1.0 - 1e-15);
    double hi = -1e-14;
    Shot slo = shooter.shoot(lo);
    Shot shi = shooter.shoot(hi);
    if (slo.count > nu) {
        throw ConvergenceError("node-count bracketing failed at the lower energy bound");
    }
    if (shi.count <= nu) {
        throw UnboundStateError("state with nu=" + std::to_string(nu) + " nodes is not bound at beta=" +
                                std::to_string(beta) + " (or not resolvable on this domain)");
    }

    // stage 1: bisection on the generalized node count
    const double coarse = 1e-6;
    while (hi - lo > coarse * std::max(1.0, std::fabs(lo))) {
        double mid = 0.5 * (lo + hi);
        Shot sm = shooter.shoot(mid);
        if (sm.count > nu) { hi = mid; shi = sm; }
        else { lo = mid; slo = sm; }
    }

    // stage 2: secant (false position with Illinois weighting) on the defect,
    // guarded by the count bracket; fall back to bisection when the defect
    // does not change sign across the bracket
    if (slo.defect * shi.defect < 0.0) {
        double a = lo, b = hi, fa = slo.defect, fb = shi.defect;
        for (int it = 0; it < 80 && b - a > 1e-15 * std::max(1.0, std::fabs(a)); ++it) {
            double m = (a * fb - b * fa) / (fb - fa);
            // keep strictly inside to guarantee progress
            double margin = 0.01 * (b - a);
            m = std::min(std::max(m, a + margin), b - margin);
            Shot sm = shooter.shoot(m);
            if (sm.defect == 0.0) { a = b = m; break; }
            if (sm.defect * fa < 0.0) { b = m; fb = sm.defect; fa *= 0.5; }
            else { a = m; fa = sm.defect; fb *= 0.5; }
        }
        lo = a; hi = b;
    } else {
        while (hi - lo > 1e-15 * std::max(1.0, std::fabs(lo))) {
            double mid = 0.5 * (lo + hi);
            Shot sm = shooter.shoot(mid);
            if (sm.count > nu) hi = mid;
            else lo = mid;
        }
    }

    GridEigenvalue out;
    out.energy = 0.5 * (lo + hi);
    // at the converged energy the augmented count is nu or nu+1 depending on
    // which side the midpoint landed; the plain node count is nu either way
    out.plain_nodes = shooter.shoot(out.energy).nodes;
    out.r_turn = shooter.turning_point(out.energy);
    return out;
}

}  // namespace

void RadialProblem::validate() const {
    if (!(beta > 0)) throw UsageError("beta must be positive");
    if (l < 0) throw UsageError("l must be nonnegative");
    if (!(r_max > 0)) throw UsageError("r_max must be positive");
    if (grid_size < 100) throw UsageError("grid_size must be at least 100");
    if (grid_size % 2 != 0) throw UsageError("grid_size must be even");
    if (!(tol >= 1e-12 && tol <= 1e-4)) throw UsageError("tol must lie in [1e-12, 1e-4]");
}

RadialProblem make_problem(double beta, int l, int nu, double tol) {
    if (!(beta > 0)) throw UsageError("beta must be positive");
    if (l < 0 || nu < 0) throw UsageError("l and nu must be nonnegative");
    const double alpha_est = beta / (nu + l + 2);
    RadialProblem p;
    p.beta = beta;
    p.l = l;
    p.tol = tol;
    p.r_max = std::max(30.0, 40.0 / alpha_est + 10.0 * (l + 1));
    const double h_target = std::min(0.01, 0.07 / std::max(alpha_est, 1.0));
    int n = static_cast<int>(std::ceil(p.r_max / h_target));
    n = std::min(std::max(n + (n % 2), 2000), 400000);
    p.grid_size = n;
    return p;
}

OracleResult solve_state(const RadialProblem& p, int nu) {
    p.validate();
    if (nu < 0) throw UsageError("nu must be nonnegative");

    double r_max = p.r_max;
    int n_base = p.grid_size;
    for (int attempt = 0; attempt <= kMaxDomainDoublings; ++attempt) {
        GridEigenvalue coarse = eigenvalue_on_grid(p.beta, p.l, nu, r_max, n_base);
        GridEigenvalue fine = eigenvalue_on_grid(p.beta, p.l, nu, r_max, 2 * n_base);
        double energy = (16.0 * fine.energy - coarse.energy) / 15.0;
        double err = std::fabs(fine.energy - coarse.energy) / 15.0;

        if (!(energy < 0.0)) {
            throw UnboundStateError("converged energy is nonnegative; state unbound");
        }
        double alpha = std::sqrt(-2.0 * energy);
        if (alpha < kThresholdAlpha) {
            throw UnboundStateError("state too close to threshold (alpha < 1e-3) to resolve reliably");
        }

        // domain check: the tail must have decayed to ~1e-12 of the peak
        if (alpha * (r_max - fine.r_turn) < kTailDecay) {
            r_max *= 2.0;
            n_base *= 2;
            continue;
        }

        if (err > p.tol) {
            // one refinement retry before giving up
            GridEigenvalue finer = eigenvalue_on_grid(p.beta, p.l, nu, r_max, 4 * n_base);
            double energy2 = (16.0 * finer.energy - fine.energy) / 15.0;
            double err2 = std::fabs(finer.energy - fine.energy) / 15.0;
            if (err2 > p.tol) {
                throw ConvergenceError("grid refinement failed to reach the requested tolerance", energy2);
            }
            energy = energy2;
            err = err2;
            fine = finer;
        }

        OracleResult res;
        res.nu = fine.plain_nodes;
        res.energy_tilde = energy;
        res.alpha = std::sqrt(-2.0 * energy);
        res.grid_error_estimate = std::max(err, 1e-16 * std::fabs(energy));
        if (res.nu != nu) {
            throw ConvergenceError("converged eigenfunction has " + std::to_string(res.nu) +
                                       " nodes, requested " + std::to_string(nu),
                                   energy);
        }
        return res;
    }
    throw ConvergenceError("domain doubling limit reached without a decayed tail");
}

double validate_exact(const ExactSolution& sol, double tol) {
    if (!(tol > 0)) throw UsageError("validation tolerance must be positive");
    RadialProblem p = make_problem(sol.beta, sol.l, sol.nodes,
                                   std::max(1e-12, std::min(tol / 10.0, 1e-4)));
    OracleResult r = solve_state(p, sol.nodes);
    double deviation = r.alpha - sol.alpha;
    if (std::fabs(deviation) > tol) {
        throw IntegrityError("oracle alpha " + std::to_string(r.alpha) + " deviates from exact alpha " +
                             std::to_string(sol.alpha) + " by more than the tolerance");
    }
    return deviation;
}

}  // namespace tcoulomb
