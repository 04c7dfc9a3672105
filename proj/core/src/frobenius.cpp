#include "tcoulomb/frobenius.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tcoulomb/errors.hpp"

namespace tcoulomb {

namespace {

void check_orders(int n, int l) {
    if (n < 0) throw UsageError("truncation order n must be nonnegative");
    if (l < 0) throw UsageError("angular momentum l must be nonnegative");
    if (n > kMaxTruncationOrder) {
        throw ResourceError("truncation order " + std::to_string(n) + " exceeds the maximum " +
                            std::to_string(kMaxTruncationOrder));
    }
}

}  // namespace

RecurrenceCoeffs recurrence_coeffs(int j, int l, int n) {
    if (j < -1) throw UsageError("recurrence index j must be >= -1");
    if (l < 0) throw UsageError("angular momentum l must be nonnegative");
    const long denom = static_cast<long>(j + 2) * (j + 2 * l + 3);  // nonzero for j >= -1, l >= 0
    RecurrenceCoeffs rc;
    rc.j = j;
    rc.l = l;
    rc.a_j = RationalPolynomial::linear(
        Rational(-(static_cast<long>(j) * j + static_cast<long>(j) * (2 * l + 5) + 2L * (2 * l + 3)), denom),
        Rational(2L * (j + l + 2), denom));
    rc.b_j = RationalPolynomial::linear(Rational(0), Rational(2L * (j - n), denom));
    return rc;
}

RationalPolynomial recurrence_step(int j, int l, int n,
                                   const RationalPolynomial& c_prev,
                                   const RationalPolynomial& c_curr) {
    if (j + 2 > kMaxTruncationOrder + 1) {
        throw ResourceError("recurrence would produce c_" + std::to_string(j + 2) +
                            " beyond the configured maximum order " +
                            std::to_string(kMaxTruncationOrder));
    }
    RecurrenceCoeffs rc = recurrence_coeffs(j, l, n);
    return rc.a_j * c_curr + rc.b_j * c_prev;
}

std::vector<RationalPolynomial> coefficient_polynomials(int n, int l) {
    check_orders(n, l);
    std::vector<RationalPolynomial> c;
    c.reserve(static_cast<std::size_t>(n) + 2);
    c.push_back(RationalPolynomial::constant(Rational(1)));  // c_0
    RationalPolynomial prev = RationalPolynomial::zero();    // c_{-1}
    for (int j = -1; j <= n - 1; ++j) {
        RationalPolynomial next = recurrence_step(j, l, n, prev, c.back());
        prev = c.back();
        c.push_back(std::move(next));
    }
    return c;  // c_0 .. c_{n+1}
}

RationalPolynomial truncation_polynomial(int n, int l) {
    return coefficient_polynomials(n, l).back();
}

std::vector<ExactSolution> solve_truncation(int n, int l, double tol) {
    check_orders(n, l);
    if (!(tol > 0.0) || tol >= 1e-8) {
        throw UsageError("solve_truncation tolerance must satisfy 0 < tol < 1e-8");
    }

    std::vector<RationalPolynomial> c = coefficient_polynomials(n, l);
    const RationalPolynomial& p = c.back();

    // certify the root structure before any floating point: a degree-(n+1)
    // polynomial with n+1 distinct positive real roots has only simple roots
    SturmChain chain(p);
    const int positive_roots = chain.count_roots(Rational(0), p.root_bound());
    if (p(Rational(0)) == 0 || positive_roots != n + 1) {
        throw IntegrityError(
            "truncation polynomial for n=" + std::to_string(n) + ", l=" + std::to_string(l) +
            " has " + std::to_string(positive_roots) + " distinct positive roots, expected " +
            std::to_string(n + 1) + "; the realness guarantee is violated");
    }

    std::vector<RootBracket> brackets = isolate_positive_roots(p);
    std::vector<ExactSolution> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    const int big_n = n + l + 2;
    for (int idx = 0; idx < n + 1; ++idx) {
        ExactSolution sol;
        sol.n = n;
        sol.l = l;
        sol.i = idx + 1;
        sol.alpha = refine_root(p, brackets[static_cast<std::size_t>(idx)], tol);
        sol.beta = sol.alpha * big_n;
        sol.nodes = n + 1 - sol.i;
        sol.energy_tilde = -0.5 * sol.alpha * sol.alpha;
        sol.coeffs.resize(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) {
            sol.coeffs[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)](sol.alpha);
        }
        out.push_back(std::move(sol));
    }

    // ascending-alpha ordering presumes well-separated simple roots
    for (std::size_t k = 1; k < out.size(); ++k) {
        double gap = out[k].alpha - out[k - 1].alpha;
        if (gap < 1e-9 * std::max(1.0, out[k].alpha)) {
            throw IntegrityError("roots " + std::to_string(k) + " and " + std::to_string(k + 1) +
                                 " of the n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                                 " truncation polynomial are closer than the simplicity tolerance");
        }
    }
    return out;
}

int count_nodes(const ExactSolution& sol) {
    // rationalize the floating-point coefficients (exact) and count with a
    // Sturm chain; no sampling, no epsilon tests
    std::vector<Rational> rc(sol.coeffs.size());
    for (std::size_t k = 0; k < sol.coeffs.size(); ++k) rc[k] = Rational(sol.coeffs[k]);
    RationalPolynomial node_poly = RationalPolynomial(std::move(rc));
    if (node_poly.degree() <= 0) return 0;

    SturmChain chain(node_poly);
    if (!chain.squarefree()) {
        throw IntegrityError("node polynomial has a repeated root; nodes must be simple");
    }
    std::vector<RootBracket> brackets = isolate_positive_roots(node_poly);

    // simplicity within tolerance: refine adjacent roots and compare
    double prev = -1.0;
    for (const auto& b : brackets) {
        double r = refine_root(node_poly, b, 1e-12);
        if (prev > 0.0 && r - prev < 1e-9 * std::max(1.0, r)) {
            throw IntegrityError("two nodes closer than the multiplicity tolerance near r=" +
                                 std::to_string(r));
        }
        prev = r;
    }
    return static_cast<int>(brackets.size());
}

double eval_wavefunction(const ExactSolution& sol, double r) {
    if (r < 0.0) throw UsageError("radial coordinate must be nonnegative");
    if (r == 0.0) return 0.0;
    double poly = 0.0;
    for (auto it = sol.coeffs.rbegin(); it != sol.coeffs.rend(); ++it) poly = poly * r + *it;
    return std::pow(r, sol.l + 1) * (1.0 + r) * std::exp(-sol.alpha * r) * poly;
}

double ode_residual(const ExactSolution& sol, double r) {
    if (!(r > 0.0)) throw UsageError("ODE residual requires r > 0");
    // f = g P with g = r^{l+1}(1+r)e^{-alpha r}; use g'/g = L, g''/g = L' + L^2
    double poly = 0.0, dpoly = 0.0, ddpoly = 0.0;
    for (auto it = sol.coeffs.rbegin(); it != sol.coeffs.rend(); ++it) {
        ddpoly = ddpoly * r + 2.0 * dpoly;
        dpoly = dpoly * r + poly;
        poly = poly * r + *it;
    }
    const double lp1 = sol.l + 1.0;
    const double g = std::pow(r, lp1) * (1.0 + r) * std::exp(-sol.alpha * r);
    const double log_d = lp1 / r + 1.0 / (1.0 + r) - sol.alpha;
    const double log_dd = -lp1 / (r * r) - 1.0 / ((1.0 + r) * (1.0 + r));
    const double f = g * poly;
    const double fpp = g * ((log_dd + log_d * log_d) * poly + 2.0 * log_d * dpoly + ddpoly);
    const double v_eff = 0.5 * sol.l * (sol.l + 1.0) / (r * r) - sol.beta / (r + 1.0);
    return -0.5 * fpp + v_eff * f - sol.energy_tilde * f;
}

}  // namespace tcoulomb
