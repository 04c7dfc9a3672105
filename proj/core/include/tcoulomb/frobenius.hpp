#pragma once

#include <vector>

#include "tcoulomb/rational_poly.hpp"

namespace tcoulomb {

/// Largest supported truncation order n (truncation polynomial degree n+1).
inline constexpr int kMaxTruncationOrder = 40;

/// The coefficients of the three-term recurrence c_{j+2} = A_j c_{j+1} + B_j c_j
/// for the series f(r) = r^{l+1}(1+r)e^{-alpha r} sum_j c_j r^j, with the
/// truncation relation beta = alpha (n+l+2) already substituted into B_j.
/// Both are degree-1 polynomials in alpha with exact rational coefficients:
///   A_j = [2 alpha (j+l+2) - j^2 - j(2l+5) - 2(2l+3)] / [(j+2)(j+2l+3)]
///   B_j = 2 alpha (j-n) / [(j+2)(j+2l+3)]
struct RecurrenceCoeffs {
    int j = 0;
    int l = 0;
    RationalPolynomial a_j;
    RationalPolynomial b_j;
};

RecurrenceCoeffs recurrence_coeffs(int j, int l, int n);

/// One step of the recurrence: returns c_{j+2} given c_j and c_{j+1} as exact
/// polynomials in alpha. Throws ResourceError past the configured maximum
/// truncation order.
RationalPolynomial recurrence_step(int j, int l, int n,
                                   const RationalPolynomial& c_prev,
                                   const RationalPolynomial& c_curr);

/// The full sequence c_0 .. c_{n+1} as polynomials in alpha (c_0 = 1).
std::vector<RationalPolynomial> coefficient_polynomials(int n, int l);

/// c_{n+1}(alpha): degree n+1, whose positive roots are the exact couplings.
RationalPolynomial truncation_polynomial(int n, int l);

/// One exact bound state from the truncation conditions B_n = 0, c_{n+1} = 0.
struct ExactSolution {
    int n = 0;   // truncation order (series degree)
    int l = 0;   // angular momentum
    int i = 1;   // root index, ascending alpha, 1..n+1
    double alpha = 0.0;
    double beta = 0.0;              // alpha * (n+l+2)
    std::vector<double> coeffs;     // c_0..c_n evaluated at alpha, c_0 = 1
    int nodes = 0;                  // n+1-i
    double energy_tilde = 0.0;      // -alpha^2/2
};

/// All n+1 exact solutions for the given (n, l), sorted ascending in alpha.
/// Root count and simplicity are certified by an exact Sturm chain before any
/// floating point enters; a count below n+1 is an IntegrityError. Roots are
/// bracketed to absolute accuracy `tol` (must satisfy 0 < tol < 1e-8).
std::vector<ExactSolution> solve_truncation(int n, int l, double tol = 1e-12);

/// Number of strictly positive roots of the node polynomial sum_j c_j r^j.
/// The prefactor r^{l+1}(1+r)e^{-alpha r} never vanishes for r > 0, so this
/// is the node count of the eigenfunction. Roots closer than 1e-9 max(1, r)
/// are reported as an IntegrityError (the theory demands simple nodes).
int count_nodes(const ExactSolution& sol);

/// Unnormalized radial eigenfunction f(r) = r^{l+1}(1+r)e^{-alpha r} sum c_j r^j.
double eval_wavefunction(const ExactSolution& sol, double r);

/// Residual of the radial equation at r: -f''/2 + [l(l+1)/(2r^2) - beta/(r+1)]f - E f,
/// with f differentiated analytically.
double ode_residual(const ExactSolution& sol, double r);

}  // namespace tcoulomb
