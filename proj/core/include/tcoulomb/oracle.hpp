#pragma once

#include "tcoulomb/frobenius.hpp"

namespace tcoulomb {

/// Discretized radial bound-state problem for V(r) = -beta/(r+1) at angular
/// momentum l, solved on [0, r_max] with grid_size uniform steps.
struct RadialProblem {
    double beta = 1.0;
    int l = 0;
    double r_max = 30.0;
    int grid_size = 6000;   // even, >= 100
    double tol = 1e-9;      // requested eigenvalue accuracy, in [1e-12, 1e-4]

    void validate() const;
};

/// Problem with the domain/grid heuristics of the solver filled in for the
/// state with nu radial nodes.
RadialProblem make_problem(double beta, int l, int nu, double tol = 1e-9);

struct OracleResult {
    int nu = 0;                      // node count of the converged state
    double energy_tilde = 0.0;       // < 0
    double alpha = 0.0;              // sqrt(-2 energy_tilde)
    double grid_error_estimate = 0.0;
};

/// Eigenvalue of the state whose eigenfunction has exactly nu interior nodes.
/// Numerov shooting from both ends, matched at the outermost classical
/// turning point; the energy is bracketed by bisection on the node count
/// (augmented with the sign of the matching defect) and polished by a secant
/// iteration on the defect. Two grids (h, h/2) feed a Richardson
/// extrapolation whose difference provides the error estimate.
OracleResult solve_state(const RadialProblem& p, int nu);

/// Cross-validate an exact truncation solution: runs the oracle at
/// (sol.beta, sol.l, sol.nodes) and returns oracle_alpha - sol.alpha.
/// A deviation beyond tol is an IntegrityError.
double validate_exact(const ExactSolution& sol, double tol);

}  // namespace tcoulomb
