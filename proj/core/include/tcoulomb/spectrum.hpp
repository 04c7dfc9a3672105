#pragma once

#include <optional>
#include <vector>

#include "tcoulomb/frobenius.hpp"

namespace tcoulomb {

enum class PointSource { exact, oracle, interpolated };

struct CurvePoint {
    double beta = 0.0;
    double alpha = 0.0;
    PointSource source = PointSource::exact;
    int n = -1;  // truncation order, for exact points
    int i = -1;  // root index, for exact points
};

/// Exact points of one spectral curve alpha_{nu,l}(beta), ascending in beta.
/// For every exact point, nu == n+1-i.
struct SpectralCurve {
    int nu = 0;
    int l = 0;
    std::vector<CurvePoint> points;

    double beta_min() const;
    double beta_max() const;
};

/// Exact truncation points of the curve alpha_{nu,l}(beta) for n = nu..n_max
/// (root index i = n+1-nu). Both beta and alpha must come out strictly
/// increasing, which is checked and enforced as an IntegrityError.
SpectralCurve build_curve(int nu, int l, int n_max, double tol = 1e-12);

/// Barycentric Lagrange interpolation through ALL points of the curve,
/// evaluated at beta. Requests outside [beta_min, beta_max] are refused
/// (HullError); curves with fewer than two points cannot interpolate.
double interpolate(const SpectralCurve& curve, double beta);

struct HellmannFeynman {
    double lhs = 0.0;  // dE/dbeta from centered finite differences of oracle eigenvalues
    double rhs = 0.0;  // -<1/(r+1)> by adaptive quadrature on the exact eigenfunction
};

/// Both sides of dE/dbeta = -<1/(r+1)> for an exact solution. The two sides
/// share no code: the left runs the numerical eigensolver at beta +/- h, the
/// right integrates the exact eigenfunction.
HellmannFeynman hellmann_feynman_check(const ExactSolution& sol, double quadrature_tol = 1e-10);

/// One row of the degeneracy table: interpolated alpha (empty when beta lies
/// outside that curve's exact-point hull).
struct DegeneracyEntry {
    int nu = 0;
    int l = 0;
    double beta = 0.0;
    std::optional<double> alpha;
};

/// The Coulomb-degenerate family {(nu, k-nu) : nu = 0..k} evaluated on a
/// beta grid; the cutoff splits these otherwise equal levels.
std::vector<DegeneracyEntry> degeneracy_split(int k, const std::vector<double>& beta_grid, int n_max);

/// Interpolated alpha_{0,l}(beta) for l = 0..l_max; strictly decreasing in l
/// or an IntegrityError.
std::vector<std::pair<int, double>> monotonicity_scan(int l_max, double beta, int n_max);

}  // namespace tcoulomb
