#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace tcoulomb {

using Rational = mpq_class;

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree. The zero polynomial has an empty coefficient vector.
/// All arithmetic is exact; results are identical across runs and platforms.
class RationalPolynomial {
public:
    /// Hard cap on the degree any operation may produce.
    static constexpr int kMaxDegree = 4096;

    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> ascending_coeffs);
    RationalPolynomial(std::initializer_list<Rational> ascending_coeffs);

    static RationalPolynomial zero() { return RationalPolynomial(); }
    static RationalPolynomial constant(Rational c);
    /// a + b*x
    static RationalPolynomial linear(Rational a, Rational b);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^k (zero beyond the stored degree).
    Rational coeff(int k) const;
    const Rational& leading_coefficient() const;

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    RationalPolynomial derivative() const;

    RationalPolynomial operator-() const;
    RationalPolynomial operator+(const RationalPolynomial& rhs) const;
    RationalPolynomial operator-(const RationalPolynomial& rhs) const;
    RationalPolynomial operator*(const RationalPolynomial& rhs) const;
    RationalPolynomial operator*(const Rational& s) const;
    bool operator==(const RationalPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const RationalPolynomial& rhs) const { return !(*this == rhs); }

    /// Euclidean remainder of *this by divisor (exact).
    RationalPolynomial remainder(const RationalPolynomial& divisor) const;

    /// Same roots, integer coefficients with content 1. Scaling factor is
    /// positive, so signs everywhere are preserved (safe inside Sturm chains).
    RationalPolynomial primitive_part() const;

    /// Strict upper bound on the absolute value of every root (Cauchy bound).
    Rational root_bound() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Sturm chain of a polynomial. Counts *distinct* real roots; if the chain
/// terminates in a nonconstant gcd, the polynomial has a multiple root and
/// counting queries report that through `squarefree() == false`.
class SturmChain {
public:
    explicit SturmChain(const RationalPolynomial& p);

    bool squarefree() const { return squarefree_; }

    /// Sign variations of the chain at x.
    int variations_at(const Rational& x) const;
    /// Sign variations at +infinity (leading-coefficient signs).
    int variations_at_pos_infinity() const;

    /// Number of distinct roots in the half-open interval (a, b], a < b.
    int count_roots(const Rational& a, const Rational& b) const;
    /// Number of distinct roots in (a, +infinity).
    int count_roots_above(const Rational& a) const;

    const std::vector<RationalPolynomial>& sequence() const { return seq_; }

private:
    std::vector<RationalPolynomial> seq_;
    bool squarefree_ = true;
};

/// One isolated real root: either known exactly (rational) or bracketed by
/// an open interval (lo, hi) with a strict sign change across it.
struct RootBracket {
    bool exact = false;
    Rational value;  // the root when exact
    Rational lo, hi; // sign-change bracket otherwise
};

/// Isolating brackets for every distinct root in (0, +infinity), sorted
/// ascending. Requires a squarefree chain for p (callers certify counts
/// separately when the input may be degenerate).
std::vector<RootBracket> isolate_positive_roots(const RationalPolynomial& p);

/// Refine an isolated root to absolute accuracy `tol` by exact-sign
/// bisection, then polish with three floating-point Newton steps.
double refine_root(const RationalPolynomial& p, const RootBracket& bracket, double tol);

}  // namespace tcoulomb
