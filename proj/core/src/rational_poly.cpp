#include "tcoulomb/rational_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tcoulomb/errors.hpp"

namespace tcoulomb {

namespace {

int sign_of(const Rational& q) { return sgn(q); }

void check_degree(std::size_t n_coeffs) {
    if (static_cast<int>(n_coeffs) - 1 > RationalPolynomial::kMaxDegree) {
        throw ResourceError("polynomial degree " + std::to_string(n_coeffs - 1) +
                            " exceeds the configured maximum " +
                            std::to_string(RationalPolynomial::kMaxDegree));
    }
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
    check_degree(coeffs_.size());
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> ascending_coeffs)
    : RationalPolynomial(std::vector<Rational>(ascending_coeffs)) {}

RationalPolynomial RationalPolynomial::constant(Rational c) {
    return RationalPolynomial({std::move(c)});
}

RationalPolynomial RationalPolynomial::linear(Rational a, Rational b) {
    return RationalPolynomial({std::move(a), std::move(b)});
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& RationalPolynomial::leading_coefficient() const {
    static const Rational kZero(0);
    return coeffs_.empty() ? kZero : coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

double RationalPolynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->get_d();
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return zero();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    }
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::operator-() const {
    std::vector<Rational> c(coeffs_);
    for (auto& q : c) q = -q;
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& rhs) const {
    std::vector<Rational> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] += rhs.coeffs_[k];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& rhs) const {
    return *this + (-rhs);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    check_degree(coeffs_.size() + rhs.coeffs_.size() - 1);
    std::vector<Rational> c(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& s) const {
    std::vector<Rational> c(coeffs_);
    for (auto& q : c) q *= s;
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::remainder(const RationalPolynomial& divisor) const {
    if (divisor.is_zero()) throw UsageError("polynomial division by zero");
    std::vector<Rational> r(coeffs_);
    const int dd = divisor.degree();
    const Rational& lead = divisor.leading_coefficient();
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
        if (r[static_cast<std::size_t>(k)] == 0) continue;
        Rational q = r[static_cast<std::size_t>(k)] / lead;
        for (int j = 0; j <= dd; ++j) {
            r[static_cast<std::size_t>(k - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    r.resize(static_cast<std::size_t>(std::max(dd, 0)));
    return RationalPolynomial(std::move(r));
}

RationalPolynomial RationalPolynomial::primitive_part() const {
    if (is_zero()) return zero();
    // lcm of denominators, then gcd of the resulting numerators
    mpz_class den_lcm(1);
    for (const auto& c : coeffs_) {
        mpz_class d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    mpz_class num_gcd(0);
    std::vector<mpz_class> ints(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        Rational scaled = coeffs_[k] * Rational(den_lcm);
        ints[k] = scaled.get_num();  // denominator is 1 after scaling
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints[k].get_mpz_t());
    }
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k] = Rational(ints[k] / num_gcd);
    }
    return RationalPolynomial(std::move(out));
}

Rational RationalPolynomial::root_bound() const {
    if (degree() < 1) return Rational(1);
    Rational m(0);
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
        Rational a = abs(coeffs_[k] / coeffs_.back());
        if (a > m) m = a;
    }
    return m + 1;
}

std::string RationalPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!first) os << (sign_of(c) > 0 ? " + " : " - ");
        else if (sign_of(c) < 0) os << "-";
        Rational a = abs(c);
        if (a != 1 || k == 0) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

SturmChain::SturmChain(const RationalPolynomial& p) {
    seq_.push_back(p.primitive_part());
    if (p.degree() < 1) return;
    seq_.push_back(p.derivative().primitive_part());
    while (!seq_.back().is_zero() && seq_.back().degree() > 0) {
        RationalPolynomial r = seq_[seq_.size() - 2].remainder(seq_.back());
        if (r.is_zero()) break;
        seq_.push_back((-r).primitive_part());
    }
    // a nonconstant terminator is gcd(p, p'): p has a repeated root
    if (!seq_.back().is_zero() && seq_.back().degree() > 0) squarefree_ = false;
    while (!seq_.empty() && seq_.back().is_zero()) seq_.pop_back();
}

int SturmChain::variations_at(const Rational& x) const {
    int variations = 0;
    int prev = 0;
    for (const auto& q : seq_) {
        int s = sign_of(q(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int SturmChain::variations_at_pos_infinity() const {
    int variations = 0;
    int prev = 0;
    for (const auto& q : seq_) {
        if (q.is_zero()) continue;
        int s = sign_of(q.leading_coefficient());
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmChain::count_roots_above(const Rational& a) const {
    return variations_at(a) - variations_at_pos_infinity();
}

std::vector<RootBracket> isolate_positive_roots(const RationalPolynomial& p) {
    if (p.degree() < 0) throw UsageError("cannot isolate roots of the zero polynomial");

    // strip roots at the origin; they are not positive and would spoil the
    // sign test at the left endpoint of the first bracket
    RationalPolynomial q = p;
    while (!q.is_zero() && q.coeff(0) == 0) {
        std::vector<Rational> shifted(q.coefficients().begin() + 1, q.coefficients().end());
        q = RationalPolynomial(std::move(shifted));
    }
    std::vector<RootBracket> roots;
    if (q.degree() <= 0) return roots;

    SturmChain chain(q);
    const Rational zero(0);
    Rational bound = q.root_bound();
    int total = chain.count_roots(zero, bound);

    struct Segment { Rational lo, hi; int count; };
    std::vector<Segment> stack;
    if (total > 0) stack.push_back({zero, bound, total});
    const RationalPolynomial& pp = q;

    while (!stack.empty()) {
        Segment s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            // single root in (lo, hi]; land it as exact or as a sign bracket
            if (pp(s.hi) == 0) {
                roots.push_back({true, s.hi, s.lo, s.hi});
                continue;
            }
            // simple root strictly inside: endpoint signs differ
            roots.push_back({false, Rational(0), s.lo, s.hi});
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (pp(mid) == 0) {
            roots.push_back({true, mid, s.lo, s.hi});
            // shrink a symmetric window around mid until it holds only mid,
            // then recurse on what is left on each side
            Rational w = (s.hi - s.lo) / 4;
            while (chain.count_roots(mid - w, mid + w) > 1) w /= 2;
            int left = chain.count_roots(s.lo, mid - w);
            int right = chain.count_roots(mid + w, s.hi);
            if (left > 0) stack.push_back({s.lo, mid - w, left});
            if (right > 0) stack.push_back({mid + w, s.hi, right});
            continue;
        }
        int left = chain.count_roots(s.lo, mid);
        int right = s.count - left;
        if (left > 0) stack.push_back({s.lo, mid, left});
        if (right > 0) stack.push_back({mid, s.hi, right});
    }

    std::sort(roots.begin(), roots.end(), [](const RootBracket& a, const RootBracket& b) {
        Rational ka = a.exact ? a.value : a.lo;
        Rational kb = b.exact ? b.value : b.lo;
        return ka < kb;
    });
    return roots;
}

double refine_root(const RationalPolynomial& p, const RootBracket& bracket, double tol) {
    if (tol <= 0) throw UsageError("root refinement tolerance must be positive");
    if (bracket.exact) return bracket.value.get_d();

    Rational lo = bracket.lo, hi = bracket.hi;
    int slo = sgn(p(lo));
    if (slo == 0) {
        // lo can carry a root of p outside the bracketed open interval (the
        // origin, say); with one simple root strictly inside, the sign just
        // right of lo is opposite to the sign at hi
        slo = -sgn(p(hi));
        if (slo == 0) throw UsageError("degenerate root bracket");
    }
    const Rational rtol(tol);  // exact value of the double
    while (hi - lo > rtol) {
        Rational mid = (lo + hi) / 2;
        int sm = sgn(p(mid));
        if (sm == 0) return mid.get_d();
        if (sm == slo) lo = mid; else hi = mid;
    }

    double x = (lo.get_d() + hi.get_d()) / 2.0;
    RationalPolynomial dp = p.derivative();
    for (int it = 0; it < 3; ++it) {
        double f = p(x);
        double df = dp(x);
        if (df == 0.0) break;
        double step = f / df;
        double next = x - step;
        // keep the polish inside the certified bracket
        if (next > lo.get_d() && next < hi.get_d()) x = next;
    }
    return x;
}

}  // namespace tcoulomb
