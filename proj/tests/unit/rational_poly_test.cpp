#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tcoulomb/errors.hpp>
#include <tcoulomb/rational_poly.hpp>

#include <cmath>
#include <vector>

using namespace tcoulomb;

TEST_CASE("construction trims and canonicalizes") {
    RationalPolynomial p({Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(5) == 0);
    CHECK(RationalPolynomial::zero().is_zero());
    CHECK(RationalPolynomial::zero().degree() == -1);
}

TEST_CASE("arithmetic is exact") {
    RationalPolynomial xm1 = RationalPolynomial::linear(Rational(-1), Rational(1));
    RationalPolynomial xp1 = RationalPolynomial::linear(Rational(1), Rational(1));
    RationalPolynomial prod = xm1 * xp1;
    CHECK(prod == RationalPolynomial({Rational(-1), Rational(0), Rational(1)}));
    CHECK((prod + RationalPolynomial::constant(Rational(1))).degree() == 2);
    CHECK((prod - prod).is_zero());
    CHECK((prod * Rational(1, 3)).coeff(2) == Rational(1, 3));

    // thirds stay thirds: no floating point anywhere
    RationalPolynomial third = RationalPolynomial::constant(Rational(1, 3));
    RationalPolynomial sum = third + third + third;
    CHECK(sum == RationalPolynomial::constant(Rational(1)));
}

TEST_CASE("evaluation, rational and double") {
    RationalPolynomial p({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
    CHECK(p(Rational(3)) == 8);
    CHECK(p(Rational(1, 2)) == Rational(-3, 4));
    CHECK(p(2.0) == doctest::Approx(3.0));
}

TEST_CASE("derivative") {
    RationalPolynomial p({Rational(5), Rational(-1), Rational(0), Rational(2)});  // 2x^3 - x + 5
    CHECK(p.derivative() == RationalPolynomial({Rational(-1), Rational(0), Rational(6)}));
    CHECK(RationalPolynomial::constant(Rational(7)).derivative().is_zero());
}

TEST_CASE("remainder matches long division") {
    // x^4 + x + 1 = (x^2+1)(x^2-1) + (x + 2)
    RationalPolynomial num({Rational(1), Rational(1), Rational(0), Rational(0), Rational(1)});
    RationalPolynomial div({Rational(1), Rational(0), Rational(1)});
    CHECK(num.remainder(div) == RationalPolynomial({Rational(2), Rational(1)}));
    CHECK_THROWS_AS(num.remainder(RationalPolynomial::zero()), UsageError);
}

TEST_CASE("primitive part scales positively") {
    RationalPolynomial p({Rational(-3, 2), Rational(0), Rational(3, 4)});
    RationalPolynomial prim = p.primitive_part();
    CHECK(prim == RationalPolynomial({Rational(-2), Rational(0), Rational(1)}));
    // sign of every coefficient is preserved
    CHECK(sgn(prim.coeff(0)) == sgn(p.coeff(0)));
    CHECK(sgn(prim.leading_coefficient()) == sgn(p.leading_coefficient()));
}

TEST_CASE("root bound really bounds") {
    RationalPolynomial p({Rational(-2), Rational(0), Rational(1)});  // roots +-sqrt(2)
    CHECK(p.root_bound() >= Rational(2));
    CHECK(p(p.root_bound()) > 0);
}

TEST_CASE("sturm chain counts distinct real roots") {
    RationalPolynomial p({Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
    SturmChain chain(p);
    CHECK(chain.squarefree());
    CHECK(chain.count_roots(Rational(0), Rational(2)) == 1);
    CHECK(chain.count_roots(Rational(-2), Rational(2)) == 2);
    CHECK(chain.count_roots_above(Rational(0)) == 1);
    CHECK(chain.count_roots(Rational(2), Rational(5)) == 0);
}

TEST_CASE("sturm chain flags repeated roots") {
    // (x-1)^2 (x+2)
    RationalPolynomial p = RationalPolynomial::linear(Rational(-1), Rational(1));
    p = p * p * RationalPolynomial::linear(Rational(2), Rational(1));
    SturmChain chain(p);
    CHECK_FALSE(chain.squarefree());
    // distinct-root counting still works
    CHECK(chain.count_roots(Rational(-3), Rational(3)) == 2);
}

TEST_CASE("isolation separates packed integer roots") {
    // prod_{k=1..8} (x - k)
    RationalPolynomial p = RationalPolynomial::constant(Rational(1));
    for (int k = 1; k <= 8; ++k) {
        p = p * RationalPolynomial::linear(Rational(-k), Rational(1));
    }
    auto roots = isolate_positive_roots(p);
    REQUIRE(roots.size() == 8);
    for (int k = 1; k <= 8; ++k) {
        double r = refine_root(p, roots[static_cast<std::size_t>(k - 1)], 1e-12);
        CHECK(std::fabs(r - k) < 1e-11);
    }
}

TEST_CASE("isolation ignores the origin and negative roots") {
    // x^2 (x+3) (x - 1/2)
    RationalPolynomial p = RationalPolynomial({Rational(0), Rational(0), Rational(1)}) *
                           RationalPolynomial::linear(Rational(3), Rational(1)) *
                           RationalPolynomial::linear(Rational(-1, 2), Rational(1));
    auto roots = isolate_positive_roots(p);
    REQUIRE(roots.size() == 1);
    CHECK(refine_root(p, roots[0], 1e-12) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("exact rational roots come out exactly") {
    RootBracket exact{true, Rational(1, 3), Rational(0), Rational(1)};
    RationalPolynomial p = RationalPolynomial::linear(Rational(-1, 3), Rational(1));
    CHECK(refine_root(p, exact, 1e-12) == Rational(1, 3).get_d());
}

TEST_CASE("refinement tolerance is honored") {
    RationalPolynomial p({Rational(-2), Rational(0), Rational(1)});
    auto roots = isolate_positive_roots(p);
    REQUIRE(roots.size() == 1);
    double r = refine_root(p, roots[0], 1e-12);
    CHECK(std::fabs(r - std::sqrt(2.0)) < 1e-12);
    CHECK_THROWS_AS(refine_root(p, roots[0], 0.0), UsageError);
}

TEST_CASE("random-coefficient products: sturm count equals constructed count") {
    // hand-rolled generator: polynomials with known distinct positive roots
    unsigned long seed = 12345;
    auto next = [&seed]() {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((seed >> 33) % 97) + 1;  // 1..97
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long> roots;
        RationalPolynomial p = RationalPolynomial::constant(Rational(1));
        while (roots.size() < 5) {
            long r = next();
            bool dup = false;
            for (long other : roots) dup = dup || other == r;
            if (dup) continue;
            roots.push_back(r);
            p = p * RationalPolynomial::linear(Rational(-r, 7), Rational(1));  // root r/7
        }
        SturmChain chain(p);
        CHECK(chain.count_roots_above(Rational(0)) == 5);
        CHECK(isolate_positive_roots(p).size() == 5);
    }
}

TEST_CASE("degree cap produces a resource error") {
    std::vector<Rational> big(RationalPolynomial::kMaxDegree + 2, Rational(1));
    CHECK_THROWS_AS(RationalPolynomial{big}, ResourceError);
}
