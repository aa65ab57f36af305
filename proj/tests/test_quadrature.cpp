#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mahjb/quadrature.hpp"

using namespace mahjb;

namespace {

// Exact integral of x^a y^b over the reference triangle {(0,0),(1,0),(0,1)}.
double exact_monomial(int a, int b)
{
    auto fact = [](int n) {
        double f = 1.0;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    return fact(a) * fact(b) / fact(a + b + 2);
}

double quad_monomial(const QuadratureRule& rule, int a, int b)
{
    double s = 0.0;
    for (const auto& qp : rule.points) {
        const double x = qp.bary[1];
        const double y = qp.bary[2];
        s += qp.weight * std::pow(x, a) * std::pow(y, b);
    }
    return s;
}

void check_rule(const QuadratureRule& rule)
{
    double wsum = 0.0;
    for (const auto& qp : rule.points) {
        CHECK(qp.weight > 0.0);
        wsum += qp.weight;
        double bsum = 0.0;
        for (double l : qp.bary) {
            CHECK(l > 0.0);  // strictly interior
            bsum += l;
        }
        CHECK(bsum == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK(wsum == doctest::Approx(0.5).epsilon(1e-14));
    for (int a = 0; a + 0 <= rule.degree; ++a)
        for (int b = 0; a + b <= rule.degree; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(quad_monomial(rule, a, b) ==
                  doctest::Approx(exact_monomial(a, b)).epsilon(1e-13));
        }
}

}  // namespace

TEST_CASE("degree-2 interior rule") { check_rule(interior_degree2_rule()); }

TEST_CASE("degree-5 interior rule") { check_rule(interior_degree5_rule()); }

TEST_CASE("degree-2 rule is not exact beyond its degree")
{
    // cubic x^3: guards against an over-claimed degree label
    const double q = quad_monomial(interior_degree2_rule(), 3, 0);
    CHECK(std::abs(q - exact_monomial(3, 0)) > 1e-6);
}
