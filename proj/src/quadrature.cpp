#include "mahjb/quadrature.hpp"

#include <cmath>

namespace mahjb {

const QuadratureRule& interior_degree2_rule()
{
    static const QuadratureRule rule = [] {
        QuadratureRule r;
        r.degree = 2;
        const double a = 2.0 / 3.0, b = 1.0 / 6.0, w = 1.0 / 6.0;
        r.points = {{{a, b, b}, w}, {{b, a, b}, w}, {{b, b, a}, w}};
        return r;
    }();
    return rule;
}

const QuadratureRule& interior_degree5_rule()
{
    static const QuadratureRule rule = [] {
        QuadratureRule r;
        r.degree = 5;
        const double s15 = std::sqrt(15.0);
        // Area-normalized weights; halved below for the reference-area convention.
        const double w0 = 9.0 / 40.0;
        const double w1 = (155.0 - s15) / 1200.0;
        const double a1 = (6.0 - s15) / 21.0;   // orbit (0.7974..., 0.1013..., 0.1013...)
        const double b1 = (9.0 + 2.0 * s15) / 21.0;
        const double w2 = (155.0 + s15) / 1200.0;
        const double a2 = (6.0 + s15) / 21.0;   // orbit (0.0597..., 0.4701..., 0.4701...)
        const double b2 = (9.0 - 2.0 * s15) / 21.0;
        auto orbit = [&](double alpha, double beta, double w) {
            r.points.push_back({{beta, alpha, alpha}, 0.5 * w});
            r.points.push_back({{alpha, beta, alpha}, 0.5 * w});
            r.points.push_back({{alpha, alpha, beta}, 0.5 * w});
        };
        r.points.push_back({{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, 0.5 * w0});
        orbit(a1, b1, w1);
        orbit(a2, b2, w2);
        return r;
    }();
    return rule;
}

}  // namespace mahjb
