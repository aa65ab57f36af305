#pragma once

#include <array>
#include <vector>

namespace mahjb {

struct QuadraturePoint {
    std::array<double, 3> bary;
    double weight;  // reference weight; physical weight = weight * 2 * area(T)
};

/// Rule on the reference triangle; weights sum to the reference area 1/2.
/// All points are strictly interior so that data with boundary or vertex
/// singularities is never evaluated on the singular set.
struct QuadratureRule {
    std::vector<QuadraturePoint> points;
    int degree = 0;
};

/// 3-point rule, exact for degree 2, points at the (2/3,1/6,1/6) permutations.
const QuadratureRule& interior_degree2_rule();

/// 7-point rule, exact for degree 5 (centroid plus two interior orbits).
const QuadratureRule& interior_degree5_rule();

}  // namespace mahjb
