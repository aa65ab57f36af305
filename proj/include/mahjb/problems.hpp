#pragma once

#include <functional>
#include <string>

#include "mahjb/geometry.hpp"

namespace mahjb {

/// Analytic data bundle for one benchmark: right-hand side f >= 0, boundary
/// extension g with gradient and a.e. Hessian, and the exact solution with its
/// gradient for error evaluation. Callers evaluate f/hess_g only at strictly
/// interior points; singular_distance reports the distance to the data's
/// singular set so samplers can assert clearance.
struct ProblemSpec {
    int id = 0;
    std::function<double(Vec2)> f;
    std::function<double(Vec2)> g;
    std::function<Vec2(Vec2)> grad_g;
    std::function<Mat2(Vec2)> hess_g;
    std::function<double(Vec2)> u_exact;
    std::function<Vec2(Vec2)> grad_u_exact;
    std::function<double(Vec2)> singular_distance;
    std::string notes;
};

/// u = (2|x|)^{3/2}/3, f = 1/|x|; f singular at the origin corner.
ProblemSpec example_1();
/// u = -sqrt(2-|x|^2), f = 2/(2-|x|^2)^2; data degenerates at the corner (1,1).
ProblemSpec example_2();
/// u = |x1-1/2|, f = 0; gradient jump across the mesh line x1 = 1/2.
ProblemSpec example_3();
/// u = -sin(pi x)sin(pi y)/(sin(pi x)+sin(pi y)), homogeneous g; f is the
/// exact determinant of the Hessian (0/0 form on the boundary).
ProblemSpec example_4();

ProblemSpec problem_by_id(int id);

}  // namespace mahjb
