#include "mahjb/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace mahjb {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

ProblemSpec example_1()
{
    ProblemSpec p;
    p.id = 1;
    p.notes = "u in H^{5/2-nu}; f singular at the origin corner";
    auto u = [](Vec2 x) {
        const double r = norm(x);
        return std::pow(2.0 * r, 1.5) / 3.0;
    };
    auto grad = [](Vec2 x) {
        const double r = norm(x);
        return std::sqrt(2.0 / r) * x;
    };
    auto hess = [](Vec2 x) {
        const double r = norm(x);
        const double c = std::sqrt(2.0);
        const Mat2 xxt = outer(x, x);
        return c / std::sqrt(r) * Mat2::identity() - 0.5 * c / std::pow(r, 2.5) * xxt;
    };
    p.f = [](Vec2 x) { return 1.0 / norm(x); };
    p.g = u;
    p.grad_g = grad;
    p.hess_g = hess;
    p.u_exact = u;
    p.grad_u_exact = grad;
    p.singular_distance = [](Vec2 x) { return norm(x); };
    return p;
}

ProblemSpec example_2()
{
    ProblemSpec p;
    p.id = 2;
    p.notes = "u in H^{3/2-nu}; 2-|x|^2 vanishes at the corner (1,1)";
    auto u = [](Vec2 x) { return -std::sqrt(2.0 - dot(x, x)); };
    auto grad = [](Vec2 x) { return (1.0 / std::sqrt(2.0 - dot(x, x))) * x; };
    auto hess = [](Vec2 x) {
        const double s = 1.0 / std::sqrt(2.0 - dot(x, x));
        return s * Mat2::identity() + (s * s * s) * outer(x, x);
    };
    p.f = [](Vec2 x) {
        const double d = 2.0 - dot(x, x);
        return 2.0 / (d * d);
    };
    p.g = u;
    p.grad_g = grad;
    p.hess_g = hess;
    p.u_exact = u;
    p.grad_u_exact = grad;
    p.singular_distance = [](Vec2 x) { return std::sqrt(2.0) - norm(x); };
    return p;
}

ProblemSpec example_3()
{
    ProblemSpec p;
    p.id = 3;
    p.notes = "u in H^{3/2-nu}; gradient jump on the line x1 = 1/2, sign(0) := +1";
    auto u = [](Vec2 x) { return std::abs(x.x - 0.5); };
    auto grad = [](Vec2 x) { return Vec2{x.x - 0.5 >= 0.0 ? 1.0 : -1.0, 0.0}; };
    p.f = [](Vec2) { return 0.0; };
    p.g = u;
    p.grad_g = grad;
    p.hess_g = [](Vec2) { return Mat2{}; };
    p.u_exact = u;
    p.grad_u_exact = grad;
    p.singular_distance = [](Vec2 x) { return std::abs(x.x - 0.5); };
    return p;
}

ProblemSpec example_4()
{
    ProblemSpec p;
    p.id = 4;
    p.notes = "u in H^{2-nu}, homogeneous boundary data; f -> 0/0 on the boundary";
    auto u = [](Vec2 x) {
        const double sx = std::sin(kPi * x.x), sy = std::sin(kPi * x.y);
        const double den = sx + sy;
        if (den <= 0.0) return 0.0;  // corners of the closed square
        return -sx * sy / den;
    };
    auto grad = [](Vec2 x) {
        const double sx = std::sin(kPi * x.x), sy = std::sin(kPi * x.y);
        const double cx = std::cos(kPi * x.x), cy = std::cos(kPi * x.y);
        const double den2 = (sx + sy) * (sx + sy);
        return Vec2{-kPi * cx * sy * sy / den2, -kPi * cy * sx * sx / den2};
    };
    p.f = [](Vec2 x) {
        const double sx = std::sin(kPi * x.x), sy = std::sin(kPi * x.y);
        const double den = sx + sy;
        if (den <= 0.0) return 0.0;
        const double s4 = den * den * den * den;
        return kPi * kPi * kPi * kPi * sx * sx * sy * sy * (2.0 - sx * sy) / s4;
    };
    p.g = [](Vec2) { return 0.0; };
    p.grad_g = [](Vec2) { return Vec2{}; };
    p.hess_g = [](Vec2) { return Mat2{}; };
    p.u_exact = u;
    p.grad_u_exact = grad;
    p.singular_distance = [](Vec2 x) {
        return std::min(std::min(x.x, 1.0 - x.x), std::min(x.y, 1.0 - x.y));
    };
    return p;
}

ProblemSpec problem_by_id(int id)
{
    switch (id) {
        case 1: return example_1();
        case 2: return example_2();
        case 3: return example_3();
        case 4: return example_4();
        default: throw std::invalid_argument("benchmark id must be 1..4");
    }
}

}  // namespace mahjb
