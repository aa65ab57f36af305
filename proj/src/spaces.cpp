#include "mahjb/spaces.hpp"

#include <cassert>
#include <stdexcept>

namespace mahjb {

ScalarDofMap build_scalar_space(const Mesh& m)
{
    ScalarDofMap s;
    s.mesh = &m;
    s.vertex_dof.assign(m.vertices.size(), kConstrained);
    for (int v = 0; v < m.vertex_count(); ++v)
        if (!on_boundary(m.vertex_class[static_cast<std::size_t>(v)]))
            s.vertex_dof[static_cast<std::size_t>(v)] = s.dof_count++;
    return s;
}

VectorDofMap build_vector_space(const Mesh& m)
{
    VectorDofMap s;
    s.mesh = &m;
    s.vertex_dofs.assign(m.vertices.size(), {kConstrained, kConstrained});
    for (int v = 0; v < m.vertex_count(); ++v) {
        auto& d = s.vertex_dofs[static_cast<std::size_t>(v)];
        switch (m.vertex_class[static_cast<std::size_t>(v)]) {
            case VertexClass::Interior:
                d[0] = s.dof_count++;
                d[1] = s.dof_count++;
                break;
            case VertexClass::Bottom:
            case VertexClass::Top:
                // tangent e1: x-component fixed, normal (y) free
                d[1] = s.dof_count++;
                break;
            case VertexClass::Left:
            case VertexClass::Right:
                d[0] = s.dof_count++;
                break;
            case VertexClass::Corner:
                break;
        }
    }
    return s;
}

double DiscreteScalar::vertex_value(int v) const
{
    const int dof = space->vertex_dof[static_cast<std::size_t>(v)];
    if (dof != kConstrained) return coeffs[static_cast<std::size_t>(dof)];
    return boundary_values.empty() ? 0.0 : boundary_values[static_cast<std::size_t>(v)];
}

Vec2 DiscreteVector::vertex_value(int v) const
{
    const auto& d = space->vertex_dofs[static_cast<std::size_t>(v)];
    return {d[0] == kConstrained ? 0.0 : coeffs[static_cast<std::size_t>(d[0])],
            d[1] == kConstrained ? 0.0 : coeffs[static_cast<std::size_t>(d[1])]};
}

std::array<Vec2, 3> p1_gradients(const std::array<Vec2, 3>& tri, double area)
{
    const double s = 1.0 / (2.0 * area);
    auto perp = [](Vec2 v) { return Vec2{v.y, -v.x}; };
    return {s * perp(tri[1] - tri[2]), s * perp(tri[2] - tri[0]), s * perp(tri[0] - tri[1])};
}

Vec2 element_gradient(const DiscreteScalar& field, int tri)
{
    const Mesh& m = *field.space->mesh;
    const auto verts = m.triangle_vertices(tri);
    const auto grads = p1_gradients(verts, m.triangle_area(tri));
    Vec2 g{};
    for (int k = 0; k < 3; ++k) {
        const double val = field.vertex_value(m.triangles[static_cast<std::size_t>(tri)][static_cast<std::size_t>(k)]);
        g = g + val * grads[static_cast<std::size_t>(k)];
    }
    return g;
}

Mat2 element_gradient(const DiscreteVector& field, int tri)
{
    const Mesh& m = *field.space->mesh;
    const auto verts = m.triangle_vertices(tri);
    const auto grads = p1_gradients(verts, m.triangle_area(tri));
    Mat2 jac{};
    for (int k = 0; k < 3; ++k) {
        const Vec2 val = field.vertex_value(m.triangles[static_cast<std::size_t>(tri)][static_cast<std::size_t>(k)]);
        jac = jac + outer(val, grads[static_cast<std::size_t>(k)]);
    }
    return jac;
}

double value_at(const DiscreteScalar& field, int tri, const std::array<double, 3>& bary)
{
    const auto& t = field.space->mesh->triangles[static_cast<std::size_t>(tri)];
    double v = 0.0;
    for (int k = 0; k < 3; ++k)
        v += bary[static_cast<std::size_t>(k)] * field.vertex_value(t[static_cast<std::size_t>(k)]);
    return v;
}

Vec2 value_at(const DiscreteVector& field, int tri, const std::array<double, 3>& bary)
{
    const auto& t = field.space->mesh->triangles[static_cast<std::size_t>(tri)];
    Vec2 v{};
    for (int k = 0; k < 3; ++k)
        v = v + bary[static_cast<std::size_t>(k)] * field.vertex_value(t[static_cast<std::size_t>(k)]);
    return v;
}

DiscreteVector prolongate(const DiscreteVector& coarse, const VectorDofMap& fine_space)
{
    const Mesh& fine = *fine_space.mesh;
    const Mesh& cm = *coarse.space->mesh;
    if (fine.level != cm.level + 1)
        throw std::invalid_argument("prolongate: fine mesh is not the refinement of the coarse one");

    DiscreteVector out;
    out.space = &fine_space;
    out.coeffs.assign(static_cast<std::size_t>(fine_space.dof_count), 0.0);
    for (int v = 0; v < fine.vertex_count(); ++v) {
        const auto parents = fine.midpoint_parents[static_cast<std::size_t>(v)];
        const Vec2 val = (parents[0] < 0)
                             ? coarse.vertex_value(v)
                             : 0.5 * (coarse.vertex_value(parents[0]) + coarse.vertex_value(parents[1]));
        const auto& d = fine_space.vertex_dofs[static_cast<std::size_t>(v)];
        if (d[0] != kConstrained) out.coeffs[static_cast<std::size_t>(d[0])] = val.x;
        if (d[1] != kConstrained) out.coeffs[static_cast<std::size_t>(d[1])] = val.y;
    }
    return out;
}

}  // namespace mahjb
