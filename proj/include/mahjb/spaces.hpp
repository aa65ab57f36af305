#pragma once

#include <array>
#include <vector>

#include "mahjb/geometry.hpp"
#include "mahjb/mesh.hpp"

namespace mahjb {

inline constexpr int kConstrained = -1;

/// First-order Lagrange space with zero trace: one dof per interior vertex.
struct ScalarDofMap {
    const Mesh* mesh = nullptr;
    std::vector<int> vertex_dof;  // kConstrained at boundary vertices
    int dof_count = 0;
};

ScalarDofMap build_scalar_space(const Mesh& m);

/// Vector-valued P1 space with vanishing tangential trace. Interior vertices
/// carry two dofs, side vertices one (the normal component; the component
/// along the side tangent is fixed to zero), corners none.
struct VectorDofMap {
    const Mesh* mesh = nullptr;
    std::vector<std::array<int, 2>> vertex_dofs;  // per component x,y
    int dof_count = 0;
};

VectorDofMap build_vector_space(const Mesh& m);

struct DiscreteScalar {
    const ScalarDofMap* space = nullptr;
    std::vector<double> coeffs;           // one per free dof
    std::vector<double> boundary_values;  // per vertex; read at constrained vertices (empty = 0)

    double vertex_value(int v) const;
};

struct DiscreteVector {
    const VectorDofMap* space = nullptr;
    std::vector<double> coeffs;

    Vec2 vertex_value(int v) const;
};

/// Gradients of the three barycentric basis functions of a triangle.
std::array<Vec2, 3> p1_gradients(const std::array<Vec2, 3>& tri, double area);

/// Exact constant gradient of the P1 interpolant on a triangle.
Vec2 element_gradient(const DiscreteScalar& field, int tri);
/// Jacobian D w; row i is the gradient of component i.
Mat2 element_gradient(const DiscreteVector& field, int tri);

double value_at(const DiscreteScalar& field, int tri, const std::array<double, 3>& bary);
Vec2 value_at(const DiscreteVector& field, int tri, const std::array<double, 3>& bary);

/// Nodal interpolation of a coarse field onto the once-refined mesh of
/// fine_space (new vertices are edge midpoints). Used for warm starts.
DiscreteVector prolongate(const DiscreteVector& coarse, const VectorDofMap& fine_space);

}  // namespace mahjb
