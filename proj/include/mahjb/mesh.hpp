#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "mahjb/geometry.hpp"

namespace mahjb {

/// Boundary classification of a vertex of the unit-square triangulation.
/// Side values carry an implicit unit tangent (Bottom/Top: e1, Left/Right: e2).
enum class VertexClass : unsigned char { Interior, Bottom, Right, Top, Left, Corner };

inline bool on_boundary(VertexClass c) { return c != VertexClass::Interior; }
inline bool on_side(VertexClass c)
{
    return c != VertexClass::Interior && c != VertexClass::Corner;
}

/// Unit tangent of a boundary side; meaningful for side vertices only.
Vec2 side_tangent(VertexClass c);
/// Outward unit normal of a boundary side; meaningful for side vertices only.
Vec2 side_normal(VertexClass c);

/// Conforming triangulation of [0,1]^2. All vertices have dyadic coordinates
/// k/2^(level+1); triangles are counterclockwise. Immutable after construction.
struct Mesh {
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::vector<VertexClass> vertex_class;
    /// For vertices created by refinement: the parent edge endpoints; {-1,-1} otherwise.
    std::vector<std::array<int, 2>> midpoint_parents;
    int level = 0;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }

    std::array<Vec2, 3> triangle_vertices(int t) const
    {
        const auto& tri = triangles[static_cast<std::size_t>(t)];
        return {vertices[static_cast<std::size_t>(tri[0])],
                vertices[static_cast<std::size_t>(tri[1])],
                vertices[static_cast<std::size_t>(tri[2])]};
    }
    double triangle_area(int t) const;
    /// Longest edge; equals the diameter for a triangle.
    double triangle_diameter(int t) const;
};

/// Criss-cross mesh of the unit square: corners joined to the midpoint, 4 triangles.
Mesh initial_mesh();

/// Red refinement: every triangle split into 4 similar children via edge midpoints.
/// Parent vertices keep their indices.
Mesh refine_uniform(const Mesh& m);

/// Maximal triangle diameter.
double mesh_size(const Mesh& m);

/// Plain-text dump: counts line, coordinate lines, index triples. Debugging aid.
void dump_mesh(const Mesh& m, std::ostream& out);

}  // namespace mahjb
