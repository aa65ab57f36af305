#include "mahjb/mesh.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace mahjb {

Vec2 side_tangent(VertexClass c)
{
    switch (c) {
        case VertexClass::Bottom:
        case VertexClass::Top: return {1.0, 0.0};
        case VertexClass::Right:
        case VertexClass::Left: return {0.0, 1.0};
        default: return {0.0, 0.0};
    }
}

Vec2 side_normal(VertexClass c)
{
    switch (c) {
        case VertexClass::Bottom: return {0.0, -1.0};
        case VertexClass::Right: return {1.0, 0.0};
        case VertexClass::Top: return {0.0, 1.0};
        case VertexClass::Left: return {-1.0, 0.0};
        default: return {0.0, 0.0};
    }
}

double Mesh::triangle_area(int t) const
{
    const auto v = triangle_vertices(t);
    return 0.5 * cross(v[1] - v[0], v[2] - v[0]);
}

double Mesh::triangle_diameter(int t) const
{
    const auto v = triangle_vertices(t);
    return std::max({norm(v[1] - v[0]), norm(v[2] - v[1]), norm(v[0] - v[2])});
}

namespace {

VertexClass classify(Vec2 p)
{
    // Dyadic coordinates make exact comparisons safe.
    const bool lr = (p.x == 0.0) || (p.x == 1.0);
    const bool bt = (p.y == 0.0) || (p.y == 1.0);
    if (lr && bt) return VertexClass::Corner;
    if (p.y == 0.0) return VertexClass::Bottom;
    if (p.x == 1.0) return VertexClass::Right;
    if (p.y == 1.0) return VertexClass::Top;
    if (p.x == 0.0) return VertexClass::Left;
    return VertexClass::Interior;
}

}  // namespace

Mesh initial_mesh()
{
    Mesh m;
    m.vertices = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {0.5, 0.5}};
    m.triangles = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
    m.vertex_class.resize(m.vertices.size());
    for (std::size_t i = 0; i < m.vertices.size(); ++i)
        m.vertex_class[i] = classify(m.vertices[i]);
    m.midpoint_parents.assign(m.vertices.size(), {-1, -1});
    m.level = 0;
    return m;
}

Mesh refine_uniform(const Mesh& m)
{
    Mesh fine;
    fine.level = m.level + 1;
    fine.vertices = m.vertices;
    fine.vertex_class = m.vertex_class;
    fine.midpoint_parents.assign(m.vertices.size(), {-1, -1});
    fine.triangles.reserve(m.triangles.size() * 4);

    // Shared edges get one midpoint: keyed by sorted parent indices, so
    // deduplication is exact.
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
        const auto key = std::minmax(a, b);
        auto it = midpoint.find(key);
        if (it != midpoint.end()) return it->second;
        const Vec2 p = 0.5 * (m.vertices[static_cast<std::size_t>(a)] +
                              m.vertices[static_cast<std::size_t>(b)]);
        const int idx = fine.vertex_count();
        fine.vertices.push_back(p);
        fine.vertex_class.push_back(classify(p));
        fine.midpoint_parents.push_back({key.first, key.second});
        midpoint.emplace(key, idx);
        return idx;
    };

    for (const auto& tri : m.triangles) {
        const int v0 = tri[0], v1 = tri[1], v2 = tri[2];
        const int m01 = mid(v0, v1);
        const int m12 = mid(v1, v2);
        const int m20 = mid(v2, v0);
        fine.triangles.push_back({v0, m01, m20});
        fine.triangles.push_back({v1, m12, m01});
        fine.triangles.push_back({v2, m20, m12});
        fine.triangles.push_back({m01, m12, m20});
    }
    return fine;
}

double mesh_size(const Mesh& m)
{
    double h = 0.0;
    for (int t = 0; t < m.triangle_count(); ++t)
        h = std::max(h, m.triangle_diameter(t));
    return h;
}

void dump_mesh(const Mesh& m, std::ostream& out)
{
    out << m.vertex_count() << ' ' << m.triangle_count() << '\n';
    for (const auto& v : m.vertices) out << v.x << ' ' << v.y << '\n';
    for (const auto& t : m.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

}  // namespace mahjb
