#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "mahjb/mesh.hpp"

using namespace mahjb;

TEST_CASE("initial mesh: criss-cross of the unit square")
{
    const Mesh m = initial_mesh();
    CHECK(m.vertex_count() == 5);
    CHECK(m.triangle_count() == 4);
    CHECK(m.level == 0);
    CHECK(mesh_size(m) == 1.0);

    int corners = 0, sides = 0, interior = 0;
    for (auto c : m.vertex_class) {
        if (c == VertexClass::Corner) ++corners;
        else if (c == VertexClass::Interior) ++interior;
        else ++sides;
    }
    CHECK(corners == 4);
    CHECK(sides == 0);
    CHECK(interior == 1);

    for (int t = 0; t < 4; ++t) CHECK(m.triangle_area(t) == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("refinement counts and preserved parent indices")
{
    const Mesh m0 = initial_mesh();
    const Mesh m1 = refine_uniform(m0);
    CHECK(m1.vertex_count() == 13);
    CHECK(m1.triangle_count() == 16);
    CHECK(m1.level == 1);
    for (int v = 0; v < m0.vertex_count(); ++v) {
        CHECK(m1.vertices[v].x == m0.vertices[v].x);
        CHECK(m1.vertices[v].y == m0.vertices[v].y);
        CHECK(m1.midpoint_parents[v][0] == -1);
    }
    for (int v = m0.vertex_count(); v < m1.vertex_count(); ++v) {
        const auto par = m1.midpoint_parents[v];
        REQUIRE(par[0] >= 0);
        const Vec2 mid = 0.5 * (m0.vertices[par[0]] + m0.vertices[par[1]]);
        CHECK(m1.vertices[v].x == mid.x);
        CHECK(m1.vertices[v].y == mid.y);
    }
}

TEST_CASE("vertex set equals grid points plus cell centers")
{
    Mesh m = initial_mesh();
    for (int level = 0; level <= 5; ++level) {
        if (level > 0) m = refine_uniform(m);
        const int n = 1 << level;
        std::vector<std::pair<double, double>> expected;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                expected.emplace_back(double(i) / n, double(j) / n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                expected.emplace_back((i + 0.5) / n, (j + 0.5) / n);
        std::vector<std::pair<double, double>> got;
        for (const auto& v : m.vertices) got.emplace_back(v.x, v.y);
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        REQUIRE(got.size() == expected.size());
        CHECK(got == expected);
    }
}

TEST_CASE("hierarchy invariants up to level 10")
{
    Mesh m = initial_mesh();
    for (int level = 0; level <= 10; ++level) {
        if (level > 0) m = refine_uniform(m);
        CAPTURE(level);
        REQUIRE(m.triangle_count() == (1 << (2 * (level + 1))));
        REQUIRE(m.vertex_count() ==
                ((1 << level) + 1) * ((1 << level) + 1) + (1 << (2 * level)));
        CHECK(mesh_size(m) == std::ldexp(1.0, -level));

        double area_sum = 0.0;
        double min_area = 1e300;
        for (int t = 0; t < m.triangle_count(); ++t) {
            const double a = m.triangle_area(t);
            min_area = std::min(min_area, a);
            area_sum += a;
        }
        CHECK(min_area > 0.0);
        CHECK(std::abs(area_sum - 1.0) <= 1e-12);

        int corners = 0, sides = 0;
        for (auto c : m.vertex_class) {
            if (c == VertexClass::Corner) ++corners;
            else if (on_side(c)) ++sides;
        }
        CHECK(corners == 4);
        CHECK(sides == 4 * (1 << level) - 4);
    }
}

TEST_CASE("conformity: interior edges shared by exactly two triangles")
{
    Mesh m = initial_mesh();
    for (int level = 0; level <= 6; ++level) {
        if (level > 0) m = refine_uniform(m);
        CAPTURE(level);
        std::unordered_map<std::uint64_t, int> edge_count;
        const auto key = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            return (std::uint64_t(a) << 32) | std::uint64_t(b);
        };
        for (const auto& tri : m.triangles)
            for (int e = 0; e < 3; ++e) ++edge_count[key(tri[e], tri[(e + 1) % 3])];

        for (const auto& [k, count] : edge_count) {
            const Vec2 a = m.vertices[int(k >> 32)];
            const Vec2 b = m.vertices[int(k & 0xffffffff)];
            const Vec2 mid = 0.5 * (a + b);
            const bool boundary_edge =
                mid.x == 0.0 || mid.x == 1.0 || mid.y == 0.0 || mid.y == 1.0;
            REQUIRE(count == (boundary_edge ? 1 : 2));
        }
    }
}

TEST_CASE("side tangents and normals")
{
    CHECK(side_tangent(VertexClass::Bottom).x == 1.0);
    CHECK(side_tangent(VertexClass::Left).y == 1.0);
    CHECK(side_normal(VertexClass::Bottom).y == -1.0);
    CHECK(side_normal(VertexClass::Right).x == 1.0);
    CHECK(side_normal(VertexClass::Top).y == 1.0);
    CHECK(side_normal(VertexClass::Left).x == -1.0);
}

TEST_CASE("mesh dump counts line")
{
    const Mesh m = initial_mesh();
    std::ostringstream os;
    dump_mesh(m, os);
    std::istringstream is(os.str());
    int nv = 0, nt = 0;
    is >> nv >> nt;
    CHECK(nv == 5);
    CHECK(nt == 4);
}
