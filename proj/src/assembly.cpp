#include "mahjb/assembly.hpp"

#include <cstring>
#include <sstream>
#include <stdexcept>

#include "mahjb/hjb.hpp"

namespace mahjb {

namespace {

struct LocalDof {
    int global;     // dof index, kConstrained skipped before insertion
    double div_z;   // divergence of the basis field
    double rot_z;   // scalar curl of the basis field
    Mat2 sym_dz;    // symmetrized Jacobian of the basis field
};

// Free local basis fields z = e_c * lambda_k of one triangle.
int local_dofs(const Mesh& m, const VectorDofMap& space, int tri, const std::array<Vec2, 3>& grads,
               LocalDof out[6])
{
    int n = 0;
    const auto& t = m.triangles[static_cast<std::size_t>(tri)];
    for (int k = 0; k < 3; ++k) {
        const auto& dofs = space.vertex_dofs[static_cast<std::size_t>(t[static_cast<std::size_t>(k)])];
        const Vec2 g = grads[static_cast<std::size_t>(k)];
        if (dofs[0] != kConstrained) {
            out[n].global = dofs[0];
            out[n].div_z = g.x;
            out[n].rot_z = -g.y;
            out[n].sym_dz = sym(outer(Vec2{1.0, 0.0}, g));
            ++n;
        }
        if (dofs[1] != kConstrained) {
            out[n].global = dofs[1];
            out[n].div_z = g.y;
            out[n].rot_z = g.x;
            out[n].sym_dz = sym(outer(Vec2{0.0, 1.0}, g));
            ++n;
        }
    }
    return n;
}

Vec2 physical_point(const std::array<Vec2, 3>& verts, const std::array<double, 3>& bary)
{
    return bary[0] * verts[0] + bary[1] * verts[1] + bary[2] * verts[2];
}

}  // namespace

std::uint64_t field_hash(const DiscreteVector& w)
{
    // FNV-1a over the coefficient bytes; ties a cache to the exact iterate.
    std::uint64_t h = 1469598103934665603ull;
    for (double c : w.coeffs) {
        std::uint64_t bits;
        std::memcpy(&bits, &c, sizeof(bits));
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

AssembledResidual assemble_residual(const DiscreteVector& w, const ProblemSpec& p, double eps,
                                    const QuadratureRule& quad)
{
    const VectorDofMap& space = *w.space;
    const Mesh& m = *space.mesh;
    const double sigma = cordes_constants(eps).sigma;
    const int nq = static_cast<int>(quad.points.size());

    AssembledResidual out;
    out.r.assign(static_cast<std::size_t>(space.dof_count), 0.0);
    out.cache.mesh = &m;
    out.cache.eps = eps;
    out.cache.points_per_tri = nq;
    out.cache.field_hash = field_hash(w);
    out.cache.evals.resize(static_cast<std::size_t>(m.triangle_count()) * static_cast<std::size_t>(nq));

    LocalDof local[6];
    for (int t = 0; t < m.triangle_count(); ++t) {
        const auto verts = m.triangle_vertices(t);
        const double area = m.triangle_area(t);
        const auto grads = p1_gradients(verts, area);
        const int nl = local_dofs(m, space, t, grads, local);

        const Mat2 jac_w = element_gradient(w, t);
        const double rot_w = rot_of(jac_w);

        for (int q = 0; q < nq; ++q) {
            const auto& qp = quad.points[static_cast<std::size_t>(q)];
            const Vec2 x = physical_point(verts, qp.bary);
            const double fv = p.f(x);
            if (fv < 0.0) {
                std::ostringstream msg;
                msg << "negative right-hand side f(" << x.x << ", " << x.y << ") = " << fv;
                throw std::runtime_error(msg.str());
            }
            const Mat2 arg = jac_w + p.hess_g(x);
            const HjbEval ev = f_gamma_eps(fv, arg, eps);

            auto& slot = out.cache.evals[static_cast<std::size_t>(t) * static_cast<std::size_t>(nq) +
                                         static_cast<std::size_t>(q)];
            slot.gamma = 1.0 / (ev.t_star * ev.t_star + (1.0 - ev.t_star) * (1.0 - ev.t_star));
            slot.t_star = ev.t_star;
            slot.control = ev.control;

            const double weight = qp.weight * 2.0 * area;
            for (int i = 0; i < nl; ++i)
                out.r[static_cast<std::size_t>(local[i].global)] -= ev.value * local[i].div_z * weight;
        }
        // Stabilization term: integrand elementwise constant, integrate exactly.
        for (int i = 0; i < nl; ++i)
            out.r[static_cast<std::size_t>(local[i].global)] += sigma * rot_w * local[i].rot_z * area;
    }
    return out;
}

SparseMatrix assemble_jacobian(const DiscreteVector& w, const AssemblyCache& cache,
                               const ProblemSpec& p, double eps, const QuadratureRule& quad)
{
    (void)p;
    const VectorDofMap& space = *w.space;
    const Mesh& m = *space.mesh;
    const int nq = static_cast<int>(quad.points.size());
    if (cache.mesh != &m || cache.points_per_tri != nq || cache.eps != eps ||
        cache.field_hash != field_hash(w))
        throw std::invalid_argument("assembly cache does not match the supplied field");

    const double sigma = cordes_constants(eps).sigma;
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(m.triangle_count()) * 36);

    LocalDof local[6];
    for (int t = 0; t < m.triangle_count(); ++t) {
        const auto verts = m.triangle_vertices(t);
        const double area = m.triangle_area(t);
        const auto grads = p1_gradients(verts, area);
        const int nl = local_dofs(m, space, t, grads, local);

        double block[6][6] = {};
        for (int q = 0; q < nq; ++q) {
            const auto& slot = cache.evals[static_cast<std::size_t>(t) * static_cast<std::size_t>(nq) +
                                           static_cast<std::size_t>(q)];
            const double weight = quad.points[static_cast<std::size_t>(q)].weight * 2.0 * area;
            double s[6];
            for (int j = 0; j < nl; ++j)
                s[j] = slot.gamma * ddot(slot.control, local[j].sym_dz);
            for (int i = 0; i < nl; ++i)
                for (int j = 0; j < nl; ++j) block[i][j] += weight * s[j] * local[i].div_z;
        }
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nl; ++j) {
                const double value = block[i][j] + sigma * local[j].rot_z * local[i].rot_z * area;
                trips.push_back({local[i].global, local[j].global, value});
            }
    }
    return SparseMatrix::from_triplets(space.dof_count, space.dof_count, std::move(trips));
}

SparseMatrix assemble_poisson(const ScalarDofMap& vs, const QuadratureRule& quad)
{
    (void)quad;  // gradients are elementwise constant; area-weighting is the exact rule
    const Mesh& m = *vs.mesh;
    std::vector<Triplet> trips;
    trips.reserve(static_cast<std::size_t>(m.triangle_count()) * 9);
    for (int t = 0; t < m.triangle_count(); ++t) {
        const auto verts = m.triangle_vertices(t);
        const double area = m.triangle_area(t);
        const auto grads = p1_gradients(verts, area);
        const auto& tri = m.triangles[static_cast<std::size_t>(t)];
        for (int i = 0; i < 3; ++i) {
            const int di = vs.vertex_dof[static_cast<std::size_t>(tri[static_cast<std::size_t>(i)])];
            if (di == kConstrained) continue;
            for (int j = 0; j < 3; ++j) {
                const int dj = vs.vertex_dof[static_cast<std::size_t>(tri[static_cast<std::size_t>(j)])];
                if (dj == kConstrained) continue;
                trips.push_back({di, dj, area * dot(grads[static_cast<std::size_t>(i)],
                                                    grads[static_cast<std::size_t>(j)])});
            }
        }
    }
    return SparseMatrix::from_triplets(vs.dof_count, vs.dof_count, std::move(trips));
}

std::vector<double> poisson_rhs(const DiscreteVector& w, const ProblemSpec& p,
                                const ScalarDofMap& vs, const QuadratureRule& quad)
{
    const Mesh& m = *vs.mesh;
    std::vector<double> b(static_cast<std::size_t>(vs.dof_count), 0.0);
    for (int t = 0; t < m.triangle_count(); ++t) {
        const auto verts = m.triangle_vertices(t);
        const double area = m.triangle_area(t);
        const auto grads = p1_gradients(verts, area);
        const auto& tri = m.triangles[static_cast<std::size_t>(t)];
        for (const auto& qp : quad.points) {
            const Vec2 x = physical_point(verts, qp.bary);
            const Vec2 field = value_at(w, t, qp.bary) + p.grad_g(x);
            const double weight = qp.weight * 2.0 * area;
            for (int i = 0; i < 3; ++i) {
                const int di = vs.vertex_dof[static_cast<std::size_t>(tri[static_cast<std::size_t>(i)])];
                if (di == kConstrained) continue;
                b[static_cast<std::size_t>(di)] +=
                    weight * dot(field, grads[static_cast<std::size_t>(i)]);
            }
        }
    }
    return b;
}

std::vector<double> poisson_dirichlet_lift(const ScalarDofMap& vs, const ProblemSpec& p)
{
    const Mesh& m = *vs.mesh;
    std::vector<double> l(static_cast<std::size_t>(vs.dof_count), 0.0);
    for (int t = 0; t < m.triangle_count(); ++t) {
        const auto verts = m.triangle_vertices(t);
        const double area = m.triangle_area(t);
        const auto grads = p1_gradients(verts, area);
        const auto& tri = m.triangles[static_cast<std::size_t>(t)];
        for (int i = 0; i < 3; ++i) {
            const int di = vs.vertex_dof[static_cast<std::size_t>(tri[static_cast<std::size_t>(i)])];
            if (di == kConstrained) continue;
            for (int j = 0; j < 3; ++j) {
                const int vj = tri[static_cast<std::size_t>(j)];
                if (vs.vertex_dof[static_cast<std::size_t>(vj)] != kConstrained) continue;
                l[static_cast<std::size_t>(di)] += p.g(m.vertices[static_cast<std::size_t>(vj)]) *
                                                   area *
                                                   dot(grads[static_cast<std::size_t>(j)],
                                                       grads[static_cast<std::size_t>(i)]);
            }
        }
    }
    return l;
}

}  // namespace mahjb
