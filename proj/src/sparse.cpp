#include "mahjb/sparse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

namespace mahjb {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> entries)
{
    for (const auto& e : entries)
        if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
            throw std::invalid_argument("triplet index out of range");

    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.row_offsets_.assign(static_cast<std::size_t>(rows) + 1, 0);
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i + 1;
        double sum = entries[i].value;
        while (j < entries.size() && entries[j].row == entries[i].row &&
               entries[j].col == entries[i].col) {
            sum += entries[j].value;
            ++j;
        }
        m.col_indices_.push_back(entries[i].col);
        m.values_.push_back(sum);
        ++m.row_offsets_[static_cast<std::size_t>(entries[i].row) + 1];
        i = j;
    }
    for (int r = 0; r < rows; ++r)
        m.row_offsets_[static_cast<std::size_t>(r) + 1] +=
            m.row_offsets_[static_cast<std::size_t>(r)];
    return m;
}

std::vector<double> SparseMatrix::apply(std::span<const double> x) const
{
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("matvec dimension mismatch");
    std::vector<double> y(static_cast<std::size_t>(rows_), 0.0);
    for (int r = 0; r < rows_; ++r) {
        double acc = 0.0;
        for (int k = row_offsets_[static_cast<std::size_t>(r)];
             k < row_offsets_[static_cast<std::size_t>(r) + 1]; ++k)
            acc += values_[static_cast<std::size_t>(k)] *
                   x[static_cast<std::size_t>(col_indices_[static_cast<std::size_t>(k)])];
        y[static_cast<std::size_t>(r)] = acc;
    }
    return y;
}

namespace {

Eigen::SparseMatrix<double> to_eigen(const SparseMatrix& a)
{
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(a.nonzeros());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = a.row_offsets()[static_cast<std::size_t>(r)];
             k < a.row_offsets()[static_cast<std::size_t>(r) + 1]; ++k)
            trips.emplace_back(r, a.col_indices()[static_cast<std::size_t>(k)],
                               a.values()[static_cast<std::size_t>(k)]);
    Eigen::SparseMatrix<double> m(a.rows(), a.cols());
    m.setFromTriplets(trips.begin(), trips.end());
    m.makeCompressed();
    return m;
}

void check_system(const SparseMatrix& a, std::span<const double> b)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("system matrix must be square");
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("right-hand side size mismatch");
}

}  // namespace

std::vector<double> solve_linear(const SparseMatrix& a, std::span<const double> b)
{
    check_system(a, b);
    const Eigen::SparseMatrix<double> m = to_eigen(a);
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(m);
    lu.factorize(m);
    if (lu.info() != Eigen::Success)
        throw std::runtime_error("sparse LU factorization failed (singular or near-singular pivot): " +
                                 lu.lastErrorMessage());
    const Eigen::Map<const Eigen::VectorXd> rhs(b.data(), static_cast<Eigen::Index>(b.size()));
    Eigen::VectorXd x = lu.solve(rhs);
    if (lu.info() != Eigen::Success) throw std::runtime_error("sparse LU backsolve failed");
    return {x.data(), x.data() + x.size()};
}

std::vector<double> solve_spd(const SparseMatrix& a, std::span<const double> b)
{
    check_system(a, b);
    const Eigen::SparseMatrix<double> m = to_eigen(a);
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                             Eigen::DiagonalPreconditioner<double>>
        cg;
    cg.setTolerance(1e-12);
    cg.setMaxIterations(8 * m.rows() + 100);
    cg.compute(m);
    const Eigen::Map<const Eigen::VectorXd> rhs(b.data(), static_cast<Eigen::Index>(b.size()));
    Eigen::VectorXd x = cg.solve(rhs);
    if (cg.info() != Eigen::Success)
        throw std::runtime_error("conjugate gradient did not reach the requested tolerance after " +
                                 std::to_string(cg.iterations()) + " iterations");
    return {x.data(), x.data() + x.size()};
}

}  // namespace mahjb
