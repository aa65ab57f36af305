#pragma once

#include <span>
#include <vector>

namespace mahjb {

struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

/// Compressed-row matrix assembled from triplets; duplicates are coalesced by
/// sort-and-sum, so assembly order never affects the stored values.
class SparseMatrix {
public:
    SparseMatrix() = default;
    static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nonzeros() const { return values_.size(); }

    const std::vector<int>& row_offsets() const { return row_offsets_; }
    const std::vector<int>& col_indices() const { return col_indices_; }
    const std::vector<double>& values() const { return values_; }

    std::vector<double> apply(std::span<const double> x) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> row_offsets_;
    std::vector<int> col_indices_;
    std::vector<double> values_;
};

/// Direct sparse LU solve; throws with factorization diagnostics on
/// singular or near-singular systems.
std::vector<double> solve_linear(const SparseMatrix& a, std::span<const double> b);

/// Conjugate gradients with diagonal preconditioner for symmetric positive
/// definite systems, relative tolerance 1e-12.
std::vector<double> solve_spd(const SparseMatrix& a, std::span<const double> b);

}  // namespace mahjb
