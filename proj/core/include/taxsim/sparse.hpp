#ifndef TAXSIM_SPARSE_HPP
#define TAXSIM_SPARSE_HPP

#include <span>
#include <vector>

namespace taxsim {

/// Compressed-row matrix on the 5-point grid stencil (at most 5 entries per
/// row, columns sorted). The pattern is fixed at construction; assembly
/// passes only rewrite the entry values.
class SparseOperator {
public:
    SparseOperator() = default;

    /// Builds the 5-point pattern for an nx*ny grid (row-major cell order)
    /// with all entries zero.
    static SparseOperator five_point_pattern(int nx, int ny);

    int n() const { return n_; }

    std::span<const int> row_offsets() const { return row_offsets_; }
    std::span<const int> col_indices() const { return col_indices_; }
    std::span<const double> entries() const { return entries_; }

    /// Entry reference for (row, col); the pair must be in the pattern.
    double& entry(int row, int col);
    double entry(int row, int col) const;

    double diagonal_entry(int row) const { return entries_[static_cast<std::size_t>(diag_pos_[row])]; }

    void set_zero();

    /// y = A x
    void apply(std::span<const double> x, std::span<double> y) const;
    void diagonal(std::span<double> d) const;

private:
    int n_ = 0;
    std::vector<int> row_offsets_;
    std::vector<int> col_indices_;
    std::vector<double> entries_;
    std::vector<int> diag_pos_;
};

/// Matrix-free view of Id - c*L used by the implicit stages.
class ShiftedOperator {
public:
    ShiftedOperator(const SparseOperator& L, double c) : L_(&L), c_(c) {}

    int n() const { return L_->n(); }
    void apply(std::span<const double> x, std::span<double> y) const;
    void diagonal(std::span<double> d) const;

private:
    const SparseOperator* L_;
    double c_;
};

} // namespace taxsim

#endif
