#include "taxsim/sparse.hpp"

#include <cassert>
#include <stdexcept>

namespace taxsim {

SparseOperator SparseOperator::five_point_pattern(int nx, int ny) {
    SparseOperator op;
    op.n_ = nx * ny;
    op.row_offsets_.reserve(static_cast<std::size_t>(op.n_) + 1);
    op.row_offsets_.push_back(0);
    op.diag_pos_.resize(static_cast<std::size_t>(op.n_));
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int row = j * nx + i;
            if (j > 0) op.col_indices_.push_back(row - nx);
            if (i > 0) op.col_indices_.push_back(row - 1);
            op.diag_pos_[static_cast<std::size_t>(row)] = static_cast<int>(op.col_indices_.size());
            op.col_indices_.push_back(row);
            if (i < nx - 1) op.col_indices_.push_back(row + 1);
            if (j < ny - 1) op.col_indices_.push_back(row + nx);
            op.row_offsets_.push_back(static_cast<int>(op.col_indices_.size()));
        }
    }
    op.entries_.assign(op.col_indices_.size(), 0.0);
    return op;
}

double& SparseOperator::entry(int row, int col) {
    for (int k = row_offsets_[row]; k < row_offsets_[row + 1]; ++k) {
        if (col_indices_[static_cast<std::size_t>(k)] == col) {
            return entries_[static_cast<std::size_t>(k)];
        }
    }
    throw std::out_of_range("SparseOperator::entry outside the stencil pattern");
}

double SparseOperator::entry(int row, int col) const {
    return const_cast<SparseOperator*>(this)->entry(row, col);
}

void SparseOperator::set_zero() {
    entries_.assign(entries_.size(), 0.0);
}

void SparseOperator::apply(std::span<const double> x, std::span<double> y) const {
    assert(static_cast<int>(x.size()) == n_ && static_cast<int>(y.size()) == n_);
    for (int row = 0; row < n_; ++row) {
        double acc = 0.0;
        for (int k = row_offsets_[row]; k < row_offsets_[row + 1]; ++k) {
            acc += entries_[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(col_indices_[static_cast<std::size_t>(k)])];
        }
        y[static_cast<std::size_t>(row)] = acc;
    }
}

void SparseOperator::diagonal(std::span<double> d) const {
    for (int row = 0; row < n_; ++row) {
        d[static_cast<std::size_t>(row)] = diagonal_entry(row);
    }
}

void ShiftedOperator::apply(std::span<const double> x, std::span<double> y) const {
    const auto offsets = L_->row_offsets();
    const auto cols = L_->col_indices();
    const auto vals = L_->entries();
    const int n = L_->n();
    for (int row = 0; row < n; ++row) {
        double acc = 0.0;
        for (int k = offsets[row]; k < offsets[row + 1]; ++k) {
            acc += vals[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(cols[static_cast<std::size_t>(k)])];
        }
        y[static_cast<std::size_t>(row)] = x[static_cast<std::size_t>(row)] - c_ * acc;
    }
}

void ShiftedOperator::diagonal(std::span<double> d) const {
    const int n = L_->n();
    for (int row = 0; row < n; ++row) {
        d[static_cast<std::size_t>(row)] = 1.0 - c_ * L_->diagonal_entry(row);
    }
}

} // namespace taxsim
