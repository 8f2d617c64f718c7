#pragma once

#include <map>
#include <vector>

#include "gwa/field.hpp"

namespace gwa {

/// Sparse exact matrix used for the rank computations.  Rows are stored as
/// ordered column->value maps; elimination picks pivots of small height to
/// keep coefficient growth in check.
class SparseMatrix {
public:
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const FieldElement& v);

    /// Exact rank over the coefficient field.
    int rank() const;
    /// Rank of the submatrix formed by the rows with keep[r] true.
    int rank_of_rows(const std::vector<bool>& keep) const;

    const std::map<int, FieldElement>& row(int r) const { return data_[static_cast<size_t>(r)]; }

private:
    int rows_, cols_;
    std::vector<std::map<int, FieldElement>> data_;

    static int eliminate(std::vector<std::map<int, FieldElement>> work);
};

}  // namespace gwa
