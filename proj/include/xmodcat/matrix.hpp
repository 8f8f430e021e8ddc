#pragma once

#include "xmodcat/cyclotomic.hpp"

#include <cstdint>
#include <vector>

namespace xmodcat {

// Dense matrix over the cyclotomic field; sized for character-level data
// (dimension = number of irreducibles).
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static CycMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Cyclotomic& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Cyclotomic& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const CycMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }

    CycMatrix operator*(const CycMatrix& o) const;
    CycMatrix scaled(const Cyclotomic& s) const;
    bool is_symmetric() const;

    // Exact rank by fraction-free (Bareiss) elimination; the division by the
    // previous pivot is exact and computed through the conjugate-norm inverse.
    int rank() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Cyclotomic> data_;
};

}  // namespace xmodcat
