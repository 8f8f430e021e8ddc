#include "xmodcat/matrix.hpp"

#include "xmodcat/errors.hpp"

namespace xmodcat {

CycMatrix CycMatrix::identity(int n) {
    CycMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
    return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
    internal_check(cols_ == o.rows_, "Matrix", "dimension mismatch in product");
    CycMatrix r(rows_, o.cols_);
    std::int64_t conductor = 1;
    for (const Cyclotomic& v : data_) conductor = std::lcm(conductor, v.conductor());
    for (const Cyclotomic& v : o.data_) conductor = std::lcm(conductor, v.conductor());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Cyclotomic::Accumulator acc(conductor);
            for (int k = 0; k < cols_; ++k) {
                const Cyclotomic& a = at(i, k);
                if (a.is_zero()) continue;
                const Cyclotomic& b = o.at(k, j);
                if (b.is_zero()) continue;
                acc.add_mul(a, b);
            }
            r.at(i, j) = acc.value();
        }
    return r;
}

CycMatrix CycMatrix::scaled(const Cyclotomic& s) const {
    CycMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * s;
    return r;
}

bool CycMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

int CycMatrix::rank() const {
    CycMatrix m = *this;
    Cyclotomic prev(1);
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int piv = -1;
        for (int r = row; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < cols_; ++c) std::swap(m.at(piv, c), m.at(row, c));
        Cyclotomic prev_inv = prev.inverse();
        for (int r = row + 1; r < rows_; ++r) {
            for (int c = col + 1; c < cols_; ++c)
                m.at(r, c) = (m.at(r, c) * m.at(row, col) - m.at(r, col) * m.at(row, c)) * prev_inv;
            m.at(r, col) = Cyclotomic(0);
        }
        prev = m.at(row, col);
        ++rank;
        ++row;
    }
    return rank;
}

}  // namespace xmodcat
