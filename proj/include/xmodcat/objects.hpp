#pragma once

#include "xmodcat/cyclotomic.hpp"
#include "xmodcat/xchar.hpp"
#include "xmodcat/xmod.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace xmodcat {

// Sparse matrix over the cyclotomic field, row-major with sorted columns.
// The canonical objects have permutation-like P and Q, so everything built
// from them stays sparse; products and Kronecker factors never densify here.
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), row_(static_cast<size_t>(rows)) {}

    static SparseMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<std::pair<int, Cyclotomic>>& row(int r) const { return row_[static_cast<size_t>(r)]; }

    void set(int r, int c, Cyclotomic v);  // overwrites; dropping zeros
    Cyclotomic get(int r, int c) const;

    bool operator==(const SparseMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_; }
    bool operator!=(const SparseMat& o) const { return !(*this == o); }

    SparseMat operator*(const SparseMat& o) const;
    SparseMat operator+(const SparseMat& o) const;
    SparseMat kron(const SparseMat& o) const;
    SparseMat block_diag(const SparseMat& o) const;
    Cyclotomic trace() const;
    std::int64_t nnz() const;

    // Exact invertibility via sparse elimination (pivot = column of minimal
    // fill); near-linear on the generalized-permutation matrices that arise
    // from canonical objects.
    bool invertible() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<std::pair<int, Cyclotomic>>> row_;
};

// A concrete object (V, P, Q) of M(X): an X2-indexed resolution of identity
// P and a representation Q of X1 with P(m) Q(g) = Q(g) P(m^g).
struct ExplicitObject {
    const CrossedModule* xm = nullptr;
    std::int64_t dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<SparseMat> p;  // indexed by X2
    std::vector<SparseMat> q;  // indexed by X1
};

// Throws InternalError "AxiomViolation" if any of the four object axioms
// fails.
void assert_object_axioms(const ExplicitObject& o);

ExplicitObject object_trivial(const CrossedModule& x);
ExplicitObject object_regular(const CrossedModule& x);
ExplicitObject object_vacuum(const CrossedModule& x, const ExactnessData& e);

ExplicitObject object_direct_sum(const ExplicitObject& a, const ExplicitObject& b);

// Kronecker tensor product; the character of the result is checked against
// tensor_character of the factor characters.
ExplicitObject object_tensor(const ExplicitObject& a, const ExplicitObject& b);

// psi(m, g) = Tr(P(m) Q(g)).
XCharacter object_character(const ExplicitObject& o);

// The braiding map V1 (x) V2 -> V2 (x) V1; asserts exact invertibility and
// both intertwiner identities against the two tensor orders.
SparseMat braiding(const ExplicitObject& a, const ExplicitObject& b);

// Yang-Baxter probe on a triple of objects; reported, never asserted.
bool braid_relation_holds(const ExplicitObject& a, const ExplicitObject& b,
                          const ExplicitObject& c);

}  // namespace xmodcat
