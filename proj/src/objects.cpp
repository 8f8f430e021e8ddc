#include "xmodcat/objects.hpp"

#include "xmodcat/errors.hpp"

#include <algorithm>
#include <map>

namespace xmodcat {

namespace {

void require_same_xmod(const ExplicitObject& a, const ExplicitObject& b) {
    if (a.xm != b.xm)
        throw InputError("MixedCrossedModules", "objects belong to different crossed modules");
}

Cyclotomic trace_of_product(const SparseMat& a, const SparseMat& b) {
    Cyclotomic acc(0);
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [k, v] : a.row(i)) {
            Cyclotomic w = b.get(k, i);
            if (!w.is_zero()) acc += v * w;
        }
    return acc;
}

}  // namespace

SparseMat SparseMat::identity(int n) {
    SparseMat m(n, n);
    for (int i = 0; i < n; ++i) m.row_[static_cast<size_t>(i)].emplace_back(i, Cyclotomic(1));
    return m;
}

void SparseMat::set(int r, int c, Cyclotomic v) {
    auto& row = row_[static_cast<size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v.is_zero())
            row.erase(it);
        else
            it->second = std::move(v);
    } else if (!v.is_zero()) {
        row.insert(it, {c, std::move(v)});
    }
}

Cyclotomic SparseMat::get(int r, int c) const {
    const auto& row = row_[static_cast<size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Cyclotomic(0);
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    internal_check(cols_ == o.rows_, "Matrix", "sparse product dimension mismatch");
    SparseMat r(rows_, o.cols_);
    std::map<int, Cyclotomic> acc;
    for (int i = 0; i < rows_; ++i) {
        acc.clear();
        for (const auto& [k, a] : row_[static_cast<size_t>(i)])
            for (const auto& [c, b] : o.row_[static_cast<size_t>(k)]) {
                auto it = acc.find(c);
                if (it == acc.end())
                    acc.emplace(c, a * b);
                else
                    it->second += a * b;
            }
        auto& out = r.row_[static_cast<size_t>(i)];
        for (auto& [c, v] : acc)
            if (!v.is_zero()) out.emplace_back(c, std::move(v));
    }
    return r;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
    internal_check(rows_ == o.rows_ && cols_ == o.cols_, "Matrix", "sparse sum dimension mismatch");
    SparseMat r(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        const auto& ra = row_[static_cast<size_t>(i)];
        const auto& rb = o.row_[static_cast<size_t>(i)];
        auto& out = r.row_[static_cast<size_t>(i)];
        size_t ia = 0, ib = 0;
        while (ia < ra.size() || ib < rb.size()) {
            if (ib == rb.size() || (ia < ra.size() && ra[ia].first < rb[ib].first)) {
                out.push_back(ra[ia++]);
            } else if (ia == ra.size() || rb[ib].first < ra[ia].first) {
                out.push_back(rb[ib++]);
            } else {
                Cyclotomic v = ra[ia].second + rb[ib].second;
                if (!v.is_zero()) out.emplace_back(ra[ia].first, std::move(v));
                ++ia;
                ++ib;
            }
        }
    }
    return r;
}

SparseMat SparseMat::kron(const SparseMat& o) const {
    SparseMat r(rows_ * o.rows_, cols_ * o.cols_);
    for (int i1 = 0; i1 < rows_; ++i1)
        for (int i2 = 0; i2 < o.rows_; ++i2) {
            auto& out = r.row_[static_cast<size_t>(i1 * o.rows_ + i2)];
            for (const auto& [c1, a] : row_[static_cast<size_t>(i1)])
                for (const auto& [c2, b] : o.row_[static_cast<size_t>(i2)])
                    out.emplace_back(c1 * o.cols_ + c2, a * b);
        }
    return r;
}

SparseMat SparseMat::block_diag(const SparseMat& o) const {
    SparseMat r(rows_ + o.rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) r.row_[static_cast<size_t>(i)] = row_[static_cast<size_t>(i)];
    for (int i = 0; i < o.rows_; ++i) {
        auto& out = r.row_[static_cast<size_t>(rows_ + i)];
        for (const auto& [c, v] : o.row_[static_cast<size_t>(i)]) out.emplace_back(cols_ + c, v);
    }
    return r;
}

Cyclotomic SparseMat::trace() const {
    Cyclotomic acc(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) {
        Cyclotomic v = get(i, i);
        if (!v.is_zero()) acc += v;
    }
    return acc;
}

std::int64_t SparseMat::nnz() const {
    std::int64_t n = 0;
    for (const auto& row : row_) n += static_cast<std::int64_t>(row.size());
    return n;
}

bool SparseMat::invertible() const {
    if (rows_ != cols_) return false;
    const int n = rows_;
    std::vector<std::map<int, Cyclotomic>> work(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (const auto& [c, v] : row_[static_cast<size_t>(i)]) work[static_cast<size_t>(i)].emplace(c, v);
    std::vector<char> row_used(static_cast<size_t>(n), 0), col_used(static_cast<size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        // Column with the fewest nonzeros among active rows.
        std::vector<int> count(static_cast<size_t>(n), 0);
        for (int r = 0; r < n; ++r) {
            if (row_used[static_cast<size_t>(r)]) continue;
            for (const auto& [c, v] : work[static_cast<size_t>(r)])
                if (!col_used[static_cast<size_t>(c)]) ++count[static_cast<size_t>(c)];
        }
        int best = -1;
        for (int c = 0; c < n; ++c) {
            if (col_used[static_cast<size_t>(c)] || count[static_cast<size_t>(c)] == 0) continue;
            if (best < 0 || count[static_cast<size_t>(c)] < count[static_cast<size_t>(best)]) best = c;
        }
        if (best < 0) return false;
        int piv = -1;
        for (int r = 0; r < n; ++r)
            if (!row_used[static_cast<size_t>(r)] && work[static_cast<size_t>(r)].count(best)) {
                piv = r;
                break;
            }
        Cyclotomic pivot_inv = work[static_cast<size_t>(piv)].at(best).inverse();
        for (int r = 0; r < n; ++r) {
            if (r == piv || row_used[static_cast<size_t>(r)]) continue;
            auto it = work[static_cast<size_t>(r)].find(best);
            if (it == work[static_cast<size_t>(r)].end()) continue;
            Cyclotomic factor = it->second * pivot_inv;
            for (const auto& [c, v] : work[static_cast<size_t>(piv)]) {
                auto jt = work[static_cast<size_t>(r)].find(c);
                if (jt == work[static_cast<size_t>(r)].end()) {
                    work[static_cast<size_t>(r)].emplace(c, -(factor * v));
                } else {
                    jt->second -= factor * v;
                    if (jt->second.is_zero()) work[static_cast<size_t>(r)].erase(jt);
                }
            }
        }
        row_used[static_cast<size_t>(piv)] = 1;
        col_used[static_cast<size_t>(best)] = 1;
    }
    return true;
}

void assert_object_axioms(const ExplicitObject& o) {
    const CrossedModule& x = *o.xm;
    int n2 = x.x2.order, n1 = x.x1.order;
    int dim = static_cast<int>(o.dim);
    SparseMat sum(dim, dim);
    for (int m = 0; m < n2; ++m) sum = sum + o.p[static_cast<size_t>(m)];
    internal_check(sum == SparseMat::identity(dim), "AxiomViolation",
                   "P projectors do not sum to the identity");
    for (int m = 0; m < n2; ++m)
        for (int n = 0; n < n2; ++n) {
            SparseMat prod = o.p[static_cast<size_t>(m)] * o.p[static_cast<size_t>(n)];
            internal_check(prod == (m == n ? o.p[static_cast<size_t>(m)] : SparseMat(dim, dim)),
                           "AxiomViolation", "P(m)P(n) != delta(m,n) P(m)");
        }
    for (int g = 0; g < n1; ++g)
        for (int h = 0; h < n1; ++h)
            internal_check(o.q[static_cast<size_t>(g)] * o.q[static_cast<size_t>(h)] ==
                               o.q[static_cast<size_t>(x.x1.mul[g][h])],
                           "AxiomViolation", "Q(g)Q(h) != Q(gh)");
    for (int m = 0; m < n2; ++m)
        for (int g = 0; g < n1; ++g)
            internal_check(o.p[static_cast<size_t>(m)] * o.q[static_cast<size_t>(g)] ==
                               o.q[static_cast<size_t>(g)] *
                                   o.p[static_cast<size_t>(x.act(m, g))],
                           "AxiomViolation", "P(m)Q(g) != Q(g)P(m^g)");
}

ExplicitObject object_trivial(const CrossedModule& x) {
    ExplicitObject o;
    o.xm = &x;
    o.dim = 1;
    o.basis_labels = {"*"};
    o.p.assign(static_cast<size_t>(x.x2.order), SparseMat(1, 1));
    o.p[static_cast<size_t>(x.x2.identity)] = SparseMat::identity(1);
    o.q.assign(static_cast<size_t>(x.x1.order), SparseMat::identity(1));
    assert_object_axioms(o);
    return o;
}

ExplicitObject object_regular(const CrossedModule& x) {
    ExplicitObject o;
    o.xm = &x;
    int n1 = x.x1.order, n2 = x.x2.order;
    o.dim = static_cast<std::int64_t>(n1) * n2;
    int dim = static_cast<int>(o.dim);
    auto index = [n2](int a, int b) { return a * n2 + b; };
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            o.basis_labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    o.p.assign(static_cast<size_t>(n2), SparseMat(dim, dim));
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b) {
            int m = x.act(b, a);  // y^x on the basis point (x,y) = (a,b)
            o.p[static_cast<size_t>(m)].set(index(a, b), index(a, b), Cyclotomic(1));
        }
    o.q.assign(static_cast<size_t>(n1), SparseMat(dim, dim));
    for (int g = 0; g < n1; ++g)
        for (int a = 0; a < n1; ++a) {
            int target = x.x1.mul[a][x.x1.inv[g]];
            for (int b = 0; b < n2; ++b)
                o.q[static_cast<size_t>(g)].set(index(target, b), index(a, b), Cyclotomic(1));
        }
    assert_object_axioms(o);
    return o;
}

ExplicitObject object_vacuum(const CrossedModule& x, const ExactnessData& e) {
    ExplicitObject o;
    o.xm = &x;
    int nk = static_cast<int>(e.kernel.size());
    int nc = static_cast<int>(e.cosets.size());
    o.dim = static_cast<std::int64_t>(nk) * nc;
    int dim = static_cast<int>(o.dim);
    auto index = [nc](int ki, int ci) { return ki * nc + ci; };
    for (int ki = 0; ki < nk; ++ki)
        for (int ci = 0; ci < nc; ++ci)
            o.basis_labels.push_back("(k" + std::to_string(e.kernel[static_cast<size_t>(ki)]) +
                                     ",I" + std::to_string(e.coset_rep[static_cast<size_t>(ci)]) +
                                     ")");
    o.p.assign(static_cast<size_t>(x.x2.order), SparseMat(dim, dim));
    for (int ki = 0; ki < nk; ++ki)
        for (int ci = 0; ci < nc; ++ci) {
            // x^y is independent of the representative y: kernel elements are
            // fixed by the image of the boundary.
            int m = x.act(e.kernel[static_cast<size_t>(ki)], e.coset_rep[static_cast<size_t>(ci)]);
            o.p[static_cast<size_t>(m)].set(index(ki, ci), index(ki, ci), Cyclotomic(1));
        }
    o.q.assign(static_cast<size_t>(x.x1.order), SparseMat(dim, dim));
    for (int g = 0; g < x.x1.order; ++g)
        for (int ci = 0; ci < nc; ++ci) {
            int target = e.coset_of[static_cast<size_t>(
                x.x1.mul[e.coset_rep[static_cast<size_t>(ci)]][x.x1.inv[g]])];
            for (int ki = 0; ki < nk; ++ki)
                o.q[static_cast<size_t>(g)].set(index(ki, target), index(ki, ci), Cyclotomic(1));
        }
    assert_object_axioms(o);
    return o;
}

XCharacter object_character(const ExplicitObject& o) {
    const CrossedModule& x = *o.xm;
    XCharacter psi;
    psi.xm = o.xm;
    psi.values.assign(static_cast<size_t>(x.x2.order),
                      std::vector<Cyclotomic>(static_cast<size_t>(x.x1.order)));
    for (int m = 0; m < x.x2.order; ++m)
        for (int g = 0; g < x.x1.order; ++g)
            psi.values[m][g] = trace_of_product(o.p[static_cast<size_t>(m)], o.q[static_cast<size_t>(g)]);
    return psi;
}

ExplicitObject object_direct_sum(const ExplicitObject& a, const ExplicitObject& b) {
    require_same_xmod(a, b);
    const CrossedModule& x = *a.xm;
    ExplicitObject o;
    o.xm = a.xm;
    o.dim = a.dim + b.dim;
    o.basis_labels = a.basis_labels;
    o.basis_labels.insert(o.basis_labels.end(), b.basis_labels.begin(), b.basis_labels.end());
    for (int m = 0; m < x.x2.order; ++m)
        o.p.push_back(a.p[static_cast<size_t>(m)].block_diag(b.p[static_cast<size_t>(m)]));
    for (int g = 0; g < x.x1.order; ++g)
        o.q.push_back(a.q[static_cast<size_t>(g)].block_diag(b.q[static_cast<size_t>(g)]));
    assert_object_axioms(o);
    // Characters add pointwise under direct sum.
    XCharacter ca = object_character(a), cb = object_character(b), co = object_character(o);
    for (int m = 0; m < x.x2.order; ++m)
        for (int g = 0; g < x.x1.order; ++g)
            internal_check(co.values[m][g] == ca.values[m][g] + cb.values[m][g], "AxiomViolation",
                           "direct-sum character is not the sum of the characters");
    return o;
}

ExplicitObject object_tensor(const ExplicitObject& a, const ExplicitObject& b) {
    require_same_xmod(a, b);
    const CrossedModule& x = *a.xm;
    ExplicitObject o;
    o.xm = a.xm;
    o.dim = a.dim * b.dim;
    for (const auto& la : a.basis_labels)
        for (const auto& lb : b.basis_labels) o.basis_labels.push_back(la + "x" + lb);
    int dim = static_cast<int>(o.dim);
    for (int m = 0; m < x.x2.order; ++m) {
        SparseMat pm(dim, dim);
        for (int n = 0; n < x.x2.order; ++n) {
            int other = x.x2.mul[x.x2.inv[n]][m];
            if (a.p[static_cast<size_t>(n)].nnz() == 0 ||
                b.p[static_cast<size_t>(other)].nnz() == 0)
                continue;
            pm = pm + a.p[static_cast<size_t>(n)].kron(b.p[static_cast<size_t>(other)]);
        }
        o.p.push_back(std::move(pm));
    }
    for (int g = 0; g < x.x1.order; ++g)
        o.q.push_back(a.q[static_cast<size_t>(g)].kron(b.q[static_cast<size_t>(g)]));
    assert_object_axioms(o);
    // Cross-module oracle: the matrix trace must reproduce the tensor-product
    // character formula.
    XCharacter expect = tensor_character(object_character(a), object_character(b));
    XCharacter got = object_character(o);
    internal_check(got.values == expect.values, "AxiomViolation",
                   "tensor object character differs from the tensor character formula");
    return o;
}

SparseMat braiding(const ExplicitObject& a, const ExplicitObject& b) {
    require_same_xmod(a, b);
    const CrossedModule& x = *a.xm;
    int dim_a = static_cast<int>(a.dim), dim_b = static_cast<int>(b.dim);
    int dim = dim_a * dim_b;
    SparseMat r(dim, dim);
    // column (i,j) of R: sum_m Q2(dm) e_j (x) P1(m) e_i, assembled row-wise.
    std::vector<std::map<int, Cyclotomic>> rows(static_cast<size_t>(dim));
    for (int m = 0; m < x.x2.order; ++m) {
        const SparseMat& pm = a.p[static_cast<size_t>(m)];
        const SparseMat& qd = b.q[static_cast<size_t>(x.boundary[m])];
        for (int k1 = 0; k1 < dim_a; ++k1)
            for (const auto& [i, va] : pm.row(k1))
                for (int k2 = 0; k2 < dim_b; ++k2)
                    for (const auto& [j, vb] : qd.row(k2)) {
                        int row = k2 * dim_a + k1;
                        int col = i * dim_b + j;
                        auto it = rows[static_cast<size_t>(row)].find(col);
                        if (it == rows[static_cast<size_t>(row)].end())
                            rows[static_cast<size_t>(row)].emplace(col, va * vb);
                        else
                            it->second += va * vb;
                    }
    }
    for (int row = 0; row < dim; ++row)
        for (auto& [c, v] : rows[static_cast<size_t>(row)])
            if (!v.is_zero()) r.set(row, c, v);

    internal_check(r.invertible(), "NotInvertible", "braiding matrix is singular");
    ExplicitObject ab = object_tensor(a, b);
    ExplicitObject ba = object_tensor(b, a);
    for (int m = 0; m < x.x2.order; ++m)
        internal_check(r * ab.p[static_cast<size_t>(m)] == ba.p[static_cast<size_t>(m)] * r,
                       "NotIntertwiner", "braiding does not intertwine the projectors");
    for (int g = 0; g < x.x1.order; ++g)
        internal_check(r * ab.q[static_cast<size_t>(g)] == ba.q[static_cast<size_t>(g)] * r,
                       "NotIntertwiner", "braiding does not intertwine the representations");
    return r;
}

bool braid_relation_holds(const ExplicitObject& a, const ExplicitObject& b,
                          const ExplicitObject& c) {
    require_same_xmod(a, b);
    require_same_xmod(a, c);
    int da = static_cast<int>(a.dim), db = static_cast<int>(b.dim), dc = static_cast<int>(c.dim);
    SparseMat r_ab = braiding(a, b), r_ac = braiding(a, c), r_bc = braiding(b, c);
    SparseMat ida = SparseMat::identity(da), idb = SparseMat::identity(db),
              idc = SparseMat::identity(dc);
    // (id_C x R_AB)(R_AC x id_B)(id_A x R_BC) = (R_BC x id_A)(id_B x R_AC)(R_AB x id_C)
    SparseMat lhs = idc.kron(r_ab) * r_ac.kron(idb) * ida.kron(r_bc);
    SparseMat rhs = r_bc.kron(ida) * idb.kron(r_ac) * r_ab.kron(idc);
    return lhs == rhs;
}

}  // namespace xmodcat
