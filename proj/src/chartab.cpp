#include "xmodcat/chartab.hpp"

#include "xmodcat/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace xmodcat {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

constexpr i64 kPrimeSearchCap = 10'000'000;

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct Fp {
    i64 p;
    i64 add(i64 a, i64 b) const { return (a + b) % p; }
    i64 sub(i64 a, i64 b) const { return (a - b % p + p) % p; }
    i64 mul(i64 a, i64 b) const { return static_cast<i64>(static_cast<u64>(a) * static_cast<u64>(b) % static_cast<u64>(p)); }
    i64 pow(i64 a, i64 e) const {
        a %= p;
        if (a < 0) a += p;
        i64 r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    i64 inv(i64 a) const { return pow(a, p - 2); }
    // Tonelli-Shanks; pre: a is a quadratic residue.
    i64 sqrt(i64 a) const {
        a %= p;
        if (a < 0) a += p;
        if (a == 0) return 0;
        if (p % 4 == 3) return pow(a, (p + 1) / 4);
        i64 q = p - 1, s = 0;
        while (q % 2 == 0) { q /= 2; ++s; }
        i64 z = 2;
        while (pow(z, (p - 1) / 2) == 1) ++z;
        i64 m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
        while (t != 1) {
            i64 i = 0, tt = t;
            while (tt != 1) { tt = mul(tt, tt); ++i; }
            i64 b = c;
            for (i64 j = 0; j < m - i - 1; ++j) b = mul(b, b);
            m = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
        return r;
    }
};

i64 smallest_primitive_root(i64 p) {
    i64 phi = p - 1;
    std::vector<i64> prime_divs;
    i64 t = phi;
    for (i64 d = 2; d * d <= t; ++d)
        if (t % d == 0) {
            prime_divs.push_back(d);
            while (t % d == 0) t /= d;
        }
    if (t > 1) prime_divs.push_back(t);
    Fp f{p};
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (i64 q : prime_divs)
            if (f.pow(g, phi / q) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw InternalError("EigensplitFailure", "no primitive root found");
}

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(Mat& m, const Fp& f) {
    std::vector<int> pivots;
    size_t rows = m.size();
    if (rows == 0) return pivots;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        i64 d = f.inv(m[r][c]);
        for (size_t j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], d);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            i64 x = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(x, m[r][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Kernel basis of a square matrix, as rows, deterministic order.
Mat kernel_basis(Mat m, const Fp& f) {
    size_t n = m.size();
    std::vector<int> pivots = rref(m, f);
    std::vector<char> is_pivot(n, 0);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;
    Mat basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = f.sub(0, m[r][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

using Poly = std::vector<i64>;  // little-endian

void poly_trim(Poly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

// a mod b in place-ish; b nonzero.
Poly poly_mod(Poly r, const Poly& b, const Fp& f) {
    while (r.size() >= b.size() && !(r.size() == 1 && r[0] == 0)) {
        i64 lead = r.back();
        if (lead == 0) { r.pop_back(); continue; }
        size_t shift = r.size() - b.size();
        i64 factor = f.mul(lead, f.inv(b.back()));
        for (size_t i = 0; i < b.size(); ++i)
            r[shift + i] = f.sub(r[shift + i], f.mul(factor, b[i]));
        poly_trim(r);
    }
    poly_trim(r);
    return r;
}

// Exact quotient a / b (remainder must be zero).
Poly poly_div_exact(Poly r, const Poly& b, const Fp& f) {
    Poly q(r.size() >= b.size() ? r.size() - b.size() + 1 : 1, 0);
    while (r.size() >= b.size() && !(r.size() == 1 && r[0] == 0)) {
        i64 lead = r.back();
        if (lead == 0) { r.pop_back(); continue; }
        size_t shift = r.size() - b.size();
        i64 factor = f.mul(lead, f.inv(b.back()));
        q[shift] = factor;
        for (size_t i = 0; i < b.size(); ++i)
            r[shift + i] = f.sub(r[shift + i], f.mul(factor, b[i]));
        poly_trim(r);
    }
    internal_check(r.size() == 1 && r[0] == 0, "EigensplitFailure", "inexact polynomial division");
    poly_trim(q);
    return q;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, const Fp& f) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return poly_mod(std::move(r), mod, f);
}

Poly poly_powmod(Poly base, i64 e, const Poly& mod, const Fp& f) {
    Poly r{1};
    base = poly_mod(std::move(base), mod, f);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, mod, f);
        base = poly_mulmod(base, base, mod, f);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, const Fp& f) {
    poly_trim(a);
    poly_trim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        Poly r = poly_mod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    i64 d = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, d);
    return a;
}

Poly poly_derivative(const Poly& a, const Fp& f) {
    if (a.size() <= 1) return {0};
    Poly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i)
        d[i - 1] = f.mul(a[i], static_cast<i64>(i) % f.p);
    poly_trim(d);
    return d;
}

i64 poly_eval(const Poly& a, i64 x, const Fp& f) {
    i64 r = 0;
    for (size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
    return r;
}

// All distinct roots of a polynomial splitting completely over F_P, sorted.
std::vector<i64> poly_roots(Poly g, const Fp& f) {
    poly_trim(g);
    Poly d = poly_derivative(g, f);
    if (!(d.size() == 1 && d[0] == 0)) {
        Poly common = poly_gcd(g, d, f);
        if (common.size() > 1) g = poly_div_exact(std::move(g), common, f);
    }
    std::vector<i64> roots;
    std::vector<Poly> stack{std::move(g)};
    while (!stack.empty()) {
        Poly cur = std::move(stack.back());
        stack.pop_back();
        poly_trim(cur);
        if (cur.size() <= 1) continue;
        if (cur.size() == 2) {
            roots.push_back(f.mul(f.sub(0, cur[0]), f.inv(cur[1])));
            continue;
        }
        bool split = false;
        for (i64 a = 0; a < f.p && !split; ++a) {
            i64 linear_root = f.sub(0, a);
            if (poly_eval(cur, linear_root, f) == 0) {
                roots.push_back(linear_root);
                stack.push_back(poly_div_exact(std::move(cur), Poly{a, 1}, f));
                split = true;
                break;
            }
            Poly h = poly_powmod(Poly{a, 1}, (f.p - 1) / 2, cur, f);
            h[0] = f.sub(h[0], 1);
            poly_trim(h);
            if (h.size() == 1 && h[0] == 0) continue;
            Poly d1 = poly_gcd(cur, h, f);
            if (d1.size() > 1 && d1.size() < cur.size()) {
                Poly q = poly_div_exact(cur, d1, f);
                stack.push_back(std::move(d1));
                stack.push_back(std::move(q));
                split = true;
            }
        }
        internal_check(split, "EigensplitFailure", "failed to split eigenvalue polynomial");
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Characteristic polynomial via Hessenberg reduction, O(d^3).
Poly char_poly(Mat a, const Fp& f) {
    size_t d = a.size();
    for (size_t j = 0; j + 2 < d; ++j) {
        size_t piv = j + 1;
        while (piv < d && a[piv][j] == 0) ++piv;
        if (piv == d) continue;
        if (piv != j + 1) {
            std::swap(a[piv], a[j + 1]);
            for (size_t r = 0; r < d; ++r) std::swap(a[r][piv], a[r][j + 1]);
        }
        i64 pinv = f.inv(a[j + 1][j]);
        for (size_t i = j + 2; i < d; ++i) {
            if (a[i][j] == 0) continue;
            i64 factor = f.mul(a[i][j], pinv);
            for (size_t c = 0; c < d; ++c) a[i][c] = f.sub(a[i][c], f.mul(factor, a[j + 1][c]));
            for (size_t r = 0; r < d; ++r) a[r][j + 1] = f.add(a[r][j + 1], f.mul(factor, a[r][i]));
        }
    }
    std::vector<Poly> p(d + 1);
    p[0] = {1};
    for (size_t m = 1; m <= d; ++m) {
        Poly t(p[m - 1].size() + 1, 0);
        for (size_t i = 0; i < p[m - 1].size(); ++i) {
            t[i + 1] = f.add(t[i + 1], p[m - 1][i]);
            t[i] = f.sub(t[i], f.mul(a[m - 1][m - 1], p[m - 1][i]));
        }
        i64 prod = 1;
        for (size_t i = m - 1; i-- > 0;) {
            prod = f.mul(prod, a[i + 1][i]);
            if (a[i][m - 1] != 0 && prod != 0) {
                i64 coeff = f.mul(a[i][m - 1], prod);
                for (size_t k = 0; k < p[i].size(); ++k) t[k] = f.sub(t[k], f.mul(coeff, p[i][k]));
            }
        }
        poly_trim(t);
        p[m] = std::move(t);
    }
    return p[d];
}

struct Basis {
    Mat vectors;              // rows, RREF over F_P
    std::vector<int> pivots;  // leading column of each row
};

}  // namespace

CharacterTable character_table(const Group& g) {
    if (g.order > kGroupOrderCap) throw InputError("OrderCapExceeded", "group order exceeds cap");
    const int k = g.num_classes();
    const int n = g.order;

    // Smallest prime P = 1 (mod exponent) with P > 2*sqrt(|G|).
    i64 p = 0;
    for (i64 cand = g.exponent + 1;; cand += g.exponent) {
        if (cand > kPrimeSearchCap) throw InputError("NoSuitablePrime", "prime search cap exceeded");
        if (4LL * n < cand * cand && is_prime(cand)) { p = cand; break; }
    }
    Fp f{p};

    const int id_class = g.class_of[g.identity];
    std::vector<i64> class_size(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c) class_size[c] = static_cast<i64>(g.classes[c].size());
    std::vector<int> inv_class(static_cast<size_t>(k));
    for (int c = 0; c < k; ++c) inv_class[c] = g.class_of[g.inv[g.class_rep[c]]];

    // Iterative eigenspace splitting of the class matrices.
    std::vector<Basis> spaces;
    {
        Basis whole;
        whole.vectors.assign(static_cast<size_t>(k), Vec(static_cast<size_t>(k), 0));
        for (int i = 0; i < k; ++i) {
            whole.vectors[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
            whole.pivots.push_back(i);
        }
        spaces.push_back(std::move(whole));
    }
    auto all_split = [&] {
        for (const Basis& b : spaces)
            if (b.vectors.size() > 1) return false;
        return true;
    };
    for (int ci = 0; ci < k && !all_split(); ++ci) {
        if (ci == id_class) continue;
        // Class matrix M[j][t] = #{(x,y) in C_ci x C_j : x*y = rep_t}.
        Mat m(static_cast<size_t>(k), Vec(static_cast<size_t>(k), 0));
        for (int x : g.classes[static_cast<size_t>(ci)]) {
            for (int t = 0; t < k; ++t) {
                int y = g.mul[g.inv[x]][g.class_rep[static_cast<size_t>(t)]];
                m[static_cast<size_t>(g.class_of[y])][static_cast<size_t>(t)] += 1;
            }
        }
        for (auto& row : m)
            for (auto& v : row) v %= p;

        std::vector<Basis> refined;
        for (Basis& b : spaces) {
            size_t dim = b.vectors.size();
            if (dim <= 1) {
                refined.push_back(std::move(b));
                continue;
            }
            // Restriction A of M to the subspace, read off at pivot columns
            // of the RREF basis: M v_j = sum_a A[a][j] v_a.
            Mat images(dim, Vec(static_cast<size_t>(k), 0));
            for (size_t j = 0; j < dim; ++j)
                for (int r = 0; r < k; ++r) {
                    if (b.vectors[j][static_cast<size_t>(r)] == 0) continue;
                    for (int c = 0; c < k; ++c)
                        if (m[static_cast<size_t>(c)][static_cast<size_t>(r)] != 0)
                            images[j][static_cast<size_t>(c)] =
                                f.add(images[j][static_cast<size_t>(c)],
                                      f.mul(m[static_cast<size_t>(c)][static_cast<size_t>(r)],
                                            b.vectors[j][static_cast<size_t>(r)]));
                }
            Mat a(dim, Vec(dim, 0));
            for (size_t aa = 0; aa < dim; ++aa)
                for (size_t j = 0; j < dim; ++j)
                    a[aa][j] = images[j][static_cast<size_t>(b.pivots[aa])];

            std::vector<i64> eigs = poly_roots(char_poly(a, f), f);
            if (eigs.size() <= 1) {
                refined.push_back(std::move(b));
                continue;
            }
            for (i64 lambda : eigs) {
                Mat shifted = a;
                for (size_t i = 0; i < dim; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
                Mat ker = kernel_basis(std::move(shifted), f);
                internal_check(!ker.empty(), "EigensplitFailure", "empty eigenspace");
                Basis sub;
                for (const Vec& coeff : ker) {
                    Vec v(static_cast<size_t>(k), 0);
                    for (size_t j = 0; j < dim; ++j) {
                        if (coeff[j] == 0) continue;
                        for (int c = 0; c < k; ++c)
                            v[static_cast<size_t>(c)] =
                                f.add(v[static_cast<size_t>(c)],
                                      f.mul(coeff[j], b.vectors[j][static_cast<size_t>(c)]));
                    }
                    sub.vectors.push_back(std::move(v));
                }
                sub.pivots = rref(sub.vectors, f);
                refined.push_back(std::move(sub));
            }
        }
        spaces = std::move(refined);
    }
    internal_check(static_cast<int>(spaces.size()) == k && all_split(), "EigensplitFailure",
                   "class matrices did not split into 1-dimensional common eigenspaces");

    // Central characters, degrees, and character values mod P; exact lift.
    const i64 w = smallest_primitive_root(p);
    CharacterTable table;
    std::vector<std::pair<std::vector<Cyclotomic>, int>> rows;
    for (const Basis& b : spaces) {
        Vec theta = b.vectors[0];
        i64 at_id = theta[static_cast<size_t>(id_class)];
        internal_check(at_id != 0, "EigensplitFailure", "central character vanishes at identity");
        i64 norm = f.inv(at_id);
        for (auto& v : theta) v = f.mul(v, norm);
        i64 s = 0;
        for (int c = 0; c < k; ++c)
            s = f.add(s, f.mul(f.mul(theta[static_cast<size_t>(c)],
                                     theta[static_cast<size_t>(inv_class[static_cast<size_t>(c)])]),
                               f.inv(class_size[static_cast<size_t>(c)] % p)));
        internal_check(s != 0, "EigensplitFailure", "degenerate norm sum");
        i64 d_sq = f.mul(static_cast<i64>(n) % p, f.inv(s));
        i64 d = f.sqrt(d_sq);
        if (d > p - d) d = p - d;
        internal_check(d >= 1 && f.mul(d, d) == d_sq, "VerificationFailure",
                       "degree recovery failed");

        std::vector<i64> chi_mod(static_cast<size_t>(k));
        for (int c = 0; c < k; ++c)
            chi_mod[static_cast<size_t>(c)] =
                f.mul(f.mul(d, theta[static_cast<size_t>(c)]),
                      f.inv(class_size[static_cast<size_t>(c)] % p));

        // chi(rep) = sum_s m_s zeta_ord^s; multiplicities recovered by the
        // mod-P discrete Fourier transform over the power map.
        std::vector<Cyclotomic> values(static_cast<size_t>(k));
        for (int c = 0; c < k; ++c) {
            int rep = g.class_rep[static_cast<size_t>(c)];
            i64 ord = g.element_order[static_cast<size_t>(rep)];
            i64 z = f.pow(w, (p - 1) / ord);
            i64 zinv = f.inv(z);
            std::vector<Rational> mult(static_cast<size_t>(ord));
            i64 ord_inv = f.inv(ord % p);
            i64 total = 0;
            for (i64 sdx = 0; sdx < ord; ++sdx) {
                i64 acc = 0;
                int pw = g.identity;
                for (i64 j = 0; j < ord; ++j) {
                    acc = f.add(acc, f.mul(chi_mod[static_cast<size_t>(g.class_of[pw])],
                                           f.pow(zinv, j * sdx)));
                    pw = g.mul[pw][rep];
                }
                i64 ms = f.mul(acc, ord_inv);
                internal_check(ms <= d, "VerificationFailure",
                               "root-of-unity multiplicity exceeds degree");
                total += ms;
                mult[static_cast<size_t>(sdx)] = Rational(static_cast<long>(ms));
            }
            internal_check(total == d, "VerificationFailure",
                           "multiplicities do not sum to the degree");
            values[static_cast<size_t>(c)] = Cyclotomic::from_coeffs(ord, std::move(mult));
        }
        rows.emplace_back(std::move(values), static_cast<int>(d));
    }

    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        for (int c = 0; c < k; ++c) {
            if (a.first[static_cast<size_t>(c)] == b.first[static_cast<size_t>(c)]) continue;
            return Cyclotomic::value_less(a.first[static_cast<size_t>(c)],
                                          b.first[static_cast<size_t>(c)]);
        }
        return false;
    });

    table.irr_count = k;
    table.trivial_row = -1;
    for (int i = 0; i < k; ++i) {
        table.degrees.push_back(rows[static_cast<size_t>(i)].second);
        table.values.push_back(std::move(rows[static_cast<size_t>(i)].first));
        bool all_one = true;
        for (const auto& v : table.values.back())
            if (!v.is_one()) { all_one = false; break; }
        if (all_one) table.trivial_row = i;
    }
    internal_check(table.trivial_row >= 0, "VerificationFailure", "trivial character missing");

    table.power_map.assign(static_cast<size_t>(k),
                           std::vector<int>(static_cast<size_t>(g.exponent)));
    for (int c = 0; c < k; ++c) {
        int pw = g.identity;
        for (int j = 0; j < g.exponent; ++j) {
            table.power_map[static_cast<size_t>(c)][static_cast<size_t>(j)] = g.class_of[pw];
            pw = g.mul[pw][g.class_rep[static_cast<size_t>(c)]];
        }
    }

    // Exact verification of both orthogonality relations.
    {
        long sum_sq = 0;
        for (int d : table.degrees) sum_sq += static_cast<long>(d) * d;
        internal_check(sum_sq == n, "VerificationFailure", "sum of squared degrees != |G|");
        for (int i = 0; i < k; ++i) {
            internal_check(table.values[static_cast<size_t>(i)][static_cast<size_t>(id_class)] ==
                               Cyclotomic(table.degrees[static_cast<size_t>(i)]),
                           "VerificationFailure", "degree does not match identity value");
            for (int j = 0; j < k; ++j) {
                Cyclotomic::Accumulator acc(g.exponent);
                for (int c = 0; c < k; ++c)
                    acc.add_scaled(Rational(class_size[static_cast<size_t>(c)]),
                                   table.values[static_cast<size_t>(i)][static_cast<size_t>(c)] *
                                       table.values[static_cast<size_t>(j)][static_cast<size_t>(c)]
                                           .conj());
                Cyclotomic lhs = Cyclotomic(Rational(1, n)) * acc.value();
                internal_check(lhs == Cyclotomic(i == j ? 1 : 0), "VerificationFailure",
                               "row orthogonality failed");
            }
        }
        for (int c = 0; c < k; ++c) {
            for (int c2 = 0; c2 < k; ++c2) {
                Cyclotomic::Accumulator acc(g.exponent);
                for (int i = 0; i < k; ++i)
                    acc.add_mul(table.values[static_cast<size_t>(i)][static_cast<size_t>(c)],
                                table.values[static_cast<size_t>(i)][static_cast<size_t>(c2)].conj());
                Cyclotomic expect =
                    c == c2 ? Cyclotomic(Rational(n, class_size[static_cast<size_t>(c)]))
                            : Cyclotomic(0);
                internal_check(acc.value() == expect, "VerificationFailure",
                               "column orthogonality failed");
            }
        }
    }
    return table;
}

std::vector<int> restrict_and_index(const CharacterTable& parent_table, const Group& parent,
                                    const Subgroup& h) {
    if (static_cast<int>(h.from_parent.size()) != parent.order)
        throw InputError("NotASubgroup", "embedding dimension mismatch");
    if (parent_table.irr_count != parent.num_classes())
        throw InputError("NotASubgroup", "character table does not match parent group");
    for (int i = 0; i < h.group.order; ++i) {
        int x = h.to_parent[static_cast<size_t>(i)];
        if (x < 0 || x >= parent.order || h.from_parent[static_cast<size_t>(x)] != i)
            throw InputError("NotASubgroup", "inconsistent embedding");
        for (int j = 0; j < h.group.order; ++j) {
            int prod = parent.mul[x][h.to_parent[static_cast<size_t>(j)]];
            if (h.from_parent[static_cast<size_t>(prod)] != h.group.mul[i][j])
                throw InputError("NotASubgroup", "embedding does not respect multiplication");
        }
    }
    std::vector<int> h_class(static_cast<size_t>(h.group.order));
    for (int i = 0; i < h.group.order; ++i)
        h_class[static_cast<size_t>(i)] = h.group.class_of[i];
    return h_class;
}

}  // namespace xmodcat
