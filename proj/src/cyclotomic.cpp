#include "xmodcat/cyclotomic.hpp"

#include "xmodcat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace xmodcat {

namespace {

std::vector<std::int64_t> prime_factors_of(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Coefficients of the n-th cyclotomic polynomial, little-endian, monic.
// Computed by exact division of x^n - 1 by the product of Phi_d, d | n, d < n.
using IntPoly = std::vector<BigInt>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Exact division of a by monic b.
IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
    internal_check(b.back() == 1, "CycloPoly", "divisor must be monic");
    if (a.size() < b.size()) {
        for (const auto& c : a) internal_check(c == 0, "CycloPoly", "inexact division");
        return {BigInt(0)};
    }
    IntPoly q(a.size() - b.size() + 1, BigInt(0));
    for (size_t d = a.size(); d-- >= b.size();) {
        BigInt c = a[d];
        if (c == 0) continue;
        size_t shift = d - (b.size() - 1);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        if (d == 0) break;
    }
    for (const auto& c : a) internal_check(c == 0, "CycloPoly", "inexact division");
    return q;
}

class CycloPolyCache {
public:
    IntPoly get(std::int64_t n) {
        std::lock_guard lock(mu_);
        return compute_locked(n);
    }

private:
    IntPoly compute_locked(std::int64_t n) {
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        // Fill divisors bottom-up so recursion depth stays 1.
        for (std::int64_t d = 1; d <= n; ++d) {
            if (n % d != 0 || cache_.count(d)) continue;
            IntPoly xn_minus_1(static_cast<size_t>(d) + 1, BigInt(0));
            xn_minus_1[0] = -1;
            xn_minus_1.back() = 1;
            IntPoly lower{BigInt(1)};
            for (std::int64_t e = 1; e < d; ++e)
                if (d % e == 0) lower = poly_mul(lower, cache_.at(e));
            cache_[d] = poly_div_exact(std::move(xn_minus_1), lower);
        }
        return cache_.at(n);
    }

    std::mutex mu_;
    std::map<std::int64_t, IntPoly> cache_;
};

CycloPolyCache& cyclo_polys() {
    static CycloPolyCache c;
    return c;
}

// Reduce a raw length-n coefficient vector modulo Phi_n in place; afterwards
// entries at index >= phi(n) are zero.
void reduce_mod_phi(std::vector<Rational>& c, const IntPoly& phi_poly) {
    size_t deg_phi = phi_poly.size() - 1;
    for (size_t d = c.size(); d-- > deg_phi;) {
        if (c[d] == 0) continue;
        Rational t = c[d];
        size_t shift = d - deg_phi;
        for (size_t i = 0; i < deg_phi; ++i)
            if (phi_poly[i] != 0) c[shift + i] -= t * Rational(phi_poly[i]);
        c[d] = 0;
    }
}

struct Descent {
    std::int64_t m = 1;                           // target conductor n/p
    std::int64_t phi_m = 1;
    std::vector<std::vector<Rational>> basis;     // phi(n) x phi(m): zeta_m^j in the zeta_n basis
    std::vector<int> pivot_rows;                  // phi(m) rows selecting an invertible square
    std::vector<std::vector<Rational>> solve;     // inverse of that square
};

struct ConductorTables {
    std::int64_t n = 1;
    std::int64_t phi = 1;
    IntPoly phi_poly;          // Phi_n
    std::vector<Descent> descents;
};

std::vector<std::vector<Rational>> invert_square(std::vector<std::vector<Rational>> a) {
    size_t k = a.size();
    std::vector<std::vector<Rational>> inv(k, std::vector<Rational>(k, Rational(0)));
    for (size_t i = 0; i < k; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && a[piv][col] == 0) ++piv;
        internal_check(piv < k, "CycloDescent", "singular basis square");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (size_t j = 0; j < k; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < k; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t j = 0; j < k; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

ConductorTables build_tables(std::int64_t n) {
    ConductorTables t;
    t.n = n;
    t.phi = euler_phi(n);
    t.phi_poly = cyclo_polys().get(n);
    for (std::int64_t p : prime_factors_of(n)) {
        Descent d;
        d.m = n / p;
        d.phi_m = euler_phi(d.m);
        std::int64_t step = n / d.m;
        d.basis.assign(static_cast<size_t>(t.phi),
                       std::vector<Rational>(static_cast<size_t>(d.phi_m), Rational(0)));
        for (std::int64_t j = 0; j < d.phi_m; ++j) {
            std::vector<Rational> col(static_cast<size_t>(n), Rational(0));
            col[static_cast<size_t>((j * step) % n)] = 1;
            reduce_mod_phi(col, t.phi_poly);
            for (std::int64_t r = 0; r < t.phi; ++r) d.basis[r][j] = col[r];
        }
        // Select pivot rows making the restriction invertible.
        auto work = d.basis;
        std::vector<bool> used(static_cast<size_t>(t.phi), false);
        for (std::int64_t col = 0; col < d.phi_m; ++col) {
            std::int64_t piv = -1;
            for (std::int64_t r = 0; r < t.phi; ++r)
                if (!used[r] && work[r][col] != 0) { piv = r; break; }
            internal_check(piv >= 0, "CycloDescent", "rank-deficient subfield basis");
            used[piv] = true;
            d.pivot_rows.push_back(static_cast<int>(piv));
            Rational pv = work[piv][col];
            for (std::int64_t r = 0; r < t.phi; ++r) {
                if (r == piv || work[r][col] == 0) continue;
                Rational f = work[r][col] / pv;
                for (std::int64_t j = col; j < d.phi_m; ++j) work[r][j] -= f * work[piv][j];
            }
        }
        std::vector<std::vector<Rational>> square(static_cast<size_t>(d.phi_m),
                                                  std::vector<Rational>(static_cast<size_t>(d.phi_m)));
        for (std::int64_t i = 0; i < d.phi_m; ++i)
            for (std::int64_t j = 0; j < d.phi_m; ++j) square[i][j] = d.basis[d.pivot_rows[i]][j];
        d.solve = invert_square(std::move(square));
        t.descents.push_back(std::move(d));
    }
    return t;
}

const ConductorTables& tables_for(std::int64_t n) {
    static std::mutex mu;
    static std::map<std::int64_t, ConductorTables> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_tables(n)).first;
    return it->second;
}

// If the degree-<phi(n) vector c lies in Q(zeta_{n/p}), rewrite it in that
// power basis (length m, degree < phi(m)) and return true.
bool try_descend(const ConductorTables& t, const Descent& d, const std::vector<Rational>& c,
                 std::vector<Rational>& out) {
    std::vector<Rational> sol(static_cast<size_t>(d.phi_m), Rational(0));
    for (std::int64_t i = 0; i < d.phi_m; ++i) {
        Rational acc(0);
        for (std::int64_t j = 0; j < d.phi_m; ++j) {
            const Rational& v = c[static_cast<size_t>(d.pivot_rows[j])];
            if (v != 0 && d.solve[i][j] != 0) acc += d.solve[i][j] * v;
        }
        sol[i] = std::move(acc);
    }
    for (std::int64_t r = 0; r < t.phi; ++r) {
        Rational acc(0);
        for (std::int64_t j = 0; j < d.phi_m; ++j)
            if (sol[j] != 0 && d.basis[r][j] != 0) acc += d.basis[r][j] * sol[j];
        if (acc != c[static_cast<size_t>(r)]) return false;
    }
    out.assign(static_cast<size_t>(d.m), Rational(0));
    for (std::int64_t j = 0; j < d.phi_m; ++j) out[j] = std::move(sol[j]);
    return true;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p : prime_factors_of(n)) result -= result / p;
    return result;
}

Cyclotomic Cyclotomic::canonicalize(std::int64_t n, std::vector<Rational> raw) {
    internal_check(n >= 1 && raw.size() == static_cast<size_t>(n), "Cyclotomic",
                   "raw vector length mismatch");
    while (n > 1) {
        const ConductorTables& t = tables_for(n);
        reduce_mod_phi(raw, t.phi_poly);
        bool rational_only = true;
        for (std::int64_t k = 1; k < t.phi; ++k)
            if (raw[k] != 0) { rational_only = false; break; }
        if (rational_only) {
            Rational v = raw[0];
            return Cyclotomic(1, {std::move(v)});
        }
        bool descended = false;
        for (const Descent& d : t.descents) {
            std::vector<Rational> out;
            if (try_descend(t, d, raw, out)) {
                n = d.m;
                raw = std::move(out);
                descended = true;
                break;
            }
        }
        if (!descended) {
            raw.resize(static_cast<size_t>(n), Rational(0));
            return Cyclotomic(n, std::move(raw));
        }
    }
    return Cyclotomic(1, {raw[0]});
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t k) {
    internal_check(n >= 1, "Cyclotomic", "conductor must be positive");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> raw(static_cast<size_t>(n), Rational(0));
    raw[static_cast<size_t>(k)] = 1;
    return canonicalize(n, std::move(raw));
}

Cyclotomic Cyclotomic::from_coeffs(std::int64_t n, std::vector<Rational> coeffs) {
    internal_check(n >= 1 && coeffs.size() <= static_cast<size_t>(n), "Cyclotomic",
                   "coefficient vector longer than conductor");
    coeffs.resize(static_cast<size_t>(n), Rational(0));
    return canonicalize(n, std::move(coeffs));
}

const Rational& Cyclotomic::rational_value() const {
    internal_check(conductor_ == 1, "Cyclotomic", "rational_value on irrational element");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (conductor_ == 1 && o.conductor_ == 1) return Cyclotomic(coeffs_[0] + o.coeffs_[0]);
    std::int64_t n = std::lcm(conductor_, o.conductor_);
    std::vector<Rational> raw(static_cast<size_t>(n), Rational(0));
    std::int64_t sa = n / conductor_, sb = n / o.conductor_;
    for (std::int64_t k = 0; k < conductor_; ++k)
        if (coeffs_[k] != 0) raw[static_cast<size_t>(k * sa)] += coeffs_[k];
    for (std::int64_t k = 0; k < o.conductor_; ++k)
        if (o.coeffs_[k] != 0) raw[static_cast<size_t>(k * sb)] += o.coeffs_[k];
    return canonicalize(n, std::move(raw));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (conductor_ == 1) {
        if (coeffs_[0] == 0) return Cyclotomic();
        // Nonzero rational scaling preserves canonical form.
        Cyclotomic r = o;
        for (auto& c : r.coeffs_) c *= coeffs_[0];
        return r;
    }
    if (o.conductor_ == 1) return o * *this;
    std::int64_t n = std::lcm(conductor_, o.conductor_);
    std::vector<Rational> raw(static_cast<size_t>(n), Rational(0));
    std::int64_t sa = n / conductor_, sb = n / o.conductor_;
    for (std::int64_t i = 0; i < conductor_; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::int64_t j = 0; j < o.conductor_; ++j) {
            if (o.coeffs_[j] == 0) continue;
            raw[static_cast<size_t>((i * sa + j * sb) % n)] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return canonicalize(n, std::move(raw));
}

Cyclotomic Cyclotomic::conj() const { return galois(conductor_ - 1 >= 1 ? conductor_ - 1 : 1); }

Cyclotomic Cyclotomic::galois(std::int64_t j) const {
    if (conductor_ == 1) return *this;
    j %= conductor_;
    if (j < 0) j += conductor_;
    internal_check(std::gcd(j, conductor_) == 1, "Cyclotomic", "galois exponent not coprime");
    std::vector<Rational> raw(static_cast<size_t>(conductor_), Rational(0));
    for (std::int64_t k = 0; k < conductor_; ++k)
        if (coeffs_[k] != 0) raw[static_cast<size_t>((k * j) % conductor_)] += coeffs_[k];
    return canonicalize(conductor_, std::move(raw));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw InputError("DivisionByZero", "inverse of zero cyclotomic");
    if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
    Cyclotomic prod(1);
    for (std::int64_t j = 2; j < conductor_; ++j)
        if (std::gcd(j, conductor_) == 1) prod *= galois(j);
    Cyclotomic norm = prod * *this;
    internal_check(norm.is_rational() && !norm.is_zero(), "Cyclotomic",
                   "conjugate-norm of nonzero element must be a nonzero rational");
    return Cyclotomic(Rational(1) / norm.rational_value()) * prod;
}

std::vector<Rational> Cyclotomic::embedded_coeffs(std::int64_t m) const {
    internal_check(m >= 1 && m % conductor_ == 0, "Cyclotomic", "embedding needs conductor | m");
    std::vector<Rational> raw(static_cast<size_t>(m), Rational(0));
    std::int64_t s = m / conductor_;
    for (std::int64_t k = 0; k < conductor_; ++k)
        if (coeffs_[k] != 0) raw[static_cast<size_t>(k * s)] = coeffs_[k];
    return raw;
}

std::optional<std::pair<std::int64_t, std::int64_t>> Cyclotomic::as_root_of_unity() const {
    if (is_zero()) return std::nullopt;
    for (const Rational& c : coeffs_)
        if (!is_integer(c)) return std::nullopt;  // roots of unity are algebraic integers
    if ((*this * conj()) != Cyclotomic(1)) return std::nullopt;
    std::int64_t order = std::lcm<std::int64_t>(2, conductor_);
    std::complex<double> z = approx();
    double angle = std::arg(z);
    if (angle < 0) angle += 2 * 3.14159265358979323846;
    auto candidate = static_cast<std::int64_t>(std::llround(angle * order / (2 * 3.14159265358979323846)));
    for (std::int64_t delta : {0LL, 1LL, -1LL}) {
        std::int64_t e = ((candidate + delta) % order + order) % order;
        if (*this == root_of_unity(order, e)) {
            std::int64_t g = std::gcd(e, order);
            if (e == 0) return std::make_pair<std::int64_t, std::int64_t>(1, 0);
            return std::make_pair(order / g, e / g);
        }
    }
    return std::nullopt;
}

std::complex<double> Cyclotomic::approx() const {
    long double re = 0, im = 0;
    constexpr long double two_pi = 6.283185307179586476925286766559L;
    for (std::int64_t k = 0; k < conductor_; ++k) {
        if (coeffs_[k] == 0) continue;
        auto c = static_cast<long double>(to_double(coeffs_[k]));
        long double a = two_pi * static_cast<long double>(k) / static_cast<long double>(conductor_);
        re += c * std::cos(a);
        im += c * std::sin(a);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

bool Cyclotomic::value_less(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_;
    for (size_t k = 0; k < a.coeffs_.size(); ++k) {
        if (a.coeffs_[k] == b.coeffs_[k]) continue;
        return value_order_less(a.coeffs_[k], b.coeffs_[k]);
    }
    return false;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return to_string(coeffs_[0]);
    std::ostringstream out;
    bool first = true;
    for (std::int64_t k = 0; k < conductor_; ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << to_string(a);
        } else {
            if (a != 1) out << to_string(a) << "*";
            out << "z" << conductor_;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

void Cyclotomic::Accumulator::add(const Cyclotomic& x) {
    internal_check(n_ % x.conductor() == 0, "Accumulator", "conductor does not divide target");
    std::int64_t s = n_ / x.conductor();
    const auto& c = x.coeffs();
    for (std::int64_t k = 0; k < x.conductor(); ++k)
        if (c[k] != 0) raw_[static_cast<size_t>(k * s)] += c[k];
}

void Cyclotomic::Accumulator::sub(const Cyclotomic& x) {
    internal_check(n_ % x.conductor() == 0, "Accumulator", "conductor does not divide target");
    std::int64_t s = n_ / x.conductor();
    const auto& c = x.coeffs();
    for (std::int64_t k = 0; k < x.conductor(); ++k)
        if (c[k] != 0) raw_[static_cast<size_t>(k * s)] -= c[k];
}

void Cyclotomic::Accumulator::add_scaled(const Rational& s, const Cyclotomic& x) {
    if (s == 0) return;
    internal_check(n_ % x.conductor() == 0, "Accumulator", "conductor does not divide target");
    std::int64_t st = n_ / x.conductor();
    const auto& c = x.coeffs();
    for (std::int64_t k = 0; k < x.conductor(); ++k)
        if (c[k] != 0) raw_[static_cast<size_t>(k * st)] += s * c[k];
}

void Cyclotomic::Accumulator::add_mul(const Cyclotomic& a, const Cyclotomic& b) {
    internal_check(n_ % a.conductor() == 0 && n_ % b.conductor() == 0, "Accumulator",
                   "conductor does not divide target");
    std::int64_t sa = n_ / a.conductor(), sb = n_ / b.conductor();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::int64_t i = 0; i < a.conductor(); ++i) {
        if (ca[i] == 0) continue;
        for (std::int64_t j = 0; j < b.conductor(); ++j) {
            if (cb[j] == 0) continue;
            raw_[static_cast<size_t>((i * sa + j * sb) % n_)] += ca[i] * cb[j];
        }
    }
}

void Cyclotomic::Accumulator::add_conj_mul(const Cyclotomic& a, const Cyclotomic& b) {
    internal_check(n_ % a.conductor() == 0 && n_ % b.conductor() == 0, "Accumulator",
                   "conductor does not divide target");
    std::int64_t sa = n_ / a.conductor(), sb = n_ / b.conductor();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::int64_t i = 0; i < a.conductor(); ++i) {
        if (ca[i] == 0) continue;
        for (std::int64_t j = 0; j < b.conductor(); ++j) {
            if (cb[j] == 0) continue;
            raw_[static_cast<size_t>(((n_ - i * sa) % n_ + j * sb) % n_)] += ca[i] * cb[j];
        }
    }
}

void Cyclotomic::Accumulator::add_mul(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c) {
    internal_check(n_ % a.conductor() == 0 && n_ % b.conductor() == 0 && n_ % c.conductor() == 0,
                   "Accumulator", "conductor does not divide target");
    std::int64_t sa = n_ / a.conductor(), sb = n_ / b.conductor(), sc = n_ / c.conductor();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    const auto& cc = c.coeffs();
    for (std::int64_t i = 0; i < a.conductor(); ++i) {
        if (ca[i] == 0) continue;
        for (std::int64_t j = 0; j < b.conductor(); ++j) {
            if (cb[j] == 0) continue;
            Rational ab = ca[i] * cb[j];
            std::int64_t e = i * sa + j * sb;
            for (std::int64_t k = 0; k < c.conductor(); ++k) {
                if (cc[k] == 0) continue;
                raw_[static_cast<size_t>((e + k * sc) % n_)] += ab * cc[k];
            }
        }
    }
}

Cyclotomic Cyclotomic::Accumulator::value() const { return canonicalize(n_, raw_); }

}  // namespace xmodcat
