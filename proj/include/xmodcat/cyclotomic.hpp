#pragma once

#include "xmodcat/numeric.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xmodcat {

// An exact element of a cyclotomic field Q(zeta_n), kept in canonical form:
// the coefficient vector has length n, entries at index >= phi(n) are zero
// (reduction modulo the n-th cyclotomic polynomial), and n is the smallest
// conductor containing the value. Canonical form is unique, so equality is
// plain coefficient comparison.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1, Rational(0)) {}
    Cyclotomic(const Rational& r) : conductor_(1), coeffs_(1, r) {}  // NOLINT: implicit by design
    Cyclotomic(long num, long den = 1) : conductor_(1), coeffs_(1, Rational(num, den)) {}

    // zeta_n^k, canonicalized (e.g. zeta_4^2 comes back as -1 with conductor 1).
    static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k);

    // Sum of terms coeffs[k] * zeta_n^k; coeffs may have any length <= n.
    static Cyclotomic from_coeffs(std::int64_t n, std::vector<Rational> coeffs);

    std::int64_t conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
    bool is_rational() const { return conductor_ == 1; }
    bool is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }
    // Pre: is_rational().
    const Rational& rational_value() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const {
        return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Complex conjugation: zeta_n^k -> zeta_n^{n-k}.
    Cyclotomic conj() const;

    // Galois automorphism zeta_n -> zeta_n^j; pre: gcd(j, conductor) = 1.
    Cyclotomic galois(std::int64_t j) const;

    // Exact inverse via the conjugate-norm product. Throws on zero.
    Cyclotomic inverse() const;

    // The coefficient vector re-expressed at conductor m (pre: conductor | m).
    // Inverse of canonicalization; round-trips exactly.
    std::vector<Rational> embedded_coeffs(std::int64_t m) const;

    // (order, exponent) in lowest terms if the value equals zeta_order^exponent.
    std::optional<std::pair<std::int64_t, std::int64_t>> as_root_of_unity() const;

    std::complex<double> approx() const;

    // Deterministic total order: conductor first, then coefficientwise
    // value_order_less. Used for stable row ordering in character tables.
    static bool value_less(const Cyclotomic& a, const Cyclotomic& b);

    // Short exact rendering, e.g. "1", "-1/2", "z8^3", "1+z3".
    std::string str() const;

    // Raw-form accumulator at a fixed conductor n: sums products of values
    // whose conductors divide n without canonicalizing per term. Canonicalize
    // once at the end with value().
    class Accumulator {
    public:
        explicit Accumulator(std::int64_t n) : n_(n), raw_(static_cast<size_t>(n), Rational(0)) {}

        void add(const Cyclotomic& x);
        void sub(const Cyclotomic& x);
        void add_mul(const Cyclotomic& a, const Cyclotomic& b);
        void add_mul(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c);
        // += conj(a) * b, with the conjugation applied as an exponent flip in
        // raw form (no intermediate canonicalization).
        void add_conj_mul(const Cyclotomic& a, const Cyclotomic& b);
        void add_scaled(const Rational& s, const Cyclotomic& x);
        Cyclotomic value() const;

    private:
        std::int64_t n_;
        std::vector<Rational> raw_;
    };

private:
    Cyclotomic(std::int64_t n, std::vector<Rational> canonical_coeffs)
        : conductor_(n), coeffs_(std::move(canonical_coeffs)) {}

    // Canonicalizes a raw length-n coefficient vector.
    static Cyclotomic canonicalize(std::int64_t n, std::vector<Rational> raw);

    std::int64_t conductor_;
    std::vector<Rational> coeffs_;
};

inline Cyclotomic operator*(const Rational& s, const Cyclotomic& x) { return Cyclotomic(s) * x; }

std::int64_t euler_phi(std::int64_t n);

}  // namespace xmodcat
