#include "xmodcat/premodular.hpp"

#include "xmodcat/errors.hpp"
#include "xmodcat/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace xmodcat {

namespace {

std::string tuple_str(std::initializer_list<std::int64_t> xs) {
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (auto v : xs) {
        if (!first) out << ",";
        out << v;
        first = false;
    }
    out << ")";
    return out.str();
}

}  // namespace

const char* verdict_name(Verdict v) {
    return v == Verdict::Modular ? "Modular" : "ModularizablePremodular";
}

ModularData modular_data(const CrossedModule& x, const ExactnessData& e, const Irreducibles& irr,
                         int jobs) {
    const int count = irr.count();
    ModularData md;
    md.global_order = e.global_order;
    md.identity_index = irr.identity_index;

    // Twists omega_p = (1/d_p) sum_m psi_p(m, boundary m). Every pair
    // (m, boundary m) is in the support: m^{dm} = m^-1 m m = m by XMod2.
    md.omega.resize(static_cast<size_t>(count));
    md.omega_order.resize(static_cast<size_t>(count));
    for (int p = 0; p < count; ++p) {
        Cyclotomic::Accumulator acc(irr.conductor);
        for (int m = 0; m < x.x2.order; ++m) acc.add(irr.chars[p].values[m][x.boundary[m]]);
        Cyclotomic omega = Cyclotomic(Rational(1, irr.labels[p].dim)) * acc.value();
        auto root = omega.as_root_of_unity();
        internal_check(root.has_value(), "NotRootOfUnity",
                       "twist " + omega.str() + " is not a root of unity");
        internal_check(e.image_exponent % root->first == 0, "NotRootOfUnity",
                       "twist order does not divide the exponent of im(boundary)");
        // Twist eigen-relation psi(m, g dm) = omega psi(m, g) for all m, g.
        for (int m = 0; m < x.x2.order; ++m) {
            int dm = x.boundary[m];
            for (int g = 0; g < x.x1.order; ++g) {
                const Cyclotomic& base = irr.chars[p].values[m][g];
                const Cyclotomic& shifted = irr.chars[p].values[m][x.x1.mul[g][dm]];
                if (base.is_zero()) {
                    internal_check(shifted.is_zero(), "OmeqViolation",
                                   "twist relation fails at " + tuple_str({p, m, g}));
                } else {
                    internal_check(shifted == omega * base, "OmeqViolation",
                                   "twist relation fails at " + tuple_str({p, m, g}));
                }
            }
        }
        md.omega_order[static_cast<size_t>(p)] = *root;
        md.omega[static_cast<size_t>(p)] = std::move(omega);
    }
    md.t_diag = md.omega;

    // S matrix over the support pairs (m, n) with m fixed by boundary(n) and
    // n fixed by boundary(m); all other terms vanish.
    std::vector<std::pair<int, int>> s_support;
    for (int m = 0; m < x.x2.order; ++m)
        for (int n = 0; n < x.x2.order; ++n)
            if (x.act(m, x.boundary[n]) == m && x.act(n, x.boundary[m]) == n)
                s_support.emplace_back(m, n);
    md.s = CycMatrix(count, count);
    Rational inv_order(1, md.global_order);
    parallel_for(static_cast<std::int64_t>(count) * count, jobs, [&](std::int64_t pq) {
        int p = static_cast<int>(pq / count);
        int q = static_cast<int>(pq % count);
        // Conjugation commutes with the sum: accumulate the plain products
        // and conjugate once at the end.
        Cyclotomic::Accumulator acc(irr.conductor);
        for (auto [m, n] : s_support) {
            const Cyclotomic& a = irr.chars[p].values[m][x.boundary[n]];
            if (a.is_zero()) continue;
            const Cyclotomic& b = irr.chars[q].values[n][x.boundary[m]];
            if (b.is_zero()) continue;
            acc.add_mul(a, b);
        }
        md.s.at(p, q) = Cyclotomic(inv_order) * acc.value().conj();
    });
    internal_check(md.s.is_symmetric(), "InternalInconsistency", "S matrix is not symmetric");
    for (int p = 0; p < count; ++p)
        internal_check(md.s.at(md.identity_index, p) ==
                           Cyclotomic(Rational(irr.labels[p].dim, md.global_order)),
                       "InternalInconsistency", "S_{1p} != d_p / |X|");

    // Frobenius-Schur indicators over pairs with m^g = m^-1; the evaluation
    // points (m, g^2) then satisfy m^{g^2} = m automatically.
    md.fs.resize(static_cast<size_t>(count));
    std::vector<std::pair<int, int>> fs_support;
    for (int m = 0; m < x.x2.order; ++m)
        for (int g = 0; g < x.x1.order; ++g)
            if (x.act(m, g) == x.x2.inv[m]) fs_support.emplace_back(m, g);
    for (int p = 0; p < count; ++p) {
        Cyclotomic::Accumulator acc(irr.conductor);
        for (auto [m, g] : fs_support) acc.add(irr.chars[p].values[m][x.x1.mul[g][g]]);
        Cyclotomic nu = Cyclotomic(Rational(1, x.x1.order)) * acc.value();
        internal_check(nu.is_rational() && is_integer(nu.rational_value()),
                       "IndicatorOutOfRange", "indicator " + nu.str() + " is not an integer");
        auto v = nu.rational_value().convert_to<std::int64_t>();
        internal_check(v >= -1 && v <= 1, "IndicatorOutOfRange",
                       "indicator " + nu.str() + " outside {-1,0,1}");
        md.fs[static_cast<size_t>(p)] = static_cast<int>(v);
    }

    md.s_rank = md.s.rank();
    CycMatrix s2 = md.s * md.s;
    md.s4_rank = (s2 * s2).rank();
    return md;
}

VerificationReport verify_suite(const CrossedModule& x, const ExactnessData& e,
                                const Irreducibles& irr, const FusionTensor& fusion,
                                const ModularData& md, int jobs) {
    VerificationReport report;
    const int count = irr.count();
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, false, std::move(detail)});
    };

    // (a) sum d^2 = |X1||X2|
    {
        std::int64_t total = 0;
        for (const auto& label : irr.labels) total += label.dim * label.dim;
        std::int64_t expect = static_cast<std::int64_t>(x.x1.order) * x.x2.order;
        add("squared-dimension-count", total == expect,
            total == expect ? "" : "got " + std::to_string(total));
    }

    // (b) sum d^2 / omega = |X1||K|
    {
        Cyclotomic::Accumulator acc(irr.conductor);
        for (int p = 0; p < count; ++p)
            acc.add_scaled(Rational(irr.labels[p].dim * irr.labels[p].dim),
                           md.omega[static_cast<size_t>(p)].conj());
        Cyclotomic expect(Rational(static_cast<std::int64_t>(x.x1.order) *
                                   static_cast<std::int64_t>(e.kernel.size())));
        Cyclotomic got = acc.value();
        add("twisted-dimension-sum", got == expect, got == expect ? "" : "got " + got.str());
    }

    // (c) Verlinde: sum_r N_pq^r S_rs = S_ps S_qs / S_{1s}
    {
        bool pass = true;
        std::string detail;
        for (int p = 0; p < count && pass; ++p)
            for (int q = 0; q < count && pass; ++q)
                for (int s = 0; s < count; ++s) {
                    Cyclotomic::Accumulator acc(irr.conductor);
                    for (int r = 0; r < count; ++r)
                        if (fusion.at(p, q, r) != 0)
                            acc.add_scaled(Rational(fusion.at(p, q, r)), md.s.at(r, s));
                    const Cyclotomic& unit_row = md.s.at(md.identity_index, s);
                    internal_check(!unit_row.is_zero(), "InternalInconsistency",
                                   "S_{1s} vanished");
                    Cyclotomic rhs = md.s.at(p, s) * md.s.at(q, s) * unit_row.inverse();
                    if (acc.value() != rhs) {
                        pass = false;
                        detail = "first failure at " + tuple_str({p, q, s});
                        break;
                    }
                }
        add("verlinde", pass, detail);
    }

    // (d) sum_r N_pq^r omega_r^-1 S_{1r} = omega_p^-1 omega_q^-1 S_pq
    {
        bool pass = true;
        std::string detail;
        for (int p = 0; p < count && pass; ++p)
            for (int q = 0; q < count; ++q) {
                Cyclotomic::Accumulator acc(irr.conductor);
                for (int r = 0; r < count; ++r)
                    if (fusion.at(p, q, r) != 0)
                        acc.add_scaled(Rational(fusion.at(p, q, r)),
                                       md.omega[static_cast<size_t>(r)].conj() *
                                           md.s.at(md.identity_index, r));
                Cyclotomic rhs = md.omega[static_cast<size_t>(p)].conj() *
                                 md.omega[static_cast<size_t>(q)].conj() * md.s.at(p, q);
                if (acc.value() != rhs) {
                    pass = false;
                    detail = "first failure at " + tuple_str({p, q});
                    break;
                }
            }
        add("twisted-verlinde", pass, detail);
    }

    // (e) STS = T^-1 S T^-1
    {
        CycMatrix t(count, count), t_inv(count, count);
        for (int p = 0; p < count; ++p) {
            t.at(p, p) = md.omega[static_cast<size_t>(p)];
            t_inv.at(p, p) = md.omega[static_cast<size_t>(p)].conj();
        }
        bool pass = (md.s * t) * md.s == (t_inv * md.s) * t_inv;
        add("modular-relation", pass);
    }

    // (f) S^8 = S^4
    {
        CycMatrix s2 = md.s * md.s;
        CycMatrix s4 = s2 * s2;
        add("s-power", s4 * s4 == s4);
    }

    // (g) symmetry
    add("s-symmetric", md.s.is_symmetric());

    // (h) generalized orthogonality, full sweep. For g outside Stab(m) both
    // sides vanish term by term (each summand has a factor off the support),
    // so the sweep evaluates all (p,q,m,g) with g in Stab(m).
    {
        std::vector<std::vector<int>> stab(static_cast<size_t>(x.x2.order));
        for (int m = 0; m < x.x2.order; ++m)
            for (int g = 0; g < x.x1.order; ++g)
                if (x.act(m, g) == m) stab[static_cast<size_t>(m)].push_back(g);
        std::vector<std::string> failures(static_cast<size_t>(count), "");
        parallel_for(count, jobs, [&](std::int64_t p) {
            for (int q = 0; q < count; ++q)
                for (int m = 0; m < x.x2.order; ++m)
                    for (int g : stab[static_cast<size_t>(m)]) {
                        Cyclotomic::Accumulator acc(irr.conductor);
                        for (int h : stab[static_cast<size_t>(m)]) {
                            const Cyclotomic& a = irr.chars[p].values[m][h];
                            if (a.is_zero()) continue;
                            const Cyclotomic& b =
                                irr.chars[q].values[m][x.x1.mul[x.x1.inv[h]][g]];
                            if (b.is_zero()) continue;
                            acc.add_mul(a, b);
                        }
                        Cyclotomic lhs = Cyclotomic(Rational(1, x.x1.order)) * acc.value();
                        Cyclotomic rhs =
                            p == q ? Cyclotomic(Rational(1, irr.labels[p].dim)) *
                                         irr.chars[p].values[m][g]
                                   : Cyclotomic(0);
                        if (lhs != rhs && failures[static_cast<size_t>(p)].empty()) {
                            failures[static_cast<size_t>(p)] =
                                "first failure at " + tuple_str({p, q, m, g});
                            return;
                        }
                    }
        });
        std::string detail;
        for (const auto& f : failures)
            if (!f.empty()) { detail = f; break; }
        add("generalized-orthogonality", detail.empty(), detail);
    }

    // (h') second orthogonality over the class-function domain: both slots
    // range over commuting pairs. (On non-commuting tuples the left side is
    // identically zero by the support property while the conjugation count on
    // the right can be positive, e.g. (n,h) = (m, g^-1) at z = 1, so the
    // identity is stated on the domain where class functions live.)
    {
        auto support = commuting_pairs(x);
        bool pass = true;
        std::string detail;
        for (auto [m, g] : support) {
            if (!pass) break;
            for (auto [n, h] : support) {
                Cyclotomic::Accumulator acc(irr.conductor);
                for (int p = 0; p < count; ++p) {
                    const Cyclotomic& a = irr.chars[p].values[m][g];
                    if (a.is_zero()) continue;
                    const Cyclotomic& b = irr.chars[p].values[n][h];
                    if (b.is_zero()) continue;
                    acc.add_mul(a, b);
                }
                std::int64_t matches = 0;
                for (int z = 0; z < x.x1.order; ++z)
                    if (x.act(m, z) == n && x.x1.conjugate(g, z) == x.x1.inv[h]) ++matches;
                if (acc.value() != Cyclotomic(Rational(matches))) {
                    pass = false;
                    detail = "first failure at " + tuple_str({m, g, n, h});
                    break;
                }
            }
        }
        add("second-orthogonality", pass, detail);
    }

    return report;
}

VacuumReport vacuum_analysis(const CrossedModule& x, const ExactnessData& e,
                             const Irreducibles& irr, const ModularData& md) {
    const int count = irr.count();
    VacuumReport report;
    report.vacuum_dim = static_cast<std::int64_t>(e.kernel.size()) *
                        static_cast<std::int64_t>(e.cosets.size());
    report.boundary_bijective = e.boundary_bijective;
    report.s_rank = md.s_rank;

    XCharacter vacuum = char_vacuum(x, e);
    report.mu = decompose(irr, vacuum);

    // Cross-check mu_p = D [S^2]_{1p}.
    CycMatrix s2 = md.s * md.s;
    for (int p = 0; p < count; ++p) {
        Cyclotomic via_s = Cyclotomic(Rational(report.vacuum_dim)) * s2.at(md.identity_index, p);
        internal_check(via_s == Cyclotomic(Rational(report.mu[static_cast<size_t>(p)])),
                       "CrossCheckMismatch",
                       "mu from decomposition disagrees with D*[S^2]_{1p} at p=" +
                           std::to_string(p));
    }
    internal_check(report.mu[static_cast<size_t>(md.identity_index)] == 1, "CrossCheckMismatch",
                   "vacuum multiplicity of the unit is not 1");
    std::int64_t weighted = 0;
    for (int p = 0; p < count; ++p)
        weighted += report.mu[static_cast<size_t>(p)] * irr.labels[p].dim;
    internal_check(weighted == report.vacuum_dim, "CrossCheckMismatch",
                   "sum mu_p d_p != |C||K|");

    // Transparency scan: alpha = S_p1 / S_11, then verify the whole row.
    for (int p = 0; p < count; ++p) {
        Cyclotomic alpha = md.s.at(p, md.identity_index) * Cyclotomic(Rational(md.global_order));
        bool transparent = true;
        for (int q = 0; q < count; ++q)
            if (md.s.at(p, q) != alpha * md.s.at(md.identity_index, q)) {
                transparent = false;
                break;
            }
        if (!transparent) continue;
        report.transparent.push_back(p);
        internal_check(alpha == Cyclotomic(Rational(irr.labels[p].dim)) &&
                           report.mu[static_cast<size_t>(p)] == irr.labels[p].dim,
                       "CrossCheckMismatch", "transparent object with alpha != mu_p = d_p");
        internal_check(md.omega[static_cast<size_t>(p)].is_one(), "CrossCheckMismatch",
                       "transparent object with nontrivial twist");
    }
    std::vector<int> positive_mu;
    for (int p = 0; p < count; ++p)
        if (report.mu[static_cast<size_t>(p)] > 0) positive_mu.push_back(p);
    internal_check(report.transparent == positive_mu, "CrossCheckMismatch",
                   "transparent set differs from the support of the vacuum");

    bool only_unit = report.transparent == std::vector<int>{md.identity_index};
    bool full_rank = md.s_rank == count;
    internal_check(e.boundary_bijective == only_unit && only_unit == full_rank,
                   "CrossCheckMismatch",
                   "bijective boundary, invertible S and trivial transparent set disagree");
    report.verdict = e.boundary_bijective ? Verdict::Modular : Verdict::ModularizablePremodular;
    return report;
}

}  // namespace xmodcat
