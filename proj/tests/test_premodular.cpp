#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xmodcat/errors.hpp"
#include "xmodcat/premodular.hpp"

#include <algorithm>

using namespace xmodcat;

namespace {

// Brute-force oracles straight off the defining sums, with no support
// restriction: independent of the library's optimized evaluation paths.
Cyclotomic s_entry_brute(const CrossedModule& x, const ExactnessData& e, const XCharacter& a,
                         const XCharacter& b) {
    Cyclotomic acc(0);
    for (int m = 0; m < x.x2.order; ++m)
        for (int n = 0; n < x.x2.order; ++n)
            acc += (a.values[m][x.boundary[n]] * b.values[n][x.boundary[m]]).conj();
    return Cyclotomic(Rational(1, e.global_order)) * acc;
}

Cyclotomic omega_brute(const CrossedModule& x, const XCharacter& psi, std::int64_t dim) {
    Cyclotomic acc(0);
    for (int m = 0; m < x.x2.order; ++m) acc += psi.values[m][x.boundary[m]];
    return Cyclotomic(Rational(1, dim)) * acc;
}

Cyclotomic fs_brute(const CrossedModule& x, const XCharacter& psi) {
    Cyclotomic acc(0);
    for (int m = 0; m < x.x2.order; ++m)
        for (int g = 0; g < x.x1.order; ++g)
            if (x.act(m, g) == x.x2.inv[m]) acc += psi.values[m][x.x1.mul[g][g]];
    return Cyclotomic(Rational(1, x.x1.order)) * acc;
}

struct Pipeline {
    CrossedModule x;
    ExactnessData e;
    Irreducibles irr;
    ModularData md;

    explicit Pipeline(CrossedModule xm)
        : x(std::move(xm)), e(exactness(x)), irr(irreducibles(x)), md(modular_data(x, e, irr)) {}
};

std::vector<CrossedModule> library() {
    std::vector<CrossedModule> xs;
    for (const char* name : {"Z2", "Z3", "Z4", "Z6", "S3", "D4", "Q8"}) {
        xs.push_back(make_RG(named_group(name)));
        xs.push_back(make_DG(named_group(name)));
    }
    xs.push_back(make_mod2_fixture());
    xs.push_back(make_trivial_boundary_fixture());
    return xs;
}

}  // namespace

TEST_CASE("DG(Z2) S and T match the toric-code data") {
    Pipeline p(make_DG(named_group("Z2")));
    REQUIRE(p.irr.count() == 4);
    // Documented row order: (1,triv), (1,sgn), (x,triv), (x,sgn).
    CHECK(p.irr.labels[0].orbit_rep == 0);
    CHECK(p.irr.labels[1].orbit_rep == 0);
    CHECK(p.irr.labels[2].orbit_rep == 1);
    CHECK(p.irr.labels[3].orbit_rep == 1);
    int expected[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(p.md.s.at(i, j) == Cyclotomic(expected[i][j], 2));
    CHECK(p.md.t_diag[0] == Cyclotomic(1));
    CHECK(p.md.t_diag[1] == Cyclotomic(1));
    CHECK(p.md.t_diag[2] == Cyclotomic(1));
    CHECK(p.md.t_diag[3] == Cyclotomic(-1));
    // Brute-force oracle straight from the defining sums.
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
            CHECK(p.md.s.at(i, j) ==
                  s_entry_brute(p.x, p.e, p.irr.chars[static_cast<size_t>(i)],
                                p.irr.chars[static_cast<size_t>(j)]));
        CHECK(p.md.omega[static_cast<size_t>(i)] ==
              omega_brute(p.x, p.irr.chars[static_cast<size_t>(i)], p.irr.labels[static_cast<size_t>(i)].dim));
    }
}

TEST_CASE("S matrix brute-force oracle across the library") {
    for (const CrossedModule& x : library()) {
        if (static_cast<std::int64_t>(x.x1.order) * x.x2.order > 36) continue;
        CAPTURE(x.name);
        Pipeline p(x);
        for (int i = 0; i < p.irr.count(); ++i)
            for (int j = 0; j < p.irr.count(); ++j)
                CHECK(p.md.s.at(i, j) ==
                      s_entry_brute(p.x, p.e, p.irr.chars[static_cast<size_t>(i)],
                                    p.irr.chars[static_cast<size_t>(j)]));
    }
}

TEST_CASE("twists") {
    // omega_1 = 1 everywhere; RG has all twists trivial.
    for (const CrossedModule& x : library()) {
        CAPTURE(x.name);
        Pipeline p(x);
        CHECK(p.md.omega[static_cast<size_t>(p.md.identity_index)].is_one());
        for (int i = 0; i < p.irr.count(); ++i) {
            CHECK(p.md.omega[static_cast<size_t>(i)] ==
                  omega_brute(p.x, p.irr.chars[static_cast<size_t>(i)],
                              p.irr.labels[static_cast<size_t>(i)].dim));
            CHECK(p.e.image_exponent % p.md.omega_order[static_cast<size_t>(i)].first == 0);
        }
    }
    for (const char* name : {"Z4", "S3", "Q8"}) {
        Pipeline p(make_RG(named_group(name)));
        for (const Cyclotomic& w : p.md.omega) CHECK(w.is_one());
    }

    // Mod-2 fixture: one-dimensional characters make omega = chi(dm0)/chi(1);
    // exactly the odd orbit representatives with the sign character give -1.
    Pipeline p(make_mod2_fixture());
    int minus = 0;
    for (int i = 0; i < p.irr.count(); ++i) {
        const auto& label = p.irr.labels[static_cast<size_t>(i)];
        Cyclotomic expected = p.irr.chars[static_cast<size_t>(i)]
                                  .values[static_cast<size_t>(label.orbit_rep)]
                                         [static_cast<size_t>(p.x.boundary[label.orbit_rep])];
        CHECK(p.md.omega[static_cast<size_t>(i)] == expected);
        if (p.md.omega[static_cast<size_t>(i)] == Cyclotomic(-1)) {
            ++minus;
            CHECK(label.orbit_rep % 2 == 1);
        }
    }
    CHECK(minus == 2);
}

TEST_CASE("Frobenius-Schur indicators") {
    for (const CrossedModule& x : library()) {
        CAPTURE(x.name);
        Pipeline p(x);
        CHECK(p.md.fs[static_cast<size_t>(p.md.identity_index)] == 1);
        for (int i = 0; i < p.irr.count(); ++i)
            CHECK(Cyclotomic(p.md.fs[static_cast<size_t>(i)]) ==
                  fs_brute(p.x, p.irr.chars[static_cast<size_t>(i)]));
    }

    // RG(Q8): the 2-dimensional irreducible is quaternionic.
    Pipeline q8(make_RG(named_group("Q8")));
    for (int i = 0; i < q8.irr.count(); ++i)
        CHECK(q8.md.fs[static_cast<size_t>(i)] ==
              (q8.irr.labels[static_cast<size_t>(i)].dim == 2 ? -1 : 1));

    // DG(Z3): only m = 1 satisfies m^g = m^-1, and sum_g chi(g^2) vanishes
    // for the nontrivial characters of Z3, so those indicators are 0.
    Pipeline z3(make_DG(named_group("Z3")));
    for (int i = 0; i < z3.irr.count(); ++i) {
        const auto& label = z3.irr.labels[static_cast<size_t>(i)];
        int expected = (label.orbit_rep == z3.x.x2.identity && label.stab_irr == 0) ? 1 : 0;
        CHECK(z3.md.fs[static_cast<size_t>(i)] == expected);
    }
}

TEST_CASE("verification suite passes across the library") {
    for (const CrossedModule& x : library()) {
        CAPTURE(x.name);
        Pipeline p(x);
        FusionTensor f = fusion_tensor(p.x, p.irr);
        VerificationReport report = verify_suite(p.x, p.e, p.irr, f, p.md);
        for (const CheckResult& c : report.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("DG inputs: S invertible with S^4 = 1") {
    for (const char* name : {"Z2", "Z3", "Z4", "Z6", "S3", "D4", "Q8"}) {
        Pipeline p(make_DG(named_group(name)));
        CHECK(p.md.s_rank == p.irr.count());
        CycMatrix s2 = p.md.s * p.md.s;
        CHECK(s2 * s2 == CycMatrix::identity(p.irr.count()));
    }
}

TEST_CASE("RG inputs: rank one and S^4 = S^2") {
    for (const char* name : {"Z2", "Z3", "Z4", "Z6", "S3", "D4", "Q8"}) {
        Group g = named_group(name);
        Pipeline p(make_RG(g));
        CHECK(p.md.s_rank == 1);
        // S_pq = d_p d_q / |G| exactly.
        for (int i = 0; i < p.irr.count(); ++i)
            for (int j = 0; j < p.irr.count(); ++j)
                CHECK(p.md.s.at(i, j) ==
                      Cyclotomic(Rational(p.irr.labels[static_cast<size_t>(i)].dim *
                                              p.irr.labels[static_cast<size_t>(j)].dim,
                                          g.order)));
        CycMatrix s2 = p.md.s * p.md.s;
        CHECK(s2 * s2 == s2);
    }
}

TEST_CASE("vacuum analysis") {
    // DG: vacuum is the unit; verdict Modular.
    for (const char* name : {"Z2", "S3", "Q8"}) {
        Pipeline p(make_DG(named_group(name)));
        VacuumReport v = vacuum_analysis(p.x, p.e, p.irr, p.md);
        CHECK(v.verdict == Verdict::Modular);
        CHECK(v.transparent == std::vector<int>{p.md.identity_index});
        for (int i = 0; i < p.irr.count(); ++i)
            CHECK(v.mu[static_cast<size_t>(i)] == (i == p.md.identity_index ? 1 : 0));
    }
    // RG: every irreducible transparent with mu_p = d_p.
    for (const char* name : {"Z2", "S3", "Q8"}) {
        Pipeline p(make_RG(named_group(name)));
        VacuumReport v = vacuum_analysis(p.x, p.e, p.irr, p.md);
        CHECK(v.verdict == Verdict::ModularizablePremodular);
        CHECK(static_cast<int>(v.transparent.size()) == p.irr.count());
        for (int i = 0; i < p.irr.count(); ++i)
            CHECK(v.mu[static_cast<size_t>(i)] == p.irr.labels[static_cast<size_t>(i)].dim);
    }
    // Mod-2 fixture: D = 2, two transparent one-dimensionals, singular S.
    Pipeline p(make_mod2_fixture());
    VacuumReport v = vacuum_analysis(p.x, p.e, p.irr, p.md);
    CHECK(v.vacuum_dim == 2);
    CHECK(v.transparent.size() == 2);
    CHECK(std::find(v.transparent.begin(), v.transparent.end(), p.md.identity_index) !=
          v.transparent.end());
    CHECK(v.s_rank == 4);
    CHECK(v.verdict == Verdict::ModularizablePremodular);
    std::int64_t mu_total = 0;
    for (auto m : v.mu) mu_total += m;
    CHECK(mu_total == 2);
}

TEST_CASE("verdict equivalences across the library") {
    for (const CrossedModule& x : library()) {
        CAPTURE(x.name);
        Pipeline p(x);
        VacuumReport v = vacuum_analysis(p.x, p.e, p.irr, p.md);
        bool bij = p.e.boundary_bijective;
        CHECK((v.verdict == Verdict::Modular) == bij);
        CHECK((p.md.s_rank == p.irr.count()) == bij);
        CHECK((v.transparent == std::vector<int>{p.md.identity_index}) == bij);
    }
}

TEST_CASE("rank via Bareiss elimination on known matrices") {
    CycMatrix m(3, 3);
    // Rank-2 rational matrix.
    int vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Cyclotomic(vals[i][j]);
    CHECK(m.rank() == 2);
    CHECK(CycMatrix::identity(4).rank() == 4);
    // Cyclotomic entries: [[1, z3], [z3^2, 1]] has determinant 1 - 1 = 0.
    CycMatrix c(2, 2);
    c.at(0, 0) = Cyclotomic(1);
    c.at(0, 1) = Cyclotomic::root_of_unity(3, 1);
    c.at(1, 0) = Cyclotomic::root_of_unity(3, 2);
    c.at(1, 1) = Cyclotomic(1);
    CHECK(c.rank() == 1);
}
