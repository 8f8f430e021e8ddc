#pragma once

#include "xmodcat/matrix.hpp"
#include "xmodcat/xchar.hpp"
#include "xmodcat/xmod.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace xmodcat {

// The premodular data of M(X): twists, S and T matrices, Frobenius-Schur
// indicators, exact ranks.
struct ModularData {
    std::vector<Cyclotomic> omega;          // twist per irreducible; roots of unity
    std::vector<std::pair<std::int64_t, std::int64_t>> omega_order;  // (order, exponent)
    CycMatrix s;
    std::vector<Cyclotomic> t_diag;         // T = diag(omega)
    std::int64_t global_order = 0;          // |X|
    std::vector<int> fs;                    // nu_p in {-1, 0, 1}
    int identity_index = 0;
    int s_rank = 0;
    int s4_rank = 0;                        // recorded, no relation asserted
};

// Computes twists (with the eigen-relation psi_p(m, g dm) = omega_p psi_p(m,g)
// asserted for every (m,g)), the S matrix (symmetry and the first-row value
// d_p/|X| asserted), indicators, and exact ranks.
ModularData modular_data(const CrossedModule& x, const ExactnessData& e, const Irreducibles& irr,
                         int jobs = 1);

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;  // first counterexample or skip reason
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const CheckResult& c : checks)
            if (!c.skipped && !c.pass) return false;
        return true;
    }
};

// The exact identity suite: squared-dimension count, twisted dimension sum,
// both Verlinde-type identities, the S/T relation, S^8 = S^4, symmetry, and
// the full orthogonality sweeps.
VerificationReport verify_suite(const CrossedModule& x, const ExactnessData& e,
                                const Irreducibles& irr, const FusionTensor& fusion,
                                const ModularData& md, int jobs = 1);

enum class Verdict { Modular, ModularizablePremodular };

struct VacuumReport {
    std::vector<std::int64_t> mu;      // vacuum multiplicities
    std::int64_t vacuum_dim = 0;       // D = |C||K|
    std::vector<int> transparent;      // irreducibles with S-row proportional to the unit row
    bool boundary_bijective = false;
    int s_rank = 0;
    Verdict verdict = Verdict::ModularizablePremodular;
};

// Vacuum multiplicities along two routes (decomposition and D*[S^2]_{1p}),
// the transparency scan, and the modularity verdict with its cross-checks.
VacuumReport vacuum_analysis(const CrossedModule& x, const ExactnessData& e,
                             const Irreducibles& irr, const ModularData& md);

const char* verdict_name(Verdict v);

}  // namespace xmodcat
