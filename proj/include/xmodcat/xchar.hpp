#pragma once

#include "xmodcat/chartab.hpp"
#include "xmodcat/cyclotomic.hpp"
#include "xmodcat/xmod.hpp"

#include <cstdint>
#include <vector>

namespace xmodcat {

// A class function psi : X2 x X1 -> Q(zeta), stored densely. Supported on
// commuting pairs (m^g = m) and invariant under simultaneous conjugation;
// both properties are asserted wherever characters are produced.
struct XCharacter {
    const CrossedModule* xm = nullptr;
    std::vector<std::vector<Cyclotomic>> values;  // [m][g]

    const Cyclotomic& at(int m, int g) const { return values[m][g]; }
    Cyclotomic dimension() const;  // sum_m psi(m, 1)
};

struct IrreducibleLabel {
    int orbit_rep = 0;     // minimal X2 index of the orbit
    int stab_irr = 0;      // row into the stabilizer's character table
    std::int64_t dim = 0;  // |orbit| * degree
};

// Commuting pairs (m, g) with m^g = m; the support shared by every class
// function of the crossed module.
std::vector<std::pair<int, int>> commuting_pairs(const CrossedModule& x);

// Number of X1-orbits on the commuting pairs = dim Cl(X) = |Irr(X)|.
std::int64_t class_pair_count(const CrossedModule& x);

// The full set of irreducible characters, labeled by (orbit, stabilizer
// irreducible) and sorted by (orbit_rep, stab_irr). Construction is by
// orbit-stabilizer induction; the result is certified against completeness,
// orthonormality, the dimension formula and the squared-dimension count.
struct Irreducibles {
    std::vector<IrreducibleLabel> labels;
    std::vector<XCharacter> chars;
    int identity_index = 0;        // position of the trivial character
    std::int64_t conductor = 1;    // exponent of X1; every value lives in Q(zeta_conductor)

    int count() const { return static_cast<int>(labels.size()); }
};

Irreducibles irreducibles(const CrossedModule& x);

// (1/|X1|) sum_{m,g} conj(a(m,g)) b(m,g), exact.
Cyclotomic inner_product(const XCharacter& a, const XCharacter& b);

XCharacter char_trivial(const CrossedModule& x);
XCharacter char_regular(const CrossedModule& x);
XCharacter char_vacuum(const CrossedModule& x, const ExactnessData& e);

// Multiplicity vector <psi_p, psi>; throws InputError "NotACharacter" unless
// all multiplicities are non-negative integers and they reconstruct psi.
std::vector<std::int64_t> decompose(const Irreducibles& irr, const XCharacter& psi);

// psi(m,g) = sum_n a(n,g) b(n^-1 m, g); checked to be a class function.
XCharacter tensor_character(const XCharacter& a, const XCharacter& b);

struct FusionTensor {
    int count = 0;
    std::vector<std::int64_t> n;  // flat [p][q][r]

    std::int64_t at(int p, int q, int r) const {
        return n[(static_cast<size_t>(p) * count + q) * count + r];
    }
};

// Fusion coefficients computed along two independent routes - the direct
// triple-sum formula and tensor-then-decompose - which must agree entry-wise.
// Also enforces the unit law, commutativity and the dimension count.
FusionTensor fusion_tensor(const CrossedModule& x, const Irreducibles& irr, int jobs = 1);

}  // namespace xmodcat
