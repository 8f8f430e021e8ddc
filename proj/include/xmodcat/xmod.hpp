#pragma once

#include "xmodcat/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace xmodcat {

// The 4-tuple (X1, X2, action of X1 on X2, boundary X2 -> X1). The action is
// written exponentially: act(m, g) = m^g.
struct CrossedModule {
    Group x1;
    Group x2;
    ActionTable action;          // act[m][g], |X2| x |X1|
    std::vector<int> boundary;   // X2 index -> X1 index
    std::string name;

    int act(int m, int g) const { return action.act[m][g]; }
};

struct AxiomFailure {
    std::string axiom;           // "NotAnAction", "NotAutomorphism", "BoundaryNotHom",
                                 // "XMod1Violation", "XMod2Violation"
    std::vector<int> witness;    // first counterexample tuple
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomFailure> failures;
    bool pass() const { return failures.empty(); }
};

// Exhaustive check of the action axioms, the boundary homomorphism property,
// and the two crossed-module axioms; reports the first counterexample per
// failed family.
ValidationReport validate(const CrossedModule& x);

void require_valid(const CrossedModule& x);  // throws InputError on failure

struct ExactnessData {
    std::vector<int> kernel;              // K = ker boundary, sorted X2 indices
    std::vector<int> image;               // I = im boundary, sorted X1 indices
    std::vector<std::vector<int>> cosets; // right cosets I\X1, ordered by min member
    std::vector<int> coset_of;            // X1 index -> coset index
    std::vector<int> coset_rep;           // minimal member per coset
    std::int64_t global_order = 0;        // |X| = |K||X1| = |X2||C|
    bool boundary_bijective = false;
    int image_exponent = 1;               // lcm of element orders inside I
};

// Pre: validate(x) passes. Asserts centrality of K, normality of I, and the
// cardinality identity |X2||C| = |K||X1|.
ExactnessData exactness(const CrossedModule& x);

// X2 trivial, trivial action and boundary: representations of G.
CrossedModule make_RG(const Group& g);

// X1 = X2 = G with conjugation action and identity boundary: the double of G.
CrossedModule make_DG(const Group& g);

// X1 = Z2, X2 = Z4, trivial action, boundary = reduction mod 2.
// K = Z2, C = 1; the smallest input with a singular S matrix and twists -1.
CrossedModule make_mod2_fixture();

// X1 = X2 = Z2, trivial action, trivial boundary. K = Z2, C = Z2; vacuum
// equals regular even though X2 is nontrivial.
CrossedModule make_trivial_boundary_fixture();

}  // namespace xmodcat
