#pragma once

#include "xmodcat/cyclotomic.hpp"
#include "xmodcat/group.hpp"

#include <vector>

namespace xmodcat {

// Ordinary character table with exact cyclotomic values. Rows are sorted by
// (degree, lexicographic canonical value order) so labels are stable across
// runs. values[i][c] is the value on the representative of class c.
struct CharacterTable {
    int irr_count = 0;
    std::vector<int> degrees;
    std::vector<std::vector<Cyclotomic>> values;
    std::vector<std::vector<int>> power_map;  // [class][j] = class of rep^j, j in [0, exponent)
    int trivial_row = 0;                      // index of the all-ones character
};

// Burnside-Dixon: class matrices over F_P split into a common eigenbasis,
// degrees and values recovered mod P, then lifted exactly to cyclotomics via
// the root-of-unity multiplicity transform and verified against both
// orthogonality relations.
CharacterTable character_table(const Group& g);

// H-class index for each element of H (indexed by subgroup position),
// consistent with H's own class structure. Validates the embedding against
// the parent group of `parent_table`.
std::vector<int> restrict_and_index(const CharacterTable& parent_table, const Group& parent,
                                    const Subgroup& h);

}  // namespace xmodcat
