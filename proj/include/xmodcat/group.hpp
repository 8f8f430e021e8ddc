#pragma once

#include <string>
#include <vector>

namespace xmodcat {

inline constexpr int kGroupOrderCap = 4096;

// A finite group materialized as a full Cayley table, with the class
// structure and element data every downstream formula needs. Immutable after
// construction; all construction paths validate the group laws.
struct Group {
    int order = 0;
    std::vector<std::vector<int>> mul;  // mul[a][b] = index of a*b
    int identity = 0;
    std::vector<int> inv;
    std::vector<int> element_order;
    int exponent = 1;                        // lcm of element orders
    std::vector<std::vector<int>> classes;   // sorted members, ordered by min member
    std::vector<int> class_of;               // element -> class index
    std::vector<int> class_rep;              // class -> minimal member
    std::string name;

    int op(int a, int b) const { return mul[a][b]; }
    // g^-1 * m * g
    int conjugate(int m, int g) const { return mul[mul[inv[g]][m]][g]; }
    int num_classes() const { return static_cast<int>(classes.size()); }
    int power(int a, int e) const;
    bool is_abelian() const;
};

Group group_from_table(std::vector<std::vector<int>> mul, std::string name = "");

// Breadth-first closure of permutation generators on {0..degree-1}.
// Element 0 is the identity permutation. Composition is "apply a, then b".
Group group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                              std::string name = "");

// Built-in registry: Z1..Z12, S3, S4, D4, Q8, all generated from permutation
// generators.
Group named_group(const std::string& name);
std::vector<std::string> named_group_catalog();

// Right action table: act[m][g], m in a domain of domain_size points, g in a
// group of group_order elements.
struct ActionTable {
    int domain_size = 0;
    int group_order = 0;
    std::vector<std::vector<int>> act;

    int apply(int m, int g) const { return act[m][g]; }
};

ActionTable trivial_action(int domain_size, const Group& g);

// Checks identity/compatibility (a right action) against G; throws InputError
// "InvalidAction" on failure.
void validate_action(const ActionTable& a, const Group& g);

// A subgroup carried with its own Group structure and the embedding.
struct Subgroup {
    Group group;
    std::vector<int> to_parent;    // subgroup index -> parent index, ascending
    std::vector<int> from_parent;  // parent index -> subgroup index or -1
};

// Builds the subgroup generated membership check: elements must already be
// closed under multiplication and inverse; throws InputError "NotASubgroup".
Subgroup subgroup_from_elements(const Group& g, std::vector<int> elements);

struct OrbitData {
    std::vector<int> orbit;        // ascending
    std::vector<int> transversal;  // transversal[i] = minimal g with point^g = orbit[i]
    Subgroup stabilizer;
};

OrbitData orbit_stabilizer(const ActionTable& action, const Group& g, int point);

}  // namespace xmodcat
