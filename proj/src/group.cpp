#include "xmodcat/group.hpp"

#include "xmodcat/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace xmodcat {

namespace {

// Finds a small generating set greedily: repeatedly adjoin the minimal element
// outside the current closure.
std::vector<int> generating_set(const std::vector<std::vector<int>>& mul, int identity) {
    int n = static_cast<int>(mul.size());
    std::vector<int> gens;
    std::vector<char> in_closure(n, 0);
    in_closure[identity] = 1;
    int closure_size = 1;
    while (closure_size < n) {
        int next = -1;
        for (int x = 0; x < n; ++x)
            if (!in_closure[x]) { next = x; break; }
        gens.push_back(next);
        // Re-close: BFS over products with the new generator set.
        std::vector<int> frontier{next};
        in_closure[next] = 1;
        ++closure_size;
        while (!frontier.empty()) {
            std::vector<int> fresh;
            for (int a : frontier) {
                for (int x = 0; x < n; ++x) {
                    if (!in_closure[x]) continue;
                    for (int p : {mul[a][x], mul[x][a]}) {
                        if (!in_closure[p]) {
                            in_closure[p] = 1;
                            ++closure_size;
                            fresh.push_back(p);
                        }
                    }
                }
            }
            frontier = std::move(fresh);
        }
    }
    return gens;
}

void derive_structure(Group& g) {
    int n = g.order;
    // Two-sided identity.
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = g.mul[e][x] == x && g.mul[x][e] == x;
        if (ok) { identity = e; break; }
    }
    if (identity < 0) throw InputError("NoIdentity", "multiplication table has no two-sided identity");
    g.identity = identity;

    g.inv.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (g.mul[x][y] == identity && g.mul[y][x] == identity) { g.inv[x] = y; break; }
        }
        if (g.inv[x] < 0) {
            std::ostringstream msg;
            msg << "element " << x << " has no two-sided inverse";
            throw InputError("NoInverse", msg.str());
        }
    }

    // Light's test: associativity on a generating set implies associativity
    // everywhere, at |gens| * n^2 cost instead of n^3.
    for (int b : generating_set(g.mul, identity)) {
        for (int a = 0; a < n; ++a) {
            const int ab = g.mul[a][b];
            for (int c = 0; c < n; ++c) {
                if (g.mul[ab][c] != g.mul[a][g.mul[b][c]]) {
                    std::ostringstream msg;
                    msg << "(a*b)*c != a*(b*c) at a=" << a << " b=" << b << " c=" << c;
                    throw InputError("NotAssociative", msg.str());
                }
            }
        }
    }

    g.element_order.assign(n, 0);
    g.exponent = 1;
    for (int x = 0; x < n; ++x) {
        int k = 1, p = x;
        while (p != identity) {
            p = g.mul[p][x];
            ++k;
        }
        g.element_order[x] = k;
        g.exponent = static_cast<int>(std::lcm(g.exponent, k));
    }

    g.class_of.assign(n, -1);
    g.classes.clear();
    g.class_rep.clear();
    for (int x = 0; x < n; ++x) {
        if (g.class_of[x] >= 0) continue;
        std::vector<int> members;
        for (int h = 0; h < n; ++h) {
            int y = g.conjugate(x, h);
            if (g.class_of[y] < 0) {
                g.class_of[y] = static_cast<int>(g.classes.size());
                members.push_back(y);
            }
        }
        std::sort(members.begin(), members.end());
        g.class_rep.push_back(members.front());
        g.classes.push_back(std::move(members));
    }
}

}  // namespace

int Group::power(int a, int e) const {
    int r = identity;
    for (int i = 0; i < e; ++i) r = mul[r][a];
    return r;
}

bool Group::is_abelian() const { return static_cast<int>(classes.size()) == order; }

Group group_from_table(std::vector<std::vector<int>> mul, std::string name) {
    int n = static_cast<int>(mul.size());
    if (n == 0) throw InputError("IndexOutOfRange", "empty multiplication table");
    if (n > kGroupOrderCap) throw InputError("OrderCapExceeded", "group order exceeds cap");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(mul[i].size()) != n)
            throw InputError("IndexOutOfRange", "multiplication table is not square");
        for (int j = 0; j < n; ++j)
            if (mul[i][j] < 0 || mul[i][j] >= n)
                throw InputError("IndexOutOfRange", "table entry out of range");
    }
    Group g;
    g.order = n;
    g.mul = std::move(mul);
    g.name = std::move(name);
    derive_structure(g);
    return g;
}

Group group_from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                              std::string name) {
    if (degree < 0) throw InputError("IndexOutOfRange", "negative degree");
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree)
            throw InputError("NotABijection", "generator length differs from degree");
        std::vector<char> seen(static_cast<size_t>(degree), 0);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[static_cast<size_t>(v)])
                throw InputError("NotABijection", "generator is not a permutation");
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    std::vector<int> id(static_cast<size_t>(degree));
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(static_cast<size_t>(degree));
        for (int x = 0; x < degree; ++x) r[x] = b[a[x]];  // apply a, then b
        return r;
    };
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gen : generators) {
            std::vector<int> p = compose(elems[head], gen);
            if (index.emplace(p, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(p));
                if (static_cast<int>(elems.size()) > kGroupOrderCap)
                    throw InputError("OrderCapExceeded", "permutation closure exceeds order cap");
            }
        }
    }
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> mul(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = index.at(compose(elems[a], elems[b]));
    return group_from_table(std::move(mul), std::move(name));
}

Group named_group(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'Z') {
        int n = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') { n = -1; break; }
            n = n * 10 + (name[i] - '0');
        }
        if (n >= 1 && n <= 12) {
            if (n == 1) return group_from_permutations(1, {}, name);
            std::vector<int> cycle(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
            return group_from_permutations(n, {cycle}, name);
        }
    }
    if (name == "S3") return group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, name);
    if (name == "S4") return group_from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, name);
    if (name == "D4") return group_from_permutations(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}, name);
    if (name == "Q8") {
        // Right translations by i and j on {1,-1,i,-i,j,-j,k,-k}.
        return group_from_permutations(8, {{2, 3, 1, 0, 7, 6, 4, 5}, {4, 5, 6, 7, 1, 0, 3, 2}}, name);
    }
    throw InputError("UnknownGroup", "no named group '" + name + "' in the registry");
}

std::vector<std::string> named_group_catalog() {
    std::vector<std::string> names;
    for (int n = 1; n <= 12; ++n) names.push_back("Z" + std::to_string(n));
    names.insert(names.end(), {"S3", "S4", "D4", "Q8"});
    return names;
}

ActionTable trivial_action(int domain_size, const Group& g) {
    ActionTable a;
    a.domain_size = domain_size;
    a.group_order = g.order;
    a.act.assign(static_cast<size_t>(domain_size), std::vector<int>(static_cast<size_t>(g.order)));
    for (int m = 0; m < domain_size; ++m)
        for (int h = 0; h < g.order; ++h) a.act[m][h] = m;
    return a;
}

void validate_action(const ActionTable& a, const Group& g) {
    if (a.group_order != g.order || static_cast<int>(a.act.size()) != a.domain_size)
        throw InputError("InvalidAction", "action table dimensions mismatch");
    for (const auto& row : a.act) {
        if (static_cast<int>(row.size()) != a.group_order)
            throw InputError("InvalidAction", "action table row length mismatch");
        for (int v : row)
            if (v < 0 || v >= a.domain_size)
                throw InputError("InvalidAction", "action table entry out of range");
    }
    for (int m = 0; m < a.domain_size; ++m)
        if (a.act[m][g.identity] != m)
            throw InputError("InvalidAction", "identity does not act trivially");
    for (int m = 0; m < a.domain_size; ++m)
        for (int x = 0; x < g.order; ++x)
            for (int y = 0; y < g.order; ++y)
                if (a.act[a.act[m][x]][y] != a.act[m][g.mul[x][y]])
                    throw InputError("InvalidAction", "action is not compatible with multiplication");
}

Subgroup subgroup_from_elements(const Group& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup h;
    h.to_parent = elements;
    h.from_parent.assign(static_cast<size_t>(g.order), -1);
    for (size_t i = 0; i < elements.size(); ++i) {
        int x = elements[i];
        if (x < 0 || x >= g.order) throw InputError("NotASubgroup", "element index out of range");
        h.from_parent[static_cast<size_t>(x)] = static_cast<int>(i);
    }
    int k = static_cast<int>(elements.size());
    if (k == 0 || h.from_parent[static_cast<size_t>(g.identity)] < 0)
        throw InputError("NotASubgroup", "subgroup must contain the identity");
    std::vector<std::vector<int>> mul(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i) {
        if (h.from_parent[static_cast<size_t>(g.inv[elements[i]])] < 0)
            throw InputError("NotASubgroup", "not closed under inverse");
        for (int j = 0; j < k; ++j) {
            int p = h.from_parent[static_cast<size_t>(g.mul[elements[i]][elements[j]])];
            if (p < 0) throw InputError("NotASubgroup", "not closed under multiplication");
            mul[i][j] = p;
        }
    }
    h.group = group_from_table(std::move(mul));
    return h;
}

OrbitData orbit_stabilizer(const ActionTable& action, const Group& g, int point) {
    if (point < 0 || point >= action.domain_size)
        throw InputError("InvalidAction", "orbit point out of range");
    validate_action(action, g);
    std::vector<int> min_mover(static_cast<size_t>(action.domain_size), -1);
    std::vector<int> stab_elements;
    for (int h = 0; h < g.order; ++h) {
        int image = action.act[point][h];
        if (min_mover[static_cast<size_t>(image)] < 0) min_mover[static_cast<size_t>(image)] = h;
        if (image == point) stab_elements.push_back(h);
    }
    OrbitData result;
    for (int m = 0; m < action.domain_size; ++m) {
        if (min_mover[static_cast<size_t>(m)] >= 0) {
            result.orbit.push_back(m);
            result.transversal.push_back(min_mover[static_cast<size_t>(m)]);
        }
    }
    result.stabilizer = subgroup_from_elements(g, std::move(stab_elements));
    internal_check(static_cast<int>(result.orbit.size()) * result.stabilizer.group.order == g.order,
                   "OrbitStabilizer", "orbit-stabilizer identity failed");
    return result;
}

}  // namespace xmodcat
