#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "xmodcat/errors.hpp"
#include "xmodcat/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

using namespace xmodcat;

namespace {

// Brute-force isomorphism search for tiny groups: backtracking over images of
// a generating set, pruning on element orders. Test-side oracle only.
bool isomorphic(const Group& a, const Group& b) {
    if (a.order != b.order) return false;
    std::vector<int> image(static_cast<size_t>(a.order), -1);
    std::vector<char> used(static_cast<size_t>(b.order), 0);
    image[static_cast<size_t>(a.identity)] = b.identity;
    used[static_cast<size_t>(b.identity)] = 1;

    std::function<bool(int)> extend = [&](int next) -> bool {
        while (next < a.order && image[static_cast<size_t>(next)] >= 0) ++next;
        if (next == a.order) {
            for (int x = 0; x < a.order; ++x)
                for (int y = 0; y < a.order; ++y)
                    if (image[static_cast<size_t>(a.mul[x][y])] !=
                        b.mul[image[static_cast<size_t>(x)]][image[static_cast<size_t>(y)]])
                        return false;
            return true;
        }
        for (int target = 0; target < b.order; ++target) {
            if (used[static_cast<size_t>(target)] ||
                a.element_order[static_cast<size_t>(next)] !=
                    b.element_order[static_cast<size_t>(target)])
                continue;
            // Tentatively map and close under products with known images.
            std::vector<std::pair<int, int>> assigned;
            auto assign = [&](int from, int to) -> bool {
                int& slot = image[static_cast<size_t>(from)];
                if (slot >= 0) return slot == to;
                if (used[static_cast<size_t>(to)]) return false;
                slot = to;
                used[static_cast<size_t>(to)] = 1;
                assigned.emplace_back(from, to);
                return true;
            };
            bool ok = assign(next, target);
            for (size_t i = 0; ok && i < assigned.size(); ++i) {
                auto [x, fx] = assigned[i];
                for (int y = 0; y < a.order && ok; ++y) {
                    if (image[static_cast<size_t>(y)] < 0) continue;
                    int fy = image[static_cast<size_t>(y)];
                    ok = assign(a.mul[x][y], b.mul[fx][fy]) &&
                         assign(a.mul[y][x], b.mul[fy][fx]);
                }
            }
            if (ok && extend(next + 1)) return true;
            for (auto it = assigned.rbegin(); it != assigned.rend(); ++it) {
                image[static_cast<size_t>(it->first)] = -1;
                used[static_cast<size_t>(it->second)] = 0;
            }
        }
        return false;
    };
    return extend(0);
}

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

}  // namespace

TEST_CASE("group_from_table basics") {
    Group trivial = group_from_table({{0}});
    CHECK(trivial.order == 1);
    CHECK(trivial.exponent == 1);

    Group z2 = group_from_table({{0, 1}, {1, 0}});
    CHECK(z2.exponent == 2);
    CHECK(z2.num_classes() == 2);
    CHECK(z2.classes[0].size() == 1);
    CHECK(z2.classes[1].size() == 1);

    // The "max" semigroup on two points: associative but 1 has no inverse.
    CHECK_THROWS_WITH_AS(group_from_table({{0, 1}, {1, 1}}), doctest::Contains("inverse"),
                         InputError);
    CHECK_THROWS_AS(group_from_table({{0, 2}, {1, 0}}), InputError);  // out of range
    // A table with identity and inverses but broken associativity.
    CHECK_THROWS_WITH_AS(group_from_table({{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}}),
                         doctest::Contains("a*(b*c)"), InputError);
}

TEST_CASE("group_from_permutations") {
    Group z2 = group_from_permutations(2, {{1, 0}});
    CHECK(z2.order == 2);

    Group s3 = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(s3.order == 6);
    CHECK(s3.num_classes() == 3);
    std::vector<size_t> sizes;
    for (const auto& c : s3.classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2, 3});
    CHECK(s3.identity == 0);  // element 0 is the identity permutation

    Group trivial = group_from_permutations(3, {});
    CHECK(trivial.order == 1);

    CHECK_THROWS_AS(group_from_permutations(3, {{0, 0, 1}}), InputError);
    CHECK_THROWS_AS(group_from_permutations(2, {{1}}), InputError);
}

TEST_CASE("order cap") {
    // A single cycle of length 4097 closes to a group beyond the cap.
    int n = kGroupOrderCap + 1;
    std::vector<int> cycle(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<size_t>(i)] = (i + 1) % n;
    CHECK_THROWS_WITH_AS(group_from_permutations(n, {cycle}), doctest::Contains("cap"),
                         InputError);
}

TEST_CASE("class structure invariants across the registry") {
    for (const std::string& name : named_group_catalog()) {
        Group g = named_group(name);
        size_t total = 0;
        for (const auto& cls : g.classes) {
            total += cls.size();
            CHECK(g.order % static_cast<int>(cls.size()) == 0);
            // All members mutually conjugate and the representative minimal.
            CHECK(*std::min_element(cls.begin(), cls.end()) == g.class_rep[g.class_of[cls[0]]]);
            for (int m : cls) {
                bool conjugate_to_rep = false;
                for (int h = 0; h < g.order && !conjugate_to_rep; ++h)
                    conjugate_to_rep = g.conjugate(cls[0], h) == m;
                CHECK(conjugate_to_rep);
            }
        }
        CHECK(total == static_cast<size_t>(g.order));
        for (int x = 0; x < g.order; ++x) {
            CHECK(g.exponent % g.element_order[static_cast<size_t>(x)] == 0);
            CHECK(g.mul[x][g.inv[x]] == g.identity);
            CHECK(g.mul[g.inv[x]][x] == g.identity);
        }
    }
}

TEST_CASE("named registry orders") {
    CHECK(named_group("Z1").order == 1);
    CHECK(named_group("Z12").order == 12);
    CHECK(named_group("S3").order == 6);
    CHECK(named_group("S4").order == 24);
    CHECK(named_group("D4").order == 8);
    Group q8 = named_group("Q8");
    CHECK(q8.order == 8);
    CHECK(q8.exponent == 4);
    // Q8 has a unique element of order 2.
    int order2 = 0;
    for (int x = 0; x < 8; ++x) order2 += q8.element_order[static_cast<size_t>(x)] == 2;
    CHECK(order2 == 1);
    CHECK_THROWS_AS(named_group("Z13"), InputError);
    CHECK_THROWS_AS(named_group("M11"), InputError);
}

TEST_CASE("permutation closure reproduces Cayley tables up to isomorphism") {
    CHECK(isomorphic(group_from_table(cyclic_table(6)), named_group("Z6")));
    CHECK(isomorphic(named_group("S3"), group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}})));
    CHECK_FALSE(isomorphic(named_group("D4"), named_group("Z8")));
    // D4 and Q8 have equal character tables but are not isomorphic.
    CHECK_FALSE(isomorphic(named_group("D4"), named_group("Q8")));
}

TEST_CASE("orbit_stabilizer") {
    Group s3 = named_group("S3");

    // Trivial action: orbit is the point, stabilizer everything.
    ActionTable trivial = trivial_action(4, s3);
    OrbitData fixed = orbit_stabilizer(trivial, s3, 2);
    CHECK(fixed.orbit == std::vector<int>{2});
    CHECK(fixed.stabilizer.group.order == 6);

    // Conjugation action of S3 on itself at a transposition: by brute force
    // over all six conjugators the orbit has 3 elements, so the stabilizer
    // has order 2.
    ActionTable conj;
    conj.domain_size = 6;
    conj.group_order = 6;
    conj.act.assign(6, std::vector<int>(6));
    for (int m = 0; m < 6; ++m)
        for (int g = 0; g < 6; ++g) conj.act[m][g] = s3.conjugate(m, g);
    int transposition = -1;
    for (int m = 0; m < 6; ++m)
        if (s3.element_order[static_cast<size_t>(m)] == 2) { transposition = m; break; }
    std::vector<int> expected_orbit;
    for (int g = 0; g < 6; ++g) expected_orbit.push_back(s3.conjugate(transposition, g));
    std::sort(expected_orbit.begin(), expected_orbit.end());
    expected_orbit.erase(std::unique(expected_orbit.begin(), expected_orbit.end()),
                         expected_orbit.end());
    OrbitData od = orbit_stabilizer(conj, s3, transposition);
    CHECK(od.orbit == expected_orbit);
    CHECK(od.orbit.size() == 3);
    CHECK(od.stabilizer.group.order == 2);
    for (size_t i = 0; i < od.orbit.size(); ++i)
        CHECK(conj.act[transposition][od.transversal[i]] == od.orbit[i]);

    // Regular action on the identity: full orbit, trivial stabilizer.
    ActionTable regular;
    regular.domain_size = 6;
    regular.group_order = 6;
    regular.act.assign(6, std::vector<int>(6));
    for (int m = 0; m < 6; ++m)
        for (int g = 0; g < 6; ++g) regular.act[m][g] = s3.mul[m][g];
    OrbitData reg = orbit_stabilizer(regular, s3, s3.identity);
    CHECK(reg.orbit.size() == 6);
    CHECK(reg.stabilizer.group.order == 1);
}

TEST_CASE("orbit-stabilizer theorem exhaustively") {
    for (const std::string& name : {"S3", "D4", "Q8", "Z6"}) {
        Group g = named_group(name);
        ActionTable conj;
        conj.domain_size = g.order;
        conj.group_order = g.order;
        conj.act.assign(static_cast<size_t>(g.order), std::vector<int>(static_cast<size_t>(g.order)));
        for (int m = 0; m < g.order; ++m)
            for (int h = 0; h < g.order; ++h) conj.act[m][h] = g.conjugate(m, h);
        for (int point = 0; point < g.order; ++point) {
            OrbitData od = orbit_stabilizer(conj, g, point);
            CHECK(static_cast<int>(od.orbit.size()) * od.stabilizer.group.order == g.order);
        }
    }
}

TEST_CASE("subgroup embedding validation") {
    Group s3 = named_group("S3");
    CHECK_THROWS_AS(subgroup_from_elements(s3, {1, 2}), InputError);  // no identity
    int transposition = -1;
    for (int m = 0; m < 6; ++m)
        if (s3.element_order[static_cast<size_t>(m)] == 2) { transposition = m; break; }
    Subgroup h = subgroup_from_elements(s3, {s3.identity, transposition});
    CHECK(h.group.order == 2);
    CHECK(h.to_parent[0] == s3.identity);
    CHECK_THROWS_AS(subgroup_from_elements(s3, {s3.identity, transposition, 4}), InputError);
}
