#include "xmodcat/xmod.hpp"

#include "xmodcat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace xmodcat {

ValidationReport validate(const CrossedModule& x) {
    ValidationReport report;
    const Group& g1 = x.x1;
    const Group& g2 = x.x2;
    auto fail = [&](const std::string& axiom, std::vector<int> witness, const std::string& detail) {
        report.failures.push_back({axiom, std::move(witness), detail});
    };

    // Shape and range of the tables.
    if (x.action.domain_size != g2.order || x.action.group_order != g1.order ||
        static_cast<int>(x.action.act.size()) != g2.order) {
        fail("NotAnAction", {}, "action table dimensions mismatch");
        return report;
    }
    for (int m = 0; m < g2.order; ++m) {
        if (static_cast<int>(x.action.act[m].size()) != g1.order) {
            fail("NotAnAction", {m}, "action row length mismatch");
            return report;
        }
        for (int g = 0; g < g1.order; ++g)
            if (x.act(m, g) < 0 || x.act(m, g) >= g2.order) {
                fail("NotAnAction", {m, g}, "action entry out of range");
                return report;
            }
    }
    if (static_cast<int>(x.boundary.size()) != g2.order) {
        fail("BoundaryNotHom", {}, "boundary length mismatch");
        return report;
    }
    for (int m = 0; m < g2.order; ++m)
        if (x.boundary[m] < 0 || x.boundary[m] >= g1.order) {
            fail("BoundaryNotHom", {m}, "boundary entry out of range");
            return report;
        }

    // Action axiom 2 plus identity: m^1 = m, (m^g)^h = m^(gh).
    bool action_ok = true;
    for (int m = 0; m < g2.order && action_ok; ++m)
        if (x.act(m, g1.identity) != m) {
            fail("NotAnAction", {m}, "identity does not act trivially");
            action_ok = false;
        }
    for (int m = 0; m < g2.order && action_ok; ++m)
        for (int g = 0; g < g1.order && action_ok; ++g)
            for (int h = 0; h < g1.order; ++h)
                if (x.act(x.act(m, g), h) != x.act(m, g1.mul[g][h])) {
                    fail("NotAnAction", {m, g, h}, "(m^g)^h != m^(g*h)");
                    action_ok = false;
                    break;
                }

    // Action axiom 1: each g acts as an automorphism of X2.
    for (int g = 0; g < g1.order; ++g) {
        bool bad = false;
        for (int m = 0; m < g2.order && !bad; ++m)
            for (int m2 = 0; m2 < g2.order; ++m2)
                if (x.act(g2.mul[m][m2], g) != g2.mul[x.act(m, g)][x.act(m2, g)]) {
                    fail("NotAutomorphism", {m, m2, g}, "(m*n)^g != m^g * n^g");
                    bad = true;
                    break;
                }
        if (bad) break;
    }

    // Boundary is a homomorphism.
    if (x.boundary[g2.identity] != g1.identity) {
        fail("BoundaryNotHom", {g2.identity}, "boundary does not fix the identity");
    } else {
        bool ok = true;
        for (int m = 0; m < g2.order && ok; ++m)
            for (int m2 = 0; m2 < g2.order; ++m2)
                if (x.boundary[g2.mul[m][m2]] != g1.mul[x.boundary[m]][x.boundary[m2]]) {
                    fail("BoundaryNotHom", {m, m2}, "boundary(m*n) != boundary(m)*boundary(n)");
                    ok = false;
                    break;
                }
    }

    // XMod1: boundary(m^g) = g^-1 boundary(m) g.
    {
        bool ok = true;
        for (int m = 0; m < g2.order && ok; ++m)
            for (int g = 0; g < g1.order; ++g)
                if (x.boundary[x.act(m, g)] != g1.conjugate(x.boundary[m], g)) {
                    fail("XMod1Violation", {m, g}, "boundary(m^g) != g^-1 boundary(m) g");
                    ok = false;
                    break;
                }
    }

    // XMod2 (Peiffer): m^{boundary(n)} = n^-1 m n.
    {
        bool ok = true;
        for (int m = 0; m < g2.order && ok; ++m)
            for (int n = 0; n < g2.order; ++n)
                if (x.act(m, x.boundary[n]) != g2.conjugate(m, n)) {
                    fail("XMod2Violation", {m, n}, "m^boundary(n) != n^-1 m n");
                    ok = false;
                    break;
                }
    }
    return report;
}

void require_valid(const CrossedModule& x) {
    ValidationReport report = validate(x);
    if (report.pass()) return;
    std::ostringstream msg;
    msg << "crossed module";
    if (!x.name.empty()) msg << " '" << x.name << "'";
    msg << " fails " << report.failures.front().axiom << ": " << report.failures.front().detail;
    throw InputError(report.failures.front().axiom, msg.str());
}

ExactnessData exactness(const CrossedModule& x) {
    const Group& g1 = x.x1;
    const Group& g2 = x.x2;
    ExactnessData e;
    for (int m = 0; m < g2.order; ++m)
        if (x.boundary[m] == g1.identity) e.kernel.push_back(m);
    {
        std::vector<int> img(x.boundary);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        e.image = std::move(img);
    }

    // K is central in X2.
    for (int k : e.kernel)
        for (int m = 0; m < g2.order; ++m)
            internal_check(g2.mul[k][m] == g2.mul[m][k], "InternalInconsistency",
                           "kernel of the boundary is not central in X2");
    // I is normal in X1.
    std::vector<char> in_image(static_cast<size_t>(g1.order), 0);
    for (int i : e.image) in_image[static_cast<size_t>(i)] = 1;
    for (int i : e.image)
        for (int g = 0; g < g1.order; ++g)
            internal_check(in_image[static_cast<size_t>(g1.conjugate(i, g))],
                           "InternalInconsistency", "image of the boundary is not normal in X1");

    // Right cosets I\X1 ordered by minimal member.
    e.coset_of.assign(static_cast<size_t>(g1.order), -1);
    for (int y = 0; y < g1.order; ++y) {
        if (e.coset_of[static_cast<size_t>(y)] >= 0) continue;
        int idx = static_cast<int>(e.cosets.size());
        std::vector<int> members;
        for (int i : e.image) {
            int z = g1.mul[i][y];
            if (e.coset_of[static_cast<size_t>(z)] < 0) {
                e.coset_of[static_cast<size_t>(z)] = idx;
                members.push_back(z);
            }
        }
        std::sort(members.begin(), members.end());
        e.coset_rep.push_back(members.front());
        e.cosets.push_back(std::move(members));
    }

    e.global_order = static_cast<std::int64_t>(e.kernel.size()) * g1.order;
    internal_check(e.global_order ==
                       static_cast<std::int64_t>(g2.order) * static_cast<std::int64_t>(e.cosets.size()),
                   "InternalInconsistency", "|X2||C| != |K||X1|");
    e.boundary_bijective = static_cast<int>(e.kernel.size()) == 1 &&
                           static_cast<int>(e.image.size()) == g1.order &&
                           g1.order == g2.order;
    e.image_exponent = 1;
    for (int i : e.image)
        e.image_exponent = static_cast<int>(std::lcm(e.image_exponent, g1.element_order[i]));
    return e;
}

CrossedModule make_RG(const Group& g) {
    CrossedModule x;
    x.x1 = g;
    x.x2 = named_group("Z1");
    x.action = trivial_action(1, g);
    x.boundary = {g.identity};
    x.name = "R(" + (g.name.empty() ? "G" : g.name) + ")";
    require_valid(x);
    return x;
}

CrossedModule make_DG(const Group& g) {
    CrossedModule x;
    x.x1 = g;
    x.x2 = g;
    x.action.domain_size = g.order;
    x.action.group_order = g.order;
    x.action.act.assign(static_cast<size_t>(g.order), std::vector<int>(static_cast<size_t>(g.order)));
    for (int m = 0; m < g.order; ++m)
        for (int h = 0; h < g.order; ++h) x.action.act[m][h] = g.conjugate(m, h);
    x.boundary.resize(static_cast<size_t>(g.order));
    std::iota(x.boundary.begin(), x.boundary.end(), 0);
    x.name = "D(" + (g.name.empty() ? "G" : g.name) + ")";
    require_valid(x);
    return x;
}

CrossedModule make_mod2_fixture() {
    CrossedModule x;
    x.x1 = named_group("Z2");
    x.x2 = named_group("Z4");
    x.action = trivial_action(4, x.x1);
    x.boundary = {0, 1, 0, 1};  // Z4 element i is the i-th power of the generator
    x.name = "Z4->Z2";
    require_valid(x);
    return x;
}

CrossedModule make_trivial_boundary_fixture() {
    CrossedModule x;
    x.x1 = named_group("Z2");
    x.x2 = named_group("Z2");
    x.action = trivial_action(2, x.x1);
    x.boundary = {0, 0};
    x.name = "Z2/Z2-trivial";
    require_valid(x);
    return x;
}

}  // namespace xmodcat
