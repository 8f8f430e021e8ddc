#include "xmodcat/xchar.hpp"

#include "xmodcat/errors.hpp"
#include "xmodcat/parallel.hpp"

#include <algorithm>
#include <map>

namespace xmodcat {

namespace {

XCharacter zero_character(const CrossedModule& x) {
    XCharacter psi;
    psi.xm = &x;
    psi.values.assign(static_cast<size_t>(x.x2.order),
                      std::vector<Cyclotomic>(static_cast<size_t>(x.x1.order)));
    return psi;
}

// Class-function certification: zero off the commuting support, invariant
// under simultaneous conjugation. The off-support zero check runs over the
// full table; invariance only needs the support (it maps support to support).
bool is_class_function(const XCharacter& psi) {
    const CrossedModule& x = *psi.xm;
    for (int m = 0; m < x.x2.order; ++m)
        for (int g = 0; g < x.x1.order; ++g)
            if (x.act(m, g) != m && !psi.values[m][g].is_zero()) return false;
    for (int m = 0; m < x.x2.order; ++m)
        for (int g = 0; g < x.x1.order; ++g) {
            if (x.act(m, g) != m || psi.values[m][g].is_zero()) continue;
            for (int h = 0; h < x.x1.order; ++h) {
                if (psi.values[x.act(m, h)][x.x1.conjugate(g, h)] != psi.values[m][g])
                    return false;
            }
        }
    return true;
}

void require_class_function(const XCharacter& psi, const char* who, bool internal) {
    if (is_class_function(psi)) return;
    if (internal)
        throw InternalError("OrthogonalityFailure",
                            std::string(who) + ": produced a non-class-function");
    throw InputError("NotACharacter", std::string(who) + ": input is not a class function");
}

void require_same_xmod(const XCharacter& a, const XCharacter& b) {
    if (a.xm != b.xm)
        throw InputError("MixedCrossedModules", "characters belong to different crossed modules");
}

// Support-restricted inner product; valid whenever both arguments are class
// functions (all other terms vanish).
Cyclotomic inner_product_on_support(const XCharacter& a, const XCharacter& b,
                                    const std::vector<std::pair<int, int>>& support) {
    const CrossedModule& x = *a.xm;
    Cyclotomic::Accumulator acc(x.x1.exponent);
    for (auto [m, g] : support) {
        const Cyclotomic& va = a.values[m][g];
        if (va.is_zero()) continue;
        const Cyclotomic& vb = b.values[m][g];
        if (vb.is_zero()) continue;
        acc.add_conj_mul(va, vb);
    }
    return Cyclotomic(Rational(1, x.x1.order)) * acc.value();
}

std::vector<std::pair<int, int>> nonzero_entries(const XCharacter& psi) {
    const CrossedModule& x = *psi.xm;
    std::vector<std::pair<int, int>> entries;
    for (int m = 0; m < x.x2.order; ++m)
        for (int g = 0; g < x.x1.order; ++g)
            if (!psi.values[m][g].is_zero()) entries.emplace_back(m, g);
    return entries;
}

struct OrbitBundle {
    OrbitData data;
    CharacterTable table;
    std::vector<int> position_in_orbit;  // X2 index -> orbit position or -1
};

XCharacter induced_character(const CrossedModule& x, const OrbitBundle& bundle, int row,
                             const std::vector<int>& transversal) {
    XCharacter psi = zero_character(x);
    const Subgroup& stab = bundle.data.stabilizer;
    for (size_t i = 0; i < bundle.data.orbit.size(); ++i) {
        int m = bundle.data.orbit[i];
        int t = transversal[i];
        int t_inv = x.x1.inv[t];
        for (int g = 0; g < x.x1.order; ++g) {
            if (x.act(m, g) != m) continue;
            int h = x.x1.mul[x.x1.mul[t][g]][t_inv];
            int h_idx = stab.from_parent[static_cast<size_t>(h)];
            internal_check(h_idx >= 0, "CompletenessFailure",
                           "conjugated element fell outside the stabilizer");
            psi.values[m][g] = bundle.table.values[row][stab.group.class_of[h_idx]];
        }
    }
    return psi;
}

}  // namespace

Cyclotomic XCharacter::dimension() const {
    Cyclotomic::Accumulator acc(xm->x1.exponent);
    for (int m = 0; m < xm->x2.order; ++m) acc.add(values[m][xm->x1.identity]);
    return acc.value();
}

std::vector<std::pair<int, int>> commuting_pairs(const CrossedModule& x) {
    std::vector<std::pair<int, int>> pairs;
    for (int m = 0; m < x.x2.order; ++m)
        for (int g = 0; g < x.x1.order; ++g)
            if (x.act(m, g) == m) pairs.emplace_back(m, g);
    return pairs;
}

std::int64_t class_pair_count(const CrossedModule& x) {
    std::vector<std::vector<char>> seen(static_cast<size_t>(x.x2.order),
                                        std::vector<char>(static_cast<size_t>(x.x1.order), 0));
    std::int64_t orbits = 0;
    for (int m = 0; m < x.x2.order; ++m) {
        for (int g = 0; g < x.x1.order; ++g) {
            if (x.act(m, g) != m || seen[m][g]) continue;
            ++orbits;
            for (int h = 0; h < x.x1.order; ++h)
                seen[static_cast<size_t>(x.act(m, h))][static_cast<size_t>(x.x1.conjugate(g, h))] = 1;
        }
    }
    return orbits;
}

Irreducibles irreducibles(const CrossedModule& x) {
    Irreducibles result;
    result.conductor = x.x1.exponent;

    std::vector<char> seen(static_cast<size_t>(x.x2.order), 0);
    std::vector<OrbitBundle> bundles;
    for (int m0 = 0; m0 < x.x2.order; ++m0) {
        if (seen[static_cast<size_t>(m0)]) continue;
        OrbitBundle bundle;
        bundle.data = orbit_stabilizer(x.action, x.x1, m0);
        for (int m : bundle.data.orbit) seen[static_cast<size_t>(m)] = 1;
        bundle.table = character_table(bundle.data.stabilizer.group);
        bundles.push_back(std::move(bundle));
    }

    bool recheck_transversal =
        static_cast<std::int64_t>(x.x1.order) * x.x2.order <= 64;
    for (const OrbitBundle& bundle : bundles) {
        int m0 = bundle.data.orbit.front();
        for (int row = 0; row < bundle.table.irr_count; ++row) {
            IrreducibleLabel label;
            label.orbit_rep = m0;
            label.stab_irr = row;
            label.dim = static_cast<std::int64_t>(bundle.data.orbit.size()) *
                        bundle.table.degrees[row];
            XCharacter psi = induced_character(x, bundle, row, bundle.data.transversal);
            require_class_function(psi, "irreducibles", /*internal=*/true);
            internal_check(psi.dimension() == Cyclotomic(Rational(label.dim)),
                           "CompletenessFailure", "dimension formula mismatch");
            if (recheck_transversal) {
                // Well-definedness probe: the maximal transversal must induce
                // the same character as the minimal one.
                std::vector<int> reversed(bundle.data.orbit.size());
                for (size_t i = 0; i < bundle.data.orbit.size(); ++i) {
                    int m = bundle.data.orbit[i];
                    for (int g = x.x1.order - 1; g >= 0; --g)
                        if (x.act(m0, g) == m) { reversed[i] = g; break; }
                }
                XCharacter alt = induced_character(x, bundle, row, reversed);
                internal_check(alt.values == psi.values, "CompletenessFailure",
                               "induced character depends on the transversal choice");
            }
            result.labels.push_back(label);
            result.chars.push_back(std::move(psi));
        }
    }

    internal_check(static_cast<std::int64_t>(result.labels.size()) == class_pair_count(x),
                   "CompletenessFailure",
                   "irreducible count does not match the class-pair count");
    std::int64_t dim_sq = 0;
    for (const auto& label : result.labels) dim_sq += label.dim * label.dim;
    internal_check(dim_sq == static_cast<std::int64_t>(x.x1.order) * x.x2.order,
                   "CompletenessFailure", "sum of squared dimensions != |X1||X2|");

    auto support = commuting_pairs(x);
    for (size_t p = 0; p < result.chars.size(); ++p)
        for (size_t q = p; q < result.chars.size(); ++q) {
            Cyclotomic ip = inner_product_on_support(result.chars[p], result.chars[q], support);
            internal_check(ip == Cyclotomic(p == q ? 1 : 0), "OrthogonalityFailure",
                           "irreducible characters are not orthonormal");
        }

    // Locate the trivial character: orbit of the X2 identity, all-ones
    // stabilizer row; cross-check against the closed form delta(m, 1).
    result.identity_index = -1;
    for (int i = 0; i < result.count(); ++i) {
        if (result.labels[static_cast<size_t>(i)].orbit_rep != x.x2.identity) continue;
        const XCharacter& psi = result.chars[static_cast<size_t>(i)];
        bool matches = true;
        for (int m = 0; m < x.x2.order && matches; ++m)
            for (int g = 0; g < x.x1.order; ++g)
                if (psi.values[m][g] != Cyclotomic(m == x.x2.identity ? 1 : 0)) {
                    matches = false;
                    break;
                }
        if (matches) {
            result.identity_index = i;
            break;
        }
    }
    internal_check(result.identity_index >= 0, "CompletenessFailure",
                   "trivial character not found among the irreducibles");
    return result;
}

Cyclotomic inner_product(const XCharacter& a, const XCharacter& b) {
    require_same_xmod(a, b);
    const CrossedModule& x = *a.xm;
    Cyclotomic::Accumulator acc(x.x1.exponent);
    for (int m = 0; m < x.x2.order; ++m)
        for (int g = 0; g < x.x1.order; ++g) {
            const Cyclotomic& va = a.values[m][g];
            if (va.is_zero()) continue;
            const Cyclotomic& vb = b.values[m][g];
            if (vb.is_zero()) continue;
            acc.add_conj_mul(va, vb);
        }
    return Cyclotomic(Rational(1, x.x1.order)) * acc.value();
}

XCharacter char_trivial(const CrossedModule& x) {
    XCharacter psi = zero_character(x);
    for (int g = 0; g < x.x1.order; ++g) psi.values[x.x2.identity][g] = Cyclotomic(1);
    require_class_function(psi, "char_trivial", /*internal=*/true);
    return psi;
}

XCharacter char_regular(const CrossedModule& x) {
    XCharacter psi = zero_character(x);
    for (int m = 0; m < x.x2.order; ++m)
        psi.values[m][x.x1.identity] = Cyclotomic(x.x1.order);
    require_class_function(psi, "char_regular", /*internal=*/true);
    return psi;
}

XCharacter char_vacuum(const CrossedModule& x, const ExactnessData& e) {
    XCharacter psi = zero_character(x);
    std::vector<std::vector<std::int64_t>> count(
        static_cast<size_t>(x.x2.order), std::vector<std::int64_t>(static_cast<size_t>(x.x1.order), 0));
    for (int kx : e.kernel) {
        for (size_t c = 0; c < e.cosets.size(); ++c) {
            int y = e.coset_rep[c];
            int m = x.act(kx, y);  // independent of the coset representative
            for (int g = 0; g < x.x1.order; ++g)
                if (e.coset_of[static_cast<size_t>(x.x1.mul[y][g])] == static_cast<int>(c))
                    ++count[static_cast<size_t>(m)][static_cast<size_t>(g)];
        }
    }
    for (int m = 0; m < x.x2.order; ++m)
        for (int g = 0; g < x.x1.order; ++g)
            if (count[m][g] != 0) psi.values[m][g] = Cyclotomic(Rational(count[m][g]));
    require_class_function(psi, "char_vacuum", /*internal=*/true);
    internal_check(psi.dimension() ==
                       Cyclotomic(Rational(static_cast<std::int64_t>(e.kernel.size()) *
                                           static_cast<std::int64_t>(e.cosets.size()))),
                   "InternalInconsistency", "vacuum dimension != |K||C|");
    return psi;
}

std::vector<std::int64_t> decompose(const Irreducibles& irr, const XCharacter& psi) {
    internal_check(!irr.chars.empty(), "CompletenessFailure", "empty irreducible set");
    require_same_xmod(irr.chars.front(), psi);
    const CrossedModule& x = *psi.xm;
    require_class_function(psi, "decompose", /*internal=*/false);

    std::vector<std::int64_t> mult;
    mult.reserve(irr.chars.size());
    std::vector<std::pair<int, int>> psi_support = nonzero_entries(psi);
    for (const XCharacter& chi : irr.chars) {
        Cyclotomic ip = inner_product_on_support(chi, psi, psi_support);
        if (!ip.is_rational() || !is_integer(ip.rational_value()) || ip.rational_value() < 0)
            throw InputError("NotACharacter",
                             "multiplicity <psi_p, psi> = " + ip.str() +
                                 " is not a non-negative integer");
        mult.push_back(ip.rational_value().convert_to<std::int64_t>());
    }
    // Reconstruction: sum mult_p psi_p = psi. Outside the union of the
    // contributing supports both sides vanish identically, so checking the
    // union is exhaustive.
    std::vector<char> in_union(static_cast<size_t>(x.x2.order) * x.x1.order, 0);
    std::vector<std::pair<int, int>> union_support;
    auto mark = [&](int m, int g) {
        char& flag = in_union[static_cast<size_t>(m) * x.x1.order + g];
        if (!flag) {
            flag = 1;
            union_support.emplace_back(m, g);
        }
    };
    for (auto [m, g] : psi_support) mark(m, g);
    for (size_t p = 0; p < irr.chars.size(); ++p)
        if (mult[p] != 0)
            for (auto [m, g] : nonzero_entries(irr.chars[p])) mark(m, g);
    for (auto [m, g] : union_support) {
        Cyclotomic::Accumulator acc(x.x1.exponent);
        for (size_t p = 0; p < irr.chars.size(); ++p)
            if (mult[p] != 0) acc.add_scaled(Rational(mult[p]), irr.chars[p].values[m][g]);
        if (acc.value() != psi.values[m][g])
            throw InputError("NotACharacter", "multiplicities do not reconstruct the character");
    }
    return mult;
}

XCharacter tensor_character(const XCharacter& a, const XCharacter& b) {
    require_same_xmod(a, b);
    const CrossedModule& x = *a.xm;
    XCharacter psi = zero_character(x);
    // Column supports: nonzero m's of each factor at fixed g. Every term of
    // the defining sum with a vanishing factor is skipped up front.
    std::vector<std::pair<int, int>> sup_a = nonzero_entries(a);
    std::vector<std::pair<int, int>> sup_b = nonzero_entries(b);
    std::vector<std::vector<int>> a_at(static_cast<size_t>(x.x1.order));
    std::vector<std::vector<int>> b_at(static_cast<size_t>(x.x1.order));
    for (auto [m, g] : sup_a) a_at[static_cast<size_t>(g)].push_back(m);
    for (auto [m, g] : sup_b) b_at[static_cast<size_t>(g)].push_back(m);
    for (int g = 0; g < x.x1.order; ++g) {
        std::map<int, Cyclotomic::Accumulator> acc;
        for (int n : a_at[static_cast<size_t>(g)]) {
            const Cyclotomic& va = a.values[n][g];
            for (int m2 : b_at[static_cast<size_t>(g)]) {
                int m = x.x2.mul[n][m2];
                auto it = acc.find(m);
                if (it == acc.end())
                    it = acc.emplace(m, Cyclotomic::Accumulator(x.x1.exponent)).first;
                it->second.add_mul(va, b.values[m2][g]);
            }
        }
        for (auto& [m, a_acc] : acc)
            psi.values[static_cast<size_t>(m)][static_cast<size_t>(g)] = a_acc.value();
    }
    require_class_function(psi, "tensor_character", /*internal=*/true);
    return psi;
}

FusionTensor fusion_tensor(const CrossedModule& x, const Irreducibles& irr, int jobs) {
    const int count = irr.count();
    FusionTensor tensor;
    tensor.count = count;
    tensor.n.assign(static_cast<size_t>(count) * count * count, 0);

    // Conjugated tables once.
    std::vector<std::vector<std::vector<Cyclotomic>>> conj_chars(static_cast<size_t>(count));
    for (int r = 0; r < count; ++r) {
        conj_chars[r].assign(static_cast<size_t>(x.x2.order),
                             std::vector<Cyclotomic>(static_cast<size_t>(x.x1.order)));
        for (int m = 0; m < x.x2.order; ++m)
            for (int g = 0; g < x.x1.order; ++g)
                conj_chars[r][m][g] = irr.chars[r].values[m][g].conj();
    }
    // Per-character column supports: nonzero m's at fixed g, and the set of
    // characters supported at a given m (those whose orbit contains it).
    std::vector<std::vector<std::vector<int>>> support_at(
        static_cast<size_t>(count), std::vector<std::vector<int>>(static_cast<size_t>(x.x1.order)));
    std::vector<std::vector<int>> chars_at(static_cast<size_t>(x.x2.order));
    for (int r = 0; r < count; ++r) {
        std::vector<char> seen_m(static_cast<size_t>(x.x2.order), 0);
        for (int m = 0; m < x.x2.order; ++m)
            for (int g = 0; g < x.x1.order; ++g)
                if (!irr.chars[r].values[m][g].is_zero()) {
                    support_at[static_cast<size_t>(r)][static_cast<size_t>(g)].push_back(m);
                    if (!seen_m[static_cast<size_t>(m)]) {
                        seen_m[static_cast<size_t>(m)] = 1;
                        chars_at[static_cast<size_t>(m)].push_back(r);
                    }
                }
    }

    // Route 1: the direct triple-sum formula.
    std::vector<std::int64_t> formula(tensor.n.size(), 0);
    parallel_for(static_cast<std::int64_t>(count) * count, jobs, [&](std::int64_t pq) {
        int p = static_cast<int>(pq / count);
        int q = static_cast<int>(pq % count);
        std::vector<Cyclotomic::Accumulator> acc(static_cast<size_t>(count),
                                                 Cyclotomic::Accumulator(irr.conductor));
        for (int g = 0; g < x.x1.order; ++g) {
            for (int m : support_at[static_cast<size_t>(p)][static_cast<size_t>(g)]) {
                const Cyclotomic& vp = irr.chars[p].values[m][g];
                for (int n : support_at[static_cast<size_t>(q)][static_cast<size_t>(g)]) {
                    const Cyclotomic& vq = irr.chars[q].values[n][g];
                    int mn = x.x2.mul[m][n];
                    for (int r : chars_at[static_cast<size_t>(mn)]) {
                        const Cyclotomic& vr = conj_chars[r][mn][g];
                        if (!vr.is_zero()) acc[r].add_mul(vp, vq, vr);
                    }
                }
            }
        }
        for (int r = 0; r < count; ++r) {
            Cyclotomic value = Cyclotomic(Rational(1, x.x1.order)) * acc[r].value();
            if (!value.is_rational() || !is_integer(value.rational_value()) ||
                value.rational_value() < 0)
                throw InternalError("NonIntegralFusion",
                                    "fusion coefficient " + value.str() +
                                        " is not a non-negative integer");
            formula[(static_cast<size_t>(p) * count + q) * count + r] =
                value.rational_value().convert_to<std::int64_t>();
        }
    });

    // Route 2: tensor character then decompose.
    std::vector<std::int64_t> via_decompose(tensor.n.size(), 0);
    parallel_for(static_cast<std::int64_t>(count) * count, jobs, [&](std::int64_t pq) {
        int p = static_cast<int>(pq / count);
        int q = static_cast<int>(pq % count);
        XCharacter prod = tensor_character(irr.chars[p], irr.chars[q]);
        std::vector<std::int64_t> mult = decompose(irr, prod);
        for (int r = 0; r < count; ++r)
            via_decompose[(static_cast<size_t>(p) * count + q) * count + r] = mult[r];
    });

    internal_check(formula == via_decompose, "NonIntegralFusion",
                   "formula-route fusion differs from tensor-then-decompose");
    tensor.n = std::move(formula);

    // Unit law, commutativity, dimension count.
    for (int q = 0; q < count; ++q)
        for (int r = 0; r < count; ++r)
            internal_check(tensor.at(irr.identity_index, q, r) == (q == r ? 1 : 0),
                           "NonIntegralFusion", "unit law violated");
    for (int p = 0; p < count; ++p)
        for (int q = 0; q < count; ++q) {
            std::int64_t dim_sum = 0;
            for (int r = 0; r < count; ++r) {
                internal_check(tensor.at(p, q, r) == tensor.at(q, p, r), "NonIntegralFusion",
                               "fusion is not commutative");
                dim_sum += tensor.at(p, q, r) * irr.labels[r].dim;
            }
            internal_check(dim_sum == irr.labels[p].dim * irr.labels[q].dim, "NonIntegralFusion",
                           "fusion dimension count failed");
        }
    return tensor;
}

}  // namespace xmodcat
