#include "rootposet/abelian.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "rootposet/errors.hpp"

namespace rootposet {

bool is_abelian(const RootSystem& rs, const RootSet& ideal) {
    const auto roots = ideal.indices();
    for (std::size_t x = 0; x < roots.size(); ++x)
        for (std::size_t y = x; y < roots.size(); ++y)
            if (rs.sum_index(roots[x], roots[y]) >= 0) return false;
    return true;
}

std::vector<std::size_t> enumerate_abelian(const AdIdealPoset& poset) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < poset.size(); ++k)
        if (is_abelian(poset.root_system(), poset[k].roots)) out.push_back(k);
    return out;
}

HasseDiagram TypedSubdiagram::hasse() const {
    HasseDiagram h;
    h.vertex_count = ideals.size();
    for (const auto& e : edges) h.edges.emplace_back(e.upper, e.lower);
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

IntPolynomial TypedSubdiagram::covering_polynomial() const {
    std::vector<std::size_t> kappa(ideals.size(), 0);
    for (const auto& e : edges) ++kappa[e.upper];
    return ideals.empty() ? IntPolynomial() : IntPolynomial::from_exponents(kappa);
}

TypedSubdiagram typed_subdiagram(const AffineWeylGroup& group, const AdIdealPoset& poset,
                                 std::vector<std::size_t> ideals) {
    TypedSubdiagram d;
    std::sort(ideals.begin(), ideals.end());
    d.ideals = std::move(ideals);
    std::map<std::size_t, std::size_t> position;
    for (std::size_t k = 0; k < d.ideals.size(); ++k) position[d.ideals[k]] = k;
    for (std::size_t k = 0; k < d.ideals.size(); ++k) {
        const auto& ideal = poset[d.ideals[k]];
        d.minimal.push_back(minimal_element(group, ideal));
        for (auto g : ideal.generators) {
            const auto lower = position.find(poset.remove_generator(d.ideals[k], g));
            if (lower == position.end()) throw ConsistencyError("family of ideals is not closed downwards");
            d.edges.push_back({k, lower->second, edge_type(group, d.minimal.back(), g)});
        }
    }
    d.per_type = count_types(d.edges, group.rank());
    return d;
}

TypedSubdiagram abelian_diagram(const AffineWeylGroup& group, const AdIdealPoset& poset) {
    return typed_subdiagram(group, poset, enumerate_abelian(poset));
}

TypedSubdiagram long_abelian_diagram(const AffineWeylGroup& group, const AdIdealPoset& poset) {
    const RootSystem& rs = group.root_system();
    if (rs.simply_laced()) throw UnsupportedInput(rs.name() + " is simply-laced: every root is long");
    std::vector<std::size_t> chosen;
    for (auto k : enumerate_abelian(poset)) {
        const auto roots = poset[k].roots.indices();
        if (std::all_of(roots.begin(), roots.end(), [&](std::size_t r) { return rs.is_long(rs.root(r)); }))
            chosen.push_back(k);
    }
    return typed_subdiagram(group, poset, std::move(chosen));
}

std::vector<CommutativeRoot> commutative_roots(const AffineWeylGroup& group) {
    const RootSystem& rs = group.root_system();
    std::vector<CommutativeRoot> out;
    for (std::size_t g = 0; g < rs.num_positive(); ++g) {
        auto principal = upper_ideal_generated_by(rs, {g});
        if (!is_abelian(rs, principal.roots)) continue;
        const auto me = minimal_element(group, principal);
        out.push_back({g, edge_type(group, me, g), std::move(principal)});
    }
    return out;
}

long commutative_count_formula(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    long count = static_cast<long>(n * (n + 1) / 2);
    for (std::size_t b = 0; b < n; ++b) {
        std::vector<std::size_t> nbrs;
        for (std::size_t j = 0; j < n; ++j)
            if (rs.dynkin_adjacent(b, j)) nbrs.push_back(j);
        if (nbrs.size() != 3) continue;
        long product = 1;
        for (auto start : nbrs) {
            // walk the tail away from the branch node
            long len = 0;
            std::size_t prev = b, cur = start;
            while (true) {
                ++len;
                std::size_t next = n;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != prev && rs.dynkin_adjacent(cur, j)) next = j;
                if (next == n) break;
                prev = cur;
                cur = next;
            }
            product *= len;
        }
        count += product;
    }
    return count;
}

std::vector<std::size_t> maximal_noncommutative(const RootSystem& rs, const std::vector<CommutativeRoot>& com) {
    std::vector<bool> commutative(rs.num_positive(), false);
    for (const auto& c : com) commutative[c.root] = true;
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < rs.num_positive(); ++g) {
        if (commutative[g]) continue;
        bool maximal = true;
        for (std::size_t h = 0; h < rs.num_positive() && maximal; ++h)
            if (h != g && !commutative[h] && rs.leq(rs.root(g), rs.root(h))) maximal = false;
        if (maximal) out.push_back(g);
    }
    return out;
}

bool meets_open_2A(const AffineWeylGroup& group, const Root& gamma) {
    const RootSystem& rs = group.root_system();
    const auto g = to_rational(gamma.coeffs);
    Rational lo(0), hi(0);
    for (const auto& v : group.fundamental_alcove_vertices()) {
        const Rational value = Rational(2) * rs.inner(g, v);
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    return lo < Rational(1) && Rational(1) < hi;
}

namespace {

std::vector<long> class_map(const RootSystem& rs, const std::vector<CommutativeRoot>& com) {
    std::vector<long> cls(rs.num_positive(), -1);
    for (const auto& c : com) cls[c.root] = static_cast<long>(c.klass);
    return cls;
}

}  // namespace

std::optional<std::string> check_class_independence(const AffineWeylGroup& group, const AdIdealPoset& poset,
                                                    const TypedSubdiagram& ab, const std::vector<CommutativeRoot>& com) {
    const RootSystem& rs = group.root_system();
    const auto cls = class_map(rs, com);
    for (std::size_t k = 0; k < ab.ideals.size(); ++k) {
        const auto& gens = poset[ab.ideals[k]].generators;
        const auto types = terminating_edge_types(group, ab.minimal[k]);
        for (std::size_t m = 0; m < gens.size(); ++m)
            if (cls[gens[m]] != static_cast<long>(types[m]))
                return to_string(rs.root(gens[m])) + " has class alpha_" + std::to_string(types[m]) +
                       " in an ideal of size " + std::to_string(poset[ab.ideals[k]].size()) + " but alpha_" +
                       std::to_string(cls[gens[m]]) + " in its principal ideal";
    }
    return std::nullopt;
}

std::optional<std::string> check_adjacent_classes(const RootSystem& rs, const std::vector<CommutativeRoot>& com) {
    const auto cls = class_map(rs, com);
    for (const auto& e : typed_edges_delta_plus(rs)) {
        if (cls[e.upper] < 0 || cls[e.lower] < 0) continue;
        const auto a = static_cast<std::size_t>(cls[e.upper]);
        const auto b = static_cast<std::size_t>(cls[e.lower]);
        if (!rs.extended_adjacent(a, b))
            return to_string(rs.root(e.upper)) + " (alpha_" + std::to_string(a) + ") and " +
                   to_string(rs.root(e.lower)) + " (alpha_" + std::to_string(b) + ")";
    }
    return std::nullopt;
}

std::optional<std::string> check_theta_orthogonal_class(const RootSystem& rs, const std::vector<CommutativeRoot>& com) {
    const auto cls = class_map(rs, com);
    std::vector<std::size_t> orth;
    for (std::size_t g = 0; g < rs.num_positive(); ++g)
        if (rs.inner(rs.root(g), rs.theta()) == Rational(0)) orth.push_back(g);
    for (auto g : orth) {
        const bool maximal = std::none_of(orth.begin(), orth.end(), [&](std::size_t h) {
            return h != g && rs.leq(rs.root(g), rs.root(h));
        });
        // the class is only defined for commutative roots
        if (!maximal || cls[g] < 0) continue;
        if (cls[g] != 0) return to_string(rs.root(g)) + " has class alpha_" + std::to_string(cls[g]);
    }
    return std::nullopt;
}

std::optional<std::string> check_cogenerator_classes(const RootSystem& rs, const AdIdealPoset& poset,
                                                     const TypedSubdiagram& ab,
                                                     const std::vector<CommutativeRoot>& com) {
    const auto cls = class_map(rs, com);
    for (auto k : ab.ideals) {
        const auto& gens = poset[k].generators;
        for (std::size_t x = 0; x < gens.size(); ++x)
            for (std::size_t y = x + 1; y < gens.size(); ++y) {
                const auto a = static_cast<std::size_t>(cls[gens[x]]), b = static_cast<std::size_t>(cls[gens[y]]);
                if (rs.extended_inner(a, b) != Rational(0))
                    return "generators " + to_string(rs.root(gens[x])) + " and " + to_string(rs.root(gens[y])) +
                           " have classes alpha_" + std::to_string(a) + ", alpha_" + std::to_string(b);
            }
    }
    return std::nullopt;
}

std::vector<GeneratorPair> type_a_pairs(const RootSystem& rs, const UpperIdeal& ideal) {
    std::vector<GeneratorPair> out;
    for (auto g : ideal.generators) {
        const auto& c = rs.root(g).coeffs;
        const auto first = std::find(c.begin(), c.end(), 1) - c.begin();
        const auto last = c.rend() - std::find(c.rbegin(), c.rend(), 1) - 1;
        out.emplace_back(static_cast<int>(first) + 1, static_cast<int>(last) + 2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

UpperIdeal suter_tau(const RootSystem& rs, const UpperIdeal& ideal) {
    if (rs.id().family != Family::A) throw UnsupportedInput("Suter's tau is defined for type A only");
    const int n = static_cast<int>(rs.rank());
    const auto pairs = type_a_pairs(rs, ideal);
    std::vector<GeneratorPair> next;
    // for the empty ideal read a_k = 0 and b_1 = n + 1
    const int ak = pairs.empty() ? 0 : pairs.back().first;
    const int b1 = pairs.empty() ? n + 1 : pairs.front().second;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (j + 1 == pairs.size() && pairs[j].second == n + 1) continue;
        next.emplace_back(pairs[j].first + 1, pairs[j].second + 1);
    }
    if (ak + 1 < b1) next.emplace_back(1, ak + 2);

    std::vector<std::size_t> roots;
    for (const auto& [a, b] : next) {
        Root r = Root::zero(rs.rank());
        for (int i = a; i < b; ++i) r[static_cast<std::size_t>(i - 1)] = 1;
        const auto idx = rs.positive_index(r);
        if (!idx) throw ConsistencyError("tau produced a non-root");
        roots.push_back(*idx);
    }
    auto result = upper_ideal_generated_by(rs, roots);
    std::sort(roots.begin(), roots.end());
    if (result.generators != roots) throw ConsistencyError("tau produced generators that are not an antichain");
    return result;
}

int max_orthogonal_simple_roots(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    int best = 0;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        bool independent = true;
        for (std::size_t i = 0; i < n && independent; ++i)
            for (std::size_t j = i + 1; j < n && independent; ++j)
                if ((mask >> i & 1UL) && (mask >> j & 1UL) && rs.dynkin_adjacent(i, j)) independent = false;
        if (independent) best = std::max(best, std::popcount(mask));
    }
    return best;
}

}  // namespace rootposet
