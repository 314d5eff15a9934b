#include "rootposet/delta_poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rootposet/errors.hpp"

namespace rootposet {

TypeCounts count_types(const std::vector<TypedEdge>& edges, std::size_t rank) {
    TypeCounts counts(rank + 1, 0);
    for (const auto& e : edges) ++counts.at(e.type);
    return counts;
}

std::vector<TypedEdge> typed_edges_delta_plus(const RootSystem& rs) {
    std::vector<TypedEdge> edges;
    for (std::size_t lower = 0; lower < rs.num_positive(); ++lower)
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            const int upper = rs.sum_index(lower, rs.simple_index(i));
            if (upper >= 0 && rs.is_positive_index(static_cast<std::size_t>(upper)))
                edges.push_back({static_cast<std::size_t>(upper), lower, i + 1});
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

FinitePoset delta_plus_poset(const RootSystem& rs) {
    const auto& roots = rs.positive_roots();
    return FinitePoset::from_relation(roots.size(),
                                      [&](std::size_t x, std::size_t y) { return rs.leq(roots[x], roots[y]); });
}

TypeCounts edge_type_counts(const RootSystem& rs) { return count_types(typed_edges_delta_plus(rs), rs.rank()); }

TypeCounts expected_delta_edge_counts(const RootSystem& rs) {
    TypeCounts expected(rs.rank() + 1, 0);
    const int h = rs.coxeter_number();
    const int hs = rs.dual_coxeter_number();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (rs.simply_laced()) expected[i + 1] = h - 2;
        else if (rs.is_long_simple(i)) expected[i + 1] = hs - 2;
        else expected[i + 1] = rs.id().family == Family::G ? h - 3 : h - 2;
    }
    return expected;
}

void verify_edge_type_counts(const RootSystem& rs) {
    const auto got = edge_type_counts(rs);
    const auto want = expected_delta_edge_counts(rs);
    for (std::size_t t = 1; t < got.size(); ++t)
        if (got[t] != want[t]) {
            std::ostringstream msg;
            msg << rs.name() << ": type alpha_" << t << " has " << got[t] << " edges, expected " << want[t];
            throw VerificationFailure(msg.str());
        }
}

int subsystem_coxeter_number(const RootSystem& rs, bool long_roots) {
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < rs.num_positive(); ++k)
        if (rs.is_long(rs.root(k)) == long_roots) members.push_back(k);
    if (members.empty()) throw UnsupportedInput(rs.name() + ": no roots of the requested length");

    // The component containing the first member: close under non-orthogonality.
    std::vector<bool> in(members.size(), false);
    std::vector<std::size_t> stack{0};
    in[0] = true;
    while (!stack.empty()) {
        const std::size_t a = stack.back();
        stack.pop_back();
        for (std::size_t b = 0; b < members.size(); ++b)
            if (!in[b] && rs.inner(rs.root(members[a]), rs.root(members[b])) != Rational(0)) {
                in[b] = true;
                stack.push_back(b);
            }
    }
    RationalMatrix span;
    std::size_t count = 0;
    for (std::size_t b = 0; b < members.size(); ++b)
        if (in[b]) {
            ++count;
            span.push_back(to_rational(rs.root(members[b]).coeffs));
        }
    const std::size_t r = matrix_rank(span);
    return static_cast<int>(2 * count / r);
}

ShortRootDiagram short_root_edges(const RootSystem& rs) {
    if (rs.simply_laced()) throw UnsupportedInput(rs.name() + " is simply-laced: there is no short-root subdiagram");
    ShortRootDiagram d;
    std::vector<long> position(rs.num_positive(), -1);
    for (std::size_t k = 0; k < rs.num_positive(); ++k)
        if (!rs.is_long(rs.root(k))) {
            position[k] = static_cast<long>(d.vertices.size());
            d.vertices.push_back(k);
        }
    for (const auto& e : typed_edges_delta_plus(rs))
        if (position[e.upper] >= 0 && position[e.lower] >= 0)
            d.edges.push_back({static_cast<std::size_t>(position[e.upper]), static_cast<std::size_t>(position[e.lower]),
                               e.type});
    std::sort(d.edges.begin(), d.edges.end());
    d.per_type = count_types(d.edges, rs.rank());
    d.h_short = subsystem_coxeter_number(rs, false);
    d.h_long = subsystem_coxeter_number(rs, true);
    return d;
}

TypeCounts expected_short_root_counts(const RootSystem& rs, const ShortRootDiagram& d) {
    TypeCounts expected(rs.rank() + 1, 0);
    for (std::size_t i = 0; i < rs.rank(); ++i)
        expected[i + 1] = rs.is_long_simple(i) ? rs.dual_coxeter_number() - d.h_long : d.h_short - 2;
    return expected;
}

bool short_diagram_matches_induced_subposet(const RootSystem& rs, const ShortRootDiagram& d) {
    const auto p = FinitePoset::from_relation(d.vertices.size(), [&](std::size_t x, std::size_t y) {
        return rs.leq(rs.root(d.vertices[x]), rs.root(d.vertices[y]));
    });
    const auto h = hasse(p);
    std::vector<std::pair<std::size_t, std::size_t>> deletion;
    for (const auto& e : d.edges) deletion.emplace_back(e.upper, e.lower);
    std::sort(deletion.begin(), deletion.end());
    return deletion == h.edges;
}

HasseDiagram delta_plus_hasse(const RootSystem& rs, std::vector<std::string>* edge_types) {
    HasseDiagram h;
    h.vertex_count = rs.num_positive();
    for (const auto& e : typed_edges_delta_plus(rs)) {
        h.edges.emplace_back(e.upper, e.lower);
        if (edge_types) edge_types->push_back(type_label(e.type));
    }
    return h;
}

std::string export_delta_dot(const RootSystem& rs) {
    std::vector<std::string> types;
    const auto h = delta_plus_hasse(rs, &types);
    std::vector<std::string> labels;
    for (const auto& r : rs.positive_roots()) labels.push_back(to_string(r));
    return export_dot(h, labels, types, "Delta+(" + rs.name() + ")");
}

}  // namespace rootposet
