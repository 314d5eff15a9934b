#include <doctest.h>

#include <set>
#include <tuple>

#include "helpers.hpp"
#include "rootposet/delta_poset.hpp"
#include "rootposet/errors.hpp"
#include "rootposet/tables.hpp"

using namespace rootposet;

namespace {

// Covering pairs of (Delta^+, <=) straight from the definition of the order.
std::set<std::tuple<std::size_t, std::size_t, std::size_t>> brute_typed_covers(const RootSystem& rs) {
    const std::size_t m = rs.num_positive();
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t l = 0; l < m; ++l) {
            const auto& a = rs.root(u);
            const auto& b = rs.root(l);
            if (u == l || !rs.leq(b, a)) continue;
            bool cover = true;
            for (std::size_t k = 0; k < m && cover; ++k)
                if (k != u && k != l && rs.leq(b, rs.root(k)) && rs.leq(rs.root(k), a)) cover = false;
            if (!cover) continue;
            const Root d = a - b;
            std::size_t type = 0;
            for (std::size_t i = 0; i < rs.rank(); ++i)
                if (d[i] == 1 && d.height() == 1) type = i + 1;
            out.emplace(u, l, type);
        }
    return out;
}

}  // namespace

TEST_CASE("typed edges agree with the covering relation") {
    for (const auto& id : systems_up_to(5)) {
        const auto rs = RootSystem::build(id);
        std::set<std::tuple<std::size_t, std::size_t, std::size_t>> ours;
        for (const auto& e : typed_edges_delta_plus(rs)) ours.emplace(e.upper, e.lower, e.type);
        CHECK_MESSAGE(ours == brute_typed_covers(rs), id.name());
    }
}

TEST_CASE("edge counts per type") {
    for (const auto& id : systems_up_to(8)) {
        const auto rs = RootSystem::build(id);
        const auto counts = edge_type_counts(rs);
        REQUIRE(counts.size() == rs.rank() + 1);
        CHECK(counts[0] == 0);
        long total = 0;
        for (std::size_t i = 1; i <= rs.rank(); ++i) {
            long expect = rs.coxeter_number() - 2;
            if (rs.is_long_simple(i - 1)) expect = rs.dual_coxeter_number() - 2;
            else if (id.family == Family::G) expect = rs.coxeter_number() - 3;
            CHECK_MESSAGE(counts[i] == expect, id.name() << " type " << i);
            total += counts[i];
        }
        CHECK(counts == expected_delta_edge_counts(rs));
        CHECK(typed_edges_delta_plus(rs).size() == std::size_t(total));
    }
    CHECK(typed_edges_delta_plus(sys("F4")).size() == 34);
    CHECK(typed_edges_delta_plus(sys("E8")).size() == 8 * 28);
}

TEST_CASE("Delta+ covering polynomials") {
    for (const auto& id : systems_up_to(8)) {
        const auto rs = RootSystem::build(id);
        CHECK_MESSAGE(covering_polynomial(delta_plus_hasse(rs)) == delta_covering_table(rs), id.name());
        CHECK(covering_polynomial(delta_plus_poset(rs)) == covering_polynomial(delta_plus_hasse(rs)));
    }
    CHECK(covering_polynomial(delta_plus_hasse(sys("F4"))).to_string() == "4+7q+12q²+q³");
}

TEST_CASE("short-root diagram") {
    CHECK_THROWS_AS(short_root_edges(sys("E6")), UnsupportedInput);
    for (const char* name : {"B3", "B5", "C4", "F4", "G2"}) {
        const auto rs = sys(name);
        const auto d = short_root_edges(rs);
        long shorts = 0;
        for (const auto& r : rs.positive_roots()) shorts += !rs.is_long(r);
        CHECK(d.vertices.size() == std::size_t(shorts));
        CHECK_MESSAGE(d.per_type == expected_short_root_counts(rs, d), name);
    }
    // short roots of B_n form A_1^n, of C_n form D_n
    CHECK(subsystem_coxeter_number(sys("C5"), false) == 8);
    CHECK(subsystem_coxeter_number(sys("B5"), true) == 8);
}

TEST_CASE("DOT export of H(Delta+)") {
    const auto dot = export_delta_dot(sys("F4"));
    std::size_t arrows = 0;
    for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++arrows;
    CHECK(arrows == 34);
    CHECK(dot == export_delta_dot(sys("F4")));
}
