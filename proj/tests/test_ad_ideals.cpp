#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "rootposet/ad_ideals.hpp"
#include "rootposet/tables.hpp"

using namespace rootposet;

namespace {

// Upper ideals counted over all subsets of Delta^+.
long brute_ideal_count(const RootSystem& rs) {
    const std::size_t m = rs.num_positive();
    long count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        bool closed = true;
        for (std::size_t a = 0; a < m && closed; ++a) {
            if (!((mask >> a) & 1U)) continue;
            for (std::size_t b = 0; b < m && closed; ++b)
                if (!((mask >> b) & 1U) && rs.leq(rs.root(a), rs.root(b))) closed = false;
        }
        count += closed;
    }
    return count;
}

long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace

TEST_CASE("ideal counts against subset enumeration") {
    for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "G2", "D4"}) {
        const auto rs = sys(name);
        CHECK_MESSAGE(long(AdIdealPoset::enumerate(rs).size()) == brute_ideal_count(rs), name);
    }
}

TEST_CASE("ideal counts: closed forms and product formula") {
    for (int n = 1; n <= 8; ++n) CHECK(AdIdealPoset::enumerate(sys("A" + std::to_string(n))).size() == std::size_t(catalan(n + 1)));
    for (const auto& id : systems_up_to(8)) {
        const auto rs = RootSystem::build(id);
        if (id.family == Family::E && id.rank == 8) continue;  // covered below, one enumeration
        const auto ad = AdIdealPoset::enumerate(rs);
        CHECK_MESSAGE(std::int64_t(ad.size()) == ad_product_formula(rs), id.name());
        CHECK(std::int64_t(ad.size()) == ad_table_count(rs));
        // Narayana: N(1) = #AD, N'(1) = #edges, palindromic of degree n
        const auto nar = ad.narayana_polynomial();
        CHECK(nar.eval(1) == std::int64_t(ad.size()));
        CHECK(nar.derivative_at_1() == ad.edge_count());
        CHECK(nar.is_palindromic(rs.rank()));
        CHECK(ad.edge_count() == long(ad.hasse().edges.size()));
    }
    const auto e8 = AdIdealPoset::enumerate(sys("E8"));
    CHECK(e8.size() == 25080);
    CHECK(e8.edge_count() == 100320);
    CHECK(sys("E7").num_positive() == 63);
}

TEST_CASE("enumeration order and lookup") {
    const auto rs = sys("B3");
    const auto ad = AdIdealPoset::enumerate(rs);
    CHECK(ad[0].size() == 0);
    CHECK(ad[ad.size() - 1].size() == rs.num_positive());
    for (std::size_t k = 0; k < ad.size(); ++k) {
        CHECK(is_upper_ideal(rs, ad[k].roots));
        CHECK(ad.find(ad[k].roots) == k);
        CHECK(minimal_roots(rs, ad[k].roots) == ad[k].generators);
        CHECK(upper_ideal_generated_by(rs, ad[k].generators).roots == ad[k].roots);
        if (k) CHECK(ad[k - 1].size() <= ad[k].size());
        for (auto g : ad[k].generators) CHECK(ad[ad.remove_generator(k, g)].size() + 1 == ad[k].size());
    }
}

TEST_CASE("ideal powers and depths") {
    const auto rs = sys("A3");
    const auto all = upper_ideal_generated_by(rs, {rs.simple_index(0), rs.simple_index(1), rs.simple_index(2)});
    const auto powers = ideal_powers(rs, all.roots);
    // I^k are the roots of height >= k
    REQUIRE(powers.size() == 3);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t r = 0; r < rs.num_positive(); ++r) CHECK(powers[k].test(r) == (rs.root(r).height() >= int(k + 1)));
    const auto depth = ideal_depths(rs, all.roots);
    for (std::size_t r = 0; r < rs.num_positive(); ++r) CHECK(depth[r] == rs.root(r).height());
}

TEST_CASE("minimal elements satisfy their defining conditions") {
    for (const auto& id : systems_up_to(4)) {
        const auto rs = RootSystem::build(id);
        const AffineWeylGroup g(rs);
        const auto ad = AdIdealPoset::enumerate(rs);
        for (const auto& ideal : ad.ideals()) {
            const auto me = minimal_element(g, ideal);
            CHECK_FALSE(check_minimal_element(g, me).has_value());
            long expect = 0;
            for (const auto& p : ideal_powers(rs, ideal.roots)) expect += long(p.count());
            CHECK(g.length(me.element) == expect);
            CHECK(long(me.word.size()) == expect);
            CHECK(g.from_word(me.word) == me.element);
        }
    }
}

TEST_CASE("sl4 golden case") {
    const auto rs = sys("A3");
    const AffineWeylGroup g(rs);
    const auto ad = AdIdealPoset::enumerate(rs);
    const auto typed = ad_typed_edges(g, ad);
    CHECK(ad.size() == 14);
    CHECK(typed.edges.size() == 21);
    CHECK(typed.per_type == TypeCounts{5, 6, 4, 6});
    const auto nil = minimal_element(g, ad[ad.size() - 1]);
    CHECK(nil.word.size() == 10);
    CHECK(g.length(nil.element) == 10);
}

TEST_CASE("edge types: terminating types of an ideal are distinct, and D_min") {
    for (const auto& id : systems_up_to(4)) {
        const auto rs = RootSystem::build(id);
        const AffineWeylGroup g(rs);
        const auto ad = AdIdealPoset::enumerate(rs);
        std::set<ZPoint> points;
        for (const auto& ideal : ad.ideals()) {
            const auto me = minimal_element(g, ideal);
            const auto types = terminating_edge_types(g, me);
            CHECK(std::set<std::size_t>(types.begin(), types.end()).size() == types.size());
            std::vector<std::size_t> sorted = types;
            std::sort(sorted.begin(), sorted.end());
            const auto z = z_point(g, me);
            CHECK(in_dmin(rs, z));
            CHECK(facets_containing(rs, z) == sorted);
            CHECK(descent_types(g, me) == sorted);
            CHECK(alcove_wall_types(g, me) == sorted);
            points.insert(z);
        }
        const auto lattice = dmin_lattice_points(rs);
        CHECK(points == std::set<ZPoint>(lattice.begin(), lattice.end()));
    }
}
