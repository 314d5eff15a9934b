#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "rootposet/abelian.hpp"
#include "rootposet/errors.hpp"
#include "rootposet/tables.hpp"

using namespace rootposet;

namespace {

// (I + I) contains no root, by checking every pair of roots.
bool brute_abelian(const RootSystem& rs, const UpperIdeal& ideal) {
    const auto idx = ideal.roots.indices();
    for (auto a : idx)
        for (auto b : idx)
            if (rs.is_root(rs.root(a) + rs.root(b))) return false;
    return true;
}

}  // namespace

TEST_CASE("Abelian ideals: 2^n of them with (n+1) 2^(n-2) edges") {
    for (const auto& id : systems_up_to(6)) {
        const auto rs = RootSystem::build(id);
        const AffineWeylGroup g(rs);
        const auto ad = AdIdealPoset::enumerate(rs);
        const auto ab = abelian_diagram(g, ad);
        long brute = 0;
        for (const auto& ideal : ad.ideals()) {
            CHECK(is_abelian(rs, ideal.roots) == brute_abelian(rs, ideal));
            brute += brute_abelian(rs, ideal);
        }
        const std::size_t n = rs.rank();
        CHECK(ab.ideals.size() == std::size_t(brute));
        CHECK(ab.ideals.size() == std::size_t{1} << n);
        CHECK(ab.edges.size() * 4 == (n + 1) * (std::size_t{1} << n));
        CHECK(ab.covering_polynomial() == ab_covering_table(rs));
        CHECK(ab.hasse().edges.size() == ab.edges.size());
    }
}

TEST_CASE("per-type counts of H(Ab)") {
    auto per_type = [](const char* name) {
        const auto rs = sys(name);
        const AffineWeylGroup g(rs);
        return abelian_diagram(g, AdIdealPoset::enumerate(rs)).per_type;
    };
    CHECK(per_type("C4") == TypeCounts{8, 4, 4, 4, 0});
    CHECK(per_type("B2") == TypeCounts{2, 0, 1});
    CHECK(per_type("D5") == TypeCounts(6, 8));
    CHECK(per_type("E6") == TypeCounts(7, 16));
    CHECK(per_type("F4") == TypeCounts(5, 4));
}

TEST_CASE("commutative roots") {
    for (const auto& id : systems_up_to(8)) {
        const auto rs = RootSystem::build(id);
        const AffineWeylGroup g(rs);
        const auto com = commutative_roots(g);
        CHECK_MESSAGE(long(com.size()) == commutative_count_formula(rs), id.name());
        for (const auto& c : com) {
            CHECK(brute_abelian(rs, c.principal));
            CHECK(c.principal.generators == std::vector<std::size_t>{c.root});
            CHECK(c.klass <= rs.rank());
            CHECK(meets_open_2A(g, rs.root(c.root)));
        }
        CHECK_FALSE(check_adjacent_classes(rs, com).has_value());
        CHECK_FALSE(check_theta_orthogonal_class(rs, com).has_value());
        const auto maxnc = maximal_noncommutative(rs, com);
        if (id.family == Family::A || (id.family == Family::D && id.rank == 3)) {
            CHECK(maxnc.empty());
        } else {
            REQUIRE(maxnc.size() == 1);
            CHECK(rs.root(maxnc[0]) == rs.half_floor(rs.theta()));
        }
    }
    CHECK(commutative_roots(AffineWeylGroup(sys("E8"))).size() == 44);
}

TEST_CASE("classes against the tables and the classical formulas") {
    for (const char* name : {"E6", "F4", "B4", "C4", "D5", "A5"}) {
        const auto rs = sys(name);
        const auto com = commutative_roots(AffineWeylGroup(rs));
        const auto expected = tabulated_classes(rs) ? *tabulated_classes(rs) : classical_classes(rs);
        REQUIRE(expected.size() == com.size());
        std::set<std::pair<std::vector<int>, std::size_t>> a, b;
        for (const auto& c : com) a.emplace(rs.root(c.root).coeffs, c.klass);
        for (const auto& e : expected) b.emplace(e.root.coeffs, e.klass);
        CHECK_MESSAGE(a == b, name);
    }
    CHECK_FALSE(tabulated_classes(sys("B3")).has_value());
    CHECK_THROWS(classical_classes(sys("G2")));
}

TEST_CASE("Suter's tau on Ab(sl_{n+1})") {
    for (int n = 1; n <= 6; ++n) {
        const auto rs = sys("A" + std::to_string(n));
        const AffineWeylGroup g(rs);
        const auto ad = AdIdealPoset::enumerate(rs);
        const auto ab = abelian_diagram(g, ad);
        auto pos = [&](const UpperIdeal& e) {
            for (std::size_t p = 0; p < ab.ideals.size(); ++p)
                if (ad[ab.ideals[p]].roots == e.roots) return p;
            FAIL("tau left Ab");
            return std::size_t{0};
        };
        std::vector<std::size_t> perm;
        for (auto k : ab.ideals) perm.push_back(pos(suter_tau(rs, ad[k])));
        CHECK(std::set<std::size_t>(perm.begin(), perm.end()).size() == perm.size());
        // tau^(n+1) = id and no smaller power is
        std::vector<std::size_t> it(perm.size());
        for (std::size_t p = 0; p < it.size(); ++p) it[p] = p;
        for (int k = 1; k <= n + 1; ++k) {
            for (auto& x : it) x = perm[x];
            bool identity = true;
            for (std::size_t p = 0; p < it.size(); ++p) identity = identity && it[p] == p;
            CHECK(identity == (k == n + 1));
        }
        std::set<std::tuple<std::size_t, std::size_t, std::size_t>> edges;
        for (const auto& e : ab.edges) edges.emplace(std::min(e.upper, e.lower), std::max(e.upper, e.lower), e.type);
        for (const auto& e : ab.edges) {
            const auto u = perm[e.upper], l = perm[e.lower];
            CHECK(edges.count({std::min(u, l), std::max(u, l), (e.type + 2) % std::size_t(n + 1)}) == 1);
        }
    }
    CHECK_THROWS_AS(suter_tau(sys("B3"), UpperIdeal{}), UnsupportedInput);
}

TEST_CASE("long Abelian ideals") {
    CHECK_THROWS_AS(long_abelian_diagram(AffineWeylGroup(sys("A3")), AdIdealPoset::enumerate(sys("A3"))), UnsupportedInput);
    const std::pair<const char*, std::size_t> expect[] = {{"C3", 2}, {"C5", 2}, {"G2", 3}, {"F4", 4}, {"B3", 4}, {"B5", 16}};
    for (const auto& [name, count] : expect) {
        const auto rs = sys(name);
        const AffineWeylGroup g(rs);
        CHECK_MESSAGE(long_abelian_diagram(g, AdIdealPoset::enumerate(rs)).ideals.size() == count, name);
    }
}

TEST_CASE("binomial convolution") {
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= a; ++b)
            for (int c = 0; b + c <= a; ++c) CHECK(binomial_convolution_holds(a, b, c));
    CHECK(max_orthogonal_simple_roots(sys("A5")) == 3);
    CHECK(max_orthogonal_simple_roots(sys("D4")) == 3);
}
