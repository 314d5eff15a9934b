#include <doctest.h>

#include "helpers.hpp"
#include "rootposet/errors.hpp"
#include "rootposet/weights.hpp"

using namespace rootposet;

namespace {

Weight w(std::vector<int> c) { return Weight(std::move(c)); }

WeightSystem adjoint(const RootSystem& rs) { return WeightSystem::build(rs, root_to_weight(rs, rs.theta())); }

}  // namespace

TEST_CASE("Weyl dimension formula") {
    CHECK(weyl_dimension(sys("A2"), w({1, 1})) == 8);
    CHECK(weyl_dimension(sys("A3"), w({0, 1, 0})) == 6);
    CHECK(weyl_dimension(sys("G2"), w({0, 1})) == 14);
    CHECK(weyl_dimension(sys("G2"), w({1, 0})) == 7);
    CHECK(weyl_dimension(sys("E8"), root_to_weight(sys("E8"), sys("E8").theta())) == 248);
    CHECK(weyl_dimension(sys("E7"), Weight::fundamental(7, 0)) == 56);
    CHECK(weyl_dimension(sys("B4"), w({0, 0, 0, 1})) == 16);
}

TEST_CASE("Freudenthal multiplicities") {
    for (const auto& id : systems_up_to(5)) {
        const auto rs = RootSystem::build(id);
        for (const auto& entry : weight_corpus(rs)) {
            const auto ws = WeightSystem::build(rs, entry.lambda);
            CHECK_MESSAGE(ws.dimension() == weyl_dimension(rs, entry.lambda), id.name() << " " << entry.label);
            // multiplicities are W-invariant
            for (const auto& [mu, m] : ws.entries()) CHECK(ws.multiplicity(dominant_representative(rs, mu)) == m);
        }
        // the zero weight of the adjoint module has multiplicity n
        CHECK(adjoint(rs).multiplicity(Weight(std::vector<int>(rs.rank(), 0))) == long(rs.rank()));
    }
    // lambda(4 varpi_1) of A1: weights 4, 2, 0, -2, -4
    const auto a1 = sys("A1");
    const auto s4 = WeightSystem::build(a1, w({4}));
    CHECK(s4.entries().size() == 5);
    CHECK(s4.multiplicity_free());
}

TEST_CASE("bad highest weights are rejected") {
    CHECK_THROWS_AS(WeightSystem::build(sys("A2"), w({1, -1})), UnsupportedInput);
    CHECK_THROWS_AS(WeightSystem::build(sys("A2"), w({1})), UnsupportedInput);
}

TEST_CASE("weight diagram edges") {
    // sl3 adjoint: zero weight of multiplicity 2 gives 2 + 2 per type
    const auto a2 = sys("A2");
    const auto ws = adjoint(a2);
    const auto counts = weighted_type_counts(weight_diagram_edges(ws), 2);
    CHECK(counts == TypeCounts{0, 4, 4});
    // E6 minuscule: 27 weights, 36 edges, 6 of each type
    const auto e6 = sys("E6");
    const auto m27 = WeightSystem::build(e6, Weight::fundamental(6, 0));
    CHECK(m27.dimension() == 27);
    CHECK(m27.multiplicity_free());
    const auto edges = weight_diagram_edges(m27);
    CHECK(edges.size() == 36);
    CHECK(weighted_type_counts(edges, 6) == TypeCounts{0, 6, 6, 6, 6, 6, 6});
}

TEST_CASE("sl2 restriction counts") {
    // trivial module
    const auto b3 = sys("B3");
    const auto triv = WeightSystem::build(b3, w({0, 0, 0}));
    for (std::size_t i = 1; i <= 3; ++i) CHECK(sl2_restriction_count(triv, i) == 0);
    // spin module of B3, short simple root
    const auto spin = WeightSystem::build(b3, w({0, 0, 1}));
    CHECK(spin.dimension() == 8);
    CHECK(sl2_restriction_count(spin, 3) == 4);
    // G2 adjoint along a long simple root
    const auto g2 = sys("G2");
    const auto ad = adjoint(g2);
    std::size_t long_i = g2.is_long_simple(0) ? 1 : 2;
    CHECK(sl2_restriction_count(ad, long_i) == 6);
    // adjoint modules: 2h* - 2 along long simple roots
    for (const auto& id : systems_up_to(6)) {
        const auto rs = RootSystem::build(id);
        const auto a = adjoint(rs);
        for (std::size_t i = 1; i <= rs.rank(); ++i)
            if (rs.is_long_simple(i - 1)) CHECK(sl2_restriction_count(a, i) == 2 * rs.dual_coxeter_number() - 2);
    }
}

TEST_CASE("weight corpus") {
    const auto b4 = weight_corpus(sys("B4"));
    bool spin = false;
    for (const auto& e : b4) spin = spin || e.label == "spin";
    CHECK(spin);
    CHECK(weight_corpus(sys("E8")).size() == 1);
    CHECK(to_string(Weight::fundamental(3, 1)) == to_string(w({0, 1, 0})));
}
