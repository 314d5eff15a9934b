#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "rootposet/affine_weyl.hpp"

using namespace rootposet;

namespace {

// Every positive affine root of level at most `max_level`.
std::vector<AffineRoot> positive_affine_roots(const RootSystem& rs, int max_level) {
    std::vector<AffineRoot> out;
    for (int k = 0; k <= max_level; ++k)
        for (std::size_t r = 0; r < rs.num_roots(); ++r) {
            AffineRoot a{rs.root(r), k};
            if (a.is_positive()) out.push_back(a);
        }
    return out;
}

// Acts by the word one simple reflection at a time, right to left.
AffineRoot act_by_word(const AffineWeylGroup& g, const ReducedWord& word, AffineRoot beta) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) beta = g.simple_reflect(std::size_t(*it), beta);
    return beta;
}

bool same(const AffineRoot& a, const AffineRoot& b) { return a.level == b.level && a.finite == b.finite; }

}  // namespace

TEST_CASE("generators are involutions and satisfy the braid relations") {
    for (const auto& id : systems_up_to(4)) {
        const auto rs = RootSystem::build(id);
        const AffineWeylGroup g(rs);
        const std::size_t n = rs.rank();
        for (std::size_t i = 0; i <= n; ++i) {
            CHECK(g.compose(g.generator(i), g.generator(i)) == g.identity());
            for (std::size_t j = i + 1; j <= n; ++j) {
                // m_ij from a_ij a_ji
                const int p = rs.extended_cartan()[i][j] * rs.extended_cartan()[j][i];
                if (n == 1) continue;  // A1^(1) has m = infinity
                const int m = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6;
                ReducedWord left, right;
                for (int k = 0; k < m; ++k) {
                    left.push_back(int(k % 2 ? j : i));
                    right.push_back(int(k % 2 ? i : j));
                }
                CHECK_MESSAGE(g.from_word(left) == g.from_word(right), id.name() << " " << i << "," << j);
            }
        }
    }
}

TEST_CASE("action on affine roots matches the simple reflections") {
    const auto rs = sys("G2");
    const AffineWeylGroup g(rs);
    for (std::size_t i = 0; i <= 2; ++i)
        for (const auto& beta : positive_affine_roots(rs, 2)) CHECK(same(g.act(g.generator(i), beta), g.simple_reflect(i, beta)));
    CHECK(same(affine_simple_root(rs, 0), AffineRoot{-rs.theta(), 1}));
    CHECK(affine_simple_index(rs, affine_simple_root(rs, 2)) == 2);
}

TEST_CASE("random words: inversion sets and lengths") {
    std::mt19937_64 rng(7);
    for (const auto& id : systems_up_to(4)) {
        const auto rs = RootSystem::build(id);
        const AffineWeylGroup g(rs);
        std::uniform_int_distribution<int> letter(0, int(rs.rank()));
        std::uniform_int_distribution<int> len(0, 12);
        // a word of length m only inverts roots of level below m
        const auto candidates = positive_affine_roots(rs, 13);
        for (int trial = 0; trial < 40; ++trial) {
            ReducedWord word(std::size_t(len(rng)));
            for (auto& x : word) x = letter(rng);
            const auto w = g.from_word(word);
            std::vector<AffineRoot> brute;
            for (const auto& beta : candidates)
                if (!act_by_word(g, word, beta).is_positive()) brute.push_back(beta);
            const auto inv = g.inversion_set(w);
            REQUIRE(inv.size() == brute.size());
            for (const auto& b : brute)
                CHECK(std::any_of(inv.begin(), inv.end(), [&](const AffineRoot& a) { return same(a, b); }));
            CHECK(g.length(w) == long(brute.size()));
            CHECK(g.length(w) <= long(word.size()));
            CHECK(g.length(w) % 2 == long(word.size()) % 2);
            // an element is determined by its inversion set
            const auto back = g.word_from_inversion_set(inv);
            CHECK(back.size() == inv.size());
            CHECK(g.from_word(back) == w);
            CHECK(g.compose(w, g.inverse(w)) == g.identity());
        }
    }
}

TEST_CASE("sets that are not inversion sets are rejected") {
    const auto rs = sys("A2");
    const AffineWeylGroup g(rs);
    // alpha_1 + alpha_2 alone is not biconvex
    CHECK_THROWS_AS(g.word_from_inversion_set({AffineRoot{rs.theta(), 0}}), NotAnInversionSet);
}

TEST_CASE("fundamental alcove") {
    for (const auto& id : systems_up_to(5)) {
        const auto rs = RootSystem::build(id);
        const AffineWeylGroup g(rs);
        const auto& v = g.fundamental_alcove_vertices();
        REQUIRE(v.size() == rs.rank() + 1);
        // vertex j lies on every wall except the one of type j
        for (std::size_t j = 0; j <= rs.rank(); ++j)
            for (std::size_t i = 0; i <= rs.rank(); ++i) {
                const Rational val = g.affine_form(affine_simple_root(rs, i), v[j]);
                if (i == j) CHECK(val > Rational(0));
                else CHECK(val == Rational(0));
            }
    }
}
