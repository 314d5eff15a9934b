#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"

using namespace rootposet;

namespace {

// Positive roots by closure of the simple roots under simple reflections,
// computed from the Cartan matrix alone.
std::set<std::vector<int>> closure_roots(const RootSystem& rs) {
    const auto& c = rs.cartan_matrix();
    const std::size_t n = rs.rank();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> todo;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        todo.push_back(v);
    }
    while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        if (!seen.insert(v).second) continue;
        for (std::size_t i = 0; i < n; ++i) {
            // <v, alpha_i^vee> = sum_j v_j C[j][i]
            int p = 0;
            for (std::size_t j = 0; j < n; ++j) p += v[j] * c[j][i];
            auto w = v;
            w[i] -= p;
            if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; }) &&
                std::any_of(w.begin(), w.end(), [](int x) { return x > 0; }))
                todo.push_back(w);
        }
    }
    return seen;
}

}  // namespace

TEST_CASE("parse accepts admissible names only") {
    CHECK(RootSystemId::parse("F4").name() == "F4");
    CHECK(RootSystemId::parse("b3").name() == "B3");
    CHECK_THROWS_AS(RootSystemId::parse("E9"), RootSystemError);
    CHECK_THROWS_AS(RootSystemId::parse("G3"), RootSystemError);
    CHECK_THROWS_AS(RootSystemId::parse("B1"), RootSystemError);
    CHECK_THROWS_AS(RootSystemId::parse("X4"), RootSystemError);
    CHECK_THROWS_AS(RootSystemId::parse(""), RootSystemError);
}

TEST_CASE("number of positive roots") {
    for (int n = 1; n <= 8; ++n) CHECK(sys("A" + std::to_string(n)).num_positive() == std::size_t(n * (n + 1) / 2));
    for (int n = 2; n <= 8; ++n) {
        CHECK(sys("B" + std::to_string(n)).num_positive() == std::size_t(n * n));
        CHECK(sys("C" + std::to_string(n)).num_positive() == std::size_t(n * n));
    }
    for (int n = 3; n <= 8; ++n) CHECK(sys("D" + std::to_string(n)).num_positive() == std::size_t(n * (n - 1)));
    CHECK(sys("E6").num_positive() == 36);
    CHECK(sys("E7").num_positive() == 63);
    CHECK(sys("E8").num_positive() == 120);
    CHECK(sys("F4").num_positive() == 24);
    CHECK(sys("G2").num_positive() == 6);
}

TEST_CASE("roots agree with the reflection closure of the Cartan matrix") {
    for (const auto& id : systems_up_to(8)) {
        const auto rs = RootSystem::build(id);
        std::set<std::vector<int>> ours;
        for (const auto& r : rs.positive_roots()) ours.insert(r.coeffs);
        CHECK_MESSAGE(ours == closure_roots(rs), id.name());
    }
}

TEST_CASE("Coxeter numbers and exponents") {
    for (const auto& id : systems_up_to(8)) {
        const auto rs = RootSystem::build(id);
        const int h = rs.coxeter_number();
        CHECK(rs.theta().height() + 1 == h);
        // the exponents sum to the number of positive roots and are symmetric about h/2
        const auto& e = rs.exponents();
        long sum = 0;
        for (int x : e) sum += x;
        CHECK(sum == long(rs.num_positive()));
        for (std::size_t i = 0; i < e.size(); ++i) CHECK(e[i] + e[e.size() - 1 - i] == h);
        // h* = 1 + sum of the coefficients of theta^vee
        CHECK(rs.dual_coxeter_number() <= h);
        if (rs.simply_laced()) CHECK(rs.dual_coxeter_number() == h);
    }
    CHECK(sys("E8").coxeter_number() == 30);
    CHECK(sys("F4").dual_coxeter_number() == 9);
    CHECK(sys("G2").dual_coxeter_number() == 4);
    CHECK(sys("B4").dual_coxeter_number() == 7);
    CHECK(sys("C4").dual_coxeter_number() == 5);
}

TEST_CASE("normalisation and root lengths") {
    for (const auto& id : systems_up_to(8)) {
        const auto rs = RootSystem::build(id);
        CHECK(rs.norm2(rs.theta()) == Rational(2));
        for (const auto& r : rs.positive_roots()) {
            CHECK(rs.leq(r, rs.theta()));
            // reflections permute the roots
            for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(rs.is_root(rs.reflect(r, i)));
        }
        if (!rs.simply_laced()) {
            CHECK(!rs.is_long(rs.theta_short()));
            for (const auto& r : rs.positive_roots())
                if (!rs.is_long(r)) CHECK(rs.leq(r, rs.theta_short()));
        }
    }
}

TEST_CASE("the null root is orthogonal to every affine simple coroot") {
    for (const auto& id : systems_up_to(8)) {
        const auto rs = RootSystem::build(id);
        const auto& x = rs.extended_cartan();
        CHECK(x[0][0] == 2);
        // delta = alpha_0 + theta
        for (std::size_t i = 0; i <= rs.rank(); ++i) {
            int sum = 0;
            for (std::size_t j = 0; j <= rs.rank(); ++j) sum += (j == 0 ? 1 : rs.theta()[j - 1]) * x[j][i];
            CHECK_MESSAGE(sum == 0, id.name());
        }
    }
}

TEST_CASE("root parsing and printing round-trip") {
    const auto rs = sys("E8");
    for (const auto& r : rs.positive_roots()) CHECK(parse_root(to_string(r), rs.rank()) == r);
}
