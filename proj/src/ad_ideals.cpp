#include "rootposet/ad_ideals.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include <boost/functional/hash.hpp>

#include "rootposet/errors.hpp"

namespace rootposet {

std::size_t RootSet::count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool RootSet::none() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

bool RootSet::is_subset_of(const RootSet& o) const {
    for (std::size_t k = 0; k < bits_.size(); ++k)
        if (bits_[k] & ~o.bits_[k]) return false;
    return true;
}

bool RootSet::intersects(const RootSet& o) const {
    for (std::size_t k = 0; k < bits_.size(); ++k)
        if (bits_[k] & o.bits_[k]) return true;
    return false;
}

std::vector<std::size_t> RootSet::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < bits_.size(); ++k) {
        std::uint64_t w = bits_[k];
        while (w) {
            out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

RootSet& RootSet::operator|=(const RootSet& o) {
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= o.bits_[k];
    return *this;
}

RootSet& RootSet::operator&=(const RootSet& o) {
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= o.bits_[k];
    return *this;
}

std::size_t RootSet::hash() const noexcept { return boost::hash_range(bits_.begin(), bits_.end()); }

namespace {

std::vector<RootSet> principal_up_sets(const RootSystem& rs) {
    const std::size_t n = rs.num_positive();
    std::vector<RootSet> up(n, RootSet(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (rs.leq(rs.root(a), rs.root(b))) up[a].set(b);
    return up;
}

}  // namespace

UpperIdeal upper_ideal_generated_by(const RootSystem& rs, const std::vector<std::size_t>& roots) {
    UpperIdeal ideal{{}, RootSet(rs.num_positive())};
    for (std::size_t b = 0; b < rs.num_positive(); ++b)
        for (auto a : roots)
            if (rs.leq(rs.root(a), rs.root(b))) {
                ideal.roots.set(b);
                break;
            }
    ideal.generators = minimal_roots(rs, ideal.roots);
    return ideal;
}

std::vector<std::size_t> minimal_roots(const RootSystem& rs, const RootSet& roots) {
    std::vector<std::size_t> out;
    for (auto g : roots.indices()) {
        bool minimal = true;
        for (std::size_t i = 0; i < rs.rank() && minimal; ++i) {
            const int below = rs.sum_index(g, rs.negate(rs.simple_index(i)));
            if (below >= 0 && rs.is_positive_index(static_cast<std::size_t>(below)) &&
                roots.test(static_cast<std::size_t>(below)))
                minimal = false;
        }
        if (minimal) out.push_back(g);
    }
    return out;
}

bool is_upper_ideal(const RootSystem& rs, const RootSet& roots) {
    for (auto g : roots.indices())
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            const int above = rs.sum_index(g, rs.simple_index(i));
            if (above >= 0 && !roots.test(static_cast<std::size_t>(above))) return false;
        }
    return true;
}

AdIdealPoset AdIdealPoset::enumerate(const RootSystem& rs) {
    AdIdealPoset p;
    p.rs_ = &rs;
    const std::size_t n = rs.num_positive();
    const auto up = principal_up_sets(rs);
    std::vector<RootSet> comparable(n, RootSet(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (up[a].test(b) || up[b].test(a)) comparable[a].set(b);

    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, const RootSet&, const RootSet&)> dfs =
        [&](std::size_t start, const RootSet& blocked, const RootSet& roots) {
            p.ideals_.push_back({chosen, roots});
            for (std::size_t r = start; r < n; ++r) {
                if (blocked.test(r)) continue;
                chosen.push_back(r);
                dfs(r + 1, blocked | comparable[r], roots | up[r]);
                chosen.pop_back();
            }
        };
    dfs(0, RootSet(n), RootSet(n));

    std::sort(p.ideals_.begin(), p.ideals_.end(), [](const UpperIdeal& a, const UpperIdeal& b) {
        const auto sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        return a.generators < b.generators;
    });
    p.lookup_.reserve(p.ideals_.size());
    for (std::size_t k = 0; k < p.ideals_.size(); ++k) p.lookup_.emplace(p.ideals_[k].roots, k);
    return p;
}

std::optional<std::size_t> AdIdealPoset::find(const RootSet& roots) const {
    auto it = lookup_.find(roots);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

std::size_t AdIdealPoset::remove_generator(std::size_t ideal, std::size_t gamma) const {
    RootSet smaller = ideals_[ideal].roots;
    smaller.reset(gamma);
    auto k = find(smaller);
    if (!k) throw ConsistencyError("removing a generator did not give an upper ideal");
    return *k;
}

long AdIdealPoset::edge_count() const {
    long total = 0;
    for (const auto& e : ideals_) total += static_cast<long>(e.generators.size());
    return total;
}

HasseDiagram AdIdealPoset::hasse() const {
    HasseDiagram h;
    h.vertex_count = ideals_.size();
    for (std::size_t k = 0; k < ideals_.size(); ++k)
        for (auto g : ideals_[k].generators) h.edges.emplace_back(k, remove_generator(k, g));
    return h;
}

IntPolynomial AdIdealPoset::narayana_polynomial() const {
    std::vector<std::size_t> exps;
    for (const auto& e : ideals_) exps.push_back(e.generators.size());
    return IntPolynomial::from_exponents(exps);
}

std::vector<RootSet> ideal_powers(const RootSystem& rs, const RootSet& ideal) {
    std::vector<RootSet> powers;
    if (ideal.none()) return powers;
    powers.push_back(ideal);
    const auto base = ideal.indices();
    while (true) {
        RootSet next(rs.num_positive());
        for (auto b : powers.back().indices())
            for (auto g : base) {
                const int s = rs.sum_index(b, g);
                if (s >= 0) next.set(static_cast<std::size_t>(s));
            }
        if (next.none()) break;
        powers.push_back(std::move(next));
    }
    return powers;
}

std::vector<int> ideal_depths(const RootSystem& rs, const RootSet& ideal) {
    std::vector<int> depth(rs.num_positive(), 0);
    const auto powers = ideal_powers(rs, ideal);
    for (std::size_t k = 0; k < powers.size(); ++k)
        for (auto g : powers[k].indices()) depth[g] = static_cast<int>(k + 1);
    return depth;
}

MinimalElement minimal_element(const AffineWeylGroup& group, const UpperIdeal& ideal, bool verify) {
    const RootSystem& rs = group.root_system();
    const auto powers = ideal_powers(rs, ideal.roots);
    std::size_t size = 0;
    for (const auto& p : powers) size += p.count();
    ReducedWord word;
    try {
        // N = {k delta - gamma : gamma in I^k}
        word = group.peel(size, [&](std::size_t idx, int level) {
            if (rs.is_positive_index(idx) || level < 1 || level > static_cast<int>(powers.size())) return false;
            return powers[static_cast<std::size_t>(level - 1)].test(rs.negate(idx));
        });
    } catch (const NotAnInversionSet& e) {
        throw ConsistencyError(std::string("minimal element: ") + e.what());
    }
    if (!word.empty() && word.back() != 0) throw ConsistencyError("minimal element: last letter is not s_0");
    MinimalElement me{group.from_word(word), {}, word, ideal};
    ReducedWord reversed(word.rbegin(), word.rend());
    me.inverse = group.from_word(reversed);
    if (verify)
        if (auto failure = check_minimal_element(group, me)) throw ConsistencyError("minimal element: " + *failure);
    return me;
}

std::optional<std::string> check_minimal_element(const AffineWeylGroup& group, const MinimalElement& me) {
    const RootSystem& rs = group.root_system();
    const std::size_t n = rs.rank();
    if (!(group.compose(me.element, me.inverse) == group.identity())) return "inverse does not invert";
    for (std::size_t g = 0; g < rs.num_positive(); ++g) {
        const bool negative = !group.act(me.element, AffineRoot{-rs.root(g), 1}).is_positive();
        if (negative != me.ideal.contains(g))
            return "(diamond) fails at " + to_string(rs.root(g));
    }
    for (std::size_t i = 1; i <= n; ++i)
        if (!group.act(me.element, affine_simple_root(rs, i)).is_positive())
            return "(dom) fails at alpha_" + std::to_string(i);
    for (std::size_t i = 0; i <= n; ++i)
        if (group.act(me.inverse, affine_simple_root(rs, i)).level < -1)
            return "(min) fails at alpha_" + std::to_string(i);
    const auto powers = ideal_powers(rs, me.ideal.roots);
    std::vector<AffineRoot> target;
    for (std::size_t k = 0; k < powers.size(); ++k)
        for (auto g : powers[k].indices()) target.push_back({-rs.root(g), static_cast<int>(k + 1)});
    std::sort(target.begin(), target.end());
    if (group.inversion_set(me.element) != target) return "inversion set differs from {k delta - gamma : gamma in I^k}";
    const long expected = static_cast<long>(target.size());
    const long len = group.length(me.element);
    if (len != expected || static_cast<long>(me.word.size()) != expected)
        return "length " + std::to_string(len) + " differs from the sum of #I^k = " + std::to_string(expected);
    return std::nullopt;
}

std::size_t edge_type(const AffineWeylGroup& group, const MinimalElement& me, std::size_t gamma) {
    const RootSystem& rs = group.root_system();
    const AffineRoot image = group.act(me.element, AffineRoot{rs.root(gamma), -1});
    const int t = affine_simple_index(rs, image);
    if (t < 0)
        throw ConsistencyError("w_E(gamma - delta) = " + to_string(image) + " is not an affine simple root (gamma = " +
                               to_string(rs.root(gamma)) + ")");
    return static_cast<std::size_t>(t);
}

std::vector<std::size_t> terminating_edge_types(const AffineWeylGroup& group, const MinimalElement& me) {
    std::vector<std::size_t> types;
    for (auto g : me.ideal.generators) types.push_back(edge_type(group, me, g));
    return types;
}

TypedAdDiagram ad_typed_edges(const AffineWeylGroup& group, const AdIdealPoset& poset) {
    TypedAdDiagram d;
    for (std::size_t k = 0; k < poset.size(); ++k) {
        const auto me = minimal_element(group, poset[k]);
        for (auto g : poset[k].generators) d.edges.push_back({k, poset.remove_generator(k, g), edge_type(group, me, g)});
    }
    d.per_type = count_types(d.edges, group.rank());
    return d;
}

namespace {

int pair_root_coroot_vector(const RootSystem& rs, const std::vector<int>& x, const std::vector<int>& z) {
    const auto& c = rs.cartan_matrix();
    int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j) s += x[i] * c[i][j] * z[j];
    return s;
}

RationalMatrix cartan_rational(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    RationalMatrix m(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = rs.cartan_matrix()[i][j];
    return m;
}

}  // namespace

ZPoint z_point(const AffineWeylGroup& group, const MinimalElement& me) {
    const RootSystem& rs = group.root_system();
    const std::size_t n = rs.rank();
    RationalVector k(n);
    for (std::size_t i = 1; i <= n; ++i) k[i - 1] = group.act(me.inverse, affine_simple_root(rs, i)).level;
    const auto z = solve_linear(cartan_rational(rs), k);
    if (!z) throw ConsistencyError("singular Cartan matrix");
    if (!is_integral(*z)) throw ConsistencyError("z point is not in the coroot lattice");
    ZPoint p{to_integers(*z)};
    const int k0 = group.act(me.inverse, affine_simple_root(rs, 0)).level;
    if (pair_root_coroot_vector(rs, rs.theta().coeffs, p.coords) != 1 - k0)
        throw ConsistencyError("z point violates (theta, z) = 1 - k_0");
    if (!in_dmin(rs, p)) throw ConsistencyError("z point lies outside D_min");
    return p;
}

std::vector<std::size_t> facets_containing(const RootSystem& rs, const ZPoint& z) {
    std::vector<std::size_t> out;
    if (pair_root_coroot_vector(rs, rs.theta().coeffs, z.coords) == 2) out.push_back(0);
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (pair_root_coroot_vector(rs, Root::simple(rs.rank(), i).coeffs, z.coords) == -1) out.push_back(i + 1);
    return out;
}

bool in_dmin(const RootSystem& rs, const ZPoint& z) {
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (pair_root_coroot_vector(rs, Root::simple(rs.rank(), i).coeffs, z.coords) < -1) return false;
    return pair_root_coroot_vector(rs, rs.theta().coeffs, z.coords) <= 2;
}

std::vector<ZPoint> dmin_lattice_points(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    const auto cinv = inverse(cartan_rational(rs));
    if (!cinv) throw ConsistencyError("singular Cartan matrix");
    const auto& c = rs.highest_coeffs();
    // y_i = (alpha_i, z) >= -1 and sum c_i y_i = (theta, z) <= 2
    std::vector<ZPoint> out;
    std::vector<int> y(n);
    // later coordinates can lower the budget by at most sum c_j
    int slack = 0;
    for (auto ci : c) slack += ci;
    std::function<void(std::size_t, int, int)> bounded = [&](std::size_t i, int budget, int rest) {
        if (i == n) {
            const auto z = mat_vec(*cinv, to_rational(y));
            if (is_integral(z)) out.push_back({to_integers(z)});
            return;
        }
        const int rest_after = rest - c[i];
        for (int v = -1; c[i] * v <= budget + rest_after; ++v) {
            y[i] = v;
            bounded(i + 1, budget - c[i] * v, rest_after);
        }
    };
    bounded(0, 2, slack);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RationalVector> alcove_of(const AffineWeylGroup& group, const MinimalElement& me) {
    std::vector<RationalVector> out;
    for (const auto& v : group.fundamental_alcove_vertices()) out.push_back(group.act_on_V(me.inverse, v));
    return out;
}

std::vector<std::size_t> alcove_wall_types(const AffineWeylGroup& group, const MinimalElement& me) {
    const RootSystem& rs = group.root_system();
    const std::size_t n = rs.rank();
    const auto vertices = alcove_of(group, me);
    std::vector<RationalVector> dual;  // B v, so that (gamma, v) = gamma . (B v)
    for (const auto& v : vertices) dual.push_back(mat_vec(rs.bilinear_form(), v));

    std::vector<std::size_t> types;
    for (std::size_t j = 0; j <= n; ++j) {
        RationalMatrix rows;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != j) rows.push_back(dual[i]);
        // the wall through the other vertices, written (gamma, x) = 1
        const auto gamma = solve_linear(rows, RationalVector(n, Rational(1)));
        if (!gamma) continue;  // the wall passes through the origin
        if (dot(*gamma, dual[j]) <= Rational(1)) continue;
        if (!is_integral(*gamma) || !rs.is_root(Root(to_integers(*gamma))))
            throw ConsistencyError("separating wall is not of the form H_{gamma,1}");
        types.push_back(j);
    }
    return types;
}

std::vector<std::size_t> descent_types(const AffineWeylGroup& group, const MinimalElement& me) {
    const RootSystem& rs = group.root_system();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= rs.rank(); ++i)
        if (!group.act(me.inverse, affine_simple_root(rs, i)).is_positive()) out.push_back(i);
    return out;
}

bool alcove_in_2A(const AffineWeylGroup& group, const MinimalElement& me) {
    const RootSystem& rs = group.root_system();
    const auto theta = to_rational(rs.theta().coeffs);
    for (const auto& v : alcove_of(group, me)) {
        const auto bv = mat_vec(rs.bilinear_form(), v);
        for (const auto& x : bv)
            if (x < Rational(0)) return false;
        if (dot(theta, bv) > Rational(2)) return false;
    }
    return true;
}

}  // namespace rootposet
